#pragma once

#include <optional>
#include <string>
#include <vector>

#include "datasup/dfa.hpp"
#include "datasup/error.hpp"
#include "datasup/language.hpp"

namespace datasup {

struct TripleViolation {
    enum class Kind { MarkingNotObserved, OverlapViolation, UnknownEvent };
    Kind kind;
    Word word;
    std::string set;  // "D", "D_m" or "D_minus"
};

const char* to_string(TripleViolation::Kind kind);

/// Thrown by validate_triple; carries every violated condition.
class InvalidTriple : public Error {
public:
    explicit InvalidTriple(std::vector<TripleViolation> violations, const std::string& what)
        : Error(ErrorKind::InvalidTriple, what), violations_(std::move(violations)) {}

    const std::vector<TripleViolation>& violations() const noexcept { return violations_; }

private:
    std::vector<TripleViolation> violations_;
};

/**
 * Validated data set (D, D_m, D⁻): observed words, observed marked words
 * and words known to be impossible.
 *
 * Invariants: D_m ⊆ prefix_closure(D), prefix_closure(D) ∩ D⁻ = ∅, and
 * every word is over the alphabet. Only validate_triple constructs one.
 */
class DataTriple {
public:
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const Language& d() const noexcept { return d_; }
    const Language& d_m() const noexcept { return d_m_; }
    const Language& d_minus() const noexcept { return d_minus_; }
    /// prefix_closure(D).
    const Language& d_closure() const noexcept { return d_closure_; }

private:
    friend DataTriple validate_triple(Alphabet, Language, Language, Language);
    DataTriple() = default;

    Alphabet alphabet_;
    Language d_, d_m_, d_minus_, d_closure_;
};

/// Throws InvalidTriple listing every violation.
DataTriple validate_triple(Alphabet alphabet, Language d, Language d_m, Language d_minus);

/**
 * Prefix tree over prefix_closure(D ∪ D⁻) with marker states D_m.
 *
 * States are numbered in lexicographic order of their access words, so
 * word_of_state is sorted. q_k holds the states of prefix_closure(K),
 * k_words the states of K itself, q_minus the states of full D⁻ words,
 * observed the states of prefix_closure(D).
 */
struct DataDrivenAutomaton {
    Dfa tree;
    std::vector<Word> word_of_state;
    StateSet q_k;
    StateSet k_words;
    StateSet q_minus;
    StateSet observed;

    std::optional<State> state_of(const Word& w) const;
};

/// Throws Error(SpecOutsideData) unless k ⊆ D_m.
DataDrivenAutomaton build_dda(const DataTriple& triple, const Language& k);

struct ConsistencyReport {
    bool consistent = true;
    std::optional<Word> not_generated;   // some w ∈ prefix_closure(D) ∉ L(G)
    std::optional<Word> not_marked;      // some w ∈ D_m ∉ L_m(G)
    std::optional<Word> impossible_run;  // some w ∈ D⁻ ∩ L(G)

    std::string describe(const Alphabet& alphabet) const;
};

/// Throws Error(Input) on alphabet mismatch.
ConsistencyReport is_consistent(const Dfa& plant, const DataTriple& triple);

/// Prefix tree with L = prefix_closure(D) and L_m = D_m.
Dfa canonical_plant(const DataTriple& triple);

/// Plant generating every word that has no prefix in D⁻, all states marked.
/// This is the largest prefix-closed language avoiding D⁻.
Dfa worst_case_plant(const DataTriple& triple);

} // namespace datasup
