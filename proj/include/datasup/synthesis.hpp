#pragma once

#include <map>
#include <optional>
#include <set>

#include "datasup/data.hpp"
#include "datasup/informativity.hpp"
#include "datasup/spec.hpp"

namespace datasup {

using EventSet = std::set<Event>;

/**
 * Disablement table V: prefix_closure(D) → Pwr(Σ_c).
 *
 * For w ∈ prefix_closure(K), V(w) = { σ ∈ Σ_c | wσ ∉ prefix_closure(K) };
 * for the remaining observed words V(w) = ∅. Words outside the domain
 * disable nothing.
 */
class Supervisor {
public:
    Supervisor() = default;
    explicit Supervisor(std::map<Word, EventSet> table) : table_(std::move(table)) {}

    const EventSet& disabled(const Word& w) const;
    bool enabled(const Word& w, Event e, const Alphabet& alphabet) const;

    const std::map<Word, EventSet>& table() const noexcept { return table_; }

private:
    std::map<Word, EventSet> table_;
};

/// Throws Error(NotKInformative) unless the data is k-informative.
Supervisor build_supervisor(const DataTriple& triple, const Language& k);

/// States q ∈ Q_K with some σ ∈ Σ_u for which δ̂(q, σ) is undefined or
/// lands outside Q_K ∪ Q_-.
StateSet noninformative_states(const DataDrivenAutomaton& dda, const std::vector<Event>& sigma_u);

/// The data-driven automaton restricted to observed states.
/// L = prefix_closure(D), L_m = D_m.
Dfa build_gd(const DataDrivenAutomaton& dda);

/// Subautomaton of G_D on Q_K \ n, marking the states of K words outside n.
/// Transitions into removed states are cut; unreachable survivors stay.
Dfa build_sd(const DataDrivenAutomaton& dda, const StateSet& n);

struct SynthesisReport {
    bool informative = false;
    Language noninformative_words;
    bool informatizable = false;
    Language k_sup;
    DataDrivenAutomaton dda;
    Dfa gd;
    Dfa sd;
    Dfa pd;
    /// Present iff k_sup is nonempty.
    std::optional<Supervisor> supervisor;
};

/// Builds Ĝ, G_D, N(Q_K), S_D and P_D = supcon(G_D, S_D); K_sup = L_m(P_D).
/// Throws Error(EmptySpecification) when D_m ∩ E is empty.
SynthesisReport compute_ksup(const DataTriple& triple, const SpecLanguage& spec);

struct ClosedLoop {
    Dfa closed;       // prefix tree of the closed-loop words
    Language words;   // L(V/G)
    Language marked;  // L(V/G) ∩ marking
};

/// Breadth-first unfolding of `plant` under `sup`. Throws
/// Error(BoundExceeded) once more than `bound` words are generated.
ClosedLoop closed_loop(const Dfa& plant, const Supervisor& sup, const Language& marking,
                       std::size_t bound);

} // namespace datasup
