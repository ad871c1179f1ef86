#pragma once

#include <variant>

#include "datasup/dfa.hpp"
#include "datasup/language.hpp"

namespace datasup {

/**
 * Control specification E: either an explicit finite word list or a DFA
 * whose marked language is E.
 */
class SpecLanguage {
public:
    static SpecLanguage finite(Alphabet alphabet, Language words);
    /// The spec's alphabet is the automaton's.
    static SpecLanguage automaton(Dfa dfa);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    bool is_finite() const noexcept { return std::holds_alternative<Language>(form_); }

    /// Explicit word list; only valid when is_finite().
    const Language& words() const { return std::get<Language>(form_); }
    /// Automaton form; only valid when !is_finite().
    const Dfa& dfa() const { return std::get<Dfa>(form_); }
    /// The DFA form; explicit specs are converted to a prefix tree.
    Dfa to_dfa() const;

private:
    SpecLanguage(Alphabet alphabet, std::variant<Language, Dfa> form)
        : alphabet_(std::move(alphabet)), form_(std::move(form)) {}

    Alphabet alphabet_;
    std::variant<Language, Dfa> form_;
};

/// w ∈ E. Throws Error(Input) if w uses events outside the spec's alphabet.
bool spec_member(const SpecLanguage& spec, const Word& w);

/// K_{D_m} = D_m ∩ E.
Language restrict_spec(const Language& d_m, const SpecLanguage& spec);

} // namespace datasup
