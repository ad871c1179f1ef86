#pragma once

#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "datasup/alphabet.hpp"
#include "datasup/language.hpp"

namespace datasup {

using State = std::uint32_t;
using StateSet = std::set<State>;

inline constexpr State kNoState = std::numeric_limits<State>::max();

/**
 * Deterministic finite automaton with a partial transition function.
 *
 * States are dense indices assigned in construction order. A Dfa with zero
 * states is the empty automaton: both its closed and marked languages are
 * empty. Otherwise it has an initial state.
 *
 * Every state carries a label, used only for display. Prefix-tree
 * automata label states with their access word.
 */
class Dfa {
public:
    Dfa() = default;
    explicit Dfa(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    static Dfa empty(Alphabet alphabet) { return Dfa(std::move(alphabet)); }

    /// The first state added becomes the initial state.
    State add_state(bool marked = false, std::string label = {});
    void set_marked(State s, bool marked = true);
    void set_initial(State s);
    /// Throws Error(Input) if (from, event) already leads elsewhere.
    void add_transition(State from, Event event, State to);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t num_states() const noexcept { return marked_.size(); }
    std::size_t num_transitions() const noexcept;
    bool is_empty() const noexcept { return marked_.empty(); }

    /// kNoState for the empty automaton.
    State initial() const noexcept { return is_empty() ? kNoState : initial_; }
    bool is_marked(State s) const { return marked_.at(s); }
    StateSet markers() const;
    const std::string& label(State s) const { return labels_.at(s); }

    std::optional<State> next(State s, Event e) const;

    /// Outgoing (event, target) pairs in event order.
    std::vector<std::pair<Event, State>> successors(State s) const;

private:
    Alphabet alphabet_;
    State initial_ = 0;
    std::vector<bool> marked_;
    std::vector<std::string> labels_;
    std::vector<State> delta_;  // num_states × |Σ|, kNoState when undefined
};

struct TrimReport {
    StateSet reachable;
    StateSet coreachable;
    bool nonblocking = true;
};

struct ControllabilityResult {
    bool controllable = true;
    /// First violating (s, σ) in lexicographic order, when not controllable.
    std::optional<std::pair<Word, Event>> witness;
};

/// δ(q₀, w), or nullopt when undefined.
std::optional<State> run(const Dfa& a, const Word& w);

bool accepts(const Dfa& a, const Word& w);

TrimReport analyze(const Dfa& a);

/// Restriction to reachable ∩ coreachable states. Returns the empty
/// automaton when the initial state does not survive.
Dfa trim(const Dfa& a);

/// Subautomaton on `keep`, with markers replaced by `markers ∩ keep`.
/// Transitions touching a removed state are dropped. States are renumbered
/// in increasing order of their old index; labels are preserved.
Dfa subautomaton(const Dfa& a, const StateSet& keep, const StateSet& markers);

/// L_m(a). Throws Error(CyclicAutomaton) if the trim part has a cycle.
Language marked_words(const Dfa& a);

/// Closed language L(a), bounded in the same way as marked_words.
Language closed_words(const Dfa& a);

/// Reachable synchronous product over a shared alphabet.
Dfa sync_product(const Dfa& a, const Dfa& b);

/// Prefix tree accepting exactly `marked`, with closed language
/// prefix_closure(marked ∪ extra_prefixes). State order follows sorted
/// access words; labels are the formatted access words.
Dfa prefix_tree(const Alphabet& alphabet, const Language& marked,
                const Language& extra_prefixes = {});

/// Controllability of a finite K with respect to L(plant): for every
/// s in prefix_closure(K) and uncontrollable σ, plant-defined sσ must stay
/// in prefix_closure(K).
ControllabilityResult is_controllable(const Language& k, const Dfa& plant);

/// Trim automaton recognising sup C(L_m(spec) ∩ L_m(plant)) with respect
/// to L(plant). Empty automaton iff the supremal sublanguage is empty.
Dfa supcon(const Dfa& plant, const Dfa& spec);

} // namespace datasup
