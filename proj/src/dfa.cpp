#include "datasup/dfa.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "datasup/error.hpp"

namespace datasup {

namespace {

void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* op) {
    if (!(a == b))
        throw Error(ErrorKind::Input, std::string(op) + ": alphabet mismatch");
}

// Three-colour DFS over `alive` states; true if a directed cycle exists.
bool has_cycle(const Dfa& a, const std::vector<bool>& alive) {
    enum : unsigned char { White, Grey, Black };
    std::vector<unsigned char> colour(a.num_states(), White);
    std::function<bool(State)> visit = [&](State s) {
        colour[s] = Grey;
        for (auto [e, t] : a.successors(s)) {
            if (!alive[t]) continue;
            if (colour[t] == Grey) return true;
            if (colour[t] == White && visit(t)) return true;
        }
        colour[s] = Black;
        return false;
    };
    for (State s = 0; s < a.num_states(); ++s)
        if (alive[s] && colour[s] == White && visit(s)) return true;
    return false;
}

std::vector<bool> to_mask(const StateSet& set, std::size_t n) {
    std::vector<bool> mask(n, false);
    for (State s : set) mask[s] = true;
    return mask;
}

// Words spelled from the initial state through `alive` states; `keep`
// decides which visited states contribute their access word.
Language enumerate(const Dfa& a, const std::vector<bool>& alive,
                   const std::function<bool(State)>& keep) {
    Language out;
    if (a.is_empty() || !alive[a.initial()]) return out;
    if (has_cycle(a, alive))
        throw Error(ErrorKind::CyclicAutomaton,
                    "automaton has a cycle; its language may be infinite");
    Word w;
    std::function<void(State)> dfs = [&](State s) {
        if (keep(s)) out.insert(w);
        for (auto [e, t] : a.successors(s)) {
            if (!alive[t]) continue;
            w.push_back(e);
            dfs(t);
            w.pop_back();
        }
    };
    dfs(a.initial());
    return out;
}

} // namespace

State Dfa::add_state(bool marked, std::string label) {
    auto s = static_cast<State>(marked_.size());
    marked_.push_back(marked);
    labels_.push_back(label.empty() ? std::to_string(s) : std::move(label));
    delta_.resize(delta_.size() + alphabet_.size(), kNoState);
    return s;
}

void Dfa::set_marked(State s, bool marked) { marked_.at(s) = marked; }

void Dfa::set_initial(State s) {
    if (s >= num_states()) throw Error(ErrorKind::Input, "initial state out of range");
    initial_ = s;
}

void Dfa::add_transition(State from, Event event, State to) {
    if (from >= num_states() || to >= num_states())
        throw Error(ErrorKind::Input, "transition endpoint out of range");
    if (!alphabet_.contains(event))
        throw Error(ErrorKind::UnknownEvent, "transition event out of range");
    State& slot = delta_[from * alphabet_.size() + event];
    if (slot != kNoState && slot != to)
        throw Error(ErrorKind::Input, "nondeterministic transition on event '" +
                                          alphabet_.name(event) + "'");
    slot = to;
}

std::size_t Dfa::num_transitions() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(delta_.begin(), delta_.end(), [](State t) { return t != kNoState; }));
}

StateSet Dfa::markers() const {
    StateSet out;
    for (State s = 0; s < num_states(); ++s)
        if (marked_[s]) out.insert(s);
    return out;
}

std::optional<State> Dfa::next(State s, Event e) const {
    if (s >= num_states() || !alphabet_.contains(e)) return std::nullopt;
    State t = delta_[s * alphabet_.size() + e];
    if (t == kNoState) return std::nullopt;
    return t;
}

std::vector<std::pair<Event, State>> Dfa::successors(State s) const {
    std::vector<std::pair<Event, State>> out;
    for (Event e = 0; e < alphabet_.size(); ++e) {
        State t = delta_[s * alphabet_.size() + e];
        if (t != kNoState) out.emplace_back(e, t);
    }
    return out;
}

std::optional<State> run(const Dfa& a, const Word& w) {
    if (a.is_empty()) return std::nullopt;
    State s = a.initial();
    for (Event e : w) {
        auto t = a.next(s, e);
        if (!t) return std::nullopt;
        s = *t;
    }
    return s;
}

bool accepts(const Dfa& a, const Word& w) {
    auto s = run(a, w);
    return s && a.is_marked(*s);
}

TrimReport analyze(const Dfa& a) {
    TrimReport report;
    if (a.is_empty()) return report;

    std::deque<State> queue{a.initial()};
    report.reachable.insert(a.initial());
    std::vector<std::vector<State>> preds(a.num_states());
    for (State s = 0; s < a.num_states(); ++s)
        for (auto [e, t] : a.successors(s)) preds[t].push_back(s);

    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (auto [e, t] : a.successors(s))
            if (report.reachable.insert(t).second) queue.push_back(t);
    }

    for (State m : a.markers()) {
        report.coreachable.insert(m);
        queue.push_back(m);
    }
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        for (State p : preds[s])
            if (report.coreachable.insert(p).second) queue.push_back(p);
    }

    report.nonblocking = std::includes(report.coreachable.begin(), report.coreachable.end(),
                                       report.reachable.begin(), report.reachable.end());
    return report;
}

Dfa subautomaton(const Dfa& a, const StateSet& keep, const StateSet& markers) {
    if (a.is_empty() || !keep.contains(a.initial())) return Dfa::empty(a.alphabet());
    Dfa out(a.alphabet());
    std::vector<State> remap(a.num_states(), kNoState);
    for (State s : keep) remap[s] = out.add_state(markers.contains(s), a.label(s));
    out.set_initial(remap[a.initial()]);
    for (State s : keep)
        for (auto [e, t] : a.successors(s))
            if (remap[t] != kNoState) out.add_transition(remap[s], e, remap[t]);
    return out;
}

Dfa trim(const Dfa& a) {
    TrimReport r = analyze(a);
    StateSet keep;
    std::set_intersection(r.reachable.begin(), r.reachable.end(), r.coreachable.begin(),
                          r.coreachable.end(), std::inserter(keep, keep.end()));
    return subautomaton(a, keep, a.markers());
}

Language marked_words(const Dfa& a) {
    if (a.is_empty()) return {};
    TrimReport r = analyze(a);
    std::vector<bool> alive(a.num_states(), false);
    for (State s : r.reachable)
        if (r.coreachable.contains(s)) alive[s] = true;
    return enumerate(a, alive, [&](State s) { return a.is_marked(s); });
}

Language closed_words(const Dfa& a) {
    if (a.is_empty()) return {};
    return enumerate(a, to_mask(analyze(a).reachable, a.num_states()),
                     [](State) { return true; });
}

Dfa sync_product(const Dfa& a, const Dfa& b) {
    require_same_alphabet(a.alphabet(), b.alphabet(), "sync_product");
    Dfa out(a.alphabet());
    if (a.is_empty() || b.is_empty()) return out;

    std::map<std::pair<State, State>, State> index;
    std::deque<std::pair<State, State>> queue;
    auto intern = [&](State p, State q) {
        auto [it, fresh] = index.try_emplace({p, q}, kNoState);
        if (fresh) {
            std::string label = a.label(p) == b.label(q) ? a.label(p)
                                                         : a.label(p) + "|" + b.label(q);
            it->second = out.add_state(a.is_marked(p) && b.is_marked(q), std::move(label));
            queue.emplace_back(p, q);
        }
        return it->second;
    };
    intern(a.initial(), b.initial());
    while (!queue.empty()) {
        auto [p, q] = queue.front();
        queue.pop_front();
        State from = index.at({p, q});
        for (auto [e, pt] : a.successors(p)) {
            auto qt = b.next(q, e);
            if (qt) out.add_transition(from, e, intern(pt, *qt));
        }
    }
    return out;
}

Dfa prefix_tree(const Alphabet& alphabet, const Language& marked,
                const Language& extra_prefixes) {
    Dfa out(alphabet);
    Language closure = prefix_closure(set_union(marked, extra_prefixes));
    if (closure.empty()) {
        out.add_state(false, "ε");
        return out;
    }
    // Sorted order visits every prefix before its extensions.
    std::map<Word, State> state_of;
    for (const Word& w : closure) {
        State s = out.add_state(marked.contains(w), alphabet.format(w));
        state_of.emplace(w, s);
        if (!w.empty()) {
            Word parent(w.begin(), w.end() - 1);
            out.add_transition(state_of.at(parent), w.back(), s);
        }
    }
    return out;
}

ControllabilityResult is_controllable(const Language& k, const Dfa& plant) {
    ControllabilityResult result;
    const Language closure = prefix_closure(k);
    const auto sigma_u = plant.alphabet().uncontrollable();
    for (const Word& s : closure) {
        auto q = run(plant, s);
        if (!q) continue;
        for (Event e : sigma_u) {
            if (plant.next(*q, e) && !closure.contains(concat(s, e))) {
                result.controllable = false;
                result.witness.emplace(s, e);
                return result;
            }
        }
    }
    return result;
}

} // namespace datasup
