#include "datasup/synthesis.hpp"

#include <algorithm>
#include <deque>

namespace datasup {

const EventSet& Supervisor::disabled(const Word& w) const {
    static const EventSet none;
    auto it = table_.find(w);
    return it == table_.end() ? none : it->second;
}

bool Supervisor::enabled(const Word& w, Event e, const Alphabet& alphabet) const {
    return !alphabet.is_controllable(e) || !disabled(w).contains(e);
}

Supervisor build_supervisor(const DataTriple& triple, const Language& k) {
    Verdict v = check_k_informative(triple, k);
    if (!v.informative)
        throw Error(ErrorKind::NotKInformative,
                    "data is not K-informative; no valid supervisor enforces K");

    const Language k_closure = prefix_closure(k);
    const auto sigma_c = triple.alphabet().controllable();
    std::map<Word, EventSet> table;
    for (const Word& w : triple.d_closure()) {
        EventSet& off = table[w];
        if (!k_closure.contains(w)) continue;
        for (Event e : sigma_c)
            if (!k_closure.contains(concat(w, e))) off.insert(e);
    }
    return Supervisor(std::move(table));
}

StateSet noninformative_states(const DataDrivenAutomaton& dda, const std::vector<Event>& sigma_u) {
    StateSet out;
    for (State q : dda.q_k) {
        for (Event e : sigma_u) {
            auto next = dda.tree.next(q, e);
            if (!next || (!dda.q_k.contains(*next) && !dda.q_minus.contains(*next))) {
                out.insert(q);
                break;
            }
        }
    }
    return out;
}

Dfa build_gd(const DataDrivenAutomaton& dda) {
    return subautomaton(dda.tree, dda.observed, dda.tree.markers());
}

Dfa build_sd(const DataDrivenAutomaton& dda, const StateSet& n) {
    StateSet keep;
    std::set_difference(dda.q_k.begin(), dda.q_k.end(), n.begin(), n.end(),
                        std::inserter(keep, keep.end()));
    // Only K words are marked: a D_m word that is a proper prefix of a K
    // word but not itself in K must not enter L_m(S_D).
    StateSet markers;
    for (State s : dda.k_words)
        if (keep.contains(s)) markers.insert(s);
    // Ĝ restricted to a subset of Q_D equals G_D restricted to it.
    return subautomaton(dda.tree, keep, markers);
}

SynthesisReport compute_ksup(const DataTriple& triple, const SpecLanguage& spec) {
    if (!(triple.alphabet() == spec.alphabet()))
        throw Error(ErrorKind::Input, "specification alphabet differs from the data alphabet");
    Language k_dm = restrict_spec(triple.d_m(), spec);
    if (k_dm.empty()) throw Error(ErrorKind::EmptySpecification, "D_m ∩ E is empty");

    SynthesisReport r;
    r.dda = build_dda(triple, k_dm);
    r.gd = build_gd(r.dda);
    StateSet n = noninformative_states(r.dda, triple.alphabet().uncontrollable());
    for (State q : n) r.noninformative_words.insert(r.dda.word_of_state[q]);
    r.informative = n.empty();
    r.sd = build_sd(r.dda, n);
    r.pd = supcon(r.gd, r.sd);
    r.k_sup = marked_words(r.pd);
    r.informatizable = !r.k_sup.empty();
    if (r.informatizable) r.supervisor = build_supervisor(triple, r.k_sup);
    return r;
}

ClosedLoop closed_loop(const Dfa& plant, const Supervisor& sup, const Language& marking,
                       std::size_t bound) {
    ClosedLoop out;
    out.closed = Dfa(plant.alphabet());
    if (plant.is_empty()) return out;

    const Alphabet& alphabet = plant.alphabet();
    std::deque<std::pair<Word, State>> queue{{Word{}, plant.initial()}};
    out.words.insert(Word{});
    while (!queue.empty()) {
        auto [w, q] = queue.front();
        queue.pop_front();
        for (auto [e, t] : plant.successors(q)) {
            if (!sup.enabled(w, e, alphabet)) continue;
            Word next = concat(w, e);
            out.words.insert(next);
            if (out.words.size() > bound)
                throw Error(ErrorKind::BoundExceeded,
                            "closed loop generated more than " + std::to_string(bound) +
                                " words");
            queue.emplace_back(std::move(next), t);
        }
    }
    out.marked = set_intersection(out.words, marking);
    out.closed = prefix_tree(alphabet, out.marked, out.words);
    return out;
}

} // namespace datasup
