#include "datasup/data.hpp"

#include <algorithm>
#include <map>

namespace datasup {

const char* to_string(TripleViolation::Kind kind) {
    switch (kind) {
    case TripleViolation::Kind::MarkingNotObserved: return "MarkingNotObserved";
    case TripleViolation::Kind::OverlapViolation: return "OverlapViolation";
    case TripleViolation::Kind::UnknownEvent: return "UnknownEvent";
    }
    return "?";
}

DataTriple validate_triple(Alphabet alphabet, Language d, Language d_m, Language d_minus) {
    using Kind = TripleViolation::Kind;
    std::vector<TripleViolation> violations;

    bool known_events = true;
    for (auto [lang, name] : {std::pair{&d, "D"}, {&d_m, "D_m"}, {&d_minus, "D_minus"}}) {
        for (const Word& w : *lang) {
            if (!alphabet.contains(w)) {
                violations.push_back({Kind::UnknownEvent, w, name});
                known_events = false;
            }
        }
    }

    Language closure = prefix_closure(d);
    for (const Word& w : set_difference(d_m, closure))
        violations.push_back({Kind::MarkingNotObserved, w, "D_m"});
    for (const Word& w : set_intersection(closure, d_minus))
        violations.push_back({Kind::OverlapViolation, w, "D_minus"});

    if (!violations.empty()) {
        std::string what = "invalid data triple:";
        for (const auto& v : violations) {
            what += "\n  ";
            what += to_string(v.kind);
            what += " in " + v.set + ": ";
            what += known_events ? alphabet.format(v.word) : std::string("<word>");
        }
        throw InvalidTriple(std::move(violations), what);
    }

    DataTriple t;
    t.alphabet_ = std::move(alphabet);
    t.d_ = std::move(d);
    t.d_m_ = std::move(d_m);
    t.d_minus_ = std::move(d_minus);
    t.d_closure_ = std::move(closure);
    return t;
}

std::optional<State> DataDrivenAutomaton::state_of(const Word& w) const {
    auto it = std::lower_bound(word_of_state.begin(), word_of_state.end(), w);
    if (it == word_of_state.end() || *it != w) return std::nullopt;
    return static_cast<State>(it - word_of_state.begin());
}

DataDrivenAutomaton build_dda(const DataTriple& triple, const Language& k) {
    if (!is_subset(k, triple.d_m()))
        throw Error(ErrorKind::SpecOutsideData, "K is not a subset of D_m");

    DataDrivenAutomaton dda;
    dda.tree = prefix_tree(triple.alphabet(), triple.d_m(),
                           set_union(triple.d(), triple.d_minus()));
    Language all = prefix_closure(set_union(triple.d(), triple.d_minus()));
    dda.word_of_state.assign(all.begin(), all.end());
    if (dda.word_of_state.empty()) dda.word_of_state.emplace_back();  // lone ε root

    const Language k_closure = prefix_closure(k);
    for (State s = 0; s < dda.word_of_state.size(); ++s) {
        const Word& w = dda.word_of_state[s];
        if (k_closure.contains(w)) dda.q_k.insert(s);
        if (k.contains(w)) dda.k_words.insert(s);
        if (triple.d_minus().contains(w)) dda.q_minus.insert(s);
        if (triple.d_closure().contains(w)) dda.observed.insert(s);
    }
    return dda;
}

std::string ConsistencyReport::describe(const Alphabet& alphabet) const {
    if (consistent) return "consistent";
    std::string out;
    auto line = [&](const std::optional<Word>& w, const char* clause) {
        if (!w) return;
        if (!out.empty()) out += '\n';
        out += clause;
        out += ": " + alphabet.format(*w);
    };
    line(not_generated, "prefix_closure(D) not contained in L(G)");
    line(not_marked, "D_m not contained in L_m(G)");
    line(impossible_run, "D_minus intersects L(G)");
    return out;
}

ConsistencyReport is_consistent(const Dfa& plant, const DataTriple& triple) {
    if (!(plant.alphabet() == triple.alphabet()))
        throw Error(ErrorKind::Input, "plant alphabet differs from the data alphabet");
    ConsistencyReport r;
    for (const Word& w : triple.d_closure())
        if (!run(plant, w)) { r.not_generated = w; break; }
    for (const Word& w : triple.d_m())
        if (!accepts(plant, w)) { r.not_marked = w; break; }
    for (const Word& w : triple.d_minus())
        if (run(plant, w)) { r.impossible_run = w; break; }
    r.consistent = !r.not_generated && !r.not_marked && !r.impossible_run;
    return r;
}

Dfa canonical_plant(const DataTriple& triple) {
    return prefix_tree(triple.alphabet(), triple.d_m(), triple.d());
}

Dfa worst_case_plant(const DataTriple& triple) {
    const Alphabet& alphabet = triple.alphabet();
    const Language& minus = triple.d_minus();
    Dfa out(alphabet);
    if (minus.contains(Word{})) return out;

    // Interior states: proper prefixes of D⁻ words with no prefix in D⁻.
    std::map<Word, State> interior;
    for (const Word& w : prefix_closure(minus)) {
        if (minus.contains(w)) continue;
        bool blocked = false;
        for (std::size_t n = 0; n < w.size() && !blocked; ++n)
            blocked = minus.contains(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)));
        if (blocked) continue;
        bool proper = std::any_of(minus.begin(), minus.end(), [&](const Word& m) {
            return m.size() > w.size() && std::equal(w.begin(), w.end(), m.begin());
        });
        if (proper) interior.emplace(w, kNoState);
    }

    if (interior.empty()) {
        State sink = out.add_state(true, "⊤");
        for (Event e : alphabet.events()) out.add_transition(sink, e, sink);
        return out;
    }

    for (auto& [w, s] : interior) s = out.add_state(true, alphabet.format(w));
    State sink = out.add_state(true, "⊤");
    for (Event e : alphabet.events()) out.add_transition(sink, e, sink);
    for (const auto& [w, s] : interior) {
        for (Event e : alphabet.events()) {
            Word next = concat(w, e);
            if (minus.contains(next)) continue;
            auto it = interior.find(next);
            out.add_transition(s, e, it != interior.end() ? it->second : sink);
        }
    }
    return out;
}

} // namespace datasup
