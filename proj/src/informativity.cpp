#include "datasup/informativity.hpp"

#include <algorithm>

namespace datasup {

namespace {

void require_same_alphabet(const DataTriple& triple, const SpecLanguage& spec) {
    if (!(triple.alphabet() == spec.alphabet()))
        throw Error(ErrorKind::Input, "specification alphabet differs from the data alphabet");
}

void require_within_marking(const DataTriple& triple, const Language& k) {
    if (!is_subset(k, triple.d_m()))
        throw Error(ErrorKind::SpecOutsideData, "K is not a subset of D_m");
}

} // namespace

const char* to_string(WitnessReason reason) {
    return reason == WitnessReason::EscapesSpec ? "EscapesSpec" : "Unobserved";
}

Verdict check_k_informative(const DataTriple& triple, const Language& k) {
    const DataDrivenAutomaton dda = build_dda(triple, k);
    const auto sigma_u = triple.alphabet().uncontrollable();

    Verdict v;
    for (State q : dda.q_k) {
        for (Event e : sigma_u) {
            auto next = dda.tree.next(q, e);
            if (!next) {
                v.witnesses.push_back({dda.word_of_state[q], e, WitnessReason::Unobserved});
            } else if (!dda.q_k.contains(*next) && !dda.q_minus.contains(*next)) {
                v.witnesses.push_back({dda.word_of_state[q], e, WitnessReason::EscapesSpec});
            }
        }
    }
    v.informative = v.witnesses.empty();
    return v;
}

Verdict check_marking_informative(const DataTriple& triple, const SpecLanguage& spec) {
    require_same_alphabet(triple, spec);
    Language k = restrict_spec(triple.d_m(), spec);
    if (k.empty())
        throw Error(ErrorKind::EmptySpecification, "D_m ∩ E is empty");
    return check_k_informative(triple, k);
}

Verdict criterion_direct(const DataTriple& triple, const Language& k) {
    require_within_marking(triple, k);
    const Language k_closure = prefix_closure(k);
    const auto sigma_u = triple.alphabet().uncontrollable();

    Verdict v;
    for (const Word& s : k_closure) {
        for (Event e : sigma_u) {
            Word next = concat(s, e);
            if (k_closure.contains(next) || triple.d_minus().contains(next)) continue;
            auto reason = triple.d_closure().contains(next) ? WitnessReason::EscapesSpec
                                                            : WitnessReason::Unobserved;
            v.witnesses.push_back({s, e, reason});
        }
    }
    v.informative = v.witnesses.empty();
    return v;
}

bool check_informatizable_nomarking(const Alphabet& alphabet, const Language& d,
                                    const Language& d_minus, const SpecLanguage& spec) {
    if (!(alphabet == spec.alphabet()))
        throw Error(ErrorKind::Input, "specification alphabet differs from the data alphabet");
    // Validation against an empty D_m checks the same event and overlap
    // conditions that apply here.
    DataTriple triple = validate_triple(alphabet, d, {}, d_minus);

    Language k_d;
    for (const Word& w : triple.d_closure())
        if (spec_member(spec, w)) k_d.insert(w);
    const Language closure = prefix_closure(k_d);
    const auto sigma_u = alphabet.uncontrollable();

    for (const Word& s : closure) {
        bool all_uncontrollable = std::all_of(
            s.begin(), s.end(), [&](Event e) { return !alphabet.is_controllable(e); });
        if (!all_uncontrollable) continue;
        for (Event e : sigma_u) {
            Word next = concat(s, e);
            if (!closure.contains(next) && !d_minus.contains(next)) return false;
        }
    }
    return true;
}

} // namespace datasup
