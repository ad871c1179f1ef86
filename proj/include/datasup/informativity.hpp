#pragma once

#include <vector>

#include "datasup/data.hpp"
#include "datasup/spec.hpp"

namespace datasup {

enum class WitnessReason {
    EscapesSpec,  // sσ observed but outside prefix_closure(K) ∪ D⁻
    Unobserved,   // sσ not in the data at all
};

const char* to_string(WitnessReason reason);

struct Witness {
    Word word;
    Event event;
    WitnessReason reason;

    friend bool operator==(const Witness&, const Witness&) = default;
};

/// Outcome of an informativity check. informative ⇔ witnesses.empty().
struct Verdict {
    bool informative = true;
    std::vector<Witness> witnesses;
};

/// Walks the data-driven automaton: every (q ∈ Q_K, σ ∈ Σ_u) must have
/// δ̂(q, σ) defined and inside Q_K ∪ Q_-. Collects every failing pair,
/// ordered by access word then event.
Verdict check_k_informative(const DataTriple& triple, const Language& k);

/// check_k_informative at K = D_m ∩ E. Throws Error(EmptySpecification)
/// when D_m ∩ E is empty.
Verdict check_marking_informative(const DataTriple& triple, const SpecLanguage& spec);

/// Same decision as check_k_informative, evaluated on word sets only:
/// ∀ s ∈ prefix_closure(k), σ ∈ Σ_u: sσ ∈ prefix_closure(k) ∪ D⁻.
Verdict criterion_direct(const DataTriple& triple, const Language& k);

/// Informatizability when marking is ignored. With K_D = prefix_closure(D) ∩ E,
/// every s ∈ prefix_closure(K_D) ∩ Σ_u* and σ ∈ Σ_u needs
/// sσ ∈ prefix_closure(K_D) ∪ D⁻. Throws InvalidTriple if prefix_closure(D)
/// meets D⁻.
bool check_informatizable_nomarking(const Alphabet& alphabet, const Language& d,
                                    const Language& d_minus, const SpecLanguage& spec);

} // namespace datasup
