#pragma once

// Randomized property checks shared by the unit suite and the acceptance
// runner. Each check walks seeds [first, first + count) through
// oracle::varied_params and counts the instances that break the property.

#include <cstdint>
#include <string>

namespace properties {

struct Outcome {
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;  // empty when failures == 0

    bool ok() const { return failures == 0 && instances > 0; }
};

// compute_ksup(...).k_sup equals oracle::brute_ksup.
Outcome oracle_equivalence(std::uint64_t first, std::size_t count);

// A nonempty k_sup is k_sup-informative.
Outcome ksup_is_informative(std::uint64_t first, std::size_t count);

// check_k_informative and criterion_direct agree (verdict and witnesses)
// on K_{D_m} and on every subset of it.
Outcome criteria_agree(std::uint64_t first, std::size_t count);

// The union of two informative subsets of K_{D_m} is informative.
Outcome union_closed(std::uint64_t first, std::size_t count);

// supcon against the canonical and worst-case plants, with the prefix tree
// of K_{D_m} as specification: controllable, nonblocking, contained in the
// specification, and equal to oracle::brute_supcon.
Outcome supcon_sound(std::uint64_t first, std::size_t count);

// The synthesized supervisor in closed loop with the canonical and
// worst-case plants generates prefix_closure(k_sup), marks k_sup, and is
// nonblocking.
Outcome closed_loop_exact(std::uint64_t first, std::size_t count);

// A subset K of K_{D_m} is informative exactly when K ⊆ L_m(S_D) and K is
// controllable with respect to G_D.
Outcome informative_is_controllable_in_sd(std::uint64_t first, std::size_t count);

} // namespace properties
