#pragma once

#include <cstdint>
#include <utility>

#include "datasup/data.hpp"
#include "datasup/spec.hpp"

namespace datasup::oracle {

/// Largest |K| for which the brute-force routines enumerate 2^|K| subsets.
inline constexpr std::size_t kMaxEnumeration = 20;

/// Union of every K ⊆ D_m ∩ E that passes criterion_direct.
/// Throws Error(TooLarge) beyond kMaxEnumeration words.
Language brute_ksup(const DataTriple& triple, const SpecLanguage& spec);

/// Union of every K′ ⊆ spec_words ∩ L_m(plant) controllable w.r.t. L(plant).
Language brute_supcon(const Dfa& plant, const Language& spec_words);

/// Every subset of `k` (as a list) in binary-counter order; guarded by
/// kMaxEnumeration.
std::vector<Language> subsets(const Language& k);

struct InstanceParams {
    std::uint64_t seed = 1;
    std::size_t alphabet_size = 3;        // 2..5
    std::size_t uncontrollable_count = 1; // ≥ 1, < alphabet_size
    std::size_t max_word_length = 4;      // ≤ 5
    std::size_t d_count = 4;              // ≤ 6
    double d_minus_density = 0.5;
    std::size_t max_k = 10;               // cap on |D_m ∩ E|
};

/// Parameters spread over the supported ranges, derived from the seed.
InstanceParams varied_params(std::uint64_t seed);

/// Deterministic in params. The result always validates and has a
/// nonempty D_m ∩ E of size at most params.max_k.
std::pair<DataTriple, SpecLanguage> random_instance(const InstanceParams& params);

} // namespace datasup::oracle
