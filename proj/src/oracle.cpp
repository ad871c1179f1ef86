#include "datasup/oracle.hpp"

#include <algorithm>
#include <random>

#include "datasup/informativity.hpp"

namespace datasup::oracle {

namespace {

// Draw helpers over mt19937_64 directly: the engine's output sequence is
// fixed by the standard, unlike the std:: distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          0x64617461u};
        engine_.seed(seq);
    }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
    bool chance(double p) {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::mt19937_64 engine_;
};

// Uncontrollable events are drawn with probability 1/4 so that observed
// words branch mostly on controllable events.
Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t length) {
    const auto& u = alphabet.uncontrollable();
    const auto& c = alphabet.controllable();
    Word w(length);
    for (Event& e : w) e = rng.chance(0.25) ? u[rng.below(u.size())] : c[rng.below(c.size())];
    return w;
}

} // namespace

std::vector<Language> subsets(const Language& k) {
    if (k.size() > kMaxEnumeration)
        throw Error(ErrorKind::TooLarge, "too many words to enumerate subsets");
    const std::vector<Word> words(k.begin(), k.end());
    std::vector<Language> out;
    out.reserve(std::size_t{1} << words.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << words.size()); ++mask) {
        Language sub;
        for (std::size_t i = 0; i < words.size(); ++i)
            if (mask >> i & 1U) sub.insert(words[i]);
        out.push_back(std::move(sub));
    }
    return out;
}

Language brute_ksup(const DataTriple& triple, const SpecLanguage& spec) {
    Language k_dm = restrict_spec(triple.d_m(), spec);
    Language result;
    for (const Language& k : subsets(k_dm))
        if (criterion_direct(triple, k).informative) result.insert(k.begin(), k.end());
    return result;
}

Language brute_supcon(const Dfa& plant, const Language& spec_words) {
    Language candidates;
    for (const Word& w : spec_words)
        if (accepts(plant, w)) candidates.insert(w);
    Language result;
    for (const Language& k : subsets(candidates))
        if (is_controllable(k, plant).controllable) result.insert(k.begin(), k.end());
    return result;
}

InstanceParams varied_params(std::uint64_t seed) {
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    InstanceParams p;
    p.seed = seed;
    p.alphabet_size = rng.between(2, 5);
    p.uncontrollable_count = rng.between(1, std::min<std::size_t>(2, p.alphabet_size - 1));
    p.max_word_length = rng.between(2, 5);
    p.d_count = rng.between(2, 6);
    p.d_minus_density = 0.7 + 0.05 * static_cast<double>(rng.below(7));
    p.max_k = 8;
    return p;
}

std::pair<DataTriple, SpecLanguage> random_instance(const InstanceParams& params) {
    const std::size_t n = std::clamp<std::size_t>(params.alphabet_size, 2, 26);
    const std::size_t n_u = std::clamp<std::size_t>(params.uncontrollable_count, 1, n - 1);
    const std::size_t max_len = std::max<std::size_t>(params.max_word_length, 1);
    const std::size_t d_count = std::max<std::size_t>(params.d_count, 1);
    Rng rng(params.seed);

    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::string> uncontrollable, controllable;
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i)
        (i < n_u ? uncontrollable : controllable).push_back(names[order[i]]);
    const Alphabet alphabet(controllable, uncontrollable);
    const auto events = alphabet.events();

    for (int attempt = 0; attempt < 1000; ++attempt) {
        Language d;
        for (std::size_t i = 0; i < d_count; ++i)
            d.insert(random_word(rng, alphabet, rng.between(1, max_len)));
        const Language closure = prefix_closure(d);

        Language d_m;
        for (const Word& w : closure) {
            double p = d.contains(w) ? 0.7 : (w.empty() ? 0.1 : 0.3);
            if (rng.chance(p)) d_m.insert(w);
        }
        if (d_m.empty()) continue;

        Language d_minus;
        for (const Word& w : set_difference(extend(closure, events), closure)) {
            // Only uncontrollable continuations affect informativity.
            double p = params.d_minus_density;
            if (alphabet.is_controllable(w.back())) p /= 4;
            if (rng.chance(p)) d_minus.insert(w);
        }

        Language e;
        for (const Word& w : d_m)
            if (rng.chance(0.7)) e.insert(w);
        for (std::size_t i = rng.below(3); i > 0; --i)
            e.insert(random_word(rng, alphabet, rng.between(1, max_len)));

        Language k = set_intersection(d_m, e);
        if (k.empty() || k.size() > params.max_k) continue;

        DataTriple triple = validate_triple(alphabet, d, d_m, d_minus);
        SpecLanguage spec = params.seed % 2 == 0
                                ? SpecLanguage::finite(alphabet, e)
                                : SpecLanguage::automaton(prefix_tree(alphabet, e));
        return {std::move(triple), std::move(spec)};
    }
    throw Error(ErrorKind::TooLarge, "random_instance: no admissible instance within the attempt cap");
}

} // namespace datasup::oracle
