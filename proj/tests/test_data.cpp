#include <doctest.h>

#include <random>

#include "datasup/data.hpp"
#include "datasup/oracle.hpp"
#include "fixtures.hpp"

using namespace datasup;
using fixtures::word;
using fixtures::words;

namespace {

std::vector<TripleViolation> violations_of(const Alphabet& a, const Language& d,
                                           const Language& d_m, const Language& d_minus) {
    try {
        validate_triple(a, d, d_m, d_minus);
    } catch (const InvalidTriple& e) {
        return e.violations();
    }
    return {};
}

Language words_of(const DataDrivenAutomaton& dda, const StateSet& states) {
    Language out;
    for (State s : states) out.insert(dda.word_of_state[s]);
    return out;
}

} // namespace

TEST_SUITE("data-automaton") {

TEST_CASE("validate_triple") {
    Alphabet a = fixtures::robot();
    CHECK_NOTHROW(fixtures::robot1());

    SUBCASE("d in D_minus is also a prefix of an observed word") {
        Alphabet abd = fixtures::abd();
        auto v = violations_of(abd, words(abd, {"a", "db"}), words(abd, {"a", "db"}),
                               words(abd, {"d", "ad", "dd"}));
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == TripleViolation::Kind::OverlapViolation);
        CHECK(v[0].word == word(abd, "d"));
    }
    SUBCASE("marked word never observed") {
        auto v = violations_of(a, words(a, {"a"}), words(a, {"ab"}), {});
        REQUIRE(v.size() == 1);
        CHECK(v[0].kind == TripleViolation::Kind::MarkingNotObserved);
        CHECK(v[0].word == word(a, "ab"));
    }
    SUBCASE("every violation is reported") {
        auto v = violations_of(a, words(a, {"ab"}), words(a, {"ab", "c"}), words(a, {"a", "e"}));
        CHECK(v.size() == 2);
        auto bad = violations_of(a, words(a, {"a"}), {}, {Word{42}});
        REQUIRE(bad.size() == 1);
        CHECK(bad[0].kind == TripleViolation::Kind::UnknownEvent);
    }
}

TEST_CASE("build_dda") {
    SUBCASE("first robot data set") {
        auto t = fixtures::robot1();
        auto dda = build_dda(t, words(t.alphabet(), {"adf", "bcf"}));
        CHECK(dda.tree.num_states() == 15);
        CHECK(dda.q_k.size() == 7);
        CHECK(dda.q_minus.size() == 7);
        CHECK(dda.tree.markers().size() == 2);
        CHECK(words_of(dda, dda.q_k) ==
              words(t.alphabet(), {"", "a", "b", "ad", "bc", "adf", "bcf"}));
    }
    SUBCASE("K_sup data set") {
        auto t = fixtures::ksup();
        auto dda = build_dda(t, words(t.alphabet(), {"ab", "acf", "aed"}));
        CHECK(dda.tree.num_states() == 13);
        CHECK(words_of(dda, dda.q_minus) == words(t.alphabet(), {"d", "ad", "acd", "aedd"}));
        CHECK(dda.observed.size() == 9);
    }
    SUBCASE("single-word chain") {
        Alphabet a = fixtures::abd();
        auto t = validate_triple(a, words(a, {"a"}), words(a, {"a"}), {});
        auto dda = build_dda(t, words(a, {"a"}));
        CHECK(dda.tree.num_states() == 2);
        CHECK(dda.q_k == StateSet{0, 1});
        CHECK(dda.q_minus.empty());
    }
    SUBCASE("K outside D_m") {
        auto t = fixtures::monotone();
        try {
            build_dda(t, words(t.alphabet(), {"abd", "a"}));
            FAIL("expected SpecOutsideData");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::SpecOutsideData);
        }
    }
}

TEST_CASE("data-driven automaton structure on random data") {
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto [t, spec] = oracle::random_instance(oracle::varied_params(seed));
        Language k = restrict_spec(t.d_m(), spec);
        auto dda = build_dda(t, k);
        const Language all = prefix_closure(set_union(t.d(), t.d_minus()));
        REQUIRE(dda.tree.num_states() == all.size());
        for (State s = 0; s < dda.tree.num_states(); ++s)
            REQUIRE(run(dda.tree, dda.word_of_state[s]) == s);
        CHECK(words_of(dda, dda.q_k) == prefix_closure(k));
        CHECK(words_of(dda, dda.q_minus) == t.d_minus());
        CHECK(closed_words(dda.tree) == all);
        CHECK(marked_words(dda.tree) == t.d_m());
        StateSet overlap;
        std::set_intersection(dda.q_k.begin(), dda.q_k.end(), dda.q_minus.begin(),
                              dda.q_minus.end(), std::inserter(overlap, overlap.end()));
        CHECK(overlap.empty());
    }
}

TEST_CASE("is_consistent") {
    auto t1 = fixtures::robot1();
    auto t2 = fixtures::robot2();
    CHECK(is_consistent(canonical_plant(t1), t1).consistent);
    CHECK(is_consistent(fixtures::g1_plant(), t1).consistent);
    CHECK(is_consistent(fixtures::g1_plant(), t2).consistent);

    auto empty = is_consistent(Dfa::empty(t1.alphabet()), t1);
    CHECK_FALSE(empty.consistent);
    CHECK(empty.not_generated);

    // G1 marks nothing but state 7, so the K_sup data set (ab marked) is
    // not consistent with it.
    auto r = is_consistent(fixtures::g1_plant(), fixtures::ksup());
    CHECK_FALSE(r.consistent);
}

TEST_CASE("canonical_plant") {
    auto t = fixtures::robot1();
    Dfa g = canonical_plant(t);
    CHECK(g.num_states() == 8);
    CHECK(marked_words(g) == words(t.alphabet(), {"adf", "bcf"}));

    Alphabet a = fixtures::abd();
    Dfa lone = canonical_plant(validate_triple(a, {}, {}, {}));
    CHECK(lone.num_states() == 1);
    CHECK(lone.markers().empty());

    Dfa gk = canonical_plant(fixtures::ksup());
    CHECK(gk.num_states() == 9);
    CHECK(marked_words(gk) == words(gk.alphabet(), {"ab", "abe", "acf", "aed"}));
}

TEST_CASE("worst_case_plant") {
    SUBCASE("no impossible words") {
        Alphabet a = fixtures::abd();
        Dfa g = worst_case_plant(validate_triple(a, words(a, {"ab"}), {}, {}));
        CHECK(g.num_states() == 1);
        CHECK(g.is_marked(0));
        CHECK(g.num_transitions() == a.size());
    }
    SUBCASE("first robot data set") {
        auto t = fixtures::robot1();
        Dfa g = worst_case_plant(t);
        for (const Word& w : t.d_minus()) CHECK_FALSE(run(g, w));
        CHECK(run(g, word(t.alphabet(), "ae")));
        CHECK_FALSE(run(g, word(t.alphabet(), "aed")));
        CHECK(is_consistent(g, t).consistent);
    }
    SUBCASE("K_sup data set") {
        auto t = fixtures::ksup();
        Dfa g = worst_case_plant(t);
        for (const Word& w : fixtures::all_words(t.alphabet(), 4)) {
            bool blocked = std::any_of(t.d_minus().begin(), t.d_minus().end(),
                                       [&](const Word& m) {
                                           return m.size() <= w.size() &&
                                                  std::equal(m.begin(), m.end(), w.begin());
                                       });
            REQUIRE(run(g, w).has_value() == !blocked);
        }
    }
}

TEST_CASE("canonical and worst-case plants are consistent; worst case avoids exactly D_minus extensions") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        auto [t, spec] = oracle::random_instance(oracle::varied_params(seed));
        REQUIRE(is_consistent(canonical_plant(t), t).consistent);
        Dfa worst = worst_case_plant(t);
        REQUIRE(is_consistent(worst, t).consistent);

        // 5 random words per instance, 1000 in total.
        const std::size_t max_len = max_length(t.d_minus()) + 2;
        for (int i = 0; i < 5; ++i) {
            Word w(rng() % (max_len + 1));
            for (Event& e : w) e = static_cast<Event>(rng() % t.alphabet().size());
            bool has_minus_prefix = false;
            for (std::size_t n = 0; n <= w.size(); ++n)
                has_minus_prefix |= t.d_minus().contains(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(n)));
            CHECK(run(worst, w).has_value() == !has_minus_prefix);
            if (t.d_minus().contains(w)) CHECK_FALSE(run(worst, w));
        }
    }
}

}
