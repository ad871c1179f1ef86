#include <doctest.h>

#include "datasup/informativity.hpp"
#include "datasup/oracle.hpp"
#include "fixtures.hpp"

using namespace datasup;
using fixtures::word;
using fixtures::words;

namespace {

Witness witness(const Alphabet& a, std::string_view w, const char* event, WitnessReason reason) {
    return {word(a, w), *a.find(event), reason};
}

bool contains(const std::vector<Witness>& list, const Witness& w) {
    return std::find(list.begin(), list.end(), w) != list.end();
}

} // namespace

TEST_SUITE("informativity") {

TEST_CASE("check_marking_informative on the robot data sets") {
    Alphabet a = fixtures::robot();
    Verdict v1 = check_marking_informative(fixtures::robot1(), fixtures::robot_spec());
    CHECK(v1.informative);
    CHECK(v1.witnesses.empty());

    Verdict v2 = check_marking_informative(fixtures::robot2(), fixtures::robot_spec());
    CHECK_FALSE(v2.informative);
    REQUIRE(v2.witnesses.size() == 2);
    CHECK(v2.witnesses[0] == witness(a, "a", "d", WitnessReason::Unobserved));
    CHECK(v2.witnesses[1] == witness(a, "ac", "d", WitnessReason::EscapesSpec));
}

TEST_CASE("no uncontrollable events means informative") {
    Alphabet ab({"a", "b"}, {});
    auto t = validate_triple(ab, words(ab, {"ab", "ba"}), words(ab, {"ab"}), {});
    CHECK(check_marking_informative(t, SpecLanguage::finite(ab, words(ab, {"ab"}))).informative);
    CHECK(check_informatizable_nomarking(ab, t.d(), {}, SpecLanguage::finite(ab, words(ab, {"a"}))));
}

TEST_CASE("empty specification is an error") {
    auto t = fixtures::robot1();
    try {
        check_marking_informative(t, SpecLanguage::finite(t.alphabet(), words(t.alphabet(), {"ae"})));
        FAIL("expected EmptySpecification");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySpecification);
    }
}

TEST_CASE("check_k_informative is not monotone") {
    auto t = fixtures::monotone();
    Alphabet a = t.alphabet();
    CHECK(check_k_informative(t, words(a, {"ab", "abd"})).informative);

    Verdict smaller = check_k_informative(t, words(a, {"ab"}));
    CHECK_FALSE(smaller.informative);
    REQUIRE(smaller.witnesses.size() == 1);
    CHECK(smaller.witnesses[0] == witness(a, "ab", "d", WitnessReason::EscapesSpec));

    CHECK(check_k_informative(t, {}).informative);
    CHECK_THROWS_AS(check_k_informative(t, words(a, {"a"})), Error);
}

TEST_CASE("criterion_direct") {
    Alphabet a = fixtures::robot();
    CHECK(criterion_direct(fixtures::robot1(), words(a, {"adf", "bcf"})).informative);

    Verdict v = criterion_direct(fixtures::robot2(), words(a, {"acb", "bcf"}));
    CHECK_FALSE(v.informative);
    CHECK(contains(v.witnesses, witness(a, "a", "d", WitnessReason::Unobserved)));
    CHECK(contains(v.witnesses, witness(a, "ac", "d", WitnessReason::EscapesSpec)));

    CHECK(criterion_direct(fixtures::robot2(), {}).informative);
}

TEST_CASE("the marking-free criterion accepts data that fail under marking") {
    auto t = fixtures::marking_gap();
    Alphabet a = t.alphabet();
    CHECK(check_informatizable_nomarking(a, t.d(), t.d_minus(), fixtures::marking_gap_spec()));
    Verdict v = check_marking_informative(t, fixtures::marking_gap_spec());
    CHECK_FALSE(v.informative);
    CHECK(contains(v.witnesses, witness(a, "db", "d", WitnessReason::Unobserved)));

    auto t2 = fixtures::robot2();
    CHECK(check_informatizable_nomarking(t2.alphabet(), t2.d(), t2.d_minus(), fixtures::robot_spec()));

    // Overlapping data are rejected here as well.
    CHECK_THROWS_AS(check_informatizable_nomarking(fixtures::abd(), words(fixtures::abd(), {"a", "db"}),
                                                   words(fixtures::abd(), {"d", "ad", "dd"}),
                                                   fixtures::marking_gap_spec()),
                    InvalidTriple);
}

TEST_CASE("automaton and string criteria agree") {
    std::vector<std::pair<DataTriple, Language>> cases;
    Alphabet r = fixtures::robot();
    cases.emplace_back(fixtures::robot1(), words(r, {"adf", "bcf"}));
    cases.emplace_back(fixtures::robot2(), words(r, {"acb", "bcf"}));
    cases.emplace_back(fixtures::ksup(), words(r, {"ab", "acf", "aed"}));
    cases.emplace_back(fixtures::ksup(), words(r, {"aed"}));
    cases.emplace_back(fixtures::monotone(), words(fixtures::abd(), {"ab"}));
    cases.emplace_back(fixtures::marking_gap(), words(fixtures::abd(), {"a", "db"}));
    for (const auto& [t, k] : cases) {
        Verdict x = check_k_informative(t, k);
        Verdict y = criterion_direct(t, k);
        CHECK(x.informative == y.informative);
        CHECK(x.witnesses == y.witnesses);
    }

    for (std::uint64_t seed = 1; seed <= 500; ++seed) {
        auto [t, spec] = oracle::random_instance(oracle::varied_params(seed));
        Language kdm = restrict_spec(t.d_m(), spec);
        Verdict marking = check_marking_informative(t, spec);
        REQUIRE(marking.informative == check_k_informative(t, kdm).informative);
        for (const Language& k : oracle::subsets(kdm)) {
            Verdict x = check_k_informative(t, k);
            Verdict y = criterion_direct(t, k);
            REQUIRE(x.informative == y.informative);
            REQUIRE(x.witnesses == y.witnesses);
            const Language kbar = prefix_closure(k);
            for (const Witness& w : x.witnesses) {
                CHECK(kbar.contains(w.word));
                CHECK_FALSE(t.alphabet().is_controllable(w.event));
                Word next = concat(w.word, w.event);
                CHECK_FALSE(kbar.contains(next));
                CHECK_FALSE(t.d_minus().contains(next));
            }
        }
    }
}

}
