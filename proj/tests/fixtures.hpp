#pragma once

// Data sets of the robot-navigation running example and the small
// counterexamples, shared by the unit and acceptance suites.

#include <initializer_list>
#include <string_view>

#include "datasup/data.hpp"
#include "datasup/spec.hpp"

namespace fixtures {

using namespace datasup;

// Σ_c = {a, b, c, e, f}, Σ_u = {d}.
inline Alphabet robot() { return Alphabet({"a", "b", "c", "e", "f"}, {"d"}); }

// Σ_c = {a, b}, Σ_u = {d}.
inline Alphabet abd() { return Alphabet({"a", "b"}, {"d"}); }

inline Word word(const Alphabet& a, std::string_view chars) { return a.parse_chars(chars); }

// "" is ε.
inline Language words(const Alphabet& a, std::initializer_list<std::string_view> list) {
    Language out;
    for (auto w : list) out.insert(a.parse_chars(w));
    return out;
}

inline DataTriple triple(const Alphabet& a, std::initializer_list<std::string_view> d,
                         std::initializer_list<std::string_view> d_m,
                         std::initializer_list<std::string_view> d_minus) {
    return validate_triple(a, words(a, d), words(a, d_m), words(a, d_minus));
}

inline DataTriple robot1() {
    return triple(robot(), {"ae", "adf", "bcf"}, {"adf", "bcf"},
                  {"d", "bd", "aed", "add", "bcd", "adfd", "bcfd"});
}

inline DataTriple robot2() {
    return triple(robot(), {"acb", "acd", "bcf"}, {"acb", "bcf"}, {"d", "bd", "bcd", "acbd", "bcfd"});
}

inline SpecLanguage robot_spec() {
    return SpecLanguage::finite(robot(), words(robot(), {"ae", "acb", "adf", "bcf"}));
}

inline DataTriple monotone() { return triple(abd(), {"abd"}, {"ab", "abd"}, {"d", "ad", "abdd"}); }

inline SpecLanguage monotone_spec() {
    return SpecLanguage::finite(abd(), words(abd(), {"ab", "abd"}));
}

// Adding d to D⁻ would overlap D̄ (d is a prefix of db); that variant is
// tests/data/marking_gap_overlap.json.
inline DataTriple marking_gap() { return triple(abd(), {"a", "db"}, {"a", "db"}, {"ad", "dd"}); }

inline SpecLanguage marking_gap_spec() { return SpecLanguage::finite(abd(), words(abd(), {"a", "db"})); }

inline DataTriple ksup() {
    return triple(robot(), {"abe", "acfd", "aed"}, {"ab", "abe", "acf", "aed"},
                  {"d", "ad", "acd", "aedd"});
}

inline SpecLanguage ksup_spec() {
    return SpecLanguage::finite(robot(), words(robot(), {"ab", "acf", "aed"}));
}

// Robot-navigation plant reconstructed from the running text: start 0,
// goal 7 (marked), danger 6, uncontrollable d on 1→5 and 4→6.
inline Dfa g1_plant() {
    Alphabet a = robot();
    Dfa g(a);
    for (int i = 0; i < 8; ++i) g.add_state(i == 7);
    auto ev = [&](char c) { return *a.find(std::string(1, c)); };
    g.add_transition(0, ev('a'), 1);
    g.add_transition(0, ev('b'), 2);
    g.add_transition(1, ev('c'), 4);
    g.add_transition(1, ev('d'), 5);
    g.add_transition(1, ev('e'), 3);
    g.add_transition(2, ev('c'), 5);
    g.add_transition(4, ev('b'), 7);
    g.add_transition(4, ev('d'), 6);
    g.add_transition(5, ev('f'), 7);
    return g;
}

// Every word over `a` of length ≤ max_len.
inline Language all_words(const Alphabet& a, std::size_t max_len) {
    Language out{Word{}};
    Language frontier{Word{}};
    for (std::size_t n = 0; n < max_len; ++n) {
        frontier = extend(frontier, a.events());
        out.insert(frontier.begin(), frontier.end());
    }
    return out;
}

} // namespace fixtures
