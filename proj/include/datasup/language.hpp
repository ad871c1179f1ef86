#pragma once

#include <set>

#include "datasup/alphabet.hpp"

namespace datasup {

/// Finite language. std::set keeps words unique and sorted
/// lexicographically by event index.
using Language = std::set<Word>;

/// All prefixes of all words, including ε when the language is nonempty.
Language prefix_closure(const Language& lang);

Language set_union(const Language& a, const Language& b);
Language set_intersection(const Language& a, const Language& b);
Language set_difference(const Language& a, const Language& b);
bool is_subset(const Language& a, const Language& b);

/// { wσ | w ∈ lang, σ ∈ events }.
Language extend(const Language& lang, const std::vector<Event>& events);

Word concat(Word w, Event e);

/// Longest word length; 0 for the empty language.
std::size_t max_length(const Language& lang);

} // namespace datasup
