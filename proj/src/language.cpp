#include "datasup/language.hpp"

#include <algorithm>
#include <iterator>

namespace datasup {

Language prefix_closure(const Language& lang) {
    Language out;
    for (const Word& w : lang) {
        for (auto end = w.begin();; ++end) {
            out.emplace(w.begin(), end);
            if (end == w.end()) break;
        }
    }
    return out;
}

Language set_union(const Language& a, const Language& b) {
    Language out = a;
    out.insert(b.begin(), b.end());
    return out;
}

Language set_intersection(const Language& a, const Language& b) {
    Language out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

Language set_difference(const Language& a, const Language& b) {
    Language out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
    return out;
}

bool is_subset(const Language& a, const Language& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Language extend(const Language& lang, const std::vector<Event>& events) {
    Language out;
    for (const Word& w : lang)
        for (Event e : events) out.insert(concat(w, e));
    return out;
}

Word concat(Word w, Event e) {
    w.push_back(e);
    return w;
}

std::size_t max_length(const Language& lang) {
    std::size_t n = 0;
    for (const Word& w : lang) n = std::max(n, w.size());
    return n;
}

} // namespace datasup
