#include "datasup/alphabet.hpp"

#include <algorithm>
#include <numeric>

#include "datasup/error.hpp"

namespace datasup {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Input: return "InputError";
    case ErrorKind::UnknownEvent: return "UnknownEvent";
    case ErrorKind::InvalidTriple: return "InvalidTriple";
    case ErrorKind::SpecOutsideData: return "SpecOutsideData";
    case ErrorKind::EmptySpecification: return "EmptySpecification";
    case ErrorKind::CyclicAutomaton: return "CyclicAutomaton";
    case ErrorKind::NotKInformative: return "NotKInformative";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::TooLarge: return "TooLarge";
    }
    return "Error";
}

Alphabet::Alphabet(std::vector<std::string> controllable,
                   std::vector<std::string> uncontrollable) {
    std::vector<std::pair<std::string, bool>> all;
    for (auto& s : controllable) all.emplace_back(std::move(s), true);
    for (auto& s : uncontrollable) all.emplace_back(std::move(s), false);
    if (all.empty()) throw Error(ErrorKind::Input, "alphabet has no events");

    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (all[i].first.empty())
            throw Error(ErrorKind::Input, "event symbols must be nonempty");
        if (i > 0 && all[i].first == all[i - 1].first) {
            throw Error(ErrorKind::Input,
                        all[i].second != all[i - 1].second
                            ? "event '" + all[i].first + "' is both controllable and uncontrollable"
                            : "duplicate event '" + all[i].first + "'");
        }
    }
    for (auto& [name, ctrl] : all) {
        names_.push_back(std::move(name));
        controllable_.push_back(ctrl);
    }
}

std::optional<Event> Alphabet::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Event>(it - names_.begin());
}

std::vector<Event> Alphabet::controllable() const {
    std::vector<Event> out;
    for (Event e = 0; e < size(); ++e)
        if (controllable_[e]) out.push_back(e);
    return out;
}

std::vector<Event> Alphabet::uncontrollable() const {
    std::vector<Event> out;
    for (Event e = 0; e < size(); ++e)
        if (!controllable_[e]) out.push_back(e);
    return out;
}

std::vector<Event> Alphabet::events() const {
    std::vector<Event> out(size());
    std::iota(out.begin(), out.end(), Event{0});
    return out;
}

bool Alphabet::contains(const Word& w) const {
    return std::all_of(w.begin(), w.end(), [&](Event e) { return contains(e); });
}

Word Alphabet::parse(const std::vector<std::string>& symbols) const {
    Word w;
    w.reserve(symbols.size());
    for (const auto& s : symbols) {
        auto e = find(s);
        if (!e) throw Error(ErrorKind::UnknownEvent, "unknown event '" + s + "'");
        w.push_back(*e);
    }
    return w;
}

Word Alphabet::parse_chars(std::string_view chars) const {
    std::vector<std::string> symbols;
    for (char c : chars) symbols.emplace_back(1, c);
    return parse(symbols);
}

std::vector<std::string> Alphabet::symbols(const Word& w) const {
    std::vector<std::string> out;
    out.reserve(w.size());
    for (Event e : w) out.push_back(name(e));
    return out;
}

std::string Alphabet::format(const Word& w) const {
    if (w.empty()) return "ε";
    bool single = std::all_of(names_.begin(), names_.end(),
                              [](const std::string& n) { return n.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single && i > 0) out += '.';
        out += name(w[i]);
    }
    return out;
}

} // namespace datasup
