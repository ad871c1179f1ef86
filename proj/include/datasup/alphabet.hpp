#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace datasup {

/// Index of an event symbol within its Alphabet.
using Event = std::uint32_t;

/// Word over an Alphabet; the empty vector is the empty string.
using Word = std::vector<Event>;

/**
 * Event set partitioned into controllable and uncontrollable symbols.
 *
 * Symbols are arbitrary nonempty strings. Event indices follow the
 * byte-wise order of the symbol names, so that sorting words by index
 * sorts them by name.
 */
class Alphabet {
public:
    Alphabet() = default;

    /// Throws Error(Input) on empty/duplicate symbols, overlap, or an
    /// empty event set.
    Alphabet(std::vector<std::string> controllable,
             std::vector<std::string> uncontrollable);

    std::size_t size() const noexcept { return names_.size(); }
    bool contains(Event e) const noexcept { return e < names_.size(); }

    const std::string& name(Event e) const { return names_.at(e); }
    std::optional<Event> find(std::string_view name) const;
    bool is_controllable(Event e) const { return controllable_.at(e); }

    /// Controllable / uncontrollable events in index order.
    std::vector<Event> controllable() const;
    std::vector<Event> uncontrollable() const;
    std::vector<Event> events() const;

    bool contains(const Word& w) const;

    /// Symbols to word. Throws Error(UnknownEvent) naming the symbol.
    Word parse(const std::vector<std::string>& symbols) const;
    /// Convenience for single-character symbols: "adf" -> [a, d, f].
    Word parse_chars(std::string_view chars) const;

    std::vector<std::string> symbols(const Word& w) const;

    /// Human-readable form. Single-character alphabets concatenate
    /// ("adf"); otherwise symbols are joined with '.'. Empty word is "ε".
    std::string format(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> names_;
    std::vector<bool> controllable_;
};

} // namespace datasup
