#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "datasup/spec.hpp"
#include "datasup/synthesis.hpp"

namespace datasup::io {

using json = nlohmann::json;

/// Unvalidated contents of a problem file.
struct Problem {
    Alphabet alphabet;
    Language d;
    Language d_m;
    Language d_minus;
    SpecLanguage spec;
};

/// Reads a whole file. Throws Error(Input) if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Parses JSON text. Throws Error(Input) with the line and column of a
/// syntax error.
json parse_json(const std::string& text, const std::string& source = "<input>");

Problem parse_problem(const json& j);
Problem load_problem(const std::filesystem::path& path);

/// Canonical form: symbol and word lists sorted, DFA transitions ordered by
/// source state then event.
json to_json(const Problem& problem);

Word parse_word(const Alphabet& alphabet, const json& j);
Language parse_words(const Alphabet& alphabet, const json& j);
json to_json(const Alphabet& alphabet, const Word& w);
json to_json(const Alphabet& alphabet, const Language& lang);

/// {"states": [...], "initial": s, "markers": [...], "transitions":
/// [{"from": s, "event": e, "to": t}, ...]}. State names may be strings or
/// integers.
Dfa parse_dfa(const Alphabet& alphabet, const json& j);
json to_json(const Dfa& dfa);

/// {"informative", "noninformative_states", "informatizable", "k_sup",
/// "supervisor": [{"word", "disable"}]}.
json report_to_json(const Alphabet& alphabet, const SynthesisReport& report);
json supervisor_to_json(const Alphabet& alphabet, const Supervisor& sup);

/// Two-space indented dump with a trailing newline; keys sorted.
std::string dump(const json& j);

/// Highlighting for data-driven automata: Q_K and Q_- states.
struct DotStyle {
    StateSet spec_states;
    StateSet impossible_states;
};

/// Graphviz digraph. Markers are double circles, an invisible point node
/// points at the initial state, uncontrollable transitions are dashed.
std::string to_dot(const Dfa& dfa, const std::string& name, const DotStyle& style = {});

} // namespace datasup::io
