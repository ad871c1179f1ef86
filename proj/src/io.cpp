#include "datasup/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace datasup::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::Input, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : j) {
        if (!item.is_string()) fail(where, "expected an array of strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::string state_name(const json& j, const std::string& where) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    fail(where, "state names must be strings or integers");
}

Language parse_words_at(const Alphabet& alphabet, const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of words");
    Language out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = where + "[" + std::to_string(i) + "]";
        try {
            out.insert(alphabet.parse(string_list(j[i], at)));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::UnknownEvent) throw;
            throw Error(ErrorKind::UnknownEvent, at + ": " + e.what());
        }
    }
    return out;
}

Dfa parse_dfa_at(const Alphabet& alphabet, const json& j, const std::string& where) {
    Dfa dfa(alphabet);
    const json& states = field(j, "states", where);
    if (!states.is_array() || states.empty()) fail(where + ".states", "expected a nonempty array");

    std::map<std::string, State> index;
    for (std::size_t i = 0; i < states.size(); ++i) {
        std::string name = state_name(states[i], where + ".states[" + std::to_string(i) + "]");
        if (index.contains(name)) fail(where + ".states", "duplicate state '" + name + "'");
        index.emplace(name, dfa.add_state(false, name));
    }
    auto lookup = [&](const json& s, const std::string& at) {
        auto it = index.find(state_name(s, at));
        if (it == index.end()) fail(at, "undeclared state '" + state_name(s, at) + "'");
        return it->second;
    };

    dfa.set_initial(lookup(field(j, "initial", where), where + ".initial"));
    const json& markers = field(j, "markers", where);
    if (!markers.is_array()) fail(where + ".markers", "expected an array");
    for (std::size_t i = 0; i < markers.size(); ++i)
        dfa.set_marked(lookup(markers[i], where + ".markers[" + std::to_string(i) + "]"));

    const json& transitions = field(j, "transitions", where);
    if (!transitions.is_array()) fail(where + ".transitions", "expected an array");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        std::string at = where + ".transitions[" + std::to_string(i) + "]";
        const json& t = transitions[i];
        const json& event = field(t, "event", at);
        if (!event.is_string()) fail(at + ".event", "expected a string");
        auto e = alphabet.find(event.get<std::string>());
        if (!e)
            throw Error(ErrorKind::UnknownEvent,
                        at + ": unknown event '" + event.get<std::string>() + "'");
        State from = lookup(field(t, "from", at), at + ".from");
        State to = lookup(field(t, "to", at), at + ".to");
        try {
            dfa.add_transition(from, *e, to);
        } catch (const Error& err) {
            fail(at, err.what());
        }
    }
    return dfa;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Input, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json parse_json(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Input, source + ": " + e.what());
    }
}

Problem parse_problem(const json& j) {
    const json& alpha = field(j, "alphabet", "problem");
    Alphabet alphabet(string_list(field(alpha, "controllable", "alphabet"), "alphabet.controllable"),
                      string_list(field(alpha, "uncontrollable", "alphabet"),
                                  "alphabet.uncontrollable"));

    Language d = parse_words_at(alphabet, field(j, "D", "problem"), "D");
    Language d_m = parse_words_at(alphabet, field(j, "D_m", "problem"), "D_m");
    Language d_minus = parse_words_at(alphabet, field(j, "D_minus", "problem"), "D_minus");

    const json& spec = field(j, "spec", "problem");
    const json& type = field(spec, "type", "spec");
    if (type == "finite") {
        return Problem{alphabet, std::move(d), std::move(d_m), std::move(d_minus),
                       SpecLanguage::finite(alphabet,
                                            parse_words_at(alphabet, field(spec, "words", "spec"),
                                                           "spec.words"))};
    }
    if (type == "dfa") {
        return Problem{alphabet, std::move(d), std::move(d_m), std::move(d_minus),
                       SpecLanguage::automaton(parse_dfa_at(alphabet, spec, "spec"))};
    }
    fail("spec.type", "expected \"finite\" or \"dfa\"");
}

Problem load_problem(const std::filesystem::path& path) {
    return parse_problem(parse_json(read_file(path), path.string()));
}

Word parse_word(const Alphabet& alphabet, const json& j) {
    return alphabet.parse(string_list(j, "word"));
}

Language parse_words(const Alphabet& alphabet, const json& j) {
    return parse_words_at(alphabet, j, "words");
}

Dfa parse_dfa(const Alphabet& alphabet, const json& j) { return parse_dfa_at(alphabet, j, "dfa"); }

json to_json(const Alphabet& alphabet, const Word& w) { return alphabet.symbols(w); }

json to_json(const Alphabet& alphabet, const Language& lang) {
    json out = json::array();
    for (const Word& w : lang) out.push_back(to_json(alphabet, w));
    return out;
}

json to_json(const Dfa& dfa) {
    const Alphabet& alphabet = dfa.alphabet();
    json states = json::array(), markers = json::array(), transitions = json::array();
    for (State s = 0; s < dfa.num_states(); ++s) {
        states.push_back(dfa.label(s));
        if (dfa.is_marked(s)) markers.push_back(dfa.label(s));
        for (auto [e, t] : dfa.successors(s))
            transitions.push_back(
                {{"from", dfa.label(s)}, {"event", alphabet.name(e)}, {"to", dfa.label(t)}});
    }
    json out{{"states", states}, {"markers", markers}, {"transitions", transitions}};
    out["initial"] = dfa.is_empty() ? json(nullptr) : json(dfa.label(dfa.initial()));
    return out;
}

json to_json(const Problem& problem) {
    const Alphabet& alphabet = problem.alphabet;
    json controllable = json::array(), uncontrollable = json::array();
    for (Event e : alphabet.controllable()) controllable.push_back(alphabet.name(e));
    for (Event e : alphabet.uncontrollable()) uncontrollable.push_back(alphabet.name(e));

    json spec;
    if (problem.spec.is_finite()) {
        spec = {{"type", "finite"}, {"words", to_json(alphabet, problem.spec.words())}};
    } else {
        spec = to_json(problem.spec.dfa());
        spec["type"] = "dfa";
    }
    return {{"alphabet", {{"controllable", controllable}, {"uncontrollable", uncontrollable}}},
            {"D", to_json(alphabet, problem.d)},
            {"D_m", to_json(alphabet, problem.d_m)},
            {"D_minus", to_json(alphabet, problem.d_minus)},
            {"spec", spec}};
}

json supervisor_to_json(const Alphabet& alphabet, const Supervisor& sup) {
    json out = json::array();
    for (const auto& [w, off] : sup.table()) {
        json disable = json::array();
        for (Event e : off) disable.push_back(alphabet.name(e));
        out.push_back({{"word", to_json(alphabet, w)}, {"disable", disable}});
    }
    return out;
}

json report_to_json(const Alphabet& alphabet, const SynthesisReport& report) {
    return {{"informative", report.informative},
            {"noninformative_states", to_json(alphabet, report.noninformative_words)},
            {"informatizable", report.informatizable},
            {"k_sup", to_json(alphabet, report.k_sup)},
            {"supervisor", report.supervisor ? supervisor_to_json(alphabet, *report.supervisor)
                                             : json::array()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const Dfa& dfa, const std::string& name, const DotStyle& style) {
    const Alphabet& alphabet = dfa.alphabet();
    std::ostringstream out;
    out << "digraph \"" << escape(name) << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    if (!dfa.is_empty()) {
        out << "  __start [shape=point, label=\"\"];\n";
        out << "  __start -> q" << dfa.initial() << ";\n";
    }
    for (State s = 0; s < dfa.num_states(); ++s) {
        out << "  q" << s << " [label=\"" << escape(dfa.label(s)) << "\"";
        if (dfa.is_marked(s)) out << ", shape=doublecircle";
        if (style.spec_states.contains(s))
            out << ", style=filled, fillcolor=orange";
        else if (style.impossible_states.contains(s))
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (State s = 0; s < dfa.num_states(); ++s) {
        for (auto [e, t] : dfa.successors(s)) {
            out << "  q" << s << " -> q" << t << " [label=\"" << escape(alphabet.name(e)) << "\"";
            if (!alphabet.is_controllable(e)) out << ", style=dashed";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace datasup::io
