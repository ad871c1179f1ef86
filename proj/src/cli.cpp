#include "datasup/cli.hpp"

#include <fstream>
#include <ostream>

#include "datasup/io.hpp"
#include "datasup/oracle.hpp"

namespace datasup::cli {

namespace {

DataTriple load_triple(const io::Problem& p) {
    return validate_triple(p.alphabet, p.d, p.d_m, p.d_minus);
}

std::string format_words(const Alphabet& alphabet, const Language& lang) {
    std::string out = "{";
    for (const Word& w : lang) {
        if (out.size() > 1) out += ", ";
        out += alphabet.format(w);
    }
    return out + "}";
}

void print_verdict(const Alphabet& alphabet, const Verdict& v, const char* yes, const char* no,
                   std::ostream& out) {
    out << (v.informative ? yes : no) << "\n";
    if (v.informative) return;
    out << "witnesses:\n";
    for (const auto& w : v.witnesses)
        out << "  (" << alphabet.format(w.word) << ", " << alphabet.name(w.event) << ") "
            << to_string(w.reason) << "\n";
}

int report_error(const Error& e, std::ostream& err) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInputError;
}

// Runs `body`, mapping library errors onto exit codes. Anything not caught
// here is a bug and propagates.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const Error& e) {
        return report_error(e, err);
    }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorKind::Input, "cannot write '" + path.string() + "'");
    f << text;
}

} // namespace

int cmd_validate(const std::filesystem::path& problem, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        io::Problem p = io::load_problem(problem);
        try {
            load_triple(p);
        } catch (const InvalidTriple& e) {
            for (const auto& v : e.violations())
                err << to_string(v.kind) << " (" << v.set
                    << "): " << p.alphabet.format(v.word) << "\n";
            return kInputError;
        }
        out << "valid\n";
        return kOk;
    });
}

int cmd_check(const std::filesystem::path& problem,
              const std::optional<std::filesystem::path>& k_file, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        io::Problem p = io::load_problem(problem);
        DataTriple triple = load_triple(p);
        if (k_file) {
            Language k = io::parse_words(
                p.alphabet, io::parse_json(io::read_file(*k_file), k_file->string()));
            Verdict v = check_k_informative(triple, k);
            print_verdict(p.alphabet, v, "K-informative", "not K-informative", out);
            return v.informative ? kOk : kNegative;
        }
        Verdict v = check_marking_informative(triple, p.spec);
        print_verdict(p.alphabet, v, "marking informative", "not marking informative", out);
        return v.informative ? kOk : kNegative;
    });
}

int cmd_synthesize(const std::filesystem::path& problem, const std::filesystem::path& report,
                   const std::optional<std::filesystem::path>& dot_dir, std::ostream& out,
                   std::ostream& err) {
    return guarded(err, [&] {
        io::Problem p = io::load_problem(problem);
        DataTriple triple = load_triple(p);
        SynthesisReport r = compute_ksup(triple, p.spec);

        write_text(report, io::dump(io::report_to_json(p.alphabet, r)));
        if (dot_dir) {
            std::error_code ec;
            std::filesystem::create_directories(*dot_dir, ec);
            if (ec) throw Error(ErrorKind::Input, "cannot create '" + dot_dir->string() + "'");
            write_text(*dot_dir / "dda.dot",
                       io::to_dot(r.dda.tree, "data-driven automaton", {r.dda.q_k, r.dda.q_minus}));
            write_text(*dot_dir / "gd.dot", io::to_dot(r.gd, "G_D"));
            write_text(*dot_dir / "sd.dot", io::to_dot(r.sd, "S_D"));
            write_text(*dot_dir / "pd.dot", io::to_dot(r.pd, "P_D"));
        }

        out << (r.informative ? "marking informative" : "not marking informative") << "\n";
        out << "non-informative states: " << format_words(p.alphabet, r.noninformative_words)
            << "\n";
        out << (r.informatizable ? "marking informatizable" : "not marking informatizable")
            << "\n";
        out << "K_sup: " << format_words(p.alphabet, r.k_sup) << "\n";
        return r.informatizable ? kOk : kNegative;
    });
}

int cmd_verify(const std::filesystem::path& problem, PlantSource source,
               const std::optional<std::filesystem::path>& plant_file, std::ostream& out,
               std::ostream& err) {
    return guarded(err, [&]() -> int {
        io::Problem p = io::load_problem(problem);
        DataTriple triple = load_triple(p);
        const Alphabet& alphabet = p.alphabet;

        Dfa plant;
        switch (source) {
        case PlantSource::Canonical: plant = canonical_plant(triple); break;
        case PlantSource::WorstCase: plant = worst_case_plant(triple); break;
        case PlantSource::File:
            if (!plant_file) throw Error(ErrorKind::Input, "no plant file given");
            plant = io::parse_dfa(alphabet,
                                  io::parse_json(io::read_file(*plant_file), plant_file->string()));
            break;
        }

        SynthesisReport r = compute_ksup(triple, p.spec);
        if (!r.informatizable) {
            out << "FAIL: not marking informatizable; no supervisor to verify\n";
            return kNegative;
        }

        ConsistencyReport c = is_consistent(plant, triple);
        if (!c.consistent) {
            out << "FAIL: plant is inconsistent with the data\n" << c.describe(alphabet) << "\n";
            return kNegative;
        }

        ClosedLoop loop;
        try {
            loop = closed_loop(plant, *r.supervisor, r.k_sup, triple.d_closure().size() + 1);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::BoundExceeded) throw;
            out << "FAIL: closed loop escapes the data: " << e.what() << "\n";
            return kNegative;
        }

        bool ok = true;
        const Language expected = prefix_closure(r.k_sup);
        if (loop.words != expected) {
            ok = false;
            out << "FAIL: closed language differs from prefix_closure(K_sup)\n"
                << "  missing: " << format_words(alphabet, set_difference(expected, loop.words))
                << "\n  extra:   " << format_words(alphabet, set_difference(loop.words, expected))
                << "\n";
        }
        if (loop.marked != r.k_sup) {
            ok = false;
            out << "FAIL: marked language " << format_words(alphabet, loop.marked)
                << " differs from K_sup " << format_words(alphabet, r.k_sup) << "\n";
        }
        if (prefix_closure(loop.marked) != loop.words) {
            ok = false;
            out << "FAIL: closed loop is blocking\n";
        }
        if (ok) out << "verified: closed loop = prefix_closure(K_sup), marked = K_sup, nonblocking\n";
        return ok ? kOk : kNegative;
    });
}

int cmd_oracle_fuzz(std::uint64_t seed, std::size_t count, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::size_t mismatches = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t s = seed + i;
            auto [triple, spec] = oracle::random_instance(oracle::varied_params(s));
            Language fast = compute_ksup(triple, spec).k_sup;
            Language brute = oracle::brute_ksup(triple, spec);
            if (fast != brute) {
                ++mismatches;
                const Alphabet& a = triple.alphabet();
                out << "seed " << s << ": compute_ksup " << format_words(a, fast)
                    << " != brute_ksup " << format_words(a, brute) << "\n";
            }
        }
        out << count << " instances, " << mismatches << " mismatches\n";
        return mismatches == 0 ? kOk : kNegative;
    });
}

} // namespace datasup::cli
