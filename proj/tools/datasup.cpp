#include <iostream>

#include <CLI11.hpp>

#include "datasup/cli.hpp"

namespace cli = datasup::cli;

int main(int argc, char** argv) {
    CLI::App app{"Data-driven marking supervisory control"};
    app.require_subcommand(1);

    std::string problem;

    auto* validate = app.add_subcommand("validate", "Check a problem file's data triple");
    validate->add_option("problem", problem, "Problem file (JSON)")->required();

    std::string k_file;
    auto* check = app.add_subcommand("check", "Decide marking informativity (or K-informativity with --k)");
    check->add_option("problem", problem, "Problem file (JSON)")->required();
    check->add_option("--k", k_file, "JSON array of words forming K");

    std::string report, dot_dir;
    auto* synth = app.add_subcommand("synthesize", "Compute K_sup and the maximally permissive supervisor");
    synth->add_option("problem", problem, "Problem file (JSON)")->required();
    synth->add_option("--out", report, "Report file to write")->required();
    synth->add_option("--dot", dot_dir, "Directory for Graphviz exports");

    std::string plant_file;
    bool canonical = false, worst_case = false;
    auto* verify = app.add_subcommand("verify", "Check the synthesized supervisor in closed loop");
    verify->add_option("problem", problem, "Problem file (JSON)")->required();
    auto* plant_opt = verify->add_option("--plant", plant_file, "Plant automaton file (JSON)");
    auto* canonical_opt = verify->add_flag("--canonical", canonical, "Use the plant L = prefix_closure(D)");
    auto* worst_opt = verify->add_flag("--worst-case", worst_case, "Use the most permissive consistent plant");
    plant_opt->excludes(canonical_opt)->excludes(worst_opt);
    canonical_opt->excludes(worst_opt);

    std::uint64_t seed = 1;
    std::size_t count = 500;
    auto* fuzz = app.add_subcommand("oracle-fuzz", "Compare K_sup against the brute-force oracle");
    fuzz->add_option("--seed", seed, "First seed");
    fuzz->add_option("--count", count, "Number of instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : cli::kInputError;
    }

    if (*validate) return cli::cmd_validate(problem, std::cout, std::cerr);
    if (*check) {
        std::optional<std::filesystem::path> k;
        if (!k_file.empty()) k = k_file;
        return cli::cmd_check(problem, k, std::cout, std::cerr);
    }
    if (*synth) {
        std::optional<std::filesystem::path> dot;
        if (!dot_dir.empty()) dot = dot_dir;
        return cli::cmd_synthesize(problem, report, dot, std::cout, std::cerr);
    }
    if (*verify) {
        if (!canonical && !worst_case && plant_file.empty()) {
            std::cerr << "verify: one of --plant, --canonical, --worst-case is required\n";
            return cli::kInputError;
        }
        auto source = canonical    ? cli::PlantSource::Canonical
                      : worst_case ? cli::PlantSource::WorstCase
                                   : cli::PlantSource::File;
        std::optional<std::filesystem::path> plant;
        if (!plant_file.empty()) plant = plant_file;
        return cli::cmd_verify(problem, source, plant, std::cout, std::cerr);
    }
    if (*fuzz) return cli::cmd_oracle_fuzz(seed, count, std::cout, std::cerr);
    return cli::kInputError;
}
