#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

namespace datasup::cli {

/// Exit codes: 0 success / positive verdict, 1 negative verdict,
/// 2 input problem.
enum ExitCode : int { kOk = 0, kNegative = 1, kInputError = 2 };

int cmd_validate(const std::filesystem::path& problem, std::ostream& out, std::ostream& err);

int cmd_check(const std::filesystem::path& problem,
              const std::optional<std::filesystem::path>& k_file, std::ostream& out,
              std::ostream& err);

int cmd_synthesize(const std::filesystem::path& problem, const std::filesystem::path& report,
                   const std::optional<std::filesystem::path>& dot_dir, std::ostream& out,
                   std::ostream& err);

enum class PlantSource { File, Canonical, WorstCase };

int cmd_verify(const std::filesystem::path& problem, PlantSource source,
               const std::optional<std::filesystem::path>& plant_file, std::ostream& out,
               std::ostream& err);

/// Oracle-equivalence run over `count` seeded random instances.
int cmd_oracle_fuzz(std::uint64_t seed, std::size_t count, std::ostream& out, std::ostream& err);

} // namespace datasup::cli
