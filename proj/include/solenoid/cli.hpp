#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "solenoid/point.hpp"

namespace solenoid::cli {

enum class Format { kDefault, kCsv, kJson, kSvg };

struct ExperimentConfig {
  std::string subcommand;
  std::string input;
  std::size_t depth = kDefaultDepth;
  std::int64_t iters = 100;
  std::string tol = "1/1000000";
  std::int64_t samples = 100;
  std::uint64_t seed = 0;
  std::string out;
  Format format = Format::kDefault;
  /// orbit: starting point literal "x=p/q; k=(...)"; random when empty.
  std::string start;
  /// orbit: rotation number "p/q"; certified from the map when empty.
  std::string rho;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv-style arguments (without the program name) and runs the
/// subcommand. Reports go to --out or `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

/// Uniform exact point: leaf a/b with b in [1, 64], fiber embed(t) with t
/// uniform mod M!. Uses raw engine output only, so streams are portable.
SolenoidPoint random_exact_point(std::mt19937_64& rng, std::size_t depth);

}  // namespace solenoid::cli
