#pragma once

#include "pinnacle/problem.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pinnacle {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;

/// The n = 100 instance with its known count.
inline constexpr int kReferenceN = 100;
inline constexpr std::string_view kReferencePinnacles = "97,94,85,79,68,67,63,48,43,38,25,24,23,18,13,8,3";
inline constexpr std::string_view kReferenceCount =
    "2056053437771952757776669166927111145600807102338938271866967172893700954435942350990874234585088000";

/// Parses "7,5,3" (any order, blanks allowed, "" for the empty set). Throws
/// std::invalid_argument on duplicates, nonpositive or non-numeric entries.
std::vector<int> parse_pinnacle_list(std::string_view text);

/// k pinnacles p_i = n - (i-1) * floor((n-1)/k); admissible when n >= 4k.
PinnacleProblem evenly_spaced_problem(int n, int k);

struct BenchPreset {
    std::string name;
    PinnacleProblem problem;
};

/// paper-n100, large-n (k = 50, n = 1e5), large-k (k = 200, n = 1e3).
std::vector<BenchPreset> bench_presets();

/// Runs `pinnacle <args...>` (args excludes the program name) and returns the
/// exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pinnacle
