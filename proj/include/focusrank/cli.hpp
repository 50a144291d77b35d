#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <focusrank/graph.hpp>

namespace focusrank::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { Success = 0, RuntimeError = 1, UsageError = 2 };

/**
 * Entry point of the `focusrank` tool. `args` excludes the program name.
 * Reads stdin only for `rank`/`segment`/`embed` with path "-".
 */
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

/// Random symmetric graph for benchmarking: weights uniform in [0, 1),
/// entries at or below `threshold` dropped.
SimilarityGraph random_graph(std::size_t n, double threshold, std::uint64_t seed);

} // namespace focusrank::cli
