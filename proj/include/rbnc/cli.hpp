#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rbnc/digraph.hpp"
#include "rbnc/ncsym.hpp"

namespace rbnc::cli {

enum class Command { Compute, Verify, Bench, Batch };
enum class Algorithm { Auto, Definition, Permutations, DeletionContraction };
enum class OutputFormat { Text, Json };

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::Compute;
  /// Digraph file path or generator spec; a family spec for batch.
  std::string input;
  Basis basis = Basis::P;
  bool commutative = false;
  Algorithm algorithm = Algorithm::Auto;
  std::vector<std::string> checks = {"all"};
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Text;
  int count = 20;   // batch size
  int repeat = 3;   // bench repetitions
};

/// "complete:n", "discrete:n", "path:n", "cycle:n", "random:n:p:seed",
/// "tournament:n:seed", or a path to a digraph file. Throws ParseError.
Digraph load_instance(const std::string& input);

/// Largest vertex count each algorithm accepts from the command line.
int algorithm_limit(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm algorithm);

/// Executes one command. Returns 0, 1 (some check failed) or 2 (usage,
/// parse or limit error, reported on err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rbnc::cli
