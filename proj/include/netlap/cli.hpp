#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "netlap/census.hpp"
#include "netlap/matrix_zoo.hpp"
#include "netlap/report.hpp"
#include "netlap/signed_graph.hpp"

namespace netlap::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  /// Path to an edge-list file, or "-" for stdin.
  std::optional<std::string> input;
  std::optional<std::string> family;
  GeneratorParams params;
  bool seed_given = false;
  /// 1-based, as printed.
  int anchor = 1;
  bool all_anchors = false;
  std::optional<std::string> orientation;
  std::uint64_t budget = kDefaultBudget;
  Format format = Format::Text;
};

/// Raised for invalid flag combinations or values.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SignedGraph load_graph(const RunConfig& cfg, std::istream& in);
Orientation resolve_orientation(const RunConfig& cfg, const SignedGraph& g);
/// 0-based anchors selected by the config, validated against the graph.
std::vector<int> resolve_anchors(const RunConfig& cfg, const SignedGraph& g);

struct VerifyOptions {
  std::vector<int> anchors{0};
  std::uint64_t budget = kDefaultBudget;
  /// drives random orientations and random rational test vectors
  std::uint64_t seed = 0;
  std::size_t random_orientations = 4;
  std::size_t random_vectors = 4;
};

/// Every identity the library can check on one graph. Census checks are
/// reported as skipped for disconnected graphs.
Report verify_suite(const SignedGraph& g, const Orientation& o, const VerifyOptions& opts);

struct AnchorCensus {
  int anchor = 0;  // 0-based
  mpz_class det_net_minor;
  mpz_class det_plain_minor;
  mpz_class det_q_minor;
  TUCensus rooted;
};

struct CensusReport {
  int n = 0;
  std::size_t m = 0;
  TreeCounts counts;
  std::vector<AnchorCensus> anchors;  // first entry is the primary anchor
  mpz_class det_q;
  FullTUCensus full;
  Report checks;
};

/// Requires a connected graph on at least 2 vertices.
CensusReport build_census(const SignedGraph& g, const std::vector<int>& anchors, std::uint64_t budget);

std::string render_census(const CensusReport& report, Format format);
std::string render_matrices(const MatrixBundle& bundle);

/// Parses argv and runs one command. Returns the process exit code:
/// 0 success, 1 a check failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace netlap::cli
