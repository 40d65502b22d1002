#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powergraph/group.hpp"
#include "powergraph/oracle.hpp"

namespace powergraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  bool json = false;
  std::optional<std::string> dot;
  bool verify = false;
  bool orientation = false;  // graph: emit the transitive orientation
  std::optional<double> budget_seconds;
  std::uint64_t max_order = kDefaultMaxOrder;
};

/// Flag, then POWERGRAPH_BUDGET_SECONDS, then the library default.
double effective_budget_seconds(const Options& opts);

/// The dimension search is bounded by time, not by a vertex cap.
oracle::SearchBudget dim_budget(const Options& opts);
oracle::SearchBudget iso_budget(const Options& opts);

/// Corpus rows run the oracle only up to this order.
inline constexpr std::uint64_t kCorpusOracleMaxOrder = 48;

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Orientation transitivity and containment, structure theorem, Euler sum,
/// chi = omega and the twin class shapes, in that order.
std::vector<CheckResult> verify_suite(const Group& g);

int cmd_info(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_graph(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_dim(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_classes(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_iso(const std::string& spec1, const std::string& spec2, const Options& opts, std::ostream& out,
            std::ostream& err);
int cmd_verify(const std::string& spec, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_corpus(const Options& opts, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] included).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace powergraph::cli
