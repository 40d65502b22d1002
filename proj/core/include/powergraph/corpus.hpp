#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace powergraph {

struct CorpusEntry {
  std::string spec;
  std::uint64_t order = 0;
};

/// Built-in groups in fixed order: Z(n) for n <= 40, D(3..12), Q(8/16/32),
/// S(3), S(4), A(4), then E(2,k) x Z(3^m) up to order 72.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace powergraph
