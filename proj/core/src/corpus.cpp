#include "powergraph/corpus.hpp"

namespace powergraph {

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string spec, std::uint64_t order) { out.push_back({std::move(spec), order}); };
  for (std::uint64_t n = 1; n <= 40; ++n) add("Z(" + std::to_string(n) + ")", n);
  for (std::uint64_t n = 3; n <= 12; ++n) add("D(" + std::to_string(n) + ")", 2 * n);
  for (std::uint64_t n : {8, 16, 32}) add("Q(" + std::to_string(n) + ")", n);
  add("S(3)", 6);
  add("S(4)", 24);
  add("A(4)", 12);
  // Z(3) and Z(9) with one factor of Z(2) are cyclic and already listed.
  for (std::uint64_t k = 2; k <= 3; ++k) {
    std::uint64_t two_k = std::uint64_t{1} << k;
    for (std::uint64_t three_m : {3, 9})
      add("E(2," + std::to_string(k) + ")xZ(" + std::to_string(three_m) + ")", two_k * three_m);
  }
  add("E(2,2)", 4);
  add("E(2,3)", 8);
  return out;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = make_corpus();
  return corpus;
}

}  // namespace powergraph
