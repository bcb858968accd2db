#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "moas/cost_vector.hpp"
#include "moas/graph.hpp"

namespace moas {

/**
 * @brief Keeps the items whose vector is not strictly dominated by any other.
 *
 * Among items with bitwise-identical vectors the first-inserted payload is
 * kept, so the result is deterministic. Input order of survivors is preserved.
 */
template <typename Payload>
std::vector<std::pair<CostVector, Payload>> pareto_filter(
    const std::vector<std::pair<CostVector, Payload>>& items) {
  std::vector<std::pair<CostVector, Payload>> kept;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const CostVector& ci = items[i].first;
    bool keep = true;
    for (std::size_t j = 0; j < items.size() && keep; ++j) {
      if (j == i) continue;
      const CostVector& cj = items[j].first;
      if (strictly_dominates(cj, ci)) keep = false;
      if (cj == ci && j < i) keep = false;  // duplicate: first one wins
    }
    if (keep) kept.push_back(items[i]);
  }
  return kept;
}

/**
 * @brief Mutually non-dominated set of (solution cost, path) entries.
 */
class ParetoFrontier {
 public:
  struct Entry {
    CostVector cost;
    Path path;
  };

  ParetoFrontier() = default;

  /// Builds a frontier by filtering arbitrary (cost, path) items.
  static ParetoFrontier filtered(const std::vector<std::pair<CostVector, Path>>& items) {
    ParetoFrontier f;
    for (auto& kv : pareto_filter(items)) {
      f.entries_.push_back(Entry{kv.first, kv.second});
    }
    return f;
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::vector<CostVector> costs() const {
    std::vector<CostVector> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.cost);
    return out;
  }

  /// Sorts entries lexicographically by cost; used for stable output.
  void sort_lex();

  /// Set equality of cost vectors (exact comparison, order-insensitive).
  bool same_costs(const ParetoFrontier& other) const;

 private:
  std::vector<Entry> entries_;
};

inline void ParetoFrontier::sort_lex() {
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return lex_strictly_less(a.cost, b.cost);
  });
}

inline bool ParetoFrontier::same_costs(const ParetoFrontier& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  auto a = costs();
  auto b = other.costs();
  auto lt = [](const CostVector& x, const CostVector& y) { return lex_strictly_less(x, y); };
  std::sort(a.begin(), a.end(), lt);
  std::sort(b.begin(), b.end(), lt);
  return a == b;
}

}  // namespace moas
