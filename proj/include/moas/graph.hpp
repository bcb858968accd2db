#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "moas/cost_vector.hpp"

namespace moas {

/// A path is a sequence of vertex ids; consecutive pairs must be edges.
using Path = std::vector<int>;

struct Edge {
  int from = 0;
  int to = 0;
  CostVector cost;
};

/**
 * @brief Directed graph with d-dimensional non-negative edge costs.
 *
 * Vertex ids are dense in [0, num_vertices). Parallel edges are allowed
 * but a Path (vertex sequence) always binds to the cheapest-listed edge
 * between two vertices, so generators avoid emitting parallel edges.
 */
class Graph {
 public:
  Graph(int num_vertices, int edge_dim) : edge_dim_(edge_dim), out_(num_vertices) {
    if (num_vertices <= 0) throw std::invalid_argument("graph needs at least one vertex");
    if (edge_dim <= 0) throw std::invalid_argument("edge cost dimension must be positive");
  }

  int num_vertices() const { return static_cast<int>(out_.size()); }
  int num_edges() const { return num_edges_; }
  int edge_dim() const { return edge_dim_; }

  void add_edge(int from, int to, CostVector cost) {
    check_vertex(from);
    check_vertex(to);
    if (static_cast<int>(cost.dim()) != edge_dim_) {
      throw std::invalid_argument("edge cost has dimension " + std::to_string(cost.dim()) +
                                  ", graph expects " + std::to_string(edge_dim_));
    }
    Edge e{from, to, std::move(cost)};
    auto& row = out_[from];
    auto pos = std::upper_bound(row.begin(), row.end(), e,
                                [](const Edge& a, const Edge& b) { return a.to < b.to; });
    row.insert(pos, std::move(e));
    ++num_edges_;
  }

  /// Out-edges of v, sorted by target id (insertion order among parallels).
  const std::vector<Edge>& out_edges(int v) const {
    check_vertex(v);
    return out_[v];
  }

  /// First edge from u to v, or nullptr.
  const Edge* find_edge(int u, int v) const {
    check_vertex(u);
    for (const Edge& e : out_[u]) {
      if (e.to == v) return &e;
      if (e.to > v) break;
    }
    return nullptr;
  }

  /// All edges in a deterministic order (by source, then target).
  std::vector<Edge> edges() const {
    std::vector<Edge> all;
    all.reserve(num_edges_);
    for (const auto& row : out_) all.insert(all.end(), row.begin(), row.end());
    return all;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) {
      throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
    }
  }

  /// Validates that consecutive vertices of the path are edges.
  bool is_valid_path(const Path& path) const {
    if (path.empty()) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (path[i] < 0 || path[i] >= num_vertices()) return false;
      if (find_edge(path[i], path[i + 1]) == nullptr) return false;
    }
    return path.back() >= 0 && path.back() < num_vertices();
  }

 private:
  int edge_dim_;
  int num_edges_ = 0;
  std::vector<std::vector<Edge>> out_;
};

}  // namespace moas
