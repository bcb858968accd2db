#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace moas {

/// Sentinel used for unreachable heuristic components.
inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/**
 * @brief Fixed-dimension vector of non-negative real costs.
 *
 * Used for edge costs (dim d), hidden path costs (dim m) and solution
 * costs (dim k). The dimension is fixed at construction; all binary
 * operations require equal dimensions. Components may be +inf (used as
 * an unreachable sentinel), never negative.
 */
class CostVector {
 public:
  CostVector() = default;

  explicit CostVector(std::vector<double> values) : values_(std::move(values)) {
    validate();
  }

  CostVector(std::initializer_list<double> values) : values_(values) { validate(); }

  /// Zero vector of the given dimension.
  static CostVector zeros(std::size_t dim) {
    return CostVector(std::vector<double>(dim, 0.0));
  }

  std::size_t dim() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  bool operator==(const CostVector& other) const { return values_ == other.values_; }
  bool operator!=(const CostVector& other) const { return values_ != other.values_; }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(values_[i]);
    }
    return s + ")";
  }

 private:
  void validate() const {
    for (double v : values_) {
      if (v < 0.0 || v != v) {
        throw std::invalid_argument("CostVector components must be non-negative, got " +
                                    std::to_string(v));
      }
    }
  }

  std::vector<double> values_;
};

/**
 * @brief Per-dimension approximation factor; every component must be >= 0.
 */
class ApproxFactor {
 public:
  ApproxFactor() = default;

  explicit ApproxFactor(std::vector<double> eps) : eps_(std::move(eps)) {
    for (double e : eps_) {
      if (e < 0.0 || e != e) {
        throw std::invalid_argument("approximation factors must be non-negative");
      }
    }
  }

  /// Uniform factor: the same eps in every compared dimension.
  static ApproxFactor uniform(double eps, std::size_t dim) {
    return ApproxFactor(std::vector<double>(dim, eps));
  }

  static ApproxFactor zero(std::size_t dim) { return uniform(0.0, dim); }

  std::size_t dim() const { return eps_.size(); }
  double operator[](std::size_t i) const { return eps_[i]; }
  const std::vector<double>& values() const { return eps_; }

  bool is_zero() const {
    for (double e : eps_) {
      if (e != 0.0) return false;
    }
    return true;
  }

 private:
  std::vector<double> eps_;
};

inline void require_same_dim(const CostVector& p, const CostVector& q) {
  if (p.dim() != q.dim()) {
    throw std::invalid_argument("cost vector dimension mismatch: " +
                                std::to_string(p.dim()) + " vs " + std::to_string(q.dim()));
  }
}

/// p dominates q: p_i <= q_i for every i. Reflexive.
inline bool dominates(const CostVector& p, const CostVector& q) {
  require_same_dim(p, q);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] > q[i]) return false;
  }
  return true;
}

/// Strict dominance: p dominates q and p != q.
inline bool strictly_dominates(const CostVector& p, const CostVector& q) {
  return dominates(p, q) && p != q;
}

/// Lexicographically smaller-or-equal: p_k < q_k at the first differing
/// index, or p == q componentwise.
inline bool lex_less(const CostVector& p, const CostVector& q) {
  require_same_dim(p, q);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < q[i]) return true;
    if (p[i] > q[i]) return false;
  }
  return true;  // equal vectors
}

/// Strict lexicographic order, used for sorting.
inline bool lex_strictly_less(const CostVector& p, const CostVector& q) {
  require_same_dim(p, q);
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] < q[i]) return true;
    if (p[i] > q[i]) return false;
  }
  return false;
}

/// p eps-dominates q: p_i <= (1+eps_i) * q_i for every i.
inline bool eps_dominates(const CostVector& p, const CostVector& q, const ApproxFactor& eps) {
  require_same_dim(p, q);
  if (eps.dim() != p.dim()) {
    throw std::invalid_argument("approximation factor dimension mismatch");
  }
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] > (1.0 + eps[i]) * q[i]) return false;
  }
  return true;
}

/// Componentwise sum.
inline CostVector vec_add(const CostVector& p, const CostVector& q) {
  require_same_dim(p, q);
  std::vector<double> out(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) out[i] = p[i] + q[i];
  return CostVector(std::move(out));
}

}  // namespace moas
