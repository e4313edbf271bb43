#pragma once

// Threshold digraphs G(A, h) and permutation structure at a level.

#include "maxmin/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace maxmin {

template <std::integral T = Tick>
struct ThresholdDigraph {
  Index n{0};
  T threshold{0};
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> adjacency;

  bool has_arc(Index i, Index j) const { return adjacency(i, j); }

  /// Arcs in row-major order.
  std::vector<std::pair<Index, Index>> arcs() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        if (adjacency(i, j)) out.emplace_back(i, j);
    return out;
  }
  Index arc_count() const { return adjacency.count(); }
};

/// Arcs (i, j) with a_ij >= h.
template <std::integral T>
ThresholdDigraph<T> threshold_digraph(const Matrix<T>& a, T h) {
  return {a.size(), h, (a.entries().array() >= h).matrix()};
}

/// Permutation sigma whose arcs (i, sigma(i)) are the only entries at or above
/// the level, split into disjoint elementary cycles.
///
/// Cycles start at their smallest node and are ordered by that node.
struct CycleDecomposition {
  std::vector<Index> sigma;
  std::vector<std::vector<Index>> cycles;
  /// cycle_of[i] is the position in `cycles` of the cycle through i.
  std::vector<Index> cycle_of;

  Index size() const { return Index(sigma.size()); }

  static CycleDecomposition from_permutation(std::vector<Index> sigma) {
    CycleDecomposition d;
    const Index n = Index(sigma.size());
    d.cycle_of.assign(std::size_t(n), -1);
    for (Index start = 0; start < n; ++start) {
      if (d.cycle_of[std::size_t(start)] >= 0) continue;
      std::vector<Index> cycle;
      Index v = start;
      do {
        d.cycle_of[std::size_t(v)] = Index(d.cycles.size());
        cycle.push_back(v);
        v = sigma[std::size_t(v)];
      } while (v != start);
      d.cycles.push_back(std::move(cycle));
    }
    d.sigma = std::move(sigma);
    return d;
  }

  friend bool operator==(const CycleDecomposition&, const CycleDecomposition&) = default;
};

/// Decomposition iff every row and every column of A has exactly one entry >= alpha.
template <std::integral T>
std::optional<CycleDecomposition> level_permutation(const Matrix<T>& a, T alpha) {
  const Index n = a.size();
  const auto& e = a.entries();
  std::vector<Index> sigma(std::size_t(n), -1);
  std::vector<Index> column_hits(std::size_t(n), 0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (e(i, j) < alpha) continue;
      if (sigma[std::size_t(i)] >= 0) return std::nullopt;
      if (++column_hits[std::size_t(j)] > 1) return std::nullopt;
      sigma[std::size_t(i)] = j;
    }
    if (sigma[std::size_t(i)] < 0) return std::nullopt;
  }
  return CycleDecomposition::from_permutation(std::move(sigma));
}

/// c(A) = min over rows of the row maximum.
template <std::integral T>
T row_max_floor(const Matrix<T>& a) {
  if (a.size() == 0) return a.top();
  return a.entries().rowwise().maxCoeff().minCoeff();
}

/// gamma(A, upper) = min(c(A), min_i upper_i).
template <std::integral T>
T gamma(const Matrix<T>& a, const Vector<T>& upper) {
  detail::same_shape(a, upper);
  if (a.size() == 0) return a.top();
  return std::min(row_max_floor(a), upper.ticks().minCoeff());
}

template <std::integral T>
Vector<T> gamma_vector(const Matrix<T>& a, const Vector<T>& upper) {
  return Vector<T>::constant(a.size(), gamma(a, upper), a.top());
}

}  // namespace maxmin
