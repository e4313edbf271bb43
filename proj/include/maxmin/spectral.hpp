#pragma once

// Eigenvectors are fixed points A (x) x = x. Greatest eigenvector, the
// constant eigenvector c*(A) and orbit period detection.

#include "maxmin/core.hpp"
#include "maxmin/graph.hpp"

#include <functional>
#include <unordered_map>
#include <vector>

namespace maxmin {

template <std::integral T = Tick>
struct Aggregates {
  T max_entry{0};     // m_A
  T row_max_floor{0};  // c(A)
  Vector<T> constant;  // c*(A)

  friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

template <std::integral T>
Aggregates<T> aggregates(const Matrix<T>& a) {
  const T m = a.size() == 0 ? T(0) : a.entries().maxCoeff();
  const T c = row_max_floor(a);
  return {m, c, Vector<T>::constant(a.size(), c, a.top())};
}

template <std::integral T>
bool is_eigenvector(const Matrix<T>& a, const Vector<T>& x) {
  return matvec(a, x) == x;
}

template <std::integral T = Tick>
struct GreatestEigenvector {
  Vector<T> vector;
  /// Number of products A (x) x^k evaluated.
  Index iterations{0};
  /// Fixed point reached before the n-th iterate.
  bool early_exit{false};
};

/// x^1_i = max_j a_ij, x^{k+1} = A (x) x^k; x^n is the greatest fixed point.
/// The sequence is non-increasing so a repeat ends the iteration early.
template <std::integral T>
GreatestEigenvector<T> greatest_eigenvector_trace(const Matrix<T>& a) {
  const Index n = a.size();
  VectorStorage<T> x = n == 0 ? VectorStorage<T>() : VectorStorage<T>(a.entries().rowwise().maxCoeff());
  GreatestEigenvector<T> out;
  for (Index k = 1; k < n; ++k) {
    VectorStorage<T> next = detail::maxmin_product(a.entries(), x);
    ++out.iterations;
    if (next == x) {
      out.early_exit = k + 1 < n;
      break;
    }
    x = std::move(next);
  }
  out.vector = Vector<T>(a.top(), std::move(x));
  return out;
}

template <std::integral T>
Vector<T> greatest_eigenvector(const Matrix<T>& a) {
  return greatest_eigenvector_trace(a).vector;
}

template <std::integral T = Tick>
struct OrbitSummary {
  /// Least r with x^(r) on the eventual cycle.
  Index transient{0};
  Index period{1};
  /// x^(0), ..., x^(transient + period - 1); the next iterate is x^(transient).
  std::vector<Vector<T>> prefix;
  bool hits_eigenvector{false};

  friend bool operator==(const OrbitSummary&, const OrbitSummary&) = default;
};

namespace detail {

template <std::integral T>
struct TicksHash {
  std::size_t operator()(const VectorStorage<T>& v) const noexcept {
    std::size_t h = std::size_t(v.size());
    for (Index i = 0; i < v.size(); ++i) h = h * 1000003u ^ std::hash<T>{}(v(i));
    return h;
  }
};

template <std::integral T>
struct TicksEqual {
  bool operator()(const VectorStorage<T>& a, const VectorStorage<T>& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

}  // namespace detail

/// Iterates until the first repeated vector. Values never leave the finite set
/// of entries of A and x0, so the loop terminates.
template <std::integral T>
OrbitSummary<T> orbit(const Matrix<T>& a, const Vector<T>& x0) {
  detail::same_shape(a, x0);
  std::unordered_map<VectorStorage<T>, Index, detail::TicksHash<T>, detail::TicksEqual<T>> seen;
  OrbitSummary<T> out;
  VectorStorage<T> x = x0.ticks();
  for (Index r = 0;; ++r) {
    auto [it, inserted] = seen.try_emplace(x, r);
    if (!inserted) {
      out.transient = it->second;
      out.period = r - it->second;
      break;
    }
    out.prefix.emplace_back(a.top(), x);
    x = detail::maxmin_product(a.entries(), x);
  }
  out.hits_eigenvector = out.period == 1;
  return out;
}

}  // namespace maxmin
