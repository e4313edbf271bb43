#pragma once

// Attraction, weak (X-)robustness, invariance of a box and X-simple image
// eigenvectors. Properties quantified over the whole chain are decided on
// the critical grid of the oracle module.

#include "maxmin/core.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/solver.hpp"
#include "maxmin/spectral.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace maxmin {

/// The orbit of x meets V(A).
template <std::integral T>
bool in_attraction(const Matrix<T>& a, const Vector<T>& x) {
  return orbit(a, x).hits_eigenvector;
}

/// Outcome of a grid sweep. The counterexample is the lexicographically
/// smallest offending point, in the refined chain of `grid`.
template <std::integral T = Tick>
struct GridCheck {
  bool holds{true};
  std::optional<Vector<T>> counterexample;
  CriticalGrid<T> grid;
};

namespace detail {

/// Attracted to V(A) but not a fixed point, evaluated in the refined chain.
template <std::integral T>
bool attracted_not_fixed(const Matrix<T>& fine, const VectorStorage<T>& p) {
  if (maxmin_product(fine.entries(), p) == p) return false;
  return orbit(fine, Vector<T>(fine.top(), p)).hits_eigenvector;
}

template <std::integral T>
GridCheck<T> sweep_attraction(const Matrix<T>& a, const Box<T>& x, const OracleLimits& limits) {
  GridCheck<T> out;
  out.grid = critical_grid(x, entry_values(a), limits);
  const auto fine = refine(a, out.grid.factor);
  auto hit = first_point(out.grid, limits.workers,
                         [&](const VectorStorage<T>& p) { return attracted_not_fixed(fine, p); });
  if (hit) {
    Vector<T> cx(out.grid.top, std::move(*hit));
    if (is_eigenvector(fine, cx) || !in_attraction(fine, cx))
      throw std::logic_error("robustness counterexample failed re-verification");
    out.holds = false;
    out.counterexample = std::move(cx);
  }
  return out;
}

}  // namespace detail

template <std::integral T = Tick>
struct WeakRobustness {
  /// attr(A) = V(A) on the grid, by orbit enumeration.
  GridCheck<T> orbits;
  /// For all grid x: A (x) x in V(A) implies x in V(A).
  bool fixed_point_implication{true};
  /// Every grid eigenvector has itself as only preimage.
  bool simple_image{true};

  bool holds() const { return orbits.holds; }
  bool consistent() const { return orbits.holds == fixed_point_implication && orbits.holds == simple_image; }
};

/// Weak robustness over the full chain, in three equivalent forms.
template <std::integral T>
WeakRobustness<T> is_weakly_robust(const Matrix<T>& a, const OracleLimits& limits = {}) {
  const auto full = Box<T>::full(a.size(), a.top());
  WeakRobustness<T> out;
  out.orbits = detail::sweep_attraction(a, full, limits);
  const auto fine = refine(a, out.orbits.grid.factor);
  out.fixed_point_implication = !first_point(out.orbits.grid, limits.workers, [&](const VectorStorage<T>& p) {
    const auto image = detail::maxmin_product(fine.entries(), p);
    return detail::maxmin_product(fine.entries(), image) == image && image != p;
  });
  out.simple_image = brute_x_simple(a, full, limits).holds;
  return out;
}

/// attr(A) within X is contained in V(A), on the grid of X.
template <std::integral T>
GridCheck<T> is_weakly_x_robust(const Matrix<T>& a, const Box<T>& x, const OracleLimits& limits = {}) {
  detail::same_shape(a, x);
  return detail::sweep_attraction(a, x, limits);
}

/// X is mapped into itself: A (x) lower >= lower and A (x) upper <= upper.
template <std::integral T>
bool is_invariant(const Matrix<T>& a, const Box<T>& x) {
  return leq(x.lower(), matvec(a, x.lower())) && leq(matvec(a, x.upper()), x.upper());
}

template <std::integral T>
bool is_x_simple_vector(const Matrix<T>& a, const Box<T>& x, const Vector<T>& v) {
  if (!x.contains(v)) throw PreconditionError("vector lies outside the box");
  return is_eigenvector(a, v) && is_unique(a, v, x);
}

template <std::integral T = Tick>
struct RobustnessReport {
  bool weakly_robust{false};
  bool weakly_x_robust{false};
  bool x_invariant{false};
  /// Attracted, not fixed; refined chain of the corresponding grid.
  std::optional<Vector<T>> robust_counterexample;
  std::optional<Vector<T>> x_counterexample;
  T top{1};
  Tick grid_factor{1};
  /// The three forms of weak robustness agreed.
  bool forms_agree{true};

  friend bool operator==(const RobustnessReport&, const RobustnessReport&) = default;
};

template <std::integral T>
RobustnessReport<T> robustness_report(const Matrix<T>& a, const Box<T>& x, const OracleLimits& limits = {}) {
  RobustnessReport<T> rep;
  const auto weak = is_weakly_robust(a, limits);
  rep.weakly_robust = weak.holds();
  rep.robust_counterexample = weak.orbits.counterexample;
  rep.forms_agree = weak.consistent();
  const auto wx = is_weakly_x_robust(a, x, limits);
  rep.weakly_x_robust = wx.holds;
  rep.x_counterexample = wx.counterexample;
  rep.x_invariant = is_invariant(a, x);
  rep.top = a.top();
  rep.grid_factor = limits.refine;
  return rep;
}

template <std::integral T = Tick>
struct UpwardnessResult {
  /// No pair alpha <= beta with alpha (x) x simple but beta (x) x not.
  bool holds{true};
  std::optional<std::pair<T, T>> violation;
  /// p(alpha (x) x) <= p(beta (x) x), and p_j(alpha (x) x) equals
  /// p_j(beta (x) x) when it sits at upper_j, alpha (x) p_j(beta (x) x) otherwise.
  bool principal_monotone{true};
  /// Union of cover sets at beta is inside the union at alpha.
  bool cover_inclusion{true};
  std::size_t pairs{0};
  /// Pairs skipped because alpha (x) x lies outside X.
  std::size_t vacuous_pairs{0};
};

/// Sweeps all pairs alpha <= beta from `alphas` for the scaled eigenvectors
/// alpha (x) x. Every alpha must lie in [max_i lower_i, min_i upper_i].
template <std::integral T>
UpwardnessResult<T> upwardness_check(const Matrix<T>& a, const Box<T>& x, const Vector<T>& v,
                                     const std::vector<T>& alphas) {
  detail::same_shape(a, x);
  detail::same_shape(a, v);
  if (!is_eigenvector(a, v)) throw PreconditionError("upwardness needs an eigenvector");
  const T lo = x.lower().ticks().maxCoeff();
  const T hi = x.upper().ticks().minCoeff();
  for (T alpha : alphas)
    if (alpha < lo || alpha > hi)
      throw PreconditionError("alpha " + std::to_string(alpha) + " outside [" + std::to_string(lo) + ", " +
                              std::to_string(hi) + "]");

  auto covered = [&](const Vector<T>& b, const Vector<T>& p) {
    std::vector<bool> hit(std::size_t(a.size()), false);
    for (const auto& s : cover_sets(a, b, p))
      for (Index i : s) hit[std::size_t(i)] = true;
    return hit;
  };

  UpwardnessResult<T> out;
  const Index n = a.size();
  for (T alpha : alphas) {
    for (T beta : alphas) {
      if (beta < alpha) continue;
      ++out.pairs;
      const auto va = scale(alpha, v);
      const auto vb = scale(beta, v);
      const auto pa = principal_solution(a, va, x);
      const auto pb = principal_solution(a, vb, x);
      if (!leq(pa, pb)) out.principal_monotone = false;
      for (Index j = 0; j < n; ++j) {
        const T expected = pa[j] == x.upper()[j] ? pb[j] : std::min(alpha, pb[j]);
        if (pa[j] != expected) out.principal_monotone = false;
      }
      const auto ca = covered(va, pa);
      const auto cb = covered(vb, pb);
      for (Index i = 0; i < n; ++i)
        if (cb[std::size_t(i)] && !ca[std::size_t(i)]) out.cover_inclusion = false;

      if (!x.contains(va)) {
        ++out.vacuous_pairs;
        continue;
      }
      if (is_x_simple_vector(a, x, va) && !is_x_simple_vector(a, x, vb) && out.holds) {
        out.holds = false;
        out.violation = {alpha, beta};
      }
    }
  }
  return out;
}

}  // namespace maxmin
