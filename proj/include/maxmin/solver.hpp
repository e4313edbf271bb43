#pragma once

// Max-min linear systems A (x) x = b restricted to a box X.
//
// Every solution in X lies below the principal solution
//   p_j = min(upper_j, min{ b_i : a_ij > b_i }),
// so the system is solvable in X iff p >= lower and A (x) p = b. With X the
// full box, p is the classical principal solution x*(A, b).

#include "maxmin/core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace maxmin {

using IndexSet = std::vector<Index>;

/// Rows with b_i = lower_i and the bounds they impose.
///
/// Such a row caps every column k with a_ik > lower_i at lower_i. A column
/// whose cap meets its lower bound is forced; a cap below the lower bound
/// makes the system unsolvable. The removed rows still have to be attained,
/// i.e. max_j min(a_ij, x_j) >= lower_i.
template <std::integral T = Tick>
struct Reduction {
  IndexSet removed_rows;
  IndexSet kept_rows;
  std::vector<std::pair<Index, T>> forced_columns;
  /// Columns whose upper bound was tightened but not collapsed.
  std::vector<std::pair<Index, T>> capped_columns;
  Box<T> box;
  bool consistent{true};
  std::optional<Index> conflict_column;

  friend bool operator==(const Reduction&, const Reduction&) = default;
};

template <std::integral T>
Reduction<T> reduce_system(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x) {
  detail::same_shape(a, b);
  detail::same_shape(a, x);
  if (!x.contains(b)) throw PreconditionError("reduce_system requires b inside the box");
  const Index n = a.size();
  const auto& lo = x.lower().ticks();
  VectorStorage<T> cap = x.upper().ticks();

  Reduction<T> r;
  for (Index i = 0; i < n; ++i) {
    if (b[i] != lo(i)) {
      r.kept_rows.push_back(i);
      continue;
    }
    r.removed_rows.push_back(i);
    for (Index k = 0; k < n; ++k)
      if (a(i, k) > lo(i)) cap(k) = std::min(cap(k), lo(i));
  }
  for (Index k = 0; k < n; ++k) {
    if (cap(k) == x.upper()[k]) continue;
    if (cap(k) < lo(k)) {
      r.consistent = false;
      if (!r.conflict_column) r.conflict_column = k;
    } else if (cap(k) == lo(k)) {
      r.forced_columns.emplace_back(k, lo(k));
    } else {
      r.capped_columns.emplace_back(k, cap(k));
    }
  }
  if (r.consistent)
    r.box = Box<T>(x.lower(), Vector<T>(x.top(), std::move(cap)));
  else
    r.box = x;
  return r;
}

/// Membership test for the reduced description: y in the tightened box,
/// kept rows met with equality, removed rows attained.
template <std::integral T>
bool satisfies_reduction(const Matrix<T>& a, const Vector<T>& b, const Reduction<T>& r,
                         const Vector<T>& y) {
  if (!r.consistent || !r.box.contains(y)) return false;
  const auto image = detail::maxmin_product(a.entries(), y.ticks());
  for (Index i : r.kept_rows)
    if (image(i) != b[i]) return false;
  for (Index i : r.removed_rows)
    if (image(i) < b[i]) return false;
  return true;
}

template <std::integral T>
Vector<T> principal_solution(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x) {
  detail::same_shape(a, b);
  detail::same_shape(a, x);
  const Index n = a.size();
  VectorStorage<T> p = x.upper().ticks();
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (a(i, j) > b[i]) p(j) = std::min(p(j), b[i]);
  return {a.top(), std::move(p)};
}

/// M_j = { i : min(a_ij, p_j) = b_i } for a principal solution p.
template <std::integral T>
std::vector<IndexSet> cover_sets(const Matrix<T>& a, const Vector<T>& b, const Vector<T>& principal) {
  detail::same_shape(a, b);
  detail::same_shape(b, principal);
  const Index n = a.size();
  std::vector<IndexSet> m(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i)
      if (std::min(a(i, j), principal[j]) == b[i]) m[std::size_t(j)].push_back(i);
  return m;
}

inline bool covers_all(const std::vector<IndexSet>& sets, Index n) {
  std::vector<bool> hit(std::size_t(n), false);
  for (const auto& s : sets)
    for (Index i : s) hit[std::size_t(i)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

template <std::integral T = Tick>
struct SolveReport {
  Vector<T> principal;
  std::vector<IndexSet> cover_sets;
  bool solvable{false};
  bool unique_in_box{false};
  /// Columns that can be lowered below the principal value without leaving
  /// the box and without losing a row they alone attain; empty when unique.
  IndexSet slack_columns;
  Reduction<T> reduction;

  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

/// Uniqueness: with p the principal solution, a column j can be lowered iff
/// lower_j < p_j and every row i in M_j with b_i = p_j is also covered by some
/// other column. The solution is unique iff no column can be lowered.
template <std::integral T>
SolveReport<T> solve(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x) {
  SolveReport<T> rep;
  rep.principal = principal_solution(a, b, x);
  rep.cover_sets = cover_sets(a, b, rep.principal);
  const Index n = a.size();
  rep.solvable = leq(x.lower(), rep.principal) && covers_all(rep.cover_sets, n);
  if (x.contains(b)) rep.reduction = reduce_system(a, b, x);
  if (!rep.solvable) return rep;

  std::vector<Index> coverers(std::size_t(n), 0);
  for (const auto& s : rep.cover_sets)
    for (Index i : s) ++coverers[std::size_t(i)];
  for (Index j = 0; j < n; ++j) {
    const T pj = rep.principal[j];
    if (x.lower()[j] == pj) continue;
    bool pinned = false;
    for (Index i : rep.cover_sets[std::size_t(j)])
      if (b[i] == pj && coverers[std::size_t(i)] == 1) pinned = true;
    if (!pinned) rep.slack_columns.push_back(j);
  }
  rep.unique_in_box = rep.slack_columns.empty();
  return rep;
}

template <std::integral T>
bool is_solvable(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x) {
  return solve(a, b, x).solvable;
}

template <std::integral T>
bool is_unique(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x) {
  return solve(a, b, x).unique_in_box;
}

/// A second solution when `rep` is solvable but not unique: the principal
/// solution with its first slack column lowered as far as its tight rows allow.
template <std::integral T>
std::optional<Vector<T>> second_solution(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x,
                                         const SolveReport<T>& rep) {
  if (!rep.solvable || rep.slack_columns.empty()) return std::nullopt;
  const Index j = rep.slack_columns.front();
  const T pj = rep.principal[j];
  T v = x.lower()[j];
  for (Index i : rep.cover_sets[std::size_t(j)])
    if (b[i] < pj) v = std::max(v, b[i]);
  Vector<T> y = rep.principal.with(j, v);
  if (matvec(a, y) != b || !x.contains(y) || y == rep.principal)
    throw ConstructionError("lowered principal solution failed substitution");
  return y;
}

}  // namespace maxmin
