#pragma once

// X-conformism: a combinatorial test for "every eigenvector in the box X is
// the only solution in X of A (x) y = x".
//
// Applicable when lower < c*(A) in every coordinate and
// max_i lower_i < min_i upper_i. Under those conditions the property holds
// iff A is a level gamma-permutation (gamma = min(c(A), min_i upper_i)) and
// every arc (i, s) of its cycles, with e/f the per-cycle max of lower and
// per-cycle min of min(upper, x+) satisfies
//   (1) lower_s <  e_s  =>  a_ik <  e_i   for k != s,
//   (2) lower_s == e_s  =>  a_ik <= e_i   for k != s,
//   (3) a_is == min over cycle arcs == x+_s == f_s  =>  upper_s <= x+_s.
// Whenever it fails a concrete pair of distinct solutions is produced.

#include "maxmin/core.hpp"
#include "maxmin/graph.hpp"
#include "maxmin/oracle.hpp"
#include "maxmin/spectral.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace maxmin {

enum class Verdict { Simple, NotSimple, Inapplicable };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple: return "Simple";
    case Verdict::NotSimple: return "NotSimple";
    case Verdict::Inapplicable: return "Inapplicable";
  }
  return "?";
}

template <std::integral T = Tick>
struct EFVectors {
  Vector<T> e;
  Vector<T> f;

  friend bool operator==(const EFVectors&, const EFVectors&) = default;
};

/// Why G(A, gamma) is not a permutation digraph.
struct PermutationFailure {
  enum class Kind {
    EmptyColumn,      // no entry of the column reaches gamma
    RedundantColumn,  // every row reaches gamma outside this column
  };
  Kind kind{Kind::EmptyColumn};
  Index column{0};

  friend bool operator==(const PermutationFailure&, const PermutationFailure&) = default;
};

/// Failure of condition 1, 2 or 3 on the cycle arc (from, to).
struct Violation {
  Index from{0};
  Index to{0};
  int condition{0};
  /// Offending off-cycle column for conditions 1 and 2.
  std::optional<Index> column;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Two distinct solutions in X of A (x) y = target, with target in V(A) and X.
template <std::integral T = Tick>
struct Witness {
  Vector<T> target;
  Vector<T> first;
  Vector<T> second;

  friend bool operator==(const Witness&, const Witness&) = default;
};

template <std::integral T = Tick>
struct ConformismReport {
  bool applicable{false};
  T gamma{0};
  Vector<T> greatest;
  std::optional<CycleDecomposition> level_perm;
  std::optional<PermutationFailure> permutation_failure;
  std::optional<EFVectors<T>> ef;
  std::vector<Violation> violations;
  Verdict verdict{Verdict::Inapplicable};
  std::optional<Witness<T>> witness;
  /// The witness came from grid search rather than the direct construction.
  bool witness_from_search{false};

  friend bool operator==(const ConformismReport&, const ConformismReport&) = default;
};

template <std::integral T>
bool witness_valid(const Matrix<T>& a, const Box<T>& x, const Witness<T>& w) {
  return w.first != w.second && x.contains(w.target) && x.contains(w.first) && x.contains(w.second) &&
         is_eigenvector(a, w.target) && matvec(a, w.first) == w.target && matvec(a, w.second) == w.target;
}

/// lower < c*(A) strictly and max lower < min upper.
template <std::integral T>
bool conformism_applicable(const Matrix<T>& a, const Box<T>& x) {
  detail::same_shape(a, x);
  if (a.size() == 0) return false;
  return (x.lower().ticks().array() < row_max_floor(a)).all() &&
         x.lower().ticks().maxCoeff() < x.upper().ticks().minCoeff();
}

template <std::integral T>
EFVectors<T> ef_vectors(const Box<T>& x, const CycleDecomposition& cycles, const Vector<T>& greatest) {
  const Index n = x.size();
  if (cycles.size() != n || greatest.size() != n) throw DimensionError("ef_vectors: size mismatch");
  VectorStorage<T> e(n), f(n);
  for (const auto& cycle : cycles.cycles) {
    T emax = 0;
    T fmin = x.top();
    for (Index v : cycle) {
      emax = std::max(emax, x.lower()[v]);
      fmin = std::min({fmin, x.upper()[v], greatest[v]});
    }
    for (Index v : cycle) {
      e(v) = emax;
      f(v) = fmin;
    }
  }
  return {Vector<T>(x.top(), std::move(e)), Vector<T>(x.top(), std::move(f))};
}

template <std::integral T>
EFVectors<T> ef_vectors(const Matrix<T>& a, const Box<T>& x, const CycleDecomposition& cycles) {
  detail::same_shape(a, x);
  return ef_vectors(x, cycles, greatest_eigenvector(a));
}

namespace detail {

template <std::integral T>
PermutationFailure explain_non_permutation(const Matrix<T>& a, T level) {
  const auto reach = (a.entries().array() >= level).eval();
  const Index n = a.size();
  for (Index k = 0; k < n; ++k)
    if (!reach.col(k).any()) return {PermutationFailure::Kind::EmptyColumn, k};
  // Some row reaches the level twice; a column that is nobody's only hit exists.
  std::vector<bool> sole(std::size_t(n), false);
  for (Index i = 0; i < n; ++i) {
    if (reach.row(i).count() != 1) continue;
    for (Index j = 0; j < n; ++j)
      if (reach(i, j)) sole[std::size_t(j)] = true;
  }
  for (Index v = 0; v < n; ++v)
    if (!sole[std::size_t(v)]) return {PermutationFailure::Kind::RedundantColumn, v};
  throw std::logic_error("threshold digraph is a permutation after all");
}

template <std::integral T>
Witness<T> construct_witness(const Matrix<T>& a, const Box<T>& x, const ConformismReport<T>& rep) {
  const Index n = a.size();
  const T g = rep.gamma;
  const Vector<T> level = Vector<T>::constant(n, g, a.top());

  if (rep.permutation_failure) {
    const Index k = rep.permutation_failure->column;
    return {level, level, level.with(k, x.lower()[k])};
  }
  if (!rep.level_perm || !rep.ef || rep.violations.empty())
    throw ConstructionError("no recorded cause to build a witness from");

  const auto& cyc = *rep.level_perm;
  const Violation& v = rep.violations.front();
  if (v.condition == 3) {
    const Vector<T>& f = rep.ef->f;
    return {f, f, f.with(v.to, x.upper()[v.to])};
  }

  // Conditions 1/2: lift the offending cycle to the largest sub-gamma entry
  // of its rows, then drop one successor to its lower bound.
  const auto& cycle = cyc.cycles[std::size_t(cyc.cycle_of[std::size_t(v.from)])];
  std::optional<T> d;
  for (Index t : cycle)
    for (Index w = 0; w < n; ++w)
      if (a(t, w) < g) d = std::max(d.value_or(a(t, w)), a(t, w));
  if (!d) throw ConstructionError("cycle rows have no entry below gamma");

  auto attains = [&](Index t) {
    for (Index w = 0; w < n; ++w)
      if (a(t, w) < g && a(t, w) == *d) return true;
    return false;
  };
  Index p = v.from;
  if (!attains(p)) {
    for (Index t : cycle)
      if (attains(t)) {
        p = t;
        break;
      }
  }
  VectorStorage<T> lifted = level.ticks();
  for (Index t : cycle) lifted(t) = *d;
  const Vector<T> target(a.top(), std::move(lifted));
  const Index dropped = cyc.sigma[std::size_t(p)];
  return {target, target, target.with(dropped, x.lower()[dropped])};
}

/// Grid search over source values only, so the result lives in the original chain.
template <std::integral T>
std::optional<Witness<T>> search_witness(const Matrix<T>& a, const Box<T>& x, OracleLimits limits) {
  limits.refine = 1;
  const auto verdict = brute_x_simple(a, x, limits);
  if (!verdict.witness) return std::nullopt;
  const auto& [target, other] = *verdict.witness;
  return Witness<T>{target, target, other};
}

}  // namespace detail

/// Builds the second solution for a NotSimple report and checks it by substitution.
template <std::integral T>
Witness<T> witness_second_solution(const Matrix<T>& a, const Box<T>& x, const ConformismReport<T>& rep) {
  if (rep.verdict != Verdict::NotSimple)
    throw PreconditionError(std::string("no witness exists for verdict ") + to_string(rep.verdict));
  Witness<T> w = detail::construct_witness(a, x, rep);
  if (!witness_valid(a, x, w)) throw ConstructionError("witness failed substitution check");
  return w;
}

/// `fallback` bounds the grid search used if the direct construction fails.
template <std::integral T>
ConformismReport<T> check_conforming(const Matrix<T>& a, const Box<T>& x, const OracleLimits& fallback = {}) {
  detail::same_shape(a, x);
  ConformismReport<T> rep;
  rep.greatest = greatest_eigenvector(a);
  rep.applicable = conformism_applicable(a, x);
  if (!rep.applicable) return rep;

  const Index n = a.size();
  rep.gamma = gamma(a, x.upper());
  rep.level_perm = level_permutation(a, rep.gamma);
  if (!rep.level_perm) {
    rep.permutation_failure = detail::explain_non_permutation(a, rep.gamma);
  } else {
    const auto& cyc = *rep.level_perm;
    rep.ef = ef_vectors(x, cyc, rep.greatest);
    const auto& e = rep.ef->e;
    const auto& f = rep.ef->f;
    const auto& lo = x.lower();
    const auto& hi = x.upper();
    const auto& xp = rep.greatest;
    for (const auto& cycle : cyc.cycles) {
      T cycle_min = a.top();
      for (Index i : cycle) cycle_min = std::min(cycle_min, a(i, cyc.sigma[std::size_t(i)]));
      for (Index i : cycle) {
        const Index s = cyc.sigma[std::size_t(i)];
        for (Index k = 0; k < n; ++k) {
          if (k == s) continue;
          if (lo[s] < e[s] && !(a(i, k) < e[i])) rep.violations.push_back({i, s, 1, k});
          if (lo[s] == e[s] && !(a(i, k) <= e[i])) rep.violations.push_back({i, s, 2, k});
        }
        if (xp[i] == a(i, s) && a(i, s) != cycle_min)
          throw std::logic_error("greatest eigenvector meets a cycle arc above the cycle minimum");
        if (a(i, s) == cycle_min && cycle_min == xp[s] && xp[s] == f[s] && hi[s] > xp[s])
          rep.violations.push_back({i, s, 3, std::nullopt});
      }
    }
  }

  rep.verdict = (rep.level_perm && rep.violations.empty()) ? Verdict::Simple : Verdict::NotSimple;
  if (rep.verdict == Verdict::NotSimple) {
    try {
      rep.witness = witness_second_solution(a, x, rep);
    } catch (const ConstructionError&) {
      rep.witness = detail::search_witness(a, x, fallback);
      if (!rep.witness || !witness_valid(a, x, *rep.witness))
        throw ConstructionError("no valid witness for a NotSimple verdict");
      rep.witness_from_search = true;
    }
  }
  return rep;
}

/// One cycle of the level permutation with the common value range of its
/// coordinates over V(A) intersected with X.
template <std::integral T = Tick>
struct CycleRange {
  std::vector<Index> cycle;
  T low{0};
  T high{0};

  friend bool operator==(const CycleRange&, const CycleRange&) = default;
};

/// V(A) within X = vectors constant on each cycle with the value in [e, f].
template <std::integral T>
std::vector<CycleRange<T>> eigenspace_structure(const ConformismReport<T>& rep) {
  if (rep.verdict != Verdict::Simple) throw PreconditionError("matrix is not X-conforming");
  std::vector<CycleRange<T>> out;
  for (const auto& cycle : rep.level_perm->cycles) {
    const Index head = cycle.front();
    out.push_back({cycle, rep.ef->e[head], rep.ef->f[head]});
  }
  return out;
}

template <std::integral T>
std::vector<CycleRange<T>> eigenspace_structure(const Matrix<T>& a, const Box<T>& x) {
  return eigenspace_structure(check_conforming(a, x));
}

/// Membership in the cycle-range description; `factor` rescales the ranges
/// for vectors of a refined chain.
template <std::integral T>
bool in_structure(const std::vector<CycleRange<T>>& ranges, const Vector<T>& v, T factor = 1) {
  for (const auto& r : ranges) {
    const T value = v[r.cycle.front()];
    if (value < r.low * factor || value > r.high * factor) return false;
    for (Index i : r.cycle)
      if (v[i] != value) return false;
  }
  return true;
}

}  // namespace maxmin
