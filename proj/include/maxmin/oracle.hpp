#pragma once

// Exhaustive ground truth on a finite critical grid.
//
// Max and min commute with every monotone map of the chain that fixes the
// source values (entries of A, targets, box bounds). Any configuration of
// vectors can therefore be pushed onto the source values plus one interior
// point per gap between consecutive source values without changing which
// equations hold, and two distinct vectors can be kept distinct. Interior
// points are represented exactly by refining the tick unit (factor 2 by
// default).

#include "maxmin/core.hpp"
#include "maxmin/spectral.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace maxmin {

struct OracleLimits {
  Index max_n = 4;
  std::size_t max_candidates = 16;
  /// Interior points per gap + 1; the grid chain has top * refine ticks.
  Tick refine = 2;
  unsigned workers = 1;
};

template <std::integral T = Tick>
struct CriticalGrid {
  T factor{1};
  T top{1};
  /// Ascending candidate ticks of the refined chain, per coordinate.
  std::vector<std::vector<T>> candidates;

  Index dimension() const { return Index(candidates.size()); }
  std::size_t point_count() const {
    std::size_t c = 1;
    for (const auto& v : candidates) c *= v.size();
    return c;
  }
  /// Point with lexicographic rank `index` (coordinate 0 most significant).
  VectorStorage<T> point(std::size_t index) const {
    VectorStorage<T> p(dimension());
    for (Index j = dimension() - 1; j >= 0; --j) {
      const auto& c = candidates[std::size_t(j)];
      p(j) = c[index % c.size()];
      index /= c.size();
    }
    return p;
  }

  friend bool operator==(const CriticalGrid&, const CriticalGrid&) = default;
};

/// Distinct source values plus (factor - 1) evenly spaced interior points
/// per gap, clipped coordinatewise to the box. Sources are original ticks.
template <std::integral T>
CriticalGrid<T> critical_grid(const Box<T>& box, std::vector<T> sources, const OracleLimits& limits) {
  const Index n = box.size();
  if (n > limits.max_n)
    throw TooLargeError("oracle limited to n <= " + std::to_string(limits.max_n) + ", got " +
                        std::to_string(n));
  if (limits.refine < 1) throw PreconditionError("grid refinement factor must be positive");
  const T factor = T(limits.refine);
  for (Index j = 0; j < n; ++j) {
    sources.push_back(box.lower()[j]);
    sources.push_back(box.upper()[j]);
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

  std::vector<T> values;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    values.push_back(T(sources[k] * factor));
    if (k + 1 == sources.size()) break;
    for (T m = 1; m < factor; ++m) values.push_back(T(sources[k] * factor + (sources[k + 1] - sources[k]) * m));
  }

  CriticalGrid<T> grid{factor, T(box.top() * factor), {}};
  for (Index j = 0; j < n; ++j) {
    const T lo = T(box.lower()[j] * factor);
    const T hi = T(box.upper()[j] * factor);
    std::vector<T> c;
    std::copy_if(values.begin(), values.end(), std::back_inserter(c),
                 [&](T v) { return lo <= v && v <= hi; });
    if (c.size() > limits.max_candidates)
      throw TooLargeError("coordinate " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                          " grid candidates, limit " + std::to_string(limits.max_candidates));
    grid.candidates.push_back(std::move(c));
  }
  return grid;
}

template <std::integral T>
std::vector<T> entry_values(const Matrix<T>& a) {
  return {a.entries().data(), a.entries().data() + a.entries().size()};
}

namespace detail {

/// Splits [0, count) into contiguous chunks, one per worker; chunk results
/// are returned in rank order so merging is deterministic.
template <typename Result, typename Fn>
std::vector<Result> split_sweep(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, unsigned(std::max<std::size_t>(count, 1))));
  std::vector<Result> parts(workers);
  auto run = [&](unsigned w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    parts[w] = fn(begin, end);
  };
  if (workers == 1) {
    run(0);
    return parts;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  pool.clear();
  return parts;
}

}  // namespace detail

/// All grid points satisfying `pred`, in lexicographic order.
template <std::integral T, typename Pred>
std::vector<VectorStorage<T>> collect_points(const CriticalGrid<T>& grid, unsigned workers, Pred pred) {
  auto parts = detail::split_sweep<std::vector<VectorStorage<T>>>(
      grid.point_count(), workers, [&](std::size_t begin, std::size_t end) {
        std::vector<VectorStorage<T>> local;
        for (std::size_t k = begin; k < end; ++k) {
          auto p = grid.point(k);
          if (pred(p)) local.push_back(std::move(p));
        }
        return local;
      });
  std::vector<VectorStorage<T>> out;
  for (auto& part : parts)
    for (auto& p : part) out.push_back(std::move(p));
  return out;
}

/// Lexicographically smallest grid point satisfying `pred`.
template <std::integral T, typename Pred>
std::optional<VectorStorage<T>> first_point(const CriticalGrid<T>& grid, unsigned workers, Pred pred) {
  auto parts = detail::split_sweep<std::optional<VectorStorage<T>>>(
      grid.point_count(), workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          auto p = grid.point(k);
          if (pred(p)) return std::optional<VectorStorage<T>>(std::move(p));
        }
        return std::optional<VectorStorage<T>>();
      });
  for (auto& part : parts)
    if (part) return part;
  return std::nullopt;
}

/// Grid points of a refined chain, with the grid that produced them.
template <std::integral T = Tick>
struct GridSet {
  CriticalGrid<T> grid;
  std::vector<Vector<T>> points;
};

/// Exact ticks of a refined-chain vector in the original chain, if it has them.
template <std::integral T>
std::optional<Vector<T>> coarsen(const Vector<T>& v, T factor) {
  if (v.top() % factor != 0) return std::nullopt;
  for (Index i = 0; i < v.size(); ++i)
    if (v[i] % factor != 0) return std::nullopt;
  return Vector<T>(T(v.top() / factor), VectorStorage<T>(v.ticks() / factor));
}

template <std::integral T>
GridSet<T> enumerate_eigenvectors(const Matrix<T>& a, const Box<T>& x, const OracleLimits& limits = {}) {
  detail::same_shape(a, x);
  GridSet<T> out{critical_grid(x, entry_values(a), limits), {}};
  const auto fine = refine(a, out.grid.factor);
  for (auto& p : collect_points(out.grid, limits.workers, [&](const VectorStorage<T>& y) {
         return detail::maxmin_product(fine.entries(), y) == y;
       }))
    out.points.emplace_back(out.grid.top, std::move(p));
  return out;
}

/// Grid solutions of A (x) y = b with y in X.
template <std::integral T>
GridSet<T> enumerate_solutions(const Matrix<T>& a, const Vector<T>& b, const Box<T>& x,
                               const OracleLimits& limits = {}) {
  detail::same_shape(a, b);
  detail::same_shape(a, x);
  auto sources = entry_values(a);
  for (Index i = 0; i < b.size(); ++i) sources.push_back(b[i]);
  GridSet<T> out{critical_grid(x, std::move(sources), limits), {}};
  const auto fine = refine(a, out.grid.factor);
  const VectorStorage<T> target = b.ticks() * out.grid.factor;
  for (auto& p : collect_points(out.grid, limits.workers, [&](const VectorStorage<T>& y) {
         return detail::maxmin_product(fine.entries(), y) == target;
       }))
    out.points.emplace_back(out.grid.top, std::move(p));
  return out;
}

template <std::integral T = Tick>
struct OracleVerdict {
  bool holds{true};
  CriticalGrid<T> grid;
  std::size_t eigenvectors{0};
  /// Refined-chain eigenvector in X with a second preimage in X.
  std::optional<std::pair<Vector<T>, Vector<T>>> witness;
};

/// Every grid eigenvector in X is the only grid solution in X of A (x) y = x.
template <std::integral T>
OracleVerdict<T> brute_x_simple(const Matrix<T>& a, const Box<T>& x, const OracleLimits& limits = {}) {
  detail::same_shape(a, x);
  OracleVerdict<T> out;
  out.grid = critical_grid(x, entry_values(a), limits);
  const auto fine = refine(a, out.grid.factor);
  const std::size_t count = out.grid.point_count();

  auto parts = detail::split_sweep<std::vector<VectorStorage<T>>>(
      count, limits.workers, [&](std::size_t begin, std::size_t end) {
        std::vector<VectorStorage<T>> local;
        local.reserve(end - begin);
        for (std::size_t k = begin; k < end; ++k)
          local.push_back(detail::maxmin_product(fine.entries(), out.grid.point(k)));
        return local;
      });
  std::vector<VectorStorage<T>> images;
  images.reserve(count);
  for (auto& part : parts)
    for (auto& p : part) images.push_back(std::move(p));

  std::unordered_map<VectorStorage<T>, std::size_t, detail::TicksHash<T>, detail::TicksEqual<T>> preimages;
  for (const auto& img : images) ++preimages[img];

  for (std::size_t k = 0; k < count; ++k) {
    const auto p = out.grid.point(k);
    if (images[k] != p) continue;
    ++out.eigenvectors;
    if (preimages[p] == 1 || !out.holds) continue;
    out.holds = false;
    for (std::size_t m = 0; m < count; ++m) {
      if (m == k || images[m] != p) continue;
      out.witness.emplace(Vector<T>(out.grid.top, p), Vector<T>(out.grid.top, out.grid.point(m)));
      break;
    }
  }
  return out;
}

/// v is an eigenvector in X and the only grid solution in X of A (x) y = v.
template <std::integral T>
bool x_simple_vector_oracle(const Matrix<T>& a, const Box<T>& x, const Vector<T>& v,
                            const OracleLimits& limits = {}) {
  if (!x.contains(v) || !is_eigenvector(a, v)) return false;
  return enumerate_solutions(a, v, x, limits).points.size() == 1;
}

}  // namespace maxmin
