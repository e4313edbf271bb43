#pragma once

// Seeded random desk-scale instances for harnesses.

#include "maxmin/core.hpp"
#include "maxmin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace maxmin::io {

using Rng = std::mt19937_64;

inline Tick uniform_tick(Rng& rng, Tick lo, Tick hi) { return std::uniform_int_distribution<Tick>(lo, hi)(rng); }

/// `size` distinct ticks of [0, top], ascending.
inline std::vector<Tick> random_palette(Rng& rng, Tick top, std::size_t size) {
  std::vector<Tick> all(std::size_t(top) + 1);
  std::iota(all.begin(), all.end(), Tick(0));
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(size, all.size()));
  std::sort(all.begin(), all.end());
  return all;
}

inline Tick pick(Rng& rng, const std::vector<Tick>& palette) {
  return palette[std::uniform_int_distribution<std::size_t>(0, palette.size() - 1)(rng)];
}

inline Matrix<Tick> random_matrix(Rng& rng, Index n, Tick top, const std::vector<Tick>& palette) {
  MatrixStorage<Tick> e(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) e(i, j) = pick(rng, palette);
  return {top, std::move(e)};
}

inline Vector<Tick> random_vector(Rng& rng, Index n, Tick top, const std::vector<Tick>& palette) {
  VectorStorage<Tick> v(n);
  for (Index i = 0; i < n; ++i) v(i) = pick(rng, palette);
  return {top, std::move(v)};
}

inline Box<Tick> random_box(Rng& rng, Index n, Tick top, const std::vector<Tick>& palette) {
  VectorStorage<Tick> lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    Tick a = pick(rng, palette), b = pick(rng, palette);
    lo(i) = std::min(a, b);
    hi(i) = std::max(a, b);
  }
  return {Vector<Tick>(top, std::move(lo)), Vector<Tick>(top, std::move(hi))};
}

struct ConformismSample {
  Matrix<Tick> matrix;
  Box<Tick> box;
};

/// Matrix and box from a fresh 5-value palette, redrawn until
/// lower < c*(A) and max lower < min upper.
inline ConformismSample random_conformism_sample(Rng& rng, Index n, Tick top) {
  for (;;) {
    const auto palette = random_palette(rng, top, 5);
    auto a = random_matrix(rng, n, top, palette);
    auto x = random_box(rng, n, top, palette);
    const Tick c = row_max_floor(a);
    if ((x.lower().ticks().array() < c).all() && x.lower().ticks().maxCoeff() < x.upper().ticks().minCoeff())
      return {std::move(a), std::move(x)};
  }
}

/// Level-h permutation matrix for a random permutation with every other entry
/// below h, and a box satisfying the conformism preconditions.
inline ConformismSample random_level_permutation_sample(Rng& rng, Index n, Tick top) {
  const Tick h = uniform_tick(rng, 2, top - 1);
  std::vector<Index> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), Index(0));
  std::shuffle(sigma.begin(), sigma.end(), rng);
  MatrixStorage<Tick> e(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) e(i, j) = sigma[std::size_t(i)] == j ? uniform_tick(rng, h, top) : uniform_tick(rng, 0, h - 1);
  VectorStorage<Tick> lo(n), hi(n);
  for (Index i = 0; i < n; ++i) {
    lo(i) = uniform_tick(rng, 0, h - 1);
    hi(i) = uniform_tick(rng, h, top);
  }
  return {Matrix<Tick>(top, std::move(e)), Box<Tick>(Vector<Tick>(top, std::move(lo)), Vector<Tick>(top, std::move(hi)))};
}

}  // namespace maxmin::io
