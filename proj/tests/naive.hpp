#pragma once

// Independent reference arithmetic on plain integer vectors. Exhaustive
// scans visit every tick of the chain, not the critical grid.

#include "maxmin/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace naive {

using Vec = std::vector<int>;
using Mat = std::vector<std::vector<int>>;

inline Mat of(const maxmin::Matrix<int>& a) {
  Mat m(std::size_t(a.size()), Vec(std::size_t(a.size())));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) m[i][j] = a(maxmin::Index(i), maxmin::Index(j));
  return m;
}

inline Vec of(const maxmin::Vector<int>& v) { return v.to_std(); }

inline Mat scaled(Mat a, int factor) {
  for (auto& row : a)
    for (auto& x : row) x *= factor;
  return a;
}

inline Vec scaled(Vec v, int factor) {
  for (auto& x : v) x *= factor;
  return v;
}

inline Vec matvec(const Mat& a, const Vec& x) {
  Vec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] = std::max(out[i], std::min(a[i][j], x[j]));
  return out;
}

inline bool leq(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Calls f on every integer vector with lo <= v <= hi, lexicographically.
inline void for_each_point(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& f) {
  Vec v = lo;
  const std::size_t n = v.size();
  if (n == 0) return;
  for (;;) {
    f(v);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (v[k] < hi[k]) {
        ++v[k];
        for (std::size_t j = k + 1; j < n; ++j) v[j] = lo[j];
        break;
      }
      if (k == 0) return;
    }
  }
}

inline std::vector<Vec> all_points(const Vec& lo, const Vec& hi) {
  std::vector<Vec> out;
  for_each_point(lo, hi, [&](const Vec& v) { out.push_back(v); });
  return out;
}

inline std::vector<Vec> solutions(const Mat& a, const Vec& b, const Vec& lo, const Vec& hi) {
  std::vector<Vec> out;
  for_each_point(lo, hi, [&](const Vec& v) {
    if (matvec(a, v) == b) out.push_back(v);
  });
  return out;
}

inline std::vector<Vec> eigenvectors(const Mat& a, const Vec& lo, const Vec& hi) {
  std::vector<Vec> out;
  for_each_point(lo, hi, [&](const Vec& v) {
    if (matvec(a, v) == v) out.push_back(v);
  });
  return out;
}

/// Every eigenvector in [lo, hi] is the only preimage in [lo, hi] of itself.
inline bool x_simple(const Mat& a, const Vec& lo, const Vec& hi) {
  std::map<Vec, int> preimages;
  std::vector<Vec> fixed;
  for_each_point(lo, hi, [&](const Vec& v) {
    const Vec img = matvec(a, v);
    ++preimages[img];
    if (img == v) fixed.push_back(v);
  });
  for (const auto& v : fixed)
    if (preimages[v] != 1) return false;
  return true;
}

/// Orbit by linear search for the first repeat: {transient, period}.
inline std::pair<int, int> orbit(const Mat& a, Vec x) {
  std::vector<Vec> seen;
  for (;;) {
    auto it = std::find(seen.begin(), seen.end(), x);
    if (it != seen.end()) {
      const int t = int(it - seen.begin());
      return {t, int(seen.size()) - t};
    }
    seen.push_back(x);
    x = matvec(a, x);
  }
}

}  // namespace naive
