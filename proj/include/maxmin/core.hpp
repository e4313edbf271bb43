#pragma once

// Max-min (fuzzy) semiring over the bounded chain [0, top]:
// a (+) b = max(a, b), a (x) b = min(a, b).
//
// Chain points are integer ticks; a value carries the `top` of the chain it
// lives in and operations refuse to mix chains.

#include <Eigen/Core>

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace maxmin {

using Index = Eigen::Index;
using Tick = std::int32_t;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// Operand shapes disagree.
struct DimensionError : Error {
  using Error::Error;
};
/// Tick outside [0, top] or operands from different chains.
struct ContextError : Error {
  using Error::Error;
};
/// A documented precondition of an analytic result does not hold.
struct PreconditionError : Error {
  using Error::Error;
};
/// A constructed certificate failed its own substitution check.
struct ConstructionError : Error {
  using Error::Error;
};
/// Exhaustive enumeration refused: instance exceeds the configured limits.
struct TooLargeError : Error {
  using Error::Error;
};

template <std::integral T>
using VectorStorage = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <std::integral T>
using MatrixStorage = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace detail {

template <std::integral T>
void check_top(T top) {
  if (top <= 0) throw ContextError("chain top must be positive, got " + std::to_string(top));
}

template <std::integral T, typename Derived>
void check_ticks(const Eigen::DenseBase<Derived>& ticks, T top) {
  if (ticks.size() == 0) return;
  if (ticks.minCoeff() < 0 || ticks.maxCoeff() > top)
    throw ContextError("tick outside [0, " + std::to_string(top) + "]");
}

template <std::integral T>
void same_chain(T a, T b) {
  if (a != b)
    throw ContextError("operands live in different chains (top " + std::to_string(a) + " vs " +
                       std::to_string(b) + ")");
}

}  // namespace detail

/// A single chain point.
template <std::integral T = Tick>
struct Scalar {
  T ticks{0};
  T top{1};

  Scalar() = default;
  Scalar(T value, T chain_top) : ticks(value), top(chain_top) {
    detail::check_top(top);
    if (ticks < 0 || ticks > top)
      throw ContextError("tick " + std::to_string(ticks) + " outside [0, " + std::to_string(top) +
                         "]");
  }

  static Scalar bottom(T top) { return {0, top}; }
  static Scalar unit(T top) { return {top, top}; }

  friend bool operator==(const Scalar&, const Scalar&) = default;
  friend auto operator<=>(const Scalar& a, const Scalar& b) {
    detail::same_chain(a.top, b.top);
    return a.ticks <=> b.ticks;
  }
};

template <std::integral T>
Scalar<T> oplus(const Scalar<T>& a, const Scalar<T>& b) {
  detail::same_chain(a.top, b.top);
  return a.ticks >= b.ticks ? a : b;
}

template <std::integral T>
Scalar<T> otimes(const Scalar<T>& a, const Scalar<T>& b) {
  detail::same_chain(a.top, b.top);
  return a.ticks <= b.ticks ? a : b;
}

/// Immutable vector of chain points.
template <std::integral T = Tick>
class Vector {
 public:
  using Storage = VectorStorage<T>;
  using value_type = T;

  Vector() = default;
  Vector(T top, Storage ticks) : top_(top), ticks_(std::move(ticks)) {
    detail::check_top(top_);
    detail::check_ticks(ticks_, top_);
  }
  Vector(T top, std::initializer_list<T> ticks)
      : Vector(top, Eigen::Map<const Storage>(ticks.begin(), Index(ticks.size()))) {}
  Vector(T top, const std::vector<T>& ticks)
      : Vector(top, Eigen::Map<const Storage>(ticks.data(), Index(ticks.size()))) {}

  static Vector constant(Index n, T value, T top) { return {top, Storage::Constant(n, value)}; }
  static Vector bottom(Index n, T top) { return constant(n, 0, top); }
  static Vector unit(Index n, T top) { return constant(n, top, top); }

  T top() const { return top_; }
  Index size() const { return ticks_.size(); }
  T operator[](Index i) const { return ticks_(i); }
  Scalar<T> at(Index i) const { return {ticks_(i), top_}; }
  const Storage& ticks() const { return ticks_; }
  std::vector<T> to_std() const { return {ticks_.data(), ticks_.data() + ticks_.size()}; }

  /// Copy with one coordinate replaced.
  Vector with(Index i, T value) const {
    Storage t = ticks_;
    t(i) = value;
    return {top_, std::move(t)};
  }

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.top_ == b.top_ && a.ticks_.size() == b.ticks_.size() && a.ticks_ == b.ticks_;
  }

 private:
  T top_{1};
  Storage ticks_;
};

/// Immutable square matrix of chain points, row-major.
template <std::integral T = Tick>
class Matrix {
 public:
  using Storage = MatrixStorage<T>;
  using value_type = T;

  Matrix() = default;
  Matrix(T top, Storage entries) : top_(top), entries_(std::move(entries)) {
    detail::check_top(top_);
    if (entries_.rows() != entries_.cols())
      throw DimensionError("matrix must be square, got " + std::to_string(entries_.rows()) + "x" +
                           std::to_string(entries_.cols()));
    detail::check_ticks(entries_, top_);
  }
  Matrix(T top, std::initializer_list<std::initializer_list<T>> rows)
      : Matrix(top, from_rows(rows)) {}

  static Matrix identity(Index n, T top) {
    Storage e = Storage::Zero(n, n);
    e.diagonal().setConstant(top);
    return {top, std::move(e)};
  }
  static Matrix constant(Index n, T value, T top) { return {top, Storage::Constant(n, n, value)}; }

  T top() const { return top_; }
  Index size() const { return entries_.rows(); }
  T operator()(Index i, Index j) const { return entries_(i, j); }
  const Storage& entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.top_ == b.top_ && a.size() == b.size() && a.entries_ == b.entries_;
  }

 private:
  static Storage from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const Index r = Index(rows.size());
    const Index c = r == 0 ? 0 : Index(rows.begin()->size());
    Storage s(r, c);
    Index i = 0;
    for (const auto& row : rows) {
      if (Index(row.size()) != c) throw DimensionError("ragged matrix rows");
      Index j = 0;
      for (T v : row) s(i, j++) = v;
      ++i;
    }
    return s;
  }

  T top_{1};
  Storage entries_;
};

/// Interval vector X = [lower, upper], componentwise.
template <std::integral T = Tick>
class Box {
 public:
  Box() = default;
  Box(Vector<T> lower, Vector<T> upper) : lower_(std::move(lower)), upper_(std::move(upper)) {
    detail::same_chain(lower_.top(), upper_.top());
    if (lower_.size() != upper_.size()) throw DimensionError("box bounds differ in length");
    if ((lower_.ticks().array() > upper_.ticks().array()).any())
      throw PreconditionError("box lower bound exceeds upper bound");
  }

  static Box full(Index n, T top) { return {Vector<T>::bottom(n, top), Vector<T>::unit(n, top)}; }
  static Box point(const Vector<T>& v) { return {v, v}; }

  const Vector<T>& lower() const { return lower_; }
  const Vector<T>& upper() const { return upper_; }
  T top() const { return lower_.top(); }
  Index size() const { return lower_.size(); }

  bool contains(const Vector<T>& v) const {
    detail::same_chain(top(), v.top());
    if (v.size() != size()) throw DimensionError("vector and box differ in length");
    return (v.ticks().array() >= lower_.ticks().array()).all() &&
           (v.ticks().array() <= upper_.ticks().array()).all();
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  Vector<T> lower_;
  Vector<T> upper_;
};

namespace detail {

template <std::integral T>
void same_shape(const Matrix<T>& a, const Vector<T>& x) {
  same_chain(a.top(), x.top());
  if (a.size() != x.size())
    throw DimensionError("matrix is " + std::to_string(a.size()) + "x" + std::to_string(a.size()) +
                         " but vector has length " + std::to_string(x.size()));
}

template <std::integral T>
void same_shape(const Matrix<T>& a, const Box<T>& x) {
  same_shape(a, x.lower());
}

template <std::integral T>
void same_shape(const Vector<T>& a, const Vector<T>& b) {
  same_chain(a.top(), b.top());
  if (a.size() != b.size()) throw DimensionError("vectors differ in length");
}

/// Raw max-min product over storage; works for rectangular blocks.
template <typename DerivedA, typename DerivedX>
auto maxmin_product(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedX>& x) {
  using T = typename DerivedA::Scalar;
  VectorStorage<T> out(a.rows());
  if (a.cols() == 0) {
    out.setZero();
    return out;
  }
  out = a.array().min(x.transpose().array().replicate(a.rows(), 1)).rowwise().maxCoeff();
  return out;
}

}  // namespace detail

/// (A (x) x)_i = max_j min(a_ij, x_j).
template <std::integral T>
Vector<T> matvec(const Matrix<T>& a, const Vector<T>& x) {
  detail::same_shape(a, x);
  return {a.top(), detail::maxmin_product(a.entries(), x.ticks())};
}

template <std::integral T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  detail::same_chain(a.top(), b.top());
  if (a.size() != b.size()) throw DimensionError("matmul of differently sized matrices");
  typename Matrix<T>::Storage c(a.size(), a.size());
  for (Index j = 0; j < b.size(); ++j) c.col(j) = detail::maxmin_product(a.entries(), b.entries().col(j));
  return {a.top(), std::move(c)};
}

/// A^k with A^0 = E.
template <std::integral T>
Matrix<T> power(const Matrix<T>& a, unsigned k) {
  Matrix<T> result = Matrix<T>::identity(a.size(), a.top());
  Matrix<T> base = a;
  while (k > 0) {
    if (k & 1u) result = matmul(result, base);
    k >>= 1u;
    if (k > 0) base = matmul(base, base);
  }
  return result;
}

/// alpha (x) x, i.e. x clipped from above at alpha.
template <std::integral T>
Vector<T> scale(T alpha, const Vector<T>& x) {
  return {x.top(), x.ticks().cwiseMin(alpha)};
}

template <std::integral T>
bool leq(const Vector<T>& a, const Vector<T>& b) {
  detail::same_shape(a, b);
  return (a.ticks().array() <= b.ticks().array()).all();
}

/// Strict in every coordinate.
template <std::integral T>
bool less(const Vector<T>& a, const Vector<T>& b) {
  detail::same_shape(a, b);
  return (a.ticks().array() < b.ticks().array()).all();
}

/// Embed a vector into the chain with `factor` times finer ticks.
template <std::integral T>
Vector<T> refine(const Vector<T>& v, T factor) {
  return {T(v.top() * factor), v.ticks() * factor};
}

template <std::integral T>
Matrix<T> refine(const Matrix<T>& a, T factor) {
  return {T(a.top() * factor), a.entries() * factor};
}

template <std::integral T>
Box<T> refine(const Box<T>& x, T factor) {
  return {refine(x.lower(), factor), refine(x.upper(), factor)};
}

}  // namespace maxmin
