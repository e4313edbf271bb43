#include "fixtures.hpp"
#include "naive.hpp"

#include "maxmin/core.hpp"
#include "maxmin/io/sampling.hpp"

#include <doctest.h>

using namespace maxmin;
using fixtures::kTop;
using fixtures::v;

TEST_CASE("scalar operations select an operand") {
  const Scalar<Tick> o = Scalar<Tick>::bottom(kTop), i = Scalar<Tick>::unit(kTop);
  const Scalar<Tick> a{4, kTop}, b{7, kTop};
  CHECK(oplus(o, a) == a);
  CHECK(otimes(i, a) == a);
  CHECK(oplus(a, b).ticks == 7);
  CHECK(otimes(a, b).ticks == 4);
  for (Tick x = 0; x <= kTop; ++x)
    for (Tick y = 0; y <= kTop; ++y) {
      const Scalar<Tick> sx{x, kTop}, sy{y, kTop};
      CHECK((oplus(sx, sy) == sx || oplus(sx, sy) == sy));
      CHECK((otimes(sx, sy) == sx || otimes(sx, sy) == sy));
    }
}

TEST_CASE("values are checked against their chain") {
  CHECK_THROWS_AS((Scalar<Tick>{11, kTop}), ContextError);
  CHECK_THROWS_AS((Scalar<Tick>{-1, kTop}), ContextError);
  CHECK_THROWS_AS((Vector<Tick>{kTop, {1, 11}}), ContextError);
  CHECK_THROWS_AS((Matrix<Tick>{kTop, {{1, 2}, {3, 12}}}), ContextError);
  CHECK_THROWS_AS(oplus(Scalar<Tick>{1, 10}, Scalar<Tick>{1, 20}), ContextError);
  CHECK_THROWS_AS(matvec(fixtures::example_matrix(), Vector<Tick>(20, {1, 2, 3, 4})), ContextError);
  CHECK_THROWS_AS(matvec(fixtures::example_matrix(), v({1, 2, 3})), DimensionError);
  CHECK_THROWS_AS((Matrix<Tick>{kTop, MatrixStorage<Tick>::Zero(3, 4)}), DimensionError);
  CHECK_THROWS_AS((Box<Tick>{v({3, 3}), v({2, 4})}), PreconditionError);
}

TEST_CASE("matvec on the worked example") {
  const auto a = fixtures::example_matrix();
  CHECK(matvec(a, v({5, 7, 8, 7})) == v({5, 7, 7, 5}));
  CHECK(matvec(a, v({5, 6, 6, 5})) == v({5, 6, 6, 5}));
  CHECK(matvec(a, v({2, 3, 2, 4})) == v({4, 2, 3, 3}));
  CHECK(matvec(a, v({7, 9, 6, 5})) == v({5, 6, 8, 7}));
  const auto x = v({3, 1, 4, 1});
  CHECK(matvec(Matrix<Tick>::identity(4, kTop), x) == x);
}

TEST_CASE("matmul and power") {
  const auto a = fixtures::example_matrix();
  const auto e = Matrix<Tick>::identity(4, kTop);
  CHECK(matmul(e, a) == a);
  CHECK(matmul(a, e) == a);
  CHECK(power(a, 0) == e);
  CHECK(power(a, 1) == a);
  const auto zero = Matrix<Tick>::constant(3, 0, kTop);
  CHECK(power(zero, 2) == zero);
}

TEST_CASE("algebraic laws on random instances") {
  io::Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = Index(1 + rng() % 4);
    const auto palette = io::random_palette(rng, kTop, 5);
    const auto a = io::random_matrix(rng, n, kTop, palette);
    const auto b = io::random_matrix(rng, n, kTop, palette);
    const auto c = io::random_matrix(rng, n, kTop, palette);
    const auto x = io::random_vector(rng, n, kTop, palette);
    const auto y = io::random_vector(rng, n, kTop, palette);

    CHECK(naive::of(matvec(a, x)) == naive::matvec(naive::of(a), naive::of(x)));
    CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    CHECK(matvec(matmul(a, b), x) == matvec(a, matvec(b, x)));
    const Vector<Tick> join(kTop, x.ticks().cwiseMax(y.ticks()));
    CHECK(matvec(a, join) == Vector<Tick>(kTop, matvec(a, x).ticks().cwiseMax(matvec(a, y).ticks())));
    if (leq(x, y)) CHECK(leq(matvec(a, x), matvec(a, y)));

    const unsigned k = unsigned(rng() % 6);
    auto iterated = x;
    for (unsigned s = 0; s < k; ++s) iterated = matvec(a, iterated);
    CHECK(matvec(power(a, k), x) == iterated);

    const Tick alpha = Tick(rng() % (kTop + 1));
    CHECK(matvec(a, scale(alpha, x)) == scale(alpha, matvec(a, x)));
    CHECK(matvec(refine(a, Tick(2)), refine(x, Tick(2))) == refine(matvec(a, x), Tick(2)));
  }
}

TEST_CASE("box membership") {
  const auto box = fixtures::example_box();
  CHECK(box.contains(v({5, 6, 6, 5})));
  CHECK_FALSE(box.contains(v({5, 6, 6, 6})));
  CHECK(Box<Tick>::full(4, kTop).contains(v({0, 10, 3, 3})));
  CHECK(Box<Tick>::point(v({1, 2, 3, 4})).contains(v({1, 2, 3, 4})));
  CHECK(refine(box, Tick(2)).contains(Vector<Tick>(20, {5, 7, 9, 9})));
}

TEST_CASE("order helpers") {
  CHECK(leq(v({1, 2}), v({1, 3})));
  CHECK_FALSE(less(v({1, 2}), v({1, 3})));
  CHECK(less(v({0, 2}), v({1, 3})));
  CHECK(v({1, 2}).with(0, 5) == v({5, 2}));
}
