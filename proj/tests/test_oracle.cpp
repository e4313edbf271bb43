#include "fixtures.hpp"
#include "naive.hpp"

#include "maxmin/io/sampling.hpp"
#include "maxmin/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace maxmin;
using fixtures::kTop;
using fixtures::v;

namespace {

OracleLimits with_refine(Tick refine, unsigned workers = 1) {
  OracleLimits l;
  l.refine = refine;
  l.max_candidates *= std::size_t(refine);
  l.workers = workers;
  return l;
}

}  // namespace

TEST_CASE("critical grid candidates") {
  const auto grid = critical_grid(fixtures::example_box(), entry_values(fixtures::example_matrix()), with_refine(1));
  CHECK(grid.factor == 1);
  CHECK(grid.top == kTop);
  CHECK(grid.candidates[0] == std::vector<Tick>{2, 3, 4, 5, 6, 7});
  CHECK(grid.candidates[1] == std::vector<Tick>{3, 4, 5, 6, 7, 8, 9});
  CHECK(grid.candidates[2] == std::vector<Tick>{2, 3, 4, 5, 6});
  CHECK(grid.candidates[3] == std::vector<Tick>{4, 5});
  CHECK(grid.point_count() == 6 * 7 * 5 * 2);
  CHECK(grid.point(0) == v({2, 3, 2, 4}).ticks());
  CHECK(grid.point(grid.point_count() - 1) == v({7, 9, 6, 5}).ticks());

  const auto fine = critical_grid(fixtures::example_box(), entry_values(fixtures::example_matrix()), with_refine(2));
  CHECK(fine.top == 20);
  CHECK(fine.candidates[3] == std::vector<Tick>{8, 9, 10});
  CHECK(fine.candidates[1].size() == 13);
  CHECK(fine.candidates[1].front() == 6);
  CHECK(fine.candidates[1].back() == 18);

  const auto sparse = critical_grid(Box<Tick>::full(1, kTop), {4}, with_refine(2));
  CHECK(sparse.candidates[0] == std::vector<Tick>{0, 4, 8, 14, 20});
}

TEST_CASE("oracle limits") {
  const auto big = Matrix<Tick>::identity(5, kTop);
  CHECK_THROWS_AS(enumerate_eigenvectors(big, Box<Tick>::full(5, kTop)), TooLargeError);
  OracleLimits tight;
  tight.max_candidates = 3;
  CHECK_THROWS_AS(enumerate_eigenvectors(fixtures::example_matrix(), fixtures::example_box(), tight), TooLargeError);
  OracleLimits zero;
  zero.refine = 0;
  CHECK_THROWS_AS(enumerate_eigenvectors(fixtures::example_matrix(), fixtures::example_box(), zero), PreconditionError);
}

TEST_CASE("eigenvector enumeration examples") {
  const auto a = fixtures::example_matrix();
  const Box<Tick> ef(v({4, 3, 3, 4}), v({5, 6, 6, 5}));
  const auto on_ticks = enumerate_eigenvectors(a, ef, with_refine(1));
  std::set<std::vector<Tick>> expected;
  for (Tick p = 4; p <= 5; ++p)
    for (Tick q = 3; q <= 6; ++q) expected.insert({p, q, q, p});
  std::set<std::vector<Tick>> got;
  for (const auto& x : on_ticks.points) got.insert(x.to_std());
  CHECK(got == expected);

  const auto in_box = enumerate_eigenvectors(a, fixtures::example_box(), with_refine(1));
  CHECK(in_box.points.size() == 8);

  const auto zero = enumerate_eigenvectors(Matrix<Tick>::constant(3, 0, kTop), Box<Tick>::full(3, kTop));
  REQUIRE(zero.points.size() == 1);
  CHECK(zero.points[0] == Vector<Tick>::bottom(3, 20));

  const auto id = enumerate_eigenvectors(Matrix<Tick>::identity(2, kTop), Box<Tick>::full(2, kTop));
  CHECK(id.points.size() == 9);
  CHECK(id.grid.candidates[0] == std::vector<Tick>{0, 10, 20});
}

TEST_CASE("solution enumeration examples") {
  const auto full = Box<Tick>::full(2, kTop);
  const auto id = enumerate_solutions(Matrix<Tick>::identity(2, kTop), v({5, 5}), full, with_refine(1));
  REQUIRE(id.points.size() == 1);
  CHECK(id.points[0] == v({5, 5}));

  const auto all = enumerate_solutions(Matrix<Tick>::constant(2, kTop, kTop), v({5, 5}), full, with_refine(1));
  std::set<std::vector<Tick>> got;
  for (const auto& x : all.points) got.insert(x.to_std());
  CHECK(got.count({5, 5}) == 1);
  CHECK(got.count({5, 0}) == 1);
  CHECK(got.count({0, 5}) == 1);
  for (const auto& x : got) CHECK(std::max(x[0], x[1]) == 5);

  CHECK(enumerate_solutions(Matrix<Tick>::constant(2, 5, kTop), v({7, 3}), full).points.empty());
}

TEST_CASE("brute force X-simplicity examples") {
  const auto worked = brute_x_simple(fixtures::example_matrix(), fixtures::example_box());
  CHECK(worked.holds);
  CHECK(worked.eigenvectors == 21);

  const auto a2 = brute_x_simple(fixtures::a2(), fixtures::a2_box());
  CHECK_FALSE(a2.holds);
  REQUIRE(a2.witness);
  const auto fine = refine(fixtures::a2(), a2.grid.factor);
  const auto& [target, other] = *a2.witness;
  CHECK(is_eigenvector(fine, target));
  CHECK(matvec(fine, other) == target);
  CHECK(target != other);
  CHECK(refine(fixtures::a2_box(), a2.grid.factor).contains(other));
}

TEST_CASE("one-dimensional instances match an exhaustive scan") {
  const Tick top = 6;
  for (Tick a = 0; a <= top; ++a)
    for (Tick lo = 0; lo <= top; ++lo)
      for (Tick hi = lo; hi <= top; ++hi) {
        const Matrix<Tick> m(top, {{a}});
        const Box<Tick> x(Vector<Tick>(top, {lo}), Vector<Tick>(top, {hi}));
        const bool expected = naive::x_simple({{2 * a}}, {2 * lo}, {2 * hi});
        CHECK(brute_x_simple(m, x).holds == expected);
      }
}

TEST_CASE("grid oracle agrees with an exhaustive scan of the refined chain") {
  io::Rng rng(41);
  const Tick top = 5;
  for (int trial = 0; trial < 250; ++trial) {
    const Index n = Index(1 + rng() % 3);
    const auto palette = io::random_palette(rng, top, 4);
    const auto a = io::random_matrix(rng, n, top, palette);
    const auto x = io::random_box(rng, n, top, palette);
    const auto na = naive::scaled(naive::of(a), 2);
    const auto lo = naive::scaled(naive::of(x.lower()), 2);
    const auto hi = naive::scaled(naive::of(x.upper()), 2);
    CHECK(brute_x_simple(a, x).holds == naive::x_simple(na, lo, hi));

    const auto b = matvec(a, io::random_vector(rng, n, top, palette));
    const auto grid = enumerate_solutions(a, b, x);
    const auto all = naive::solutions(na, naive::scaled(naive::of(b), 2), lo, hi);
    CHECK(grid.points.empty() == all.empty());
    CHECK((grid.points.size() == 1) == (all.size() == 1));
    for (const auto& p : grid.points) CHECK(std::find(all.begin(), all.end(), p.to_std()) != all.end());
  }
}

TEST_CASE("quadrupled refinement never changes a verdict") {
  io::Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = Index(1 + rng() % 3);
    const auto palette = io::random_palette(rng, kTop, 5);
    const auto a = io::random_matrix(rng, n, kTop, palette);
    const auto x = io::random_box(rng, n, kTop, palette);
    const auto b = io::random_vector(rng, n, kTop, palette);
    CHECK(brute_x_simple(a, x, with_refine(2)).holds == brute_x_simple(a, x, with_refine(4)).holds);
    const auto s2 = enumerate_solutions(a, b, x, with_refine(2)).points.size();
    const auto s4 = enumerate_solutions(a, b, x, with_refine(4)).points.size();
    CHECK((s2 == 0) == (s4 == 0));
    CHECK((s2 == 1) == (s4 == 1));
  }
}

TEST_CASE("parallel sweeps equal serial sweeps") {
  io::Rng rng(47);
  for (int trial = 0; trial < 60; ++trial) {
    const Index n = Index(2 + rng() % 3);
    const auto palette = io::random_palette(rng, kTop, 5);
    const auto a = io::random_matrix(rng, n, kTop, palette);
    const auto x = Box<Tick>::full(n, kTop);
    const auto serial = brute_x_simple(a, x, with_refine(2, 1));
    const auto parallel = brute_x_simple(a, x, with_refine(2, 4));
    CHECK(serial.holds == parallel.holds);
    CHECK(serial.eigenvectors == parallel.eigenvectors);
    CHECK(serial.witness == parallel.witness);
    const auto e1 = enumerate_eigenvectors(a, x, with_refine(2, 1)).points;
    const auto e4 = enumerate_eigenvectors(a, x, with_refine(2, 7)).points;
    CHECK(e1 == e4);
    const auto grid = critical_grid(x, entry_values(a), with_refine(2));
    auto pred = [&](const VectorStorage<Tick>& p) { return p.sum() % 3 == 1; };
    CHECK(first_point(grid, 1, pred) == first_point(grid, 5, pred));
  }
}

TEST_CASE("coarsening") {
  CHECK(coarsen(Vector<Tick>(20, {4, 10}), Tick(2)) == Vector<Tick>(10, {2, 5}));
  CHECK_FALSE(coarsen(Vector<Tick>(20, {4, 9}), Tick(2)));
}

TEST_CASE("X-simple vector oracle") {
  const auto a = fixtures::example_matrix();
  CHECK(x_simple_vector_oracle(a, fixtures::example_box(), v({5, 6, 6, 5})));
  CHECK(x_simple_vector_oracle(a, fixtures::example_box(), v({4, 4, 4, 4})));
  CHECK_FALSE(x_simple_vector_oracle(Matrix<Tick>::constant(2, kTop, kTop), Box<Tick>::full(2, kTop), v({5, 5})));
}
