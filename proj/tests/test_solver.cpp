#include "fixtures.hpp"
#include "naive.hpp"

#include "maxmin/io/sampling.hpp"
#include "maxmin/solver.hpp"

#include <doctest.h>

using namespace maxmin;
using fixtures::kTop;
using fixtures::v;

namespace {

const Matrix<Tick> kIdentity2 = Matrix<Tick>::identity(2, kTop);
const Matrix<Tick> kAllTop2 = Matrix<Tick>::constant(2, kTop, kTop);
const Box<Tick> kFull2 = Box<Tick>::full(2, kTop);

}  // namespace

TEST_CASE("worked example system") {
  const auto rep = solve(fixtures::example_matrix(), v({5, 6, 6, 5}), fixtures::example_box());
  CHECK(rep.principal == v({5, 6, 6, 5}));
  CHECK(rep.cover_sets == std::vector<IndexSet>{{3}, {2}, {1}, {0}});
  CHECK(rep.solvable);
  CHECK(rep.unique_in_box);
  CHECK(rep.slack_columns.empty());
}

TEST_CASE("small systems") {
  const auto id = solve(kIdentity2, v({5, 5}), kFull2);
  CHECK(id.principal == v({5, 5}));
  CHECK(id.cover_sets == std::vector<IndexSet>{{0}, {1}});
  CHECK(id.solvable);
  CHECK(id.unique_in_box);

  const auto all = solve(kAllTop2, v({5, 5}), kFull2);
  CHECK(all.principal == v({5, 5}));
  CHECK(all.cover_sets == std::vector<IndexSet>{{0, 1}, {0, 1}});
  CHECK(all.solvable);
  CHECK_FALSE(all.unique_in_box);
  const auto second = second_solution(kAllTop2, v({5, 5}), kFull2, all);
  REQUIRE(second);
  CHECK(*second == v({0, 5}));

  const Matrix<Tick> fives(kTop, {{5, 5}, {5, 5}});
  CHECK_FALSE(is_solvable(fives, v({7, 3}), kFull2));
  CHECK_FALSE(is_unique(fives, v({7, 3}), kFull2));
}

TEST_CASE("identity with a zero right-hand side is unique") {
  CHECK(is_unique(Matrix<Tick>::identity(3, kTop), Vector<Tick>::bottom(3, kTop), Box<Tick>::full(3, kTop)));
}

TEST_CASE("reduction of rows sitting at the lower bound") {
  const Box<Tick> x(v({0, 0}), v({10, 10}));
  const auto r = reduce_system(kIdentity2, v({0, 5}), x);
  CHECK(r.removed_rows == IndexSet{0});
  CHECK(r.kept_rows == IndexSet{1});
  CHECK(r.forced_columns == std::vector<std::pair<Index, Tick>>{{0, 0}});
  CHECK(r.consistent);
  CHECK(r.box.upper() == v({0, 10}));
  CHECK(satisfies_reduction(kIdentity2, v({0, 5}), r, v({0, 5})));
  CHECK_FALSE(satisfies_reduction(kIdentity2, v({0, 5}), r, v({1, 5})));

  const auto noop = reduce_system(kIdentity2, v({3, 5}), Box<Tick>(v({1, 1}), v({10, 10})));
  CHECK(noop.removed_rows.empty());
  CHECK(noop.forced_columns.empty());
  CHECK(noop.capped_columns.empty());

  CHECK_THROWS_AS(reduce_system(kIdentity2, v({0, 5}), Box<Tick>(v({1, 1}), v({10, 10}))), PreconditionError);
}

TEST_CASE("rows at distinct lower bounds may share a capped column and stay solvable") {
  // Column 3 exceeds both rows 1 and 2, whose targets sit at different lower bounds.
  const Matrix<Tick> a(kTop, {{2, 0, 5}, {0, 3, 5}, {0, 0, 5}});
  const Box<Tick> x(v({2, 3, 0}), v({10, 10, 10}));
  const auto b = v({2, 3, 2});
  const auto r = reduce_system(a, b, x);
  CHECK(r.removed_rows == IndexSet{0, 1});
  CHECK(r.consistent);
  CHECK(r.capped_columns == std::vector<std::pair<Index, Tick>>{{2, 2}});
  CHECK(is_solvable(a, b, x));
  CHECK(matvec(a, v({2, 3, 2})) == b);
  const auto sols = naive::solutions(naive::of(a), naive::of(b), naive::of(x.lower()), naive::of(x.upper()));
  CHECK_FALSE(sols.empty());
}

TEST_CASE("a cap below a lower bound is a conflict") {
  const Matrix<Tick> a(kTop, {{2, 5}, {0, 5}});
  const Box<Tick> x(v({2, 4}), v({10, 10}));
  const auto r = reduce_system(a, v({2, 5}), x);
  CHECK_FALSE(r.consistent);
  CHECK(r.conflict_column == Index(1));
  CHECK_FALSE(is_solvable(a, v({2, 5}), x));
}

TEST_CASE("solver against exhaustive enumeration") {
  io::Rng rng(29);
  const Tick top = 6;
  const int factor = 2;
  for (int trial = 0; trial < 600; ++trial) {
    const Index n = Index(1 + rng() % 3);
    const auto palette = io::random_palette(rng, top, 5);
    const auto a = io::random_matrix(rng, n, top, palette);
    const auto x = trial % 3 == 0 ? Box<Tick>::full(n, top) : io::random_box(rng, n, top, palette);
    const auto b = trial % 2 == 0 ? matvec(a, io::random_vector(rng, n, top, palette))
                                  : io::random_vector(rng, n, top, palette);
    const auto rep = solve(a, b, x);

    const auto sols = naive::solutions(naive::scaled(naive::of(a), factor), naive::scaled(naive::of(b), factor),
                                       naive::scaled(naive::of(x.lower()), factor),
                                       naive::scaled(naive::of(x.upper()), factor));
    REQUIRE(rep.solvable == !sols.empty());
    CHECK(rep.unique_in_box == (sols.size() == 1));
    if (rep.solvable) {
      naive::Vec best(std::size_t(n), 0);
      for (const auto& s : sols) {
        CHECK(naive::leq(s, naive::scaled(naive::of(rep.principal), factor)));
        for (std::size_t i = 0; i < s.size(); ++i) best[i] = std::max(best[i], s[i]);
      }
      CHECK(best == naive::scaled(naive::of(rep.principal), factor));
    }
    if (rep.solvable && !rep.unique_in_box) {
      const auto y = second_solution(a, b, x, rep);
      REQUIRE(y);
      CHECK(matvec(a, *y) == b);
      CHECK(x.contains(*y));
      CHECK(*y != rep.principal);
    } else {
      CHECK_FALSE(second_solution(a, b, x, rep));
    }
  }
}

TEST_CASE("full box recovers the classical principal solution") {
  io::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Index n = Index(1 + rng() % 4);
    const auto palette = io::random_palette(rng, kTop, 5);
    const auto a = io::random_matrix(rng, n, kTop, palette);
    const auto b = io::random_vector(rng, n, kTop, palette);
    const auto rep = solve(a, b, Box<Tick>::full(n, kTop));
    for (Index j = 0; j < n; ++j) {
      Tick expected = kTop;
      for (Index i = 0; i < n; ++i)
        if (a(i, j) > b[i]) expected = std::min(expected, b[i]);
      CHECK(rep.principal[j] == expected);
      IndexSet m;
      for (Index i = 0; i < n; ++i)
        if (std::min(a(i, j), expected) == b[i]) m.push_back(i);
      CHECK(rep.cover_sets[std::size_t(j)] == m);
    }
    CHECK(rep.solvable == (matvec(a, rep.principal) == b));
  }
}

TEST_CASE("reduction is sound") {
  io::Rng rng(37);
  const Tick top = 6;
  int exercised = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const Index n = Index(1 + rng() % 3);
    const auto palette = io::random_palette(rng, top, 4);
    const auto a = io::random_matrix(rng, n, top, palette);
    const auto x = io::random_box(rng, n, top, palette);
    // Put some targets at their lower bound.
    VectorStorage<Tick> bt(n);
    for (Index i = 0; i < n; ++i) bt(i) = rng() % 2 ? x.lower()[i] : io::uniform_tick(rng, x.lower()[i], x.upper()[i]);
    const Vector<Tick> b(top, bt);
    const auto r = reduce_system(a, b, x);
    if (!r.removed_rows.empty()) ++exercised;

    const auto na = naive::of(a);
    const auto nb = naive::of(b);
    bool any = false;
    naive::for_each_point(naive::of(x.lower()), naive::of(x.upper()), [&](const naive::Vec& y) {
      const bool solves = naive::matvec(na, y) == nb;
      any = any || solves;
      CHECK(solves == satisfies_reduction(a, b, r, Vector<Tick>(top, y)));
      if (solves)
        for (const auto& [k, val] : r.forced_columns) CHECK(y[std::size_t(k)] == val);
    });
    if (!r.consistent) CHECK_FALSE(any);
    CHECK(any == is_solvable(a, b, x));
  }
  CHECK(exercised > 500);
}
