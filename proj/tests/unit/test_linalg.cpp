#include <random>

#include "babyverma/linalg.hpp"
#include "doctest.h"

using namespace bv;

namespace {

DenseMatrix random_matrix(const Field& F, int r, int c, std::mt19937& rng, int density = 100) {
  DenseMatrix m(r, c);
  std::uniform_int_distribution<int> pick(0, F.order() - 1), pct(0, 99);
  for (auto& x : m.data)
    if (pct(rng) < density) x = F.element(pick(rng));
  return m;
}

// det by Laplace expansion; fine for n <= 6
Elem det(const Field& F, const DenseMatrix& m) {
  int n = m.rows;
  if (n == 0) return Field::one();
  Elem s{};
  for (int j = 0; j < n; ++j) {
    DenseMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Elem term = F.mul(m(0, j), det(F, minor));
    s = j % 2 ? F.sub(s, term) : F.add(s, term);
  }
  return s;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("charpoly agrees with det(xI - A) at every field point") {
    std::mt19937 rng(7);
    for (auto [p, e] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
      Field F = Field::make(p, e);
      for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 6; ++trial) {
          DenseMatrix a = random_matrix(F, n, n, rng, trial % 2 ? 40 : 100);
          auto cp = charpoly(F, a);
          REQUIRE(cp.size() == static_cast<std::size_t>(n + 1));
          CHECK(cp[n] == Field::one());
          for (int i = 0; i < F.order(); ++i) {
            Elem x = F.element(i);
            DenseMatrix m = scaled(F, a, F.neg(Field::one()));
            for (int d = 0; d < n; ++d) m(d, d) = F.add(m(d, d), x);
            CHECK(eval_poly(F, cp, x) == det(F, m));
          }
        }
    }
  }

  TEST_CASE("nullspace vectors are killed and rank-nullity holds") {
    std::mt19937 rng(11);
    Field F = Field::make(5);
    for (int trial = 0; trial < 30; ++trial) {
      int r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
      DenseMatrix a = random_matrix(F, r, c, rng, 50);
      auto ns = nullspace(F, a);
      CHECK(static_cast<int>(ns.size()) + rank(F, a) == c);
      for (const auto& v : ns) CHECK(is_zero(apply(F, a, v)));
    }
  }

  TEST_CASE("sparse and dense products agree") {
    std::mt19937 rng(3);
    Field F = Field::make(7);
    DenseMatrix a = random_matrix(F, 6, 4, rng, 30);
    Vec v = {F.from_int(1), F.from_int(5), F.from_int(0), F.from_int(3)};
    SparseMatrix s = SparseMatrix::from_dense(a);
    CHECK(apply(F, s, v) == apply(F, a, v));
    CHECK(transpose(s).to_dense() == transpose(a));
    CHECK(s.to_dense() == a);
  }

  TEST_CASE("echelon basis and span coordinates") {
    Field F = Field::make(3);
    EchelonBasis eb(F, 3);
    CHECK(eb.insert({F.from_int(1), F.from_int(2), F.from_int(0)}));
    CHECK_FALSE(eb.insert({F.from_int(2), F.from_int(1), F.from_int(0)}));
    CHECK(eb.insert({F.from_int(0), F.from_int(1), F.from_int(1)}));
    CHECK(eb.size() == 2);
    CHECK(eb.contains({F.from_int(1), F.from_int(0), F.from_int(1)}));
    CHECK_FALSE(eb.contains({F.from_int(0), F.from_int(0), F.from_int(1)}));

    std::vector<Vec> basis = {{F.from_int(1), F.from_int(1), F.from_int(0)}, {F.from_int(0), F.from_int(1), F.from_int(2)}};
    SpanSolver solver(F, basis);
    Vec target = {F.from_int(2), F.from_int(0), F.from_int(2)};  // 2 b0 + 1 b1
    auto c = solver.coordinates(target);
    REQUIRE(c);
    CHECK((*c)[0] == F.from_int(2));
    CHECK((*c)[1] == F.from_int(1));
    CHECK_FALSE(solver.coordinates(Vec{F.from_int(0), F.from_int(0), F.from_int(1)}));
  }
}
