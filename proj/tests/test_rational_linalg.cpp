#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "sl2cat/rat_matrix.hpp"
#include "sl2cat/rational.hpp"

using namespace sl2cat;

namespace {

// deterministic generator for the property checks
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

RatMatrix random_matrix(Rng& rng, int rows, int cols) {
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m.at(i, j) = Rational(rng.range(-6, 6), rng.range(1, 4));
  return m;
}

// independent rank oracle: largest k with a k x k submatrix of nonzero
// determinant (Laplace expansion, exact)
Rational det(const RatMatrix& m) {
  const int n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m.at(0, 0);
  Rational acc(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    const Rational term = m.at(0, j) * det(minor);
    acc += (j % 2 == 0) ? term : Rational(-1) * term;
  }
  return acc;
}

int minor_rank(const RatMatrix& m) {
  const int maxk = std::min(m.rows(), m.cols());
  for (int k = maxk; k >= 1; --k) {
    // all k-subsets of rows and columns, odometer order
    std::vector<int> rows_idx(k);
    for (int i = 0; i < k; ++i) rows_idx[i] = i;
    auto advance = [&](std::vector<int>& idx, int limit) {
      int i = static_cast<int>(idx.size()) - 1;
      while (i >= 0) {
        if (++idx[i] <= limit - (static_cast<int>(idx.size()) - i)) {
          for (int j = i + 1; j < static_cast<int>(idx.size()); ++j) idx[j] = idx[j - 1] + 1;
          return true;
        }
        --i;
      }
      return false;
    };
    do {
      std::vector<int> cols_idx(k);
      for (int i = 0; i < k; ++i) cols_idx[i] = i;
      do {
        RatMatrix sub(k, k);
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(rows_idx[r], cols_idx[c]);
        if (!det(sub).is_zero()) return k;
      } while (advance(cols_idx, m.cols()));
    } while (advance(rows_idx, m.rows()));
  }
  return 0;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational half(1, 2), third(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK((half / third).str() == "3/2");
  CHECK_THROWS_AS(half / Rational(0), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  for (const auto* s : {"0", "7", "-3", "1/2", "-22/7", "1000000000000000000000/7"})
    CHECK(Rational::parse(s).str() == s);
  CHECK(Rational::parse("4/6").str() == "2/3");  // reduced on parse
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("property: arithmetic never leaves lowest terms") {
  Rng rng{42};
  for (int iter = 0; iter < 300; ++iter) {
    const Rational a(rng.range(-30, 30), rng.range(1, 17));
    const Rational b(rng.range(-30, 30), rng.range(1, 17));
    for (const Rational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.denominator() > 0);
    }
  }
}

TEST_CASE("rref of the identity is itself") {
  const RatMatrix id = RatMatrix::identity(2);
  const auto rr = rref(id);
  CHECK(rr.reduced == id);
  CHECK(rr.pivot_cols == std::vector<int>{0, 1});
}

TEST_CASE("rref of a rank-1 matrix") {
  RatMatrix m(2, 2);
  m.at(0, 0) = Rational(2);
  m.at(0, 1) = Rational(4);
  m.at(1, 0) = Rational(1);
  m.at(1, 1) = Rational(2);
  const auto rr = rref(m);
  RatMatrix expected(2, 2);
  expected.at(0, 0) = Rational(1);
  expected.at(0, 1) = Rational(2);
  CHECK(rr.reduced == expected);
  CHECK(rr.pivot_cols == std::vector<int>{0});
}

TEST_CASE("rref is idempotent and rank matches the minor oracle") {
  Rng rng{7};
  for (int iter = 0; iter < 10; ++iter) {
    const RatMatrix m = random_matrix(rng, 5, 7);
    const auto rr = rref(m);
    CHECK(rref(rr.reduced).reduced == rr.reduced);
    CHECK(rank(m) == minor_rank(m));
  }
}

TEST_CASE("kernel basis sizes and membership") {
  CHECK(kernel_basis(RatMatrix(2, 2)).size() == 2);
  CHECK(kernel_basis(RatMatrix::identity(4)).empty());

  RatMatrix row(1, 2);
  row.at(0, 0) = Rational(1);
  row.at(0, 1) = Rational(1);
  const auto basis = kernel_basis(row);
  REQUIRE(basis.size() == 1);
  // proportional to (1, -1)
  CHECK(basis[0][0] == Rational(-1) * basis[0][1]);

  Rng rng{11};
  for (int iter = 0; iter < 10; ++iter) {
    const RatMatrix m = random_matrix(rng, 4, 6);
    const auto kb = kernel_basis(m);
    CHECK(static_cast<int>(kb.size()) == 6 - rank(m));
    for (const auto& v : kb)
      for (int r = 0; r < m.rows(); ++r) {
        Rational acc(0);
        for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
        CHECK(acc.is_zero());
      }
  }
}

TEST_CASE("solve_linear exact solutions and failures") {
  const RatMatrix id = RatMatrix::identity(2);
  const std::vector<Rational> b{Rational(3), Rational(-5, 2)};
  auto x = solve_linear(id, b);
  REQUIRE(x.has_value());
  CHECK(*x == b);

  RatMatrix sing(2, 2);
  sing.at(0, 0) = Rational(1);
  CHECK_FALSE(solve_linear(sing, {Rational(0), Rational(1)}).has_value());

  RatMatrix two(1, 1);
  two.at(0, 0) = Rational(2);
  auto half = solve_linear(two, {Rational(1)});
  REQUIRE(half.has_value());
  CHECK((*half)[0] == Rational(1, 2));
}

TEST_CASE("property: solving rref-reduced systems agrees with the original") {
  Rng rng{23};
  for (int iter = 0; iter < 20; ++iter) {
    const RatMatrix a = random_matrix(rng, 4, 4);
    std::vector<Rational> b;
    for (int i = 0; i < 4; ++i) b.push_back(Rational(rng.range(-5, 5)));
    const auto direct = solve_linear(a, b);
    // the reduced augmented system must be solvable exactly when the
    // original is
    RatMatrix aug(4, 5);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) aug.at(i, j) = a.at(i, j);
      aug.at(i, 4) = b[static_cast<std::size_t>(i)];
    }
    const auto rr = rref(aug);
    bool reduced_consistent = true;
    for (int p : rr.pivot_cols)
      if (p == 4) reduced_consistent = false;
    CHECK(direct.has_value() == reduced_consistent);
    if (direct) {
      for (int i = 0; i < 4; ++i) {
        Rational acc(0);
        for (int j = 0; j < 4; ++j) acc += a.at(i, j) * (*direct)[static_cast<std::size_t>(j)];
        CHECK(acc == b[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("rank bounded by shape") {
  Rng rng{99};
  for (int iter = 0; iter < 10; ++iter) {
    const RatMatrix m = random_matrix(rng, 3, 5);
    CHECK(rank(m) <= 3);
    CHECK(rank(m) + static_cast<int>(kernel_basis(m).size()) == 5);
  }
}
