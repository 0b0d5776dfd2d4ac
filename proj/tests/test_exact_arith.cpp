#include <catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"

using namespace zeroent;

TEST_CASE("smith normal form satisfies u*m*v = s with a divisibility chain", "[snf]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    IntMatrix m = oracle::random_int_matrix(rng, r, c, -6, 6);
    if (trial % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force rank drop
    auto f = smith_normal_form(m);
    REQUIRE(f.u * m * f.v == f.s);
    REQUIRE(iabs(determinant(f.u)) == 1);
    REQUIRE(iabs(determinant(f.v)) == 1);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) REQUIRE(f.s(i, j) == 0);
    auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      REQUIRE(d[i] >= 0);
      if (d[i] != 0) REQUIRE(d[i + 1] % d[i] == 0);
    }
    // invariant factors agree with the gcds of minors
    auto want = oracle::invariant_factors_by_minors(m);
    std::vector<Int> got;
    for (auto& x : d)
      if (x != 0) got.push_back(x);
    REQUIRE(got == want);
  }
}

TEST_CASE("smith normal form of the A7 Cartan matrix", "[snf]") {
  auto f = smith_normal_form(standard_lattice("A7").gram);
  std::vector<Int> want{1, 1, 1, 1, 1, 1, 8};
  REQUIRE(f.diagonal() == want);
}

TEST_CASE("Berkowitz characteristic polynomial agrees with Faddeev-LeVerrier", "[charpoly]") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 10;
    IntMatrix m = oracle::random_int_matrix(rng, n, n, -4, 4);
    IntPoly p = char_poly(m);
    REQUIRE(p == oracle::faddeev_leverrier(m));
    REQUIRE(p.is_monic());
    REQUIRE(p.degree() == static_cast<int>(n));
    REQUIRE(oracle::eval_poly_matrix(p, m).is_zero());  // Cayley-Hamilton
    REQUIRE(p.coeff(0) == ((n % 2) ? Int(-determinant(m)) : determinant(m)));
  }
}

TEST_CASE("characteristic polynomial of small examples", "[charpoly]") {
  REQUIRE(char_poly(IntMatrix{{1, 1}, {-1, 2}}) == IntPoly{3, -3, 1});
  REQUIRE(char_poly(IntMatrix::identity(3)) == IntPoly{-1, 3, -3, 1});
}

TEST_CASE("cyclotomic product identity x^n - 1 = prod Phi_d", "[cyclotomic]") {
  for (unsigned n = 1; n <= 60; ++n) {
    IntPoly prod{1};
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    REQUIRE(prod == IntPoly::monomial(n) - IntPoly{1});
    REQUIRE(cyclotomic(n).degree() == static_cast<int>(euler_phi(n)));
  }
  REQUIRE(cyclotomic(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
}

TEST_CASE("Sturm counts agree with known integer roots", "[sturm]") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<int> roots;
    std::size_t k = 1 + rng() % 6;
    while (roots.size() < k) roots.insert(static_cast<int>(rng() % 21) - 10);
    IntPoly p{1};
    for (int r : roots) p = p * IntPoly::x_minus(r);
    p = p * IntPoly{1, 0, 1};  // no real roots from x^2 + 1
    auto seq = sturm_sequence(p);
    for (int a = -11; a <= 10; a += 3)
      for (int b = a + 1; b <= 11; b += 4) {
        int want = 0;
        for (int r : roots)
          if (r > a && r <= b) ++want;
        REQUIRE(sturm_count(seq, Rational(a), Rational(b)) == want);
      }
  }
}

TEST_CASE("real roots above one are isolated to the requested width", "[roots]") {
  IntPoly p = IntPoly{1, -3, 1} * IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{-1, 1};
  auto rs = isolate_real_roots_above_one(p);
  REQUIRE(rs.size() == 2);
  double golden = (3.0 + std::sqrt(5.0)) / 2.0;
  bool seen_two = false, seen_golden = false;
  for (auto& r : rs) {
    REQUIRE(r.hi - r.lo <= default_width());
    if (r.multiplicity == 2) {
      seen_two = true;
      REQUIRE(r.lo <= 2);
      REQUIRE(r.hi >= 2);
    } else {
      seen_golden = true;
      REQUIRE(r.approx() == Catch::Approx(golden).epsilon(1e-9));
      REQUIRE(r.factor.eval(r.lo) * r.factor.eval(r.hi) <= 0);
    }
  }
  REQUIRE(seen_two);
  REQUIRE(seen_golden);
}

TEST_CASE("square-free decomposition reconstructs the polynomial", "[squarefree]") {
  IntPoly a{-1, 1}, b{1, 0, 1}, c{3, 2};
  IntPoly p = a * a * a * b * b * c;
  IntPoly prod{1};
  for (auto& [f, m] : squarefree_decomposition(p))
    for (unsigned i = 0; i < m; ++i) prod = prod * f;
  REQUIRE(prod == p.primitive());
}

TEST_CASE("kernel, rank and inverse", "[linalg]") {
  IntMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  REQUIRE(rank(m) == 2);
  auto k = kernel_basis(m);
  REQUIRE(k.size() == 1);
  IntVec z = m * k[0];
  for (auto& x : z) REQUIRE(x == 0);
  IntMatrix u{{2, 1}, {1, 1}};
  REQUIRE(u * inverse_unimodular(u) == IntMatrix::identity(2));
  REQUIRE(determinant(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == oracle::det_cofactor(IntMatrix{{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}));
}

TEST_CASE("rational parsing and printing", "[rational]") {
  REQUIRE(parse_rational("-3/6") == Rational(-1, 2));
  REQUIRE(to_string(Rational(3, 4)) == "3/4");
  REQUIRE_THROWS(parse_rational("1/0"));
}
