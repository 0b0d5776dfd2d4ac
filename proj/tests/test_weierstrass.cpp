#include <catch_amalgamated.hpp>

#include <random>

#include <zeroent/weierstrass.hpp>

using namespace zeroent;

namespace {

using F4 = GF2<2>;
using F16 = GF2<4>;

Rational random_rational(std::mt19937_64& rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return Rational(num(rng), den(rng));
}

// carry-less product reduced by x^4 + x + 1
unsigned clmul16(unsigned a, unsigned b) {
  unsigned r = 0;
  for (int i = 0; i < 4; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int i = 7; i >= 4; --i)
    if (r >> i & 1) r ^= 0x13u << (i - 4);
  return r;
}

// y^2 + s t^2 y + x^3 + a t^2 x^2 + b t^6 over F16
F16 curve(F16 a, F16 b, F16 s, F16 t, F16 x, F16 y) {
  return y * y + s * t * t * y + x * x * x + a * t * t * x * x + b * t.pow(6);
}

template <unsigned K>
F16 up(const GF2<K>& v) {
  if constexpr (K == 4) return v;
  else return embed<K, 4>(v);
}

template <unsigned K>
F16 eval_up(const HomPoly<GF2<K>>& p, F16 s, F16 t) {
  F16 acc(0);
  const unsigned d = p.degree();
  for (unsigned i = 0; i <= d; ++i) acc += up(p[i]) * s.pow(d - i) * t.pow(i);
  return acc;
}

// E(g(s,t,x,y)) = E(s,t,x,y) on the whole F16^4 grid; degrees are below 16 in every variable
template <unsigned K>
bool preserves_equation(F16 a, F16 b, const Char2Aut<K>& g, bool full = true, std::mt19937_64* rng = nullptr) {
  F16 l = up(g.lambda), m = up(g.mu), be = up(g.beta);
  auto check = [&](F16 s, F16 t, F16 x, F16 y) {
    F16 b1 = eval_up(g.b1, s, t), b2 = eval_up(g.b2, s, t), b3 = eval_up(g.b3, s, t);
    return curve(a, b, l * s, m * t, be * x + b2, y + b1 * x + b3) == curve(a, b, s, t, x, y);
  };
  if (!full) {
    for (int k = 0; k < 6; ++k)
      if (!check(F16::from_bits((*rng)() % 16), F16::from_bits((*rng)() % 16), F16::from_bits((*rng)() % 16),
                 F16::from_bits((*rng)() % 16)))
        return false;
    return true;
  }
  for (auto s : F16::all())
    for (auto t : F16::all())
      for (auto x : F16::all())
        for (auto y : F16::all())
          if (!check(s, t, x, y)) return false;
  return true;
}

}  // namespace

TEST_CASE("delta0 matches its coefficient formula", "[bp]") {
  std::mt19937_64 rng(3141);
  int done = 0;
  while (done < 100) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if (a == 0 || c * c == 1) continue;
    ++done;
    BPFamily<Rational> f{a, b, c};
    auto d = delta0(f);
    std::vector<Rational> want{a * a, 2 * a * b, 2 * a * c + b * b, 2 * b * c, c * c - 1};
    REQUIRE(d.coeffs() == want);
    for (int k = 0; k < 3; ++k) {
      Rational s = random_rational(rng), t = random_rational(rng);
      Rational q = a * s * s + b * s * t + c * t * t;
      REQUIRE(d.eval(s, t) == q * q - t * t * t * t);
    }
    // a generic family has a square-free Delta0
    try {
      auto deg = full_discriminant_degrees(f);
      REQUIRE(std::accumulate(deg.begin(), deg.end(), 0u) == 12);
      REQUIRE(deg == std::vector<unsigned>{8, 1, 1, 1, 1});
    } catch (const InfiniteAutBroken&) {
      REQUIRE(root_multiplicities(d).size() < 4);
    }
  }
}

TEST_CASE("family validation", "[bp]") {
  REQUIRE_THROWS(BPFamily<Rational>{0, 1, 0}.validate());
  REQUIRE_THROWS(BPFamily<Rational>{1, 1, 1}.validate());
  REQUIRE_THROWS(BPFamily<Rational>{1, 0, -1}.validate());
  REQUIRE(delta0(BPFamily<Rational>{1, 0, 0}).str() == "s^4 + (-1)t^4");
}

TEST_CASE("lambda symmetries follow the b, c pattern", "[bp]") {
  std::mt19937_64 rng(27);
  for (int k = 0; k < 60; ++k) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    if (a == 0 || b == 0 || c == 0 || c * c == 1) continue;
    REQUIRE(lambda_symmetries(BPFamily<Rational>{a, b, c}).n == 1);
    REQUIRE(lambda_symmetries(BPFamily<Rational>{a, 0, c}).n == 2);
    REQUIRE(lambda_symmetries(BPFamily<Rational>{a, 0, 0}).n == 4);
  }
  REQUIRE(lambda_symmetries(BPFamily<Gaussian>{Gaussian::i(), 0, 0}).n == 4);
}

TEST_CASE("case classification of root sets", "[bp]") {
  auto A = classify_bp_case<Gaussian>({1, Gaussian::i(), -1, -Gaussian::i()});
  REQUIRE(A.letter == 'a');
  REQUIRE(A.aut == bp_aut_string('a'));
  REQUIRE(classify_bp_case<Rational>({1, -1, 2, -2}).letter == 'b');
  REQUIRE(classify_bp_case<Rational>({1, 2, 3, 5}).letter == 'c');
  REQUIRE(classify_bp_case<Rational>({2, 4, -2, -4}).letter == 'b');
  REQUIRE(classify_bp_case<Gaussian>({Gaussian(0, 3), Gaussian(0, -3), 3, -3}).letter == 'a');
  REQUIRE(bp_aut_string('b') == "ℤ/4 × D∞");
  REQUIRE_THROWS(classify_bp_case<Rational>({1, 1, 2, 3}));
  REQUIRE_THROWS(classify_bp_case<Rational>({0, 1, 2, 3}));
  REQUIRE_THROWS(classify_bp_case<Rational>({1, 2, 3}));
}

TEST_CASE("cases agree with lambda symmetries on families built from their roots", "[bp]") {
  // Delta0 = (a2 - t^2)(a2 + t^2) with a2 - t^2 = a(s - r1 t)(s - r2 t), a2 + t^2 = a(s - r3 t)(s - r4 t)
  std::mt19937_64 rng(55);
  auto run = [](auto r1, auto r2, auto r3, auto r4) {
    using F = decltype(r1);
    F sigma = r1 + r2;
    F a = F(2) / (r3 * r4 - r1 * r2);
    BPFamily<F> f{a, F(0) - a * sigma, F(1) + a * r1 * r2};
    f.validate();
    auto d = delta0(f);
    for (auto& r : {r1, r2, r3, r4}) REQUIRE(d.eval(r, F(1)) == F(0));
    unsigned n = lambda_symmetries(f).n;
    REQUIRE(classify_bp_case<F>({r1, r2, r3, r4}).letter == bp_case_from_n(n));
    return n;
  };
  int seen[5] = {0, 0, 0, 0, 0};
  for (int k = 0; k < 300; ++k) {
    Rational r1 = random_rational(rng), r3 = random_rational(rng);
    Rational sigma = (k % 2) ? Rational(0) : random_rational(rng);
    Rational r2 = sigma - r1, r4 = sigma - r3;
    std::set<Rational> rs{r1, r2, r3, r4};
    if (rs.size() < 4 || rs.count(0) || r3 * r4 == r1 * r2) continue;
    ++seen[run(r1, r2, r3, r4)];
  }
  // sigma = 0 with r3 = i r1 is the fully symmetric case
  for (int k = 1; k <= 5; ++k) {
    Gaussian r1(Rational(k, 3)), r3 = Gaussian::i() * r1;
    ++seen[run(r1, -r1, r3, -r3)];
  }
  REQUIRE(seen[1] > 0);
  REQUIRE(seen[2] > 0);
  REQUIRE(seen[4] == 5);
}

TEST_CASE("K3 cover substitution", "[bp]") {
  auto k = k3_cover_substitution(BPFamily<Rational>{1, 1, 1});
  REQUIRE(k.a2.str() == "s^4 + s^2t^2 + t^4");
  REQUIRE(k.x_coeff == HomPoly<Rational>::monomial(8, 8));
  REQUIRE(k.x2_coeff == Rational(2) * k.a2);
}

TEST_CASE("F16 arithmetic", "[gf2]") {
  for (auto x : F16::all()) {
    for (auto y : F16::all()) {
      REQUIRE((x * y).bits() == clmul16(x.bits(), y.bits()));
      REQUIRE(x * y == y * x);
      REQUIRE((x + y) * (x + y) == x * x + y * y);  // Frobenius
      for (auto z : F16::all()) {
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
      }
    }
    if (x != F16(0)) {
      REQUIRE(x * x.inv() == F16(1));
      REQUIRE(x.pow(15) == F16(1));
    }
    REQUIRE(x.pow(16) == x);
  }
  REQUIRE_THROWS(F16(0).inv());
  REQUIRE_THROWS(F16::from_bits(16));
}

TEST_CASE("embedding F4 into F16 is a field homomorphism", "[gf2]") {
  std::set<unsigned> image;
  for (auto x : F4::all()) {
    image.insert(embed<2, 4>(x).bits());
    for (auto y : F4::all()) {
      REQUIRE(embed<2, 4>(x + y) == embed<2, 4>(x) + embed<2, 4>(y));
      REQUIRE(embed<2, 4>(x * y) == embed<2, 4>(x) * embed<2, 4>(y));
    }
  }
  REQUIRE(image.size() == 4);
  for (auto b : image) REQUIRE(F16::from_bits(b).pow(4) == F16::from_bits(b));
  REQUIRE(embed<1, 4>(GF2<1>(1)) == F16(1));
}

TEST_CASE("char 2 solutions preserve the Weierstrass equation", "[char2]") {
  std::vector<std::pair<unsigned, unsigned>> pairs{{1, 0}, {0, 1}, {1, 1}, {2, 3}, {7, 12}};
  for (auto [ab, bb] : pairs) {
    F16 a = F16::from_bits(ab), b = F16::from_bits(bb);
    auto sols = char2_isotrivial_auts<4>(a, b);
    INFO(ab << "," << bb);
    REQUIRE_FALSE(sols.empty());
    for (auto& g : sols) REQUIRE(preserves_equation<4>(a, b, g));
    REQUIRE(audit_char2<4>(a, b).ok());
  }
  REQUIRE_THROWS(char2_isotrivial_auts<2>(F4(0), F4(0)));
}

TEST_CASE("char 2 search over F4 agrees with a naive scan", "[char2]") {
  std::mt19937_64 rng(8);
  const auto B1 = all_hom_polys<F4>(1), B2 = all_hom_polys<F4>(2), B3 = all_hom_polys<F4>(3);
  for (auto [ab, bb] : std::vector<std::pair<unsigned, unsigned>>{{1, 0}, {0, 1}, {2, 3}}) {
    F4 a = F4::from_bits(ab), b = F4::from_bits(bb);
    F16 A = up(a), B = up(b);
    std::set<Char2Aut<2>> naive;
    for (auto l : F4::units())
      for (auto m : F4::units())
        for (auto be : F4::units())
          for (auto& b1 : B1)
            for (auto& b2 : B2)
              for (auto& b3 : B3) {
                Char2Aut<2> g{l, m, be, b1, b2, b3};
                if (preserves_equation<2>(A, B, g, false, &rng) && preserves_equation<2>(A, B, g)) naive.insert(g);
              }
    auto lib = char2_isotrivial_auts<2>(a, b);
    REQUIRE(std::set<Char2Aut<2>>(lib.begin(), lib.end()) == naive);
  }
}
