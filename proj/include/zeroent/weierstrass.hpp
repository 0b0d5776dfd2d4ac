#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "exact_arith.hpp"

namespace zeroent {

// ------------------------------------------------------------------ fields

struct Gaussian {
  Rational re = 0, im = 0;

  Gaussian() = default;
  Gaussian(int r) : re(r) {}
  Gaussian(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}
  static Gaussian i() { return {0, 1}; }

  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend Gaussian operator+(const Gaussian& a, const Gaussian& b) { return {a.re + b.re, a.im + b.im}; }
  friend Gaussian operator-(const Gaussian& a, const Gaussian& b) { return {a.re - b.re, a.im - b.im}; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
  friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
    Rational n = b.norm();
    if (n == 0) throw std::domain_error("Gaussian: division by zero");
    Gaussian p = a * b.conj();
    return {p.re / n, p.im / n};
  }
  Gaussian& operator+=(const Gaussian& b) { return *this = *this + b; }
  Gaussian& operator-=(const Gaussian& b) { return *this = *this - b; }
  Gaussian& operator*=(const Gaussian& b) { return *this = *this * b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
  friend bool operator<(const Gaussian& a, const Gaussian& b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }
};

inline std::string to_string(const Gaussian& z) {
  if (z.im == 0) return to_string(z.re);
  std::string im = z.im == 1 ? "i" : z.im == -1 ? "-i" : to_string(z.im) + "i";
  if (z.re == 0) return im;
  return to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

namespace detail {
// primitive polynomials, so x generates the multiplicative group
constexpr std::array<unsigned, 9> kGF2Modulus = {0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11D};

template <unsigned K>
struct GF2Tables {
  std::array<std::uint8_t, 512> exp{};
  std::array<int, 256> log{};
  constexpr GF2Tables() {
    constexpr unsigned q = 1u << K;
    unsigned x = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
      exp[i] = static_cast<std::uint8_t>(x);
      log[x] = static_cast<int>(i);
      x <<= 1;
      if (x & q) x ^= kGF2Modulus[K];
      if (K == 1) x = 1;
    }
    for (unsigned i = q - 1; i < 512; ++i) exp[i] = exp[i % (q - 1)];
    log[0] = -1;
  }
};
}  // namespace detail

// F_{2^K} in the polynomial basis modulo a fixed primitive polynomial
template <unsigned K>
class GF2 {
  static_assert(K >= 1 && K <= 8, "GF2<K>: 1 <= K <= 8");
  static constexpr detail::GF2Tables<K> tables_{};

 public:
  static constexpr unsigned kDegree = K;
  static constexpr unsigned kOrder = 1u << K;

  constexpr GF2() = default;
  constexpr GF2(int v) : v_(static_cast<std::uint8_t>(v & 1)) {}  // image of an integer
  static constexpr GF2 from_bits(unsigned b) {
    if (b >= kOrder) throw std::out_of_range("GF2: bit pattern out of range");
    GF2 x;
    x.v_ = static_cast<std::uint8_t>(b);
    return x;
  }
  constexpr unsigned bits() const { return v_; }

  static std::vector<GF2> all() {
    std::vector<GF2> out;
    for (unsigned b = 0; b < kOrder; ++b) out.push_back(from_bits(b));
    return out;
  }
  static std::vector<GF2> units() {
    auto v = all();
    v.erase(v.begin());
    return v;
  }

  friend constexpr GF2 operator+(GF2 a, GF2 b) { return from_bits(a.v_ ^ b.v_); }
  friend constexpr GF2 operator-(GF2 a, GF2 b) { return a + b; }
  friend constexpr GF2 operator-(GF2 a) { return a; }
  friend constexpr GF2 operator*(GF2 a, GF2 b) {
    if (a.v_ == 0 || b.v_ == 0) return GF2();
    return from_bits(tables_.exp[tables_.log[a.v_] + tables_.log[b.v_]]);
  }
  constexpr GF2 inv() const {
    if (v_ == 0) throw std::domain_error("GF2: inverse of zero");
    return from_bits(tables_.exp[(kOrder - 1 - tables_.log[v_]) % (kOrder - 1)]);
  }
  friend constexpr GF2 operator/(GF2 a, GF2 b) { return a * b.inv(); }
  constexpr GF2 pow(long long e) const {
    if (v_ == 0) return e == 0 ? GF2(1) : GF2();
    long long m = static_cast<long long>(kOrder - 1);
    long long k = ((tables_.log[v_] * (e % m)) % m + m) % m;
    return from_bits(tables_.exp[k]);
  }
  GF2& operator+=(GF2 b) { return *this = *this + b; }
  GF2& operator-=(GF2 b) { return *this = *this - b; }
  GF2& operator*=(GF2 b) { return *this = *this * b; }
  friend constexpr bool operator==(GF2 a, GF2 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(GF2 a, GF2 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(GF2 a, GF2 b) { return a.v_ < b.v_; }

 private:
  std::uint8_t v_ = 0;
};

template <unsigned K>
std::string to_string(const GF2<K>& x) {
  if (x.bits() == 0) return "0";
  std::string s;
  for (int i = static_cast<int>(K) - 1; i >= 0; --i) {
    if (!(x.bits() >> i & 1)) continue;
    if (!s.empty()) s += "+";
    s += i == 0 ? "1" : i == 1 ? "w" : "w^" + std::to_string(i);
  }
  return s;
}

// F_{2^K} -> F_{2^L} sending the generator to the smallest root of its minimal polynomial
template <unsigned K, unsigned L>
GF2<L> embed(const GF2<K>& x) {
  static_assert(L % K == 0, "embed: F_{2^K} is not a subfield");
  static const GF2<L> root = [] {
    for (auto r : GF2<L>::all()) {
      GF2<L> acc, p(1);
      for (unsigned i = 0; i <= K; ++i) {
        if (detail::kGF2Modulus[K] >> i & 1) acc += p;
        p = p * r;
      }
      if (acc == GF2<L>() && (K > 1 || r == GF2<L>(1))) return r;
    }
    throw std::logic_error("embed: no root of the modulus");
  }();
  GF2<L> out, p(1);
  for (unsigned i = 0; i < K; ++i) {
    if (x.bits() >> i & 1) out += p;
    p = p * root;
  }
  return out;
}

template <typename F>
struct field_traits;
template <>
struct field_traits<Rational> {
  static std::string name() { return "Q"; }
  static constexpr unsigned characteristic = 0;
};
template <>
struct field_traits<Gaussian> {
  static std::string name() { return "Q(i)"; }
  static constexpr unsigned characteristic = 0;
};
template <unsigned K>
struct field_traits<GF2<K>> {
  static std::string name() { return "F" + std::to_string(1u << K); }
  static constexpr unsigned characteristic = 2;
};

template <typename F>
F field_pow(F x, unsigned e) {
  F r(1);
  while (e) {
    if (e & 1) r = r * x;
    x = x * x;
    e >>= 1;
  }
  return r;
}

// --------------------------------------------------------------- HomPoly

// c[i] is the coefficient of s^{d-i} t^i
template <typename F>
class HomPoly {
 public:
  HomPoly() : c_(1, F(0)) {}
  explicit HomPoly(std::vector<F> c) : c_(std::move(c)) {
    if (c_.empty()) throw std::invalid_argument("HomPoly: empty coefficient vector");
  }
  static HomPoly zero(unsigned d) { return HomPoly(std::vector<F>(d + 1, F(0))); }
  // coef * s^{d-i} t^i
  static HomPoly monomial(unsigned d, unsigned i, F coef = F(1)) {
    HomPoly p = zero(d);
    p.c_.at(i) = coef;
    return p;
  }

  unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& operator[](std::size_t i) const { return c_.at(i); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const F& x) { return x == F(0); });
  }

  friend HomPoly operator+(const HomPoly& a, const HomPoly& b) {
    a.same_degree(b);
    HomPoly r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }
  friend HomPoly operator-(const HomPoly& a, const HomPoly& b) {
    a.same_degree(b);
    HomPoly r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }
  friend HomPoly operator*(const HomPoly& a, const HomPoly& b) {
    HomPoly r = zero(a.degree() + b.degree());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    return r;
  }
  friend HomPoly operator*(const F& k, const HomPoly& a) {
    HomPoly r = a;
    for (auto& x : r.c_) x = k * x;
    return r;
  }
  friend bool operator==(const HomPoly& a, const HomPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const HomPoly& a, const HomPoly& b) { return !(a == b); }
  friend bool operator<(const HomPoly& a, const HomPoly& b) { return a.c_ < b.c_; }

  // p(lambda s, mu t)
  HomPoly scale_vars(const F& lambda, const F& mu) const {
    HomPoly r = *this;
    const unsigned d = degree();
    for (unsigned i = 0; i <= d; ++i) r.c_[i] = c_[i] * field_pow(lambda, d - i) * field_pow(mu, i);
    return r;
  }

  // p(s^2, t^2)
  HomPoly square_vars() const {
    HomPoly r = zero(2 * degree());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
    return r;
  }

  F eval(const F& s, const F& t) const {
    F acc(0);
    const unsigned d = degree();
    for (unsigned i = 0; i <= d; ++i) acc = acc + c_[i] * field_pow(s, d - i) * field_pow(t, i);
    return acc;
  }

  std::string str() const {
    using zeroent::to_string;
    std::string out;
    const unsigned d = degree();
    for (unsigned i = 0; i <= d; ++i) {
      if (c_[i] == F(0)) continue;
      std::string mono;
      unsigned es = d - i, et = i;
      if (es) mono += es == 1 ? "s" : "s^" + std::to_string(es);
      if (et) mono += et == 1 ? "t" : "t^" + std::to_string(et);
      std::string coef = to_string(c_[i]);
      if (!out.empty()) out += " + ";
      if (mono.empty()) out += coef;
      else if (c_[i] == F(1)) out += mono;
      else out += "(" + coef + ")" + mono;
    }
    return out.empty() ? "0" : out;
  }

 private:
  void same_degree(const HomPoly& b) const {
    if (degree() != b.degree()) throw std::invalid_argument("HomPoly: degree mismatch");
  }
  std::vector<F> c_;
};

// every homogeneous polynomial of degree d over a finite field
template <typename F>
std::vector<HomPoly<F>> all_hom_polys(unsigned d) {
  std::vector<HomPoly<F>> out{HomPoly<F>::zero(d)};
  for (unsigned i = 0; i <= d; ++i) {
    std::vector<HomPoly<F>> next;
    for (auto& p : out)
      for (auto x : F::all()) {
        auto c = p.coeffs();
        c[i] = x;
        next.emplace_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

// ------------------------------------------------------ univariate helpers

namespace detail {
template <typename F>
void trim(std::vector<F>& p) {
  while (!p.empty() && p.back() == F(0)) p.pop_back();
}
template <typename F>
std::vector<F> poly_mod(std::vector<F> a, const std::vector<F>& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    F q = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = a[sh + i] - q * b[i];
    trim(a);
  }
  return a;
}
template <typename F>
std::vector<F> poly_divexact(std::vector<F> a, const std::vector<F>& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  std::vector<F> q(a.size() - b.size() + 1, F(0));
  while (a.size() >= b.size() && !a.empty()) {
    F c = a.back() / b.back();
    std::size_t sh = a.size() - b.size();
    q[sh] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = a[sh + i] - c * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("poly_divexact: non-zero remainder");
  return q;
}
template <typename F>
std::vector<F> poly_gcd(std::vector<F> a, std::vector<F> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    F lc = a.back();
    for (auto& x : a) x = x / lc;
  }
  return a;
}
template <typename F>
std::vector<F> poly_deriv(const std::vector<F>& p) {
  std::vector<F> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(F(static_cast<int>(i)) * p[i]);
  trim(d);
  return d;
}
}  // namespace detail

// root multiplicities of a binary form over the algebraic closure (characteristic 0)
template <typename F>
std::vector<unsigned> root_multiplicities(const HomPoly<F>& p) {
  static_assert(field_traits<F>::characteristic == 0, "root_multiplicities: characteristic 0 only");
  if (p.is_zero()) throw std::invalid_argument("root_multiplicities: zero form");
  const unsigned d = p.degree();
  // roots at t = 0 are read off the leading s-coefficients
  unsigned at_infinity = 0;
  while (p[at_infinity] == F(0)) ++at_infinity;
  std::vector<F> f;  // p(s, 1), low degree first
  for (unsigned i = 0; i <= d; ++i) f.push_back(p[d - i]);
  detail::trim(f);
  std::vector<unsigned> mult;
  if (at_infinity) mult.push_back(at_infinity);
  // Yun's square-free factorisation
  auto g = detail::poly_gcd(f, detail::poly_deriv(f));
  auto w = detail::poly_divexact(f, g.empty() ? std::vector<F>{F(1)} : g);
  auto c = g.empty() ? std::vector<F>{F(1)} : g;
  for (unsigned i = 1; w.size() > 1; ++i) {
    auto y = detail::poly_gcd(w, c);
    auto z = detail::poly_divexact(w, y);
    for (std::size_t k = 1; k < z.size(); ++k) mult.push_back(i);
    w = y;
    c = detail::poly_divexact(c, y);
  }
  std::sort(mult.rbegin(), mult.rend());
  return mult;
}

// ------------------------------------------------------ the (3.1) family

struct InfiniteAutBroken : std::domain_error {
  using std::domain_error::domain_error;
};

// y^2 = x^3 + 2 a2(s,t) x^2 + t^4 x with a2 = a s^2 + b st + c t^2
template <typename F>
struct BPFamily {
  F a, b, c;

  HomPoly<F> a2() const { return HomPoly<F>({a, b, c}); }
  bool normalized() const { return a != F(0) && c * c != F(1); }
  void validate() const {
    static_assert(field_traits<F>::characteristic != 2, "BPFamily: characteristic 2 excluded");
    if (a == F(0)) throw std::invalid_argument("BPFamily: a must be non-zero");
    if (c * c == F(1)) throw std::invalid_argument("BPFamily: c^2 - 1 must be non-zero");
  }
};

// a2^2 - t^4
template <typename F>
HomPoly<F> delta0(const BPFamily<F>& f) {
  auto q = f.a2();
  return q * q - HomPoly<F>::monomial(4, 4);
}

// Delta = -64 t^8 Delta0: the I8 fiber at t = 0 plus the roots of Delta0
template <typename F>
std::vector<unsigned> full_discriminant_degrees(const BPFamily<F>& f) {
  f.validate();
  auto m = root_multiplicities(delta0(f));
  for (auto k : m)
    if (k > 1) throw InfiniteAutBroken("Delta0 has a repeated root");
  std::vector<unsigned> out{8};
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

inline std::vector<Gaussian> mu4() { return {Gaussian(1), Gaussian::i(), Gaussian(-1), -Gaussian::i()}; }

inline Gaussian to_gaussian(const Rational& q) { return Gaussian(q); }
inline Gaussian to_gaussian(const Gaussian& z) { return z; }

struct LambdaSymmetries {
  std::vector<Gaussian> group;
  unsigned n = 0;
};

// lambda with Delta0(lambda s, t) proportional to Delta0(s, t). The t^4 coefficient c^2 - 1 is
// non-zero, so the factor is 1, and the s^4 coefficient then forces lambda^4 = 1.
template <typename F>
LambdaSymmetries lambda_symmetries(const BPFamily<F>& f) {
  f.validate();
  BPFamily<Gaussian> g{to_gaussian(f.a), to_gaussian(f.b), to_gaussian(f.c)};
  auto d = delta0(g);
  LambdaSymmetries r;
  for (auto& l : mu4()) {
    auto e = d.scale_vars(l, Gaussian(1));
    // proportionality by cross-multiplication against the non-zero t^4 coefficient
    bool prop = true;
    for (unsigned i = 0; i <= 4 && prop; ++i) prop = e[i] * d[4] == d[i] * e[4];
    if (prop) r.group.push_back(l);
  }
  r.n = static_cast<unsigned>(r.group.size());
  bool b0 = f.b == F(0), c0 = f.c == F(0);
  unsigned want = !b0 ? 1 : (c0 ? 4 : 2);
  if (r.n != want) throw std::logic_error("lambda_symmetries: order does not match the b, c pattern");
  return r;
}

struct BPCase {
  char letter = 'c';
  std::string aut;
};

inline std::string bp_aut_string(char letter) {
  switch (letter) {
    case 'a': return "non-split extension of ℤ/2 by ℤ/4 × D∞";
    case 'b': return "ℤ/4 × D∞";
    default: return "ℤ/2 × D∞";
  }
}

namespace detail {
template <typename F>
char bp_case_normalized(const std::vector<F>& r) {
  std::set<F> s(r.begin(), r.end());
  auto has = [&](const F& x) { return s.count(x) > 0; };
  if constexpr (std::is_same_v<F, Gaussian>) {
    bool all = true;
    for (auto& z : mu4()) all = all && has(z);
    if (all) return 'a';
  }
  if (has(F(1)) && has(F(-1)))
    for (auto& x : r) {
      if (x == F(1) || x == F(-1)) continue;
      if (field_pow(x, 4) != F(1) && has(F(0) - x)) return 'b';
    }
  return 'c';
}
}  // namespace detail

// roots a_i of Delta0(s, 1) with a_1 = 1 after normalisation
template <typename F>
BPCase classify_bp_case(std::vector<F> roots) {
  if (roots.size() != 4) throw std::invalid_argument("classify_bp_case: need four roots");
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < 4; ++i) {
    if (roots[i] == F(0)) throw std::invalid_argument("classify_bp_case: zero root");
    if (i && roots[i] == roots[i - 1]) throw std::invalid_argument("classify_bp_case: repeated root");
  }
  auto scaled = [&](const F& by) {
    std::vector<F> v;
    for (auto& x : roots) v.push_back(x / by);
    return v;
  };
  bool has_one = std::find(roots.begin(), roots.end(), F(1)) != roots.end();
  char letter = detail::bp_case_normalized(has_one ? roots : scaled(roots.front()));
  for (auto& x : roots)
    if (detail::bp_case_normalized(scaled(x)) != letter)
      throw std::logic_error("classify_bp_case: case depends on the normalisation");
  return {letter, bp_aut_string(letter)};
}

// case letter predicted by the number of lambda symmetries
inline char bp_case_from_n(unsigned n) { return n == 4 ? 'a' : n == 2 ? 'b' : 'c'; }

// y^2 = x^3 + 2 a2(s^2,t^2) x^2 + t^8 x
template <typename F>
struct K3Cover {
  HomPoly<F> a2;        // a2(s^2, t^2)
  HomPoly<F> x2_coeff;  // 2 a2(s^2, t^2)
  HomPoly<F> x_coeff;   // t^8
};

template <typename F>
K3Cover<F> k3_cover_substitution(const BPFamily<F>& f) {
  K3Cover<F> k;
  k.a2 = f.a2().square_vars();
  k.x2_coeff = F(2) * k.a2;
  k.x_coeff = HomPoly<F>::monomial(4, 4).square_vars();
  return k;
}

// ------------------------------------------------ char 2 isotrivial family

// (s,t,x,y) -> (lambda s, mu t, beta x + b2, y + b1 x + b3) on y^2 + st^2 y = x^3 + at^2 x^2 + bt^6
template <unsigned K>
struct Char2Aut {
  GF2<K> lambda, mu, beta;
  HomPoly<GF2<K>> b1, b2, b3;

  bool is_identity() const {
    return lambda == GF2<K>(1) && mu == GF2<K>(1) && beta == GF2<K>(1) && b1.is_zero() && b2.is_zero() &&
           b3.is_zero();
  }
  friend bool operator<(const Char2Aut& x, const Char2Aut& y) {
    return std::tie(x.lambda, x.mu, x.beta, x.b1, x.b2, x.b3) < std::tie(y.lambda, y.mu, y.beta, y.b1, y.b2, y.b3);
  }
  friend bool operator==(const Char2Aut& x, const Char2Aut& y) {
    return std::tie(x.lambda, x.mu, x.beta, x.b1, x.b2, x.b3) == std::tie(y.lambda, y.mu, y.beta, y.b1, y.b2, y.b3);
  }
};

// coefficients of y, x^3, x^2, x, 1 of the transformed right-hand side, with the y^2 term
// normalised to 1 (char 2, so (y + b1 x + b3)^2 = y^2 + b1^2 x^2 + b3^2)
template <unsigned K>
struct Char2Transformed {
  HomPoly<GF2<K>> y, x3, x2, x1, x0;
};

template <unsigned K>
Char2Transformed<K> char2_transform(const GF2<K>& a, const GF2<K>& b, const Char2Aut<K>& g) {
  using F = GF2<K>;
  using P = HomPoly<F>;
  F lm2 = g.lambda * g.mu * g.mu;
  P st2 = P::monomial(3, 2);
  P t2 = P::monomial(2, 2);
  Char2Transformed<K> r;
  r.y = lm2 * st2;
  r.x3 = P({g.beta * g.beta * g.beta});
  r.x2 = g.beta * g.beta * g.b2 + g.b1 * g.b1 + (a * g.beta * g.beta * g.mu * g.mu) * t2;
  r.x1 = lm2 * (st2 * g.b1) + g.beta * (g.b2 * g.b2);
  r.x0 = g.b3 * g.b3 + lm2 * (st2 * g.b3) + g.b2 * g.b2 * g.b2 + (a * g.mu * g.mu) * (t2 * g.b2 * g.b2) +
         (b * field_pow(g.mu, 6)) * P::monomial(6, 6);
  return r;
}

template <unsigned K>
Char2Transformed<K> char2_original(const GF2<K>& a, const GF2<K>& b) {
  using F = GF2<K>;
  using P = HomPoly<F>;
  return {P::monomial(3, 2), P({F(1)}), a * P::monomial(2, 2), P::zero(4), b * P::monomial(6, 6)};
}

// exhaustive over lambda, mu, beta in F^x and all b1, b2, b3 of degrees 1, 2, 3;
// each coefficient equation is tested as soon as the unknowns it involves are fixed
template <unsigned K>
std::vector<Char2Aut<K>> char2_isotrivial_auts(const GF2<K>& a, const GF2<K>& b) {
  static_assert(K <= 4, "char2_isotrivial_auts: fields up to F16");
  using F = GF2<K>;
  using P = HomPoly<F>;
  if (a == F(0) && b == F(0)) throw std::invalid_argument("char2_isotrivial_auts: a and b both zero");
  const auto orig = char2_original(a, b);
  const auto B1 = all_hom_polys<F>(1), B2 = all_hom_polys<F>(2), B3 = all_hom_polys<F>(3);
  const P st2 = P::monomial(3, 2), t2 = P::monomial(2, 2);
  std::vector<P> b2sq, st2b1;
  for (auto& p : B2) b2sq.push_back(p * p);
  for (auto& p : B1) st2b1.push_back(st2 * p);
  auto key = [](const P& p) {
    std::uint64_t k = 0;
    for (auto& x : p.coeffs()) k = k << 8 | x.bits();
    return k;
  };

  std::vector<Char2Aut<K>> out;
  for (auto lambda : F::units())
    for (auto mu : F::units()) {
      F lm2 = lambda * mu * mu;
      if (lm2 * st2 != orig.y) continue;
      for (auto beta : F::units()) {
        if (P({beta * beta * beta}) != orig.x3) continue;
        // x-coefficient: lm2 st^2 b1 + beta b2^2 = 0, joined on the value of beta b2^2
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_b2;
        for (std::size_t j = 0; j < B2.size(); ++j) by_b2[key(beta * b2sq[j])].push_back(j);
        for (std::size_t i = 0; i < B1.size(); ++i) {
          P lhs = lm2 * st2b1[i];  // char 2: the equation says beta b2^2 = lhs
          auto it = by_b2.find(key(lhs));
          if (it == by_b2.end()) continue;
          for (auto j : it->second) {
            Char2Aut<K> g{lambda, mu, beta, B1[i], B2[j], P::zero(3)};
            auto tr = char2_transform(a, b, g);
            if (tr.x1 != orig.x1 || tr.x2 != orig.x2) continue;
            for (auto& b3 : B3) {
              g.b3 = b3;
              if (char2_transform(a, b, g).x0 == orig.x0) out.push_back(g);
            }
          }
        }
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

// the (b1, b2, b3) parts, i.e. the solutions modulo the torus (lambda, mu, beta)
template <unsigned K>
std::set<std::tuple<HomPoly<GF2<K>>, HomPoly<GF2<K>>, HomPoly<GF2<K>>>> fiber_preserving_quotient(
    const std::vector<Char2Aut<K>>& sols) {
  std::set<std::tuple<HomPoly<GF2<K>>, HomPoly<GF2<K>>, HomPoly<GF2<K>>>> q;
  for (auto& g : sols) q.insert({g.b1, g.b2, g.b3});
  return q;
}

struct Char2Audit {
  std::size_t solutions = 0;
  bool identity_present = false;
  bool b1_b2_zero = true;
  bool lambda_mu2_one = true;
  bool beta_cubed_one = true;
  bool b3_zero_or_st2 = true;
  bool quotient_is_id_and_sign = false;
  bool ok() const {
    return identity_present && b1_b2_zero && lambda_mu2_one && beta_cubed_one && b3_zero_or_st2 &&
           quotient_is_id_and_sign;
  }
};

template <unsigned K>
Char2Audit audit_char2(const GF2<K>& a, const GF2<K>& b) {
  using F = GF2<K>;
  using P = HomPoly<F>;
  auto sols = char2_isotrivial_auts(a, b);
  Char2Audit au;
  au.solutions = sols.size();
  const P st2 = P::monomial(3, 2);
  for (auto& g : sols) {
    if (g.is_identity()) au.identity_present = true;
    if (!g.b1.is_zero() || !g.b2.is_zero()) au.b1_b2_zero = false;
    if (g.lambda * g.mu * g.mu != F(1)) au.lambda_mu2_one = false;
    if (field_pow(g.beta, 3) != F(1)) au.beta_cubed_one = false;
    if (!g.b3.is_zero() && g.b3 != st2) au.b3_zero_or_st2 = false;
  }
  auto q = fiber_preserving_quotient(sols);
  decltype(q) want{{P::zero(1), P::zero(2), P::zero(3)}, {P::zero(1), P::zero(2), st2}};
  au.quotient_is_id_and_sign = q == want;
  return au;
}

}  // namespace zeroent
