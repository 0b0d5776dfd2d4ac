#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "lattice.hpp"

namespace zeroent {

struct LatticeIsometry {
  Lattice lattice;
  IntMatrix matrix;  // acts on column coordinate vectors

  LatticeIsometry() = default;
  LatticeIsometry(Lattice l, IntMatrix m) : lattice(std::move(l)), matrix(std::move(m)) {
    if (!is_isometry(lattice, matrix)) throw std::invalid_argument("LatticeIsometry: matrix does not preserve the form");
  }

  static bool is_isometry(const Lattice& l, const IntMatrix& m) {
    if (!m.square() || m.rows() != l.rank()) return false;
    if (m.transpose() * l.gram * m != l.gram) return false;
    return iabs(determinant(m)) == 1;
  }

  IntVec apply(const IntVec& x) const { return matrix * x; }

  LatticeIsometry inverse() const { return {lattice, inverse_unimodular(matrix)}; }
  LatticeIsometry pow(unsigned long long n) const { return {lattice, mat_pow(matrix, n)}; }
  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
    if (!(a.lattice == b.lattice)) throw std::invalid_argument("isometry product: different lattices");
    return {a.lattice, a.matrix * b.matrix};
  }
};

enum class IsometryKind { Elliptic, Parabolic, Hyperbolic };

inline std::string to_string(IsometryKind k) {
  switch (k) {
    case IsometryKind::Elliptic: return "Elliptic";
    case IsometryKind::Parabolic: return "Parabolic";
    case IsometryKind::Hyperbolic: return "Hyperbolic";
  }
  return "?";
}

// exact description of log(lambda); lambda = 1 for zero entropy
struct EntropyValue {
  IntPoly minimal_polynomial{-1, 1};
  Rational lo = 1, hi = 1;
  double lambda_approx = 1.0;
  bool positive() const { return minimal_polynomial.degree() > 1 || lo > 1; }
  double value() const { return std::log(lambda_approx); }
};

struct IsometryClass {
  IsometryKind kind = IsometryKind::Elliptic;
  std::optional<unsigned long long> order;  // empty = infinite
  EntropyValue entropy;
  std::optional<IntVec> fixed_isotropic;
  std::vector<unsigned> cyclotomic_indices;  // with repetition
  IntPoly char_poly;
  IntPoly remainder{1};  // non-cyclotomic part of the char poly
  bool nef_verified = false;  // never lattice-checkable; kept for reporting
};

// cyclotomic peeling: p = prod Phi_m^{e_m} * rest
inline std::pair<std::vector<unsigned>, IntPoly> peel_cyclotomic(IntPoly p, unsigned max_phi) {
  std::vector<unsigned> idx;
  for (unsigned m = 1; m <= 4 * max_phi * max_phi + 6; ++m) {
    if (euler_phi(m) > max_phi) continue;
    IntPoly c = cyclotomic(m);
    while (p.degree() >= c.degree()) {
      auto [q, r] = divmod(p, c);
      if (!r.is_zero()) break;
      p = q;
      idx.push_back(m);
    }
  }
  if (p.lead() < 0) p = -p;
  return {idx, p};
}

inline IntVec positive_reference_vector(const Lattice& l) {
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (l.gram(i, i) > 0) {
      IntVec v(n, Int(0));
      v[i] = 1;
      return v;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        IntVec v(n, Int(0));
        v[i] = 1;
        v[j] = s;
        if (l.dot(v, v) > 0) return v;
      }
  throw std::domain_error("positive_reference_vector: no small vector of positive norm");
}

inline std::vector<IntVec> saturated_kernel(const IntMatrix& m) {
  auto ker = kernel_basis(m);
  if (ker.empty()) return {};
  IntMatrix b = saturate_rows(ker, m.cols());
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < b.rows(); ++i) out.push_back(b.row(i));
  return out;
}

inline IntVec make_primitive(IntVec v) {
  Int g = 0;
  for (auto& x : v) g = igcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

inline IsometryClass classify(const LatticeIsometry& g, std::optional<IntVec> reference = std::nullopt) {
  const Lattice& l = g.lattice;
  const std::size_t n = l.rank();
  if (!LatticeIsometry::is_isometry(l, g.matrix)) throw std::invalid_argument("classify: matrix is not an isometry");
  auto sig = signature(l);
  if (sig.positive != 1 || sig.zero != 0) throw std::domain_error("classify: lattice is not hyperbolic");

  IsometryClass c;
  c.char_poly = char_poly(g.matrix);
  auto [idx, rest] = peel_cyclotomic(c.char_poly, static_cast<unsigned>(n));
  c.cyclotomic_indices = idx;
  c.remainder = rest;

  if (rest.degree() > 0) {
    if (!rest.is_palindromic()) throw std::logic_error("classify: non-reciprocal remainder");
    c.kind = IsometryKind::Hyperbolic;
    auto rs = isolate_real_roots_above_one(rest);
    if (rs.empty()) throw std::logic_error("classify: remainder has no real root above 1");
    const auto& top = rs.back();
    c.entropy.minimal_polynomial = top.factor;
    c.entropy.lo = top.lo;
    c.entropy.hi = top.hi;
    c.entropy.lambda_approx = top.approx();
    return c;
  }

  unsigned long long N = 1;
  for (auto m : idx) N = std::lcm(N, (unsigned long long)m);
  IntMatrix I = IntMatrix::identity(n);
  if (mat_pow(g.matrix, N) == I) {
    c.kind = IsometryKind::Elliptic;
    for (auto d : divisors(static_cast<unsigned>(N)))
      if (mat_pow(g.matrix, d) == I) {
        c.order = d;
        break;
      }
    return c;
  }

  c.kind = IsometryKind::Parabolic;
  auto w = saturated_kernel(mat_pow(g.matrix, N) - I);
  IntMatrix b = IntMatrix::from_rows(w);
  IntMatrix gw = b * l.gram * b.transpose();
  auto rad = kernel_basis(gw);
  if (rad.size() != 1) throw std::logic_error("classify: radical of the invariant form is not a line");
  IntVec f(n, Int(0));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) f[k] += rad[0][i] * w[i][k];
  f = make_primitive(f);
  IntVec h = reference ? *reference : positive_reference_vector(l);
  if (l.dot(f, h) < 0)
    for (auto& x : f) x = -x;
  c.fixed_isotropic = f;
  return c;
}

inline EntropyValue entropy(const LatticeIsometry& g) { return classify(g).entropy; }

// x -> x + (x.f) e - (x.e) f - 1/2 (e.e)(x.f) f
inline LatticeIsometry eichler_transvection(const Lattice& l, const IntVec& f, const IntVec& e) {
  const std::size_t n = l.rank();
  if (f.size() != n || e.size() != n) throw std::invalid_argument("eichler_transvection: wrong vector length");
  if (!l.is_even()) throw std::invalid_argument("eichler_transvection: lattice is not even");
  if (l.dot(f, f) != 0) throw std::invalid_argument("eichler_transvection: f is not isotropic");
  if (l.dot(e, f) != 0) throw std::invalid_argument("eichler_transvection: e is not orthogonal to f");
  Int half_ee = l.dot(e, e) / 2;
  IntVec Gf = l.gram * f, Ge = l.gram * e;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Int& xf = Gf[j];
    const Int& xe = Ge[j];
    for (std::size_t i = 0; i < n; ++i) m(i, j) += xf * e[i] - xe * f[i] - half_ee * xf * f[i];
  }
  return LatticeIsometry(l, m);
}

inline Sublattice invariant_lattice(const LatticeIsometry& g) {
  const std::size_t n = g.lattice.rank();
  return primitive_closure(g.lattice, saturated_kernel(g.matrix - IntMatrix::identity(n)));
}

inline Sublattice orthogonal_complement(const Lattice& l, const IntMatrix& basis_rows) {
  if (basis_rows.rows() == 0) {
    std::vector<IntVec> all;
    for (std::size_t i = 0; i < l.rank(); ++i) {
      IntVec e(l.rank(), Int(0));
      e[i] = 1;
      all.push_back(e);
    }
    return primitive_closure(l, all);
  }
  return primitive_closure(l, saturated_kernel(basis_rows * l.gram));
}

inline Sublattice coinvariant_lattice(const LatticeIsometry& g) {
  return orthogonal_complement(g.lattice, invariant_lattice(g).basis);
}

}  // namespace zeroent
