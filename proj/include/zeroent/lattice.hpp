#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "exact_arith.hpp"

namespace zeroent {

struct Lattice {
  IntMatrix gram;

  Lattice() = default;
  explicit Lattice(IntMatrix g) : gram(std::move(g)) {
    if (!gram.is_symmetric()) throw std::invalid_argument("Lattice: Gram matrix is not symmetric");
  }

  std::size_t rank() const { return gram.rows(); }
  Int det() const { return determinant(gram); }
  bool is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (gram(i, i) % 2 != 0) return false;
    return true;
  }
  bool is_unimodular() const { return rank() == 0 || iabs(det()) == 1; }
  Int dot(const IntVec& x, const IntVec& y) const { return zeroent::dot(x, gram, y); }
  Rational dot(const RatVec& x, const RatVec& y) const { return zeroent::dot(x, to_rational(gram), y); }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram == b.gram; }
};

inline Lattice direct_sum(const Lattice& a, const Lattice& b) { return Lattice(direct_sum(a.gram, b.gram)); }

inline Lattice diagonal_lattice(const std::vector<long long>& d) {
  IntMatrix g(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) g(i, i) = d[i];
  return Lattice(g);
}

// scaled copy, e.g. A1(2) = (-4)
inline Lattice scaled(const Lattice& l, long long k) { return Lattice(Int(k) * l.gram); }

// negative-definite Cartan-type Gram of a tree/graph given by edges
inline IntMatrix dynkin_gram(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return g;
}

inline std::vector<std::pair<std::size_t, std::size_t>> chain_edges(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

// names: U, A<n>, D<n>, E6, E7, E8, E10
inline Lattice standard_lattice(const std::string& name) {
  auto bad = [&]() { return std::invalid_argument("standard_lattice: invalid name '" + name + "'"); };
  if (name == "U") return Lattice(IntMatrix{{0, 1}, {1, 0}});
  if (name == "E10") return direct_sum(standard_lattice("U"), standard_lattice("E8"));
  if (name.size() < 2) throw bad();
  std::size_t n = 0;
  try {
    std::size_t pos = 0;
    n = std::stoul(name.substr(1), &pos);
    if (pos != name.size() - 1) throw bad();
  } catch (const std::invalid_argument&) {
    throw bad();
  } catch (const std::out_of_range&) {
    throw bad();
  }
  switch (name[0]) {
    case 'A':
      if (n < 1) throw bad();
      return Lattice(dynkin_gram(n, chain_edges(n)));
    case 'D': {
      if (n < 4) throw bad();
      auto e = chain_edges(n - 1);
      e.emplace_back(n - 3, n - 1);
      return Lattice(dynkin_gram(n, e));
    }
    case 'E': {
      if (n < 6 || n > 8) throw bad();
      auto e = chain_edges(n - 1);
      e.emplace_back(2, n - 1);
      return Lattice(dynkin_gram(n, e));
    }
    default:
      throw bad();
  }
}

// ------------------------------------------------------------- signature

struct Signature {
  std::size_t positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

// congruence diagonalisation over Q
inline Signature signature(const IntMatrix& gram) {
  RatMatrix a = to_rational(gram);
  const std::size_t n = a.rows();
  Signature sig;
  auto sym_swap = [&](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, p) == 0) ++p;
    if (p == n) {
      // zero diagonal: fold a non-zero off-diagonal entry onto the diagonal
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
          if (a(i, j) != 0) {
            a.add_row(i, j, Rational(1));
            a.add_col(i, j, Rational(1));
            p = i;
            found = true;
          }
      if (!found) {
        sig.zero += n - k;
        return sig;
      }
    }
    sym_swap(k, p);
    const Rational piv = a(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(j, k) == 0) continue;
      Rational c = a(j, k) / piv;
      a.add_row(j, k, -c);
      a.add_col(j, k, -c);
    }
    if (piv > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

inline Signature signature(const Lattice& l) { return signature(l.gram); }

inline bool is_negative_definite(const Lattice& l) {
  auto s = signature(l);
  return s.positive == 0 && s.zero == 0;
}

// -------------------------------------------------- radical and quotient

// L = rad + C with C a complement; basis rows in ambient coordinates
struct RadicalSplit {
  IntMatrix change;       // unimodular; rows [0, k) span the radical, rows [k, n) span C
  std::size_t radical_rank = 0;
  Lattice quotient;       // Gram of C, i.e. of L / rad
  // coordinates of x (ambient) in the quotient basis
  RatVec project(const RatVec& x) const {
    RatMatrix inv = inverse(to_rational(change));  // x = y * change  =>  y = x * change^{-1}
    RatVec y(x.size(), Rational(0));
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t i = 0; i < x.size(); ++i) y[j] += x[i] * inv(i, j);
    return RatVec(y.begin() + radical_rank, y.end());
  }
};

// saturated row span of a set of integer vectors; returns a basis as rows
inline IntMatrix saturate_rows(const std::vector<IntVec>& vecs, std::size_t dim, IntMatrix* full_basis = nullptr) {
  IntMatrix a(vecs.size(), dim);
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = vecs[i][j];
  auto f = smith_normal_form(a);
  std::size_t r = f.rank();
  IntMatrix vinv = vecs.empty() ? IntMatrix::identity(dim) : inverse_unimodular(f.v);
  if (full_basis) *full_basis = vinv;
  IntMatrix out(r, dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < dim; ++j) out(i, j) = vinv(i, j);
  return out;
}

inline RadicalSplit radical_split(const Lattice& l) {
  const std::size_t n = l.rank();
  RadicalSplit rs;
  auto ker = kernel_basis(l.gram);
  rs.radical_rank = ker.size();
  if (ker.empty()) {
    rs.change = IntMatrix::identity(n);
  } else {
    saturate_rows(ker, n, &rs.change);
  }
  std::vector<std::size_t> rest, all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(i);
  for (std::size_t i = rs.radical_rank; i < n; ++i) rest.push_back(i);
  IntMatrix c = rs.change.submatrix(rest, all);
  rs.quotient = Lattice(c * l.gram * c.transpose());
  return rs;
}

// ------------------------------------------------------ discriminant group

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // d_i > 1, d_1 | d_2 | ...
  std::vector<RatVec> generators;      // in lattice coordinates, generator i has order d_i
  std::vector<Rational> qvalues;       // x.x mod 2Z in [0, 2)
  RatMatrix bilinear;                  // b(g_i, g_j) mod 1 in [0, 1)

  Int order() const {
    Int o = 1;
    for (auto& d : invariant_factors) o *= d;
    return o;
  }
  Int exponent() const { return invariant_factors.empty() ? Int(1) : invariant_factors.back(); }
};

inline Rational mod_q(const Rational& x, const Rational& m) {
  Rational r = x - m * Rational(floor_q(x / m));
  return r;
}

inline DiscriminantGroup discriminant_group(const Lattice& l) {
  if (l.rank() > 0 && l.det() == 0) throw std::domain_error("discriminant_group: degenerate lattice");
  auto f = smith_normal_form(l.gram);
  DiscriminantGroup dg;
  const std::size_t n = l.rank();
  // G = U^{-1} S V^{-1}, so L* = G^{-1} Z^n = V S^{-1} Z^n
  for (std::size_t i = 0; i < n; ++i) {
    const Int& d = f.s(i, i);
    if (d == 1) continue;
    dg.invariant_factors.push_back(d);
    RatVec g(n);
    for (std::size_t k = 0; k < n; ++k) g[k] = Rational(f.v(k, i), d);
    dg.generators.push_back(std::move(g));
  }
  const std::size_t r = dg.generators.size();
  dg.bilinear = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    dg.qvalues.push_back(mod_q(l.dot(dg.generators[i], dg.generators[i]), Rational(2)));
    for (std::size_t j = 0; j < r; ++j)
      dg.bilinear(i, j) = mod_q(l.dot(dg.generators[i], dg.generators[j]), Rational(1));
  }
  return dg;
}

inline bool is_p_elementary(const Lattice& l, unsigned p) {
  for (auto& d : discriminant_group(l).invariant_factors)
    if (p % d != 0) return false;
  return true;
}

// finite abelian group with mixed-radix element indexing, used for subgroup scans
struct FiniteForm {
  std::vector<unsigned> orders;
  std::vector<long long> q2N;   // q(g_i) * N mod 2N
  std::vector<long long> bN;    // b(g_i, g_j) * N mod N, row-major
  long long N = 1;              // exponent of the group
  std::size_t size = 1;

  static FiniteForm of(const DiscriminantGroup& dg) {
    FiniteForm ff;
    ff.N = dg.exponent().convert_to<long long>();
    for (auto& d : dg.invariant_factors) {
      ff.orders.push_back(d.convert_to<unsigned>());
      ff.size *= d.convert_to<std::size_t>();
    }
    const std::size_t r = ff.orders.size();
    for (std::size_t i = 0; i < r; ++i) {
      Rational q = dg.qvalues[i] * ff.N;
      if (den(q) != 1) throw std::logic_error("FiniteForm: q value not in (1/N)Z");
      ff.q2N.push_back(num(q).convert_to<long long>());
    }
    ff.bN.resize(r * r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rational b = dg.bilinear(i, j) * ff.N;
        if (den(b) != 1) throw std::logic_error("FiniteForm: b value not in (1/N)Z");
        ff.bN[i * r + j] = num(b).convert_to<long long>();
      }
    return ff;
  }

  std::vector<unsigned> digits(std::size_t idx) const {
    std::vector<unsigned> a(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      a[i] = idx % orders[i];
      idx /= orders[i];
    }
    return a;
  }
  std::size_t index(const std::vector<unsigned>& a) const {
    std::size_t idx = 0;
    for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + a[i];
    return idx;
  }
  std::size_t add(std::size_t x, std::size_t y) const {
    auto a = digits(x), b = digits(y);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % orders[i];
    return index(a);
  }
  // q(x) * N mod 2N
  long long q(std::size_t x) const {
    auto a = digits(x);
    const std::size_t r = a.size();
    long long m = 2 * N, s = 0;
    for (std::size_t i = 0; i < r; ++i) {
      s = (s + (long long)a[i] * a[i] % m * q2N[i]) % m;
      for (std::size_t j = i + 1; j < r; ++j) s = (s + 2 * ((long long)a[i] * a[j] % m) * bN[i * r + j]) % m;
    }
    return s;
  }
  // b(x, y) * N mod N
  long long b(std::size_t x, std::size_t y) const {
    auto a = digits(x), c = digits(y);
    const std::size_t r = a.size();
    long long s = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s = (s + (long long)a[i] * c[j] % N * bN[i * r + j]) % N;
    return s;
  }
  std::vector<std::size_t> closure(std::vector<std::size_t> gens) const {
    std::vector<char> in(size, 0);
    std::vector<std::size_t> elems{0};
    in[0] = 1;
    for (std::size_t k = 0; k < elems.size(); ++k)
      for (auto g : gens) {
        std::size_t y = add(elems[k], g);
        if (!in[y]) {
          in[y] = 1;
          elems.push_back(y);
        }
      }
    std::sort(elems.begin(), elems.end());
    return elems;
  }
};

inline constexpr std::size_t kMaxDiscriminantOrder = std::size_t(1) << 16;

// isotropic subgroups of the discriminant form (q = 0 mod 2Z on every element)
inline std::vector<std::vector<std::size_t>> isotropic_subgroups(const FiniteForm& ff) {
  std::vector<std::size_t> iso;
  for (std::size_t x = 1; x < ff.size; ++x)
    if (ff.q(x) == 0) iso.push_back(x);
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> out;
  std::queue<std::vector<std::size_t>> work;
  std::vector<std::size_t> zero{0};
  seen.insert(zero);
  work.push(zero);
  while (!work.empty()) {
    auto h = work.front();
    work.pop();
    out.push_back(h);
    std::vector<char> in(ff.size, 0);
    for (auto e : h) in[e] = 1;
    for (auto x : iso) {
      if (in[x]) continue;
      bool orth = true;
      for (auto e : h)
        if (ff.b(x, e) != 0) {
          orth = false;
          break;
        }
      if (!orth) continue;
      auto gens = h;
      gens.push_back(x);
      auto h2 = ff.closure(gens);
      if (seen.insert(h2).second) work.push(std::move(h2));
    }
  }
  return out;
}

struct Overlattice {
  Lattice lattice;
  RatMatrix basis;  // rows, in coordinates of the original lattice
  Int index = 1;
};

// Z-span of rational row vectors, as a basis
inline RatMatrix rational_row_basis(const std::vector<RatVec>& rows, std::size_t dim) {
  Int N = 1;
  for (auto& r : rows)
    for (auto& x : r) N = ilcm(N, den(x));
  IntMatrix a(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = num(rows[i][j] * N);
  auto f = smith_normal_form(a);
  IntMatrix vinv = inverse_unimodular(f.v);
  std::size_t r = f.rank();
  RatMatrix b(r, dim);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < dim; ++j) b(i, j) = Rational(f.s(i, i) * vinv(i, j), N);
  return b;
}

inline Overlattice overlattice_from_subgroup(const Lattice& l, const DiscriminantGroup& dg, const FiniteForm& ff,
                                             const std::vector<std::size_t>& h) {
  const std::size_t n = l.rank();
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVec e(n, Rational(0));
    e[i] = 1;
    rows.push_back(e);
  }
  for (auto x : h) {
    if (x == 0) continue;
    auto a = ff.digits(x);
    RatVec v(n, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) v[k] += Rational(a[i]) * dg.generators[i][k];
    rows.push_back(std::move(v));
  }
  Overlattice o;
  o.basis = rational_row_basis(rows, n);
  RatMatrix g = o.basis * to_rational(l.gram) * o.basis.transpose();
  IntMatrix gi(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (den(g(i, j)) != 1) throw std::logic_error("overlattice: Gram not integral");
      gi(i, j) = num(g(i, j));
    }
  o.lattice = Lattice(gi);
  o.index = Int(h.size());
  return o;
}

inline std::vector<Overlattice> even_overlattices(const Lattice& l) {
  if (!l.is_even()) throw std::invalid_argument("even_overlattices: lattice is not even");
  auto dg = discriminant_group(l);
  if (dg.order() > Int(kMaxDiscriminantOrder))
    throw std::length_error("even_overlattices: discriminant group larger than 2^16");
  auto ff = FiniteForm::of(dg);
  std::vector<Overlattice> out;
  for (auto& h : isotropic_subgroups(ff)) out.push_back(overlattice_from_subgroup(l, dg, ff, h));
  return out;
}

inline bool has_2elementary_overlattice(const Lattice& l) {
  for (auto& o : even_overlattices(l))
    if (is_p_elementary(o.lattice, 2)) return true;
  return false;
}

// ---------------------------------------------------------------- roots

// vectors with x.Q.x == target for the positive definite form Q (Fincke-Pohst, exact)
inline std::vector<IntVec> short_vectors_exact(const IntMatrix& q, const Int& target) {
  const std::size_t n = q.rows();
  // q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2
  RatMatrix a = to_rational(q);
  std::vector<Rational> d(n);
  RatMatrix mu(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i);
    if (d[i] <= 0) throw std::domain_error("short_vectors: form is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) mu(i, j) = a(i, j) / d[i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= mu(i, j) * d[i] * mu(i, k);
  }
  std::vector<IntVec> out;
  IntVec x(n, Int(0));
  const Rational T(target);
  // recursive descent from the last coordinate
  std::function<void(std::size_t, const Rational&)> rec = [&](std::size_t i1, const Rational& budget) {
    std::size_t i = i1 - 1;
    Rational c = 0;
    for (std::size_t j = i + 1; j < n; ++j) c -= mu(i, j) * Rational(x[j]);
    double s = std::sqrt(std::max(0.0, (budget / d[i]).convert_to<double>()));
    double cd = c.convert_to<double>();
    Int lo(static_cast<long long>(std::floor(cd - s)) - 1);
    Int hi(static_cast<long long>(std::ceil(cd + s)) + 1);
    for (Int v = lo; v <= hi; ++v) {
      Rational t = Rational(v) - c;
      Rational used = d[i] * t * t;
      if (used > budget) continue;
      x[i] = v;
      Rational rest = budget - used;
      if (i == 0) {
        if (rest == 0) out.push_back(x);
      } else {
        rec(i, rest);
      }
    }
    x[i] = 0;
  };
  if (n > 0) rec(n, T);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<IntVec> roots(const Lattice& l) {
  if (!is_negative_definite(l)) throw std::domain_error("roots: lattice is not negative definite");
  return short_vectors_exact(-l.gram, Int(2));
}

struct RootSystemType {
  std::vector<std::pair<char, unsigned>> components;  // sorted

  void normalize() {
    for (auto& c : components) {
      if (c.first == 'D' && c.second == 3) c.first = 'A';
    }
    std::vector<std::pair<char, unsigned>> out;
    for (auto& c : components) {
      if (c.first == 'D' && c.second == 2) {
        out.push_back({'A', 1});
        out.push_back({'A', 1});
      } else {
        out.push_back(c);
      }
    }
    components = std::move(out);
    std::sort(components.begin(), components.end());
  }
  unsigned rank() const {
    unsigned r = 0;
    for (auto& c : components) r += c.second;
    return r;
  }
  std::string str() const {
    if (components.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (i) s += "+";
      s += components[i].first + std::to_string(components[i].second);
    }
    return s;
  }
  friend bool operator==(const RootSystemType& a, const RootSystemType& b) { return a.components == b.components; }
  friend RootSystemType operator+(RootSystemType a, const RootSystemType& b) {
    a.components.insert(a.components.end(), b.components.begin(), b.components.end());
    a.normalize();
    return a;
  }
};

inline std::pair<char, unsigned> identify_irreducible(std::size_t rank, std::size_t count) {
  std::size_t n = rank;
  if (count == n * (n + 1)) return {'A', unsigned(n)};
  if (n >= 4 && count == 2 * n * (n - 1)) return {'D', unsigned(n)};
  if (n == 6 && count == 72) return {'E', 6};
  if (n == 7 && count == 126) return {'E', 7};
  if (n == 8 && count == 240) return {'E', 8};
  throw std::logic_error("identify_irreducible: not an ADE root system (rank " + std::to_string(rank) +
                         ", roots " + std::to_string(count) + ")");
}

inline RootSystemType ade_type_of_roots(const Lattice& l, const std::vector<IntVec>& rs) {
  const std::size_t m = rs.size();
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> st{s};
    comp[s] = nc;
    while (!st.empty()) {
      auto i = st.back();
      st.pop_back();
      for (std::size_t j = 0; j < m; ++j)
        if (comp[j] < 0 && l.dot(rs[i], rs[j]) != 0) {
          comp[j] = nc;
          st.push_back(j);
        }
    }
    ++nc;
  }
  RootSystemType t;
  for (int c = 0; c < nc; ++c) {
    std::vector<IntVec> vs;
    for (std::size_t i = 0; i < m; ++i)
      if (comp[i] == c) vs.push_back(rs[i]);
    IntMatrix a = IntMatrix::from_rows(vs);
    t.components.push_back(identify_irreducible(rank(a), vs.size()));
  }
  t.normalize();
  return t;
}

inline RootSystemType ade_type(const Lattice& l) { return ade_type_of_roots(l, roots(l)); }

// --------------------------------------------------------- primitive closure

struct Sublattice {
  Lattice lattice;
  IntMatrix basis;  // rows in ambient coordinates
};

inline Sublattice primitive_closure(const Lattice& ambient, const std::vector<IntVec>& span) {
  const std::size_t n = ambient.rank();
  for (auto& v : span)
    if (v.size() != n) throw std::invalid_argument("primitive_closure: vector of wrong length");
  Sublattice s;
  if (span.empty()) {
    s.basis = IntMatrix(0, n);
    s.lattice = Lattice(IntMatrix(0, 0));
    return s;
  }
  s.basis = saturate_rows(span, n);
  s.lattice = Lattice(s.basis * ambient.gram * s.basis.transpose());
  return s;
}

}  // namespace zeroent
