#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeroent {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int iabs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int igcd(Int a, Int b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Int r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Int ilcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return iabs(a / igcd(a, b) * b);
}

// floor division for cpp_int (which truncates toward zero)
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

inline Int floor_q(const Rational& q) { return floor_div(num(q), den(q)); }

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Int(s));
  Int d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational(Int(s.substr(0, slash)), d);
}

// ---------------------------------------------------------------- matrices

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      for (auto& x : row) a_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  // columns given as vectors
  static Matrix from_cols(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const T& x) { return x == 0; });
  }
  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row i += c * row k
  void add_row(std::size_t i, std::size_t k, const T& c) {
    if (c == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
  }
  void add_col(std::size_t j, std::size_t k, const T& c) {
    if (c == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
  }

  Matrix submatrix(const std::vector<std::size_t>& r, const std::vector<std::size_t>& c) const {
    Matrix m(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) m(i, j) = (*this)(r[i], c[j]);
    return m;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    check_same(x, y);
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v = -v;
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& c, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a_) v *= c;
    return r;
  }
  friend std::vector<T> operator*(const Matrix& x, const std::vector<T>& v) {
    if (x.cols_ != v.size()) throw std::invalid_argument("matrix-vector: dimension mismatch");
    std::vector<T> r(x.rows_, T(0));
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) r[i] += x(i, j) * v[j];
    return r;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
      throw std::invalid_argument("matrix sum: dimension mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rational>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

inline RatVec to_rational(const IntVec& v) {
  RatVec r;
  r.reserve(v.size());
  for (auto& x : v) r.emplace_back(x);
  return r;
}

template <typename T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

template <typename T>
Matrix<T> mat_pow(Matrix<T> m, unsigned long long e) {
  if (!m.square()) throw std::invalid_argument("mat_pow: non-square");
  Matrix<T> r = Matrix<T>::identity(m.rows());
  while (e) {
    if (e & 1) r = r * m;
    e >>= 1;
    if (e) m = m * m;
  }
  return r;
}

template <typename T>
T dot(const std::vector<T>& x, const Matrix<T>& g, const std::vector<T>& y) {
  T s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    T t(0);
    for (std::size_t j = 0; j < y.size(); ++j) t += g(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

// Bareiss fraction-free determinant
inline Int determinant(IntMatrix m) {
  if (!m.square()) throw std::invalid_argument("determinant: non-square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// reduced row echelon form over Q; returns pivot columns
inline std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(r, p);
    Rational inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) m.add_row(i, r, -m(i, c));
    piv.push_back(c);
    ++r;
  }
  return piv;
}

inline std::size_t rank(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  return rref(r).size();
}

inline std::size_t rank(const RatMatrix& m) {
  RatMatrix r = m;
  return rref(r).size();
}

// basis of the right kernel over Q, scaled to primitive integer vectors
inline std::vector<IntVec> kernel_basis(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<IntVec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    Int l = 1;
    for (auto& x : v) l = ilcm(l, den(x));
    IntVec w(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      w[i] = num(v[i] * l);
      g = igcd(g, w[i]);
    }
    if (g > 1)
      for (auto& x : w) x /= g;
    out.push_back(std::move(w));
  }
  return out;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse: non-square");
  std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  RatMatrix inv = inverse(to_rational(m));
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (den(inv(i, j)) != 1) throw std::domain_error("inverse_unimodular: not unimodular");
      out(i, j) = num(inv(i, j));
    }
  return out;
}

// ------------------------------------------------------------- Smith form

struct SmithForm {
  IntMatrix s, u, v;  // u * m * v == s
  std::vector<Int> diagonal() const {
    std::vector<Int> d;
    for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
    return d;
  }
  std::size_t rank() const {
    std::size_t r = 0;
    for (auto& d : diagonal())
      if (d != 0) ++r;
    return r;
  }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  SmithForm f{m, IntMatrix::identity(R), IntMatrix::identity(C)};
  IntMatrix &s = f.s, &u = f.u, &v = f.v;

  auto row_op = [&](std::size_t i, std::size_t k, const Int& c) {  // row i += c row k
    s.add_row(i, k, c);
    u.add_row(i, k, c);
  };
  auto col_op = [&](std::size_t j, std::size_t k, const Int& c) {  // col j += c col k
    s.add_col(j, k, c);
    v.add_col(j, k, c);
  };

  std::size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    for (;;) {
      // smallest non-zero |entry| in the remaining block
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j)
          if (s(i, j) != 0 && (!found || iabs(s(i, j)) < best)) {
            found = true;
            best = iabs(s(i, j));
            pi = i;
            pj = j;
          }
      if (!found) goto done;
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (s(i, t) == 0) continue;
        row_op(i, t, -floor_div(s(i, t), s(t, t)));
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (s(t, j) == 0) continue;
        col_op(j, t, -floor_div(s(t, j), s(t, t)));
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: pivot must divide the rest of the block
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (s(i, j) % s(t, t) != 0) {
            row_op(t, i, Int(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
  }
done:
  return f;
}

// ------------------------------------------------------------- polynomials

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long long> c) {
    for (auto x : c) c_.emplace_back(x);
    trim();
  }
  explicit IntPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }

  static IntPoly monomial(std::size_t d, Int c = 1) {
    std::vector<Int> v(d + 1, Int(0));
    v[d] = std::move(c);
    return IntPoly(std::move(v));
  }
  static IntPoly x_minus(const Int& a) { return IntPoly(std::vector<Int>{-a, Int(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
  Int lead() const { return c_.empty() ? Int(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Int content() const {
    Int g = 0;
    for (auto& x : c_) g = igcd(g, x);
    return g;
  }
  IntPoly primitive() const {
    if (is_zero()) return *this;
    Int g = content();
    if (lead() < 0) g = -g;
    std::vector<Int> v = c_;
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
  }

  IntPoly derivative() const {
    std::vector<Int> v;
    for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Int(i));
    return IntPoly(std::move(v));
  }

  bool is_palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
  }

  Int eval(const Int& x) const {
    Int r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }
  Rational eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rational(*it);
    return r;
  }
  int sign_at(const Rational& x) const {
    Rational v = eval(x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
  double eval_double(double x) const {
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + it->convert_to<double>();
    return r;
  }

  template <typename T>
  Matrix<T> eval_matrix(const Matrix<T>& m) const {
    Matrix<T> r(m.rows(), m.cols());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * m + T(*it) * Matrix<T>::identity(m.rows());
    return r;
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> v(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Int> v = a.c_;
    for (auto& x : v) x = -x;
    return IntPoly(std::move(v));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<Int> v(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(v));
  }
  friend IntPoly operator*(const Int& k, const IntPoly& a) { return IntPoly(std::vector<Int>{k}) * a; }

  // division by a monic (or lead ±1) divisor; quotient, remainder over Z
  friend std::pair<IntPoly, IntPoly> divmod(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly division by zero");
    if (iabs(b.lead()) != 1) throw std::domain_error("IntPoly divmod needs a unit leading coefficient");
    std::vector<Int> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {IntPoly(), a};
    std::vector<Int> q(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
      Int c = r[i] * b.lead();  // lead is ±1 so this divides exactly
      q[i - db] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.c_[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
  }

  // exact quotient in Z[x]; nullopt when b does not divide a
  friend std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("IntPoly division by zero");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> r = a.c_;
    int db = b.degree();
    std::vector<Int> q(a.degree() - db + 1, Int(0));
    for (int i = a.degree(); i >= db; --i) {
      if (r[i] == 0) continue;
      if (r[i] % b.lead() != 0) return std::nullopt;
      Int c = r[i] / b.lead();
      q[i - db] = c;
      for (int j = 0; j <= db; ++j) r[i - db + j] -= c * b.c_[j];
    }
    for (auto& x : r)
      if (x != 0) return std::nullopt;
    return IntPoly(std::move(q));
  }

  // pseudo-remainder: lead(b)^k a = q b + r with k = deg a - deg b + 1
  friend IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("pseudo_rem by zero");
    if (a.degree() < b.degree()) return a;
    int k = a.degree() - b.degree() + 1;
    IntPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int shift = r.degree() - b.degree();
      r = b.lead() * r - IntPoly::monomial(shift, r.lead()) * b;
      --k;
    }
    for (; k > 0; --k) r = b.lead() * r;
    return r;
  }

  friend IntPoly gcd(IntPoly a, IntPoly b) {
    a = a.primitive();
    b = b.primitive();
    while (!b.is_zero()) {
      IntPoly r = pseudo_rem(a, b).primitive();
      a = std::move(b);
      b = std::move(r);
    }
    return a.primitive();
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      const Int& c = c_[i];
      if (c == 0) continue;
      Int a = iabs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (a != 1 || i == 0) os << a;
      if (i >= 1) os << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Int> c_;  // lowest degree first
};

// Berkowitz algorithm: division-free characteristic polynomial det(xI - m)
inline IntPoly char_poly(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};
  // vect holds coefficients highest degree first
  std::vector<Int> vect{Int(1), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // column above and row left of the new diagonal entry
    std::vector<Int> R(r), S(r);
    for (std::size_t i = 0; i < r; ++i) {
      R[i] = m(r, i);
      S[i] = m(i, r);
    }
    // C = [1, -a, -R S, -R A S, ..., -R A^{r-1} S] as Toeplitz column
    std::vector<Int> col(r + 2);
    col[0] = 1;
    col[1] = -m(r, r);
    std::vector<Int> cur = S;
    for (std::size_t k = 0; k < r; ++k) {
      Int t = 0;
      for (std::size_t i = 0; i < r; ++i) t += R[i] * cur[i];
      col[k + 2] = -t;
      std::vector<Int> nxt(r, Int(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) nxt[i] += m(i, j) * cur[j];
      cur = std::move(nxt);
    }
    std::vector<Int> out(r + 2, Int(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) out[i] += col[i - j] * vect[j];
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPoly(std::move(vect));
}

inline std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned k = 1; k <= n; ++k)
    if (n % k == 0) d.push_back(k);
  return d;
}

inline unsigned euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

inline IntPoly cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic: n must be positive");
  static std::mutex mu;
  static std::map<unsigned, IntPoly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(n) - IntPoly{1};
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    auto [q, r] = divmod(p, cyclotomic(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic: inexact division");
    p = q;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(n, p);
  return p;
}

// square-free decomposition p = c * prod f_i^i with primitive f_i
inline std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (p.is_zero() || p.degree() == 0) return out;
  IntPoly f = p.primitive();
  IntPoly g = gcd(f, f.derivative());
  IntPoly w = *exact_div(f, g);
  for (unsigned i = 1; w.degree() > 0; ++i) {
    IntPoly y = gcd(w, g);
    IntPoly z = *exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z.primitive(), i);
    w = y;
    g = *exact_div(g, y);
  }
  return out;
}

// ----------------------------------------------------- real root isolation

struct RootInterval {
  Rational lo, hi;  // lo == hi for an exact rational root, else root in (lo, hi)
  unsigned multiplicity = 1;
  IntPoly factor;   // square-free factor this root belongs to
  double approx() const {
    return ((lo + hi) / 2).convert_to<double>();
  }
  Rational width() const { return hi - lo; }
};

inline std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    // sign-correct pseudo remainder: lead(b)^k a = q b + r, need -rem(a,b) up to a positive factor
    int k = a.degree() - b.degree() + 1;
    IntPoly r = pseudo_rem(a, b);
    bool neg = (b.lead() < 0) && (k % 2 == 1);
    IntPoly next = neg ? r : -r;
    if (next.is_zero()) break;
    Int g = next.content();
    std::vector<Int> v = next.coeffs();
    for (auto& x : v) x /= g;
    seq.push_back(IntPoly(std::move(v)));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

inline int sign_variations(const std::vector<IntPoly>& seq, const Rational& x) {
  int v = 0, last = 0;
  for (auto& f : seq) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

// number of distinct real roots in (a, b] for a square-free p
inline int sturm_count(const std::vector<IntPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

// Cauchy bound: all roots satisfy |x| < 1 + max |a_i / a_n|
inline Rational cauchy_bound(const IntPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational q(iabs(p.coeff(i)), iabs(p.lead()));
    if (q > m) m = q;
  }
  return 1 + m;
}

inline void refine_root(RootInterval& r, const Rational& width) {
  if (r.lo == r.hi) return;
  // lo may itself be a root of the factor (e.g. x = 1), hi never is
  int shi = r.factor.sign_at(r.hi);
  while (r.hi - r.lo > width) {
    Rational mid = (r.lo + r.hi) / 2;
    int sm = r.factor.sign_at(mid);
    if (sm == 0) {
      r.lo = r.hi = mid;
      return;
    }
    if (sm == shi)
      r.hi = mid;
    else
      r.lo = mid;
  }
}

inline const Rational& default_width() {
  static const Rational w(Int(1), Int(1) << 32);
  return w;
}

// roots strictly greater than 1, each in a disjoint isolating interval
inline std::vector<RootInterval> isolate_real_roots_above_one(const IntPoly& p,
                                                              const Rational& width = default_width()) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots_above_one: zero polynomial");
  std::vector<RootInterval> out;
  for (auto& [f, mult] : squarefree_decomposition(p)) {
    if (f.degree() < 1) continue;
    auto seq = sturm_sequence(f);
    Rational lo = 1, hi = cauchy_bound(f);
    // work list of (a, b] with a known root count
    std::vector<std::pair<Rational, Rational>> todo{{lo, hi}};
    while (!todo.empty()) {
      auto [a, b] = todo.back();
      todo.pop_back();
      int n = sturm_count(seq, a, b);
      if (n == 0) continue;
      if (n == 1) {
        RootInterval r{a, b, mult, f};
        if (f.sign_at(b) == 0) r.lo = r.hi = b;
        out.push_back(r);
        continue;
      }
      Rational mid = (a + b) / 2;
      todo.emplace_back(a, mid);
      todo.emplace_back(mid, b);
    }
  }
  for (auto& r : out) refine_root(r, width);
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace zeroent
