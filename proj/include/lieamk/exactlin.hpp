#pragma once

// Exact rational linear algebra. Rank is computed by fraction-free (Bareiss)
// elimination over the integers after clearing row denominators; kernels and
// solves use rational Gauss-Jordan. No floating point anywhere: a homology
// rank that is off by one flips a Betti number.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lieamk/errors.hpp"

namespace lieamk {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form by the backend:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

using QVec = std::vector<Rational>;
using Dense = std::vector<QVec>;

inline BigInt parse_integer(const std::string& s, bool allow_sign) {
  std::size_t pos = 0;
  if (allow_sign && !s.empty() && s[0] == '-') pos = 1;
  if (pos == s.size()) throw InputError("malformed integer '" + s + "'");
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("malformed integer '" + s + "'");
  }
  return BigInt(s);
}

/// Parses "p" or "p/q" with integer p and positive integer q.
/// Anything else (including "1/0" and "1/-2") is rejected.
inline Rational parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s, true));
  const BigInt num = parse_integer(s.substr(0, slash), true);
  const BigInt den = parse_integer(s.substr(slash + 1), false);
  if (den == 0) throw InputError("zero denominator in rational '" + s + "'");
  return Rational(num, den);
}

/// Renders as "p" or "p/q"; inverse of parse_rational on canonical forms.
inline std::string to_string(const Rational& r) { return r.str(); }

/// Sparse matrix over Q. Only nonzero entries are stored; the map invariant
/// is maintained by set().
class QMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;

  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
  }

  static QMatrix from_dense(const Dense& d) {
    QMatrix m(d.size(), d.empty() ? 0 : d[0].size());
    for (std::size_t r = 0; r < d.size(); ++r) {
      if (d[r].size() != m.cols_) throw InputError("ragged dense matrix");
      for (std::size_t c = 0; c < d[r].size(); ++c) m.set(r, c, d[r][c]);
    }
    return m;
  }

  /// Columns given as coordinate vectors of length `rows`.
  static QMatrix from_columns(std::size_t rows, const std::vector<QVec>& cols) {
    QMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw InputError("column of wrong length");
      for (std::size_t r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void set(std::size_t r, std::size_t c, const Rational& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("QMatrix::set index out of range");
    if (v == 0)
      entries_.erase({r, c});
    else
      entries_[{r, c}] = v;
  }

  Rational get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("QMatrix::get index out of range");
    const auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
  }

  const std::map<Key, Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  Dense to_dense() const {
    Dense d(rows_, QVec(cols_, Rational(0)));
    for (const auto& [k, v] : entries_) d[k.first][k.second] = v;
    return d;
  }

  QVec apply(const QVec& x) const {
    if (x.size() != cols_) throw std::out_of_range("QMatrix::apply size mismatch");
    QVec y(rows_, Rational(0));
    for (const auto& [k, v] : entries_) y[k.first] += v * x[k.second];
    return y;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::out_of_range("QMatrix product size mismatch");
    QMatrix p(a.rows_, b.cols_);
    std::map<Key, Rational> acc;
    for (const auto& [ka, va] : a.entries_)
      for (const auto& [kb, vb] : b.entries_)
        if (ka.second == kb.first) acc[{ka.first, kb.second}] += va * vb;
    for (const auto& [k, v] : acc)
      if (v != 0) p.entries_[k] = v;
    return p;
  }

  bool operator==(const QMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<Key, Rational> entries_;
};

namespace detail {

/// Row-reduced echelon form with unit pivots. Returns the reduced matrix
/// and the pivot column of each pivot row.
inline std::pair<Dense, std::vector<std::size_t>> rref(Dense a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

}  // namespace detail

/// Rank over Q by fraction-free elimination. Rows are first scaled to
/// integers; every Bareiss division is exact by construction and is verified.
inline std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols, 0));
  {
    const Dense d = m.to_dense();
    for (std::size_t r = 0; r < rows; ++r) {
      BigInt l = 1;
      for (std::size_t c = 0; c < cols; ++c) {
        const BigInt den = denominator(d[r][c]);
        l = boost::multiprecision::lcm(l, den);
      }
      for (std::size_t c = 0; c < cols; ++c)
        a[r][c] = numerator(d[r][c]) * (l / denominator(d[r][c]));
    }
  }

  BigInt prev = 1;
  std::size_t rk = 0;
  for (std::size_t c = 0; c < cols && rk < rows; ++c) {
    std::size_t p = rk;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt q, rem;
        boost::multiprecision::divide_qr(a[i][j] * a[rk][c] - a[i][c] * a[rk][j], prev, q, rem);
        if (rem != 0) throw InternalCheckError("fraction-free elimination: inexact division");
        a[i][j] = q;
      }
      a[i][c] = 0;
    }
    prev = a[rk][c];
    ++rk;
  }
  return rk;
}

/// Basis of the right null space; the list has exactly cols - rank entries
/// and every returned v satisfies m.apply(v) == 0.
inline std::vector<QVec> kernel_basis(const QMatrix& m) {
  const std::size_t cols = m.cols();
  const auto [a, pivots] = detail::rref(m.to_dense());

  std::vector<bool> is_pivot(cols, false);
  for (const std::size_t c : pivots) is_pivot[c] = true;

  std::vector<QVec> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t t = 0; t < pivots.size(); ++t) v[pivots[t]] = -a[t][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some x with m.x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero.
inline std::optional<QVec> solve(const QMatrix& m, const QVec& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: right-hand side length mismatch");
  const std::size_t cols = m.cols();
  Dense aug = m.to_dense();
  if (aug.empty()) aug.assign(m.rows(), QVec());
  for (std::size_t r = 0; r < m.rows(); ++r) aug[r].push_back(b[r]);
  if (m.rows() == 0) return QVec(cols, Rational(0));

  const auto [a, pivots] = detail::rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;

  QVec x(cols, Rational(0));
  for (std::size_t t = 0; t < pivots.size(); ++t) x[pivots[t]] = a[t][cols];
  return x;
}

/// Reduces a spanning set to a basis of its span (rows of the rref).
inline std::vector<QVec> span_basis(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return {};
  const auto [a, pivots] = detail::rref(vectors);
  std::vector<QVec> out;
  for (std::size_t t = 0; t < pivots.size(); ++t) out.push_back(a[t]);
  return out;
}

inline bool is_zero_vec(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Membership of x in the span of `basis` (vectors of equal length).
inline bool in_span(const std::vector<QVec>& basis, const QVec& x) {
  if (is_zero_vec(x)) return true;
  std::vector<QVec> rows = basis;
  const std::size_t before = rank(QMatrix::from_dense(rows));
  rows.push_back(x);
  return rank(QMatrix::from_dense(rows)) == before;
}

}  // namespace lieamk
