#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants.
// Antisymmetry is built into the storage (only i < j is kept); the Jacobi
// identity is checked by validate(). The radical is computed with Cartan's
// criterion and re-verified through the derived series, so a bad set of
// structure constants cannot silently produce a wrong decomposition.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieamk/exactlin.hpp"

namespace lieamk {

class LieAlgebra {
 public:
  LieAlgebra(std::string name, std::vector<std::string> basis_names)
      : name_(std::move(name)), basis_(std::move(basis_names)) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      for (std::size_t j = i + 1; j < basis_.size(); ++j)
        if (basis_[i] == basis_[j]) throw InputError("duplicate basis name '" + basis_[i] + "'");
  }

  const std::string& name() const { return name_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::string>& basis_names() const { return basis_; }

  /// Sets [e_i, e_j] = sum_k coeffs[k] e_k for i < j. Rejects duplicates.
  void set_bracket(std::size_t i, std::size_t j, QVec coeffs) {
    if (i >= j) throw InputError("bracket requires i < j, got (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    if (j >= dim()) throw InputError("bracket index " + std::to_string(j) + " out of range");
    if (coeffs.size() != dim()) throw InputError("bracket coefficient vector of wrong length");
    if (brackets_.count({i, j})) throw InputError("duplicate bracket record (" + std::to_string(i) +
                                                  "," + std::to_string(j) + ")");
    if (!is_zero_vec(coeffs)) brackets_[{i, j}] = std::move(coeffs);
  }

  const std::map<std::pair<std::size_t, std::size_t>, QVec>& brackets() const { return brackets_; }

  QVec unit(std::size_t i) const {
    QVec v(dim(), Rational(0));
    v[i] = 1;
    return v;
  }

  /// [e_i, e_j] for any pair; i > j goes through antisymmetry.
  QVec bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= dim() || j >= dim()) throw std::out_of_range("bracket_basis index out of range");
    if (i == j) return QVec(dim(), Rational(0));
    const bool flip = i > j;
    const auto it = brackets_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == brackets_.end()) return QVec(dim(), Rational(0));
    QVec v = it->second;
    if (flip)
      for (auto& x : v) x = -x;
    return v;
  }

  QVec bracket(const QVec& x, const QVec& y) const {
    QVec out(dim(), Rational(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0 || i == j) continue;
        const QVec b = bracket_basis(i, j);
        const Rational c = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) out[k] += c * b[k];
      }
    }
    return out;
  }

  /// Matrix of ad x, columns ad(x)(e_j).
  Dense ad(const QVec& x) const {
    Dense m(dim(), QVec(dim(), Rational(0)));
    for (std::size_t j = 0; j < dim(); ++j) {
      const QVec col = bracket(x, unit(j));
      for (std::size_t i = 0; i < dim(); ++i) m[i][j] = col[i];
    }
    return m;
  }

 private:
  std::string name_;
  std::vector<std::string> basis_;
  std::map<std::pair<std::size_t, std::size_t>, QVec> brackets_;
};

/// Subspace of a Lie algebra, spanned by linearly independent vectors.
class Subspace {
 public:
  Subspace(const LieAlgebra& ambient, std::vector<QVec> vectors)
      : ambient_(&ambient), vectors_(std::move(vectors)) {
    for (const auto& v : vectors_)
      if (v.size() != ambient.dim()) throw InputError("subspace vector of wrong length");
    if (!vectors_.empty() &&
        rank(QMatrix::from_dense(vectors_)) != vectors_.size())
      throw InputError("subspace spanning vectors are linearly dependent");
  }

  static Subspace zero(const LieAlgebra& ambient) { return Subspace(ambient, {}); }
  static Subspace whole(const LieAlgebra& ambient) {
    std::vector<QVec> v;
    for (std::size_t i = 0; i < ambient.dim(); ++i) v.push_back(ambient.unit(i));
    return Subspace(ambient, std::move(v));
  }

  const LieAlgebra& ambient() const { return *ambient_; }
  std::size_t dim() const { return vectors_.size(); }
  const std::vector<QVec>& vectors() const { return vectors_; }
  bool contains(const QVec& x) const { return in_span(vectors_, x); }

 private:
  const LieAlgebra* ambient_;
  std::vector<QVec> vectors_;
};

struct JacobiViolation {
  std::size_t i, j, k;
  QVec defect;  // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct ValidationReport {
  bool ok = true;
  std::vector<JacobiViolation> violations;
};

inline ValidationReport validate(const LieAlgebra& L) {
  ValidationReport rep;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        QVec d = L.bracket(L.bracket_basis(i, j), L.unit(k));
        const QVec d2 = L.bracket(L.bracket_basis(j, k), L.unit(i));
        const QVec d3 = L.bracket(L.bracket_basis(k, i), L.unit(j));
        for (std::size_t t = 0; t < n; ++t) d[t] += d2[t] + d3[t];
        if (!is_zero_vec(d)) {
          rep.ok = false;
          rep.violations.push_back({i, j, k, std::move(d)});
        }
      }
  return rep;
}

/// Killing form kappa(i, j) = trace(ad e_i . ad e_j); always symmetric.
inline QMatrix killing_form(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  std::vector<Dense> ads;
  ads.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ads.push_back(L.ad(L.unit(i)));

  QMatrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational tr(0);
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t) tr += ads[i][s][t] * ads[j][t][s];
      k.set(i, j, tr);
      if (i != j) k.set(j, i, tr);
    }
  return k;
}

namespace detail {

/// Basis of span{[x, y] : x, y in the given spanning sets}.
inline std::vector<QVec> bracket_span(const LieAlgebra& L, const std::vector<QVec>& xs,
                                      const std::vector<QVec>& ys) {
  std::vector<QVec> products;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      QVec b = L.bracket(x, y);
      if (!is_zero_vec(b)) products.push_back(std::move(b));
    }
  return span_basis(products);
}

}  // namespace detail

/// Derived series termination test for the span of `vectors`.
inline bool is_solvable_span(const LieAlgebra& L, std::vector<QVec> vectors) {
  vectors = span_basis(vectors);
  while (!vectors.empty()) {
    std::vector<QVec> next = detail::bracket_span(L, vectors, vectors);
    if (next.size() >= vectors.size()) return false;  // series stalled above zero
    vectors = std::move(next);
  }
  return true;
}

inline bool is_ideal(const LieAlgebra& L, const std::vector<QVec>& vectors) {
  const std::vector<QVec> basis = span_basis(vectors);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (const auto& v : basis)
      if (!in_span(basis, L.bracket(L.unit(i), v))) return false;
  return true;
}

/// Radical via Cartan's criterion: r = { x : kappa(x, [g, g]) = 0 }.
/// The result is re-checked to be a solvable ideal.
inline Subspace radical(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const QMatrix kappa = killing_form(L);

  std::vector<QVec> all;
  for (std::size_t i = 0; i < n; ++i) all.push_back(L.unit(i));
  const std::vector<QVec> derived = detail::bracket_span(L, all, all);

  std::vector<QVec> vectors;
  if (derived.empty()) {
    vectors = all;  // abelian: the radical is everything
  } else {
    QMatrix constraints(derived.size(), n);
    for (std::size_t t = 0; t < derived.size(); ++t)
      for (std::size_t i = 0; i < n; ++i) {
        Rational s(0);
        for (std::size_t j = 0; j < n; ++j) s += kappa.get(i, j) * derived[t][j];
        constraints.set(t, i, s);
      }
    vectors = kernel_basis(constraints);
  }

  if (!is_ideal(L, vectors))
    throw InternalCheckError("radical re-check failed: Cartan kernel is not an ideal");
  if (!is_solvable_span(L, vectors))
    throw InternalCheckError("radical re-check failed: Cartan kernel is not solvable");
  return Subspace(L, span_basis(vectors));
}

enum class AlgebraClass { solvable, semisimple, mixed };

inline const char* to_string(AlgebraClass c) {
  switch (c) {
    case AlgebraClass::solvable: return "solvable";
    case AlgebraClass::semisimple: return "semisimple";
    default: return "mixed";
  }
}

struct Classification {
  AlgebraClass cls;
  std::size_t dim_radical;
  Subspace radical;
};

inline Classification classify(const LieAlgebra& L) {
  std::vector<QVec> all;
  for (std::size_t i = 0; i < L.dim(); ++i) all.push_back(L.unit(i));
  const bool solvable = is_solvable_span(L, all);
  const bool semisimple = rank(killing_form(L)) == L.dim() && L.dim() > 0;

  Subspace r = radical(L);
  AlgebraClass cls = AlgebraClass::mixed;
  if (solvable)
    cls = AlgebraClass::solvable;
  else if (semisimple)
    cls = AlgebraClass::semisimple;
  return {cls, r.dim(), std::move(r)};
}

/// Rewrites the structure constants in the basis given by `vectors`
/// (columns of an invertible coordinate change).
inline LieAlgebra change_basis(const LieAlgebra& L, const std::vector<QVec>& vectors,
                               std::vector<std::string> names) {
  const std::size_t n = L.dim();
  if (vectors.size() != n) throw PreconditionError("change_basis needs a full basis");
  const QMatrix p = QMatrix::from_columns(n, vectors);
  if (rank(p) != n) throw PreconditionError("change_basis: vectors are not a basis");

  LieAlgebra out(L.name(), std::move(names));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const QVec w = L.bracket(vectors[i], vectors[j]);
      const auto c = solve(p, w);
      if (!c) throw InternalCheckError("change_basis: bracket left the span");
      if (!is_zero_vec(*c)) out.set_bracket(i, j, *c);
    }
  return out;
}

struct LeviReport {
  bool ok = false;
  std::string failure;  // names the failed condition when !ok
  std::size_t dim_radical = 0;
  std::size_t dim_levi = 0;
  std::vector<QVec> adapted_vectors;  // radical vectors first, then Levi vectors
  std::vector<std::string> adapted_names;
  std::optional<LieAlgebra> adapted;  // structure constants in the adapted basis
};

/// Checks that h is a Levi complement: a subalgebra, with nondegenerate
/// restricted Killing form, complementing the radical. On success emits the
/// adapted basis (radical first) together with the rewritten algebra.
inline LeviReport verify_levi(const LieAlgebra& L, const Subspace& h) {
  LeviReport rep;
  const std::size_t n = L.dim();
  const auto& hv = h.vectors();

  for (std::size_t i = 0; i < hv.size(); ++i)
    for (std::size_t j = i + 1; j < hv.size(); ++j)
      if (!h.contains(L.bracket(hv[i], hv[j]))) {
        rep.failure = "not a subalgebra: [h_" + std::to_string(i) + ", h_" + std::to_string(j) +
                      "] leaves the span";
        return rep;
      }

  const QMatrix kappa = killing_form(L);
  QMatrix kh(hv.size(), hv.size());
  for (std::size_t i = 0; i < hv.size(); ++i)
    for (std::size_t j = 0; j < hv.size(); ++j) {
      Rational s(0);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) s += hv[i][a] * kappa.get(a, b) * hv[j][b];
      kh.set(i, j, s);
    }
  if (rank(kh) != hv.size()) {
    rep.failure = "Killing form degenerate on h";
    return rep;
  }

  const Subspace r = radical(L);
  std::vector<QVec> combined = r.vectors();
  combined.insert(combined.end(), hv.begin(), hv.end());
  if (r.dim() + hv.size() != n ||
      (n > 0 && rank(QMatrix::from_dense(combined)) != n)) {
    rep.failure = "radical and h do not form a vector space complement";
    return rep;
  }

  rep.ok = true;
  rep.dim_radical = r.dim();
  rep.dim_levi = hv.size();
  rep.adapted_vectors = std::move(combined);

  // Preserve original names where the adapted vector is a plain basis vector.
  std::vector<std::string> names;
  for (std::size_t t = 0; t < rep.adapted_vectors.size(); ++t) {
    const QVec& v = rep.adapted_vectors[t];
    std::string nm;
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      if (!nm.empty() || v[i] != 1) {
        nm.clear();
        break;
      }
      nm = L.basis_names()[i];
    }
    if (nm.empty())
      nm = (t < rep.dim_radical ? "r" + std::to_string(t) : "s" + std::to_string(t - rep.dim_radical));
    names.push_back(std::move(nm));
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      if (i != j && names[i] == names[j]) {  // fall back to positional names
        for (std::size_t t = 0; t < names.size(); ++t)
          names[t] = (t < rep.dim_radical ? "r" + std::to_string(t)
                                          : "s" + std::to_string(t - rep.dim_radical));
        i = names.size();
        break;
      }
  rep.adapted_names = names;
  rep.adapted.emplace(change_basis(L, rep.adapted_vectors, std::move(names)));
  return rep;
}

}  // namespace lieamk
