#pragma once

// Programmatic copies of the bundled fixture algebras. test_cli checks that
// the JSON fixtures parse to exactly these, so the two encodings of each
// algebra act as double-entry bookkeeping for the structure constants.

#include <string>
#include <vector>

#include "lieamk/liealg.hpp"
#include "lieamk/smash.hpp"

namespace lieamk::testing {

inline QVec coeffs(std::size_t dim, const std::vector<std::pair<std::size_t, int>>& nz) {
  QVec v(dim, Rational(0));
  for (const auto& [i, c] : nz) v[i] = c;
  return v;
}

/// Basis f, h, e with [f,h] = 2f, [f,e] = -h, [h,e] = 2e.
inline LieAlgebra sl2() {
  LieAlgebra L("sl2", {"f", "h", "e"});
  L.set_bracket(0, 1, coeffs(3, {{0, 2}}));
  L.set_bracket(0, 2, coeffs(3, {{1, -1}}));
  L.set_bracket(1, 2, coeffs(3, {{2, 2}}));
  return L;
}

/// Central element first, then the sl2 block.
inline LieAlgebra gl2() {
  LieAlgebra L("gl2", {"id", "f", "h", "e"});
  L.set_bracket(1, 2, coeffs(4, {{1, 2}}));
  L.set_bracket(1, 3, coeffs(4, {{2, -1}}));
  L.set_bracket(2, 3, coeffs(4, {{3, 2}}));
  return L;
}

/// Heisenberg algebra, [x,y] = z.
inline LieAlgebra heis3() {
  LieAlgebra L("heis3", {"x", "y", "z"});
  L.set_bracket(0, 1, coeffs(3, {{2, 1}}));
  return L;
}

inline LieAlgebra abelian(std::size_t n, const std::string& name = "abelian") {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return LieAlgebra(name, std::move(names));
}

/// sl2 acting on Q^2 = span{u, v} through the standard representation:
/// e.v = u, f.u = v, h.u = u, h.v = -v.
inline LieAlgebra sl2_semidirect_c2() {
  LieAlgebra L("sl2-semidirect-C2", {"u", "v", "f", "h", "e"});
  L.set_bracket(0, 2, coeffs(5, {{1, -1}}));  // [u,f] = -v
  L.set_bracket(0, 3, coeffs(5, {{0, -1}}));  // [u,h] = -u
  L.set_bracket(1, 3, coeffs(5, {{1, 1}}));   // [v,h] = v
  L.set_bracket(1, 4, coeffs(5, {{0, -1}}));  // [v,e] = -u
  L.set_bracket(2, 3, coeffs(5, {{2, 2}}));
  L.set_bracket(2, 4, coeffs(5, {{3, -1}}));
  L.set_bracket(3, 4, coeffs(5, {{4, 2}}));
  return L;
}

/// Two-dimensional nonabelian algebra, [x,y] = y. Solvable, not nilpotent.
inline LieAlgebra twodim() {
  LieAlgebra L("affine2", {"x", "y"});
  L.set_bracket(0, 1, coeffs(2, {{1, 1}}));
  return L;
}

/// sl2 with [h,e] = 3e: the Jacobi sum over (f,h,e) is h, not zero.
inline LieAlgebra broken_jacobi() {
  LieAlgebra L("broken-jacobi", {"f", "h", "e"});
  L.set_bracket(0, 1, coeffs(3, {{0, 2}}));
  L.set_bracket(0, 2, coeffs(3, {{1, -1}}));
  L.set_bracket(1, 2, coeffs(3, {{2, 3}}));
  return L;
}

inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  std::vector<std::string> names;
  for (const auto& n : a.basis_names()) names.push_back(n + "1");
  for (const auto& n : b.basis_names()) names.push_back(n + "2");
  LieAlgebra L(a.name() + "+" + b.name(), std::move(names));
  const std::size_t da = a.dim(), n = da + b.dim();
  for (const auto& [ij, c] : a.brackets()) {
    QVec v(n, Rational(0));
    for (std::size_t k = 0; k < da; ++k) v[k] = c[k];
    L.set_bracket(ij.first, ij.second, std::move(v));
  }
  for (const auto& [ij, c] : b.brackets()) {
    QVec v(n, Rational(0));
    for (std::size_t k = 0; k < b.dim(); ++k) v[da + k] = c[k];
    L.set_bracket(da + ij.first, da + ij.second, std::move(v));
  }
  return L;
}

inline Subspace coordinate_subspace(const LieAlgebra& L, const std::vector<std::size_t>& idx) {
  std::vector<QVec> v;
  for (std::size_t i : idx) v.push_back(L.unit(i));
  return Subspace(L, std::move(v));
}

/// Z/2 = {e, g} with g acting on Q[x] by x -> -x.
inline FiniteGroup z2_group() {
  FiniteGroup g;
  g.name = "Z2";
  g.elements = {"e", "g"};
  g.table = {{0, 1}, {1, 0}};
  g.validate();
  return g;
}

inline std::vector<Dense> z2_sign_action() {
  return {{{Rational(1)}}, {{Rational(-1)}}};
}

/// S3 as permutations of {0,1,2} in one-line notation, composed as
/// (a.b)(i) = a(b(i)).
inline FiniteGroup s3_group() {
  const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  FiniteGroup g;
  g.name = "S3";
  for (const auto& p : perms)
    g.elements.push_back("p" + std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]));
  g.table.assign(6, std::vector<std::size_t>(6, 0));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::vector<std::size_t> ab(3);
      for (std::size_t i = 0; i < 3; ++i) ab[i] = perms[a][perms[b][i]];
      for (std::size_t t = 0; t < 6; ++t)
        if (perms[t] == ab) g.table[a][b] = t;
    }
  g.validate();
  return g;
}

/// Permutation matrices on the generators x0, x1, x2: g.x_j = x_{g(j)}.
inline std::vector<Dense> s3_perm_action() {
  const std::vector<std::vector<std::size_t>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Dense> out;
  for (const auto& p : perms) {
    Dense m(3, QVec(3, Rational(0)));
    for (std::size_t j = 0; j < 3; ++j) m[p[j]][j] = 1;
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace lieamk::testing
