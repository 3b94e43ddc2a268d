#pragma once

// Universal enveloping algebras in PBW normal form. Elements are sparse maps
// from exponent vectors to rationals; the monomial (a_1, ..., a_n) denotes
// e_1^{a_1} ... e_n^{a_n} in the fixed input basis order. Products are
// straightened with the rewrite e_j e_i -> e_i e_j + [e_j, e_i] for j > i,
// which terminates because every step lowers (degree, inversion count)
// lexicographically.

#include <cstdint>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lieamk/liealg.hpp"

namespace lieamk {

using Expvec = std::vector<std::uint32_t>;
using UeaElement = std::map<Expvec, Rational>;
using TensorElement = std::map<std::pair<Expvec, Expvec>, Rational>;

inline std::size_t total_degree(const Expvec& m) {
  std::size_t d = 0;
  for (const auto a : m) d += a;
  return d;
}

inline std::size_t max_degree(const UeaElement& x) {
  std::size_t d = 0;
  for (const auto& [m, c] : x) d = std::max(d, total_degree(m));
  return d;
}

inline void add_term(UeaElement& e, const Expvec& m, const Rational& c) {
  if (c == 0) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline void add_scaled(UeaElement& dst, const UeaElement& src, const Rational& c) {
  for (const auto& [m, v] : src) add_term(dst, m, c * v);
}

inline void add_term(TensorElement& e, const Expvec& l, const Expvec& r, const Rational& c) {
  if (c == 0) return;
  auto it = e.find({l, r});
  if (it == e.end()) {
    e.emplace(std::make_pair(l, r), c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

inline UeaElement truncate(const UeaElement& x, std::size_t n) {
  UeaElement out;
  for (const auto& [m, c] : x)
    if (total_degree(m) <= n) out.emplace(m, c);
  return out;
}

/// All exponent vectors over `gens` generators with total degree <= bound,
/// in graded lexicographic order.
inline std::vector<Expvec> enumerate_monomials(std::size_t gens, std::size_t bound) {
  std::vector<Expvec> out;
  if (gens == 0) {
    out.push_back(Expvec{});
    return out;
  }
  Expvec m(gens, 0);
  auto fill = [&](auto&& self, std::size_t pos, std::size_t remaining) -> void {
    if (pos + 1 == gens) {
      m[pos] = static_cast<std::uint32_t>(remaining);
      out.push_back(m);
      m[pos] = 0;
      return;
    }
    for (std::size_t a = 0; a <= remaining; ++a) {
      m[pos] = static_cast<std::uint32_t>(a);
      self(self, pos + 1, remaining - a);
    }
    m[pos] = 0;
  };
  for (std::size_t d = 0; d <= bound; ++d) fill(fill, 0, d);
  return out;
}

inline std::string format_monomial(const Expvec& m, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_element(const UeaElement& x, const std::vector<std::string>& names) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : x) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + format_monomial(m, names);
  }
  return s;
}

/// PBW arithmetic for one Lie algebra. Owns a copy of the structure constants
/// and a straightening memo keyed by (monomial, generator); the memo only
/// ever maps a key to one value, so sharing an instance across readers after
/// warm-up is harmless, but instances are not synchronized.
class PbwAlgebra {
 public:
  explicit PbwAlgebra(LieAlgebra L) : L_(std::move(L)) {}

  const LieAlgebra& algebra() const { return L_; }
  std::size_t num_generators() const { return L_.dim(); }

  Expvec unit_monomial() const { return Expvec(L_.dim(), 0); }
  UeaElement one() const { return {{unit_monomial(), Rational(1)}}; }

  UeaElement generator(std::size_t i) const {
    Expvec m = unit_monomial();
    m.at(i) = 1;
    return {{m, Rational(1)}};
  }

  UeaElement monomial(const Expvec& m) const { return {{m, Rational(1)}}; }

  /// Normal form of x * y.
  UeaElement multiply(const UeaElement& x, const UeaElement& y) const {
    UeaElement out;
    for (const auto& [my, cy] : y) {
      UeaElement cur = x;
      for (std::size_t i = 0; i < my.size(); ++i)
        for (std::uint32_t t = 0; t < my[i]; ++t) cur = mul_elem_gen(cur, static_cast<std::uint32_t>(i));
      add_scaled(out, cur, cy);
    }
    return out;
  }

  /// Coproduct, the algebra map with Delta(X) = X (x) 1 + 1 (x) X on
  /// generators, evaluated multiplicatively on both tensor legs.
  TensorElement coproduct(const UeaElement& x) const {
    TensorElement out;
    for (const auto& [m, c] : x) {
      TensorElement t;
      add_term(t, unit_monomial(), unit_monomial(), Rational(1));
      for (std::size_t i = 0; i < m.size(); ++i) {
        TensorElement prim;
        Expvec g = unit_monomial();
        g[i] = 1;
        add_term(prim, g, unit_monomial(), Rational(1));
        add_term(prim, unit_monomial(), g, Rational(1));
        for (std::uint32_t rep = 0; rep < m[i]; ++rep) t = tensor_multiply(t, prim);
      }
      for (const auto& [legs, tc] : t) add_term(out, legs.first, legs.second, c * tc);
    }
    return out;
  }

  TensorElement tensor_multiply(const TensorElement& a, const TensorElement& b) const {
    TensorElement out;
    for (const auto& [la, ca] : a)
      for (const auto& [lb, cb] : b) {
        const UeaElement left = multiply(monomial(la.first), monomial(lb.first));
        const UeaElement right = multiply(monomial(la.second), monomial(lb.second));
        for (const auto& [ml, cl] : left)
          for (const auto& [mr, cr] : right) add_term(out, ml, mr, ca * cb * cl * cr);
      }
    return out;
  }

  /// Coefficient of the empty monomial (the augmentation).
  Rational counit(const UeaElement& x) const {
    const auto it = x.find(unit_monomial());
    return it == x.end() ? Rational(0) : it->second;
  }

  /// Antipode: the anti-automorphism with S(X) = -X on generators, so
  /// S(e_1^{a_1} ... e_n^{a_n}) = (-1)^deg e_n^{a_n} ... e_1^{a_1}.
  UeaElement antipode(const UeaElement& x) const {
    UeaElement out;
    for (const auto& [m, c] : x) {
      UeaElement cur = one();
      for (std::size_t ii = m.size(); ii-- > 0;)
        for (std::uint32_t t = 0; t < m[ii]; ++t) cur = mul_elem_gen(cur, static_cast<std::uint32_t>(ii));
      const Rational sign = (total_degree(m) % 2 == 0) ? Rational(1) : Rational(-1);
      add_scaled(out, cur, c * sign);
    }
    return out;
  }

  std::pair<Rational, UeaElement> counit_antipode(const UeaElement& x) const {
    return {counit(x), antipode(x)};
  }

 private:
  UeaElement mul_elem_gen(const UeaElement& x, std::uint32_t g) const {
    UeaElement out;
    for (const auto& [m, c] : x) add_scaled(out, mul_mono_gen(m, g), c);
    return out;
  }

  // (normal monomial m) * e_g. Splitting off the highest generator e_j of m
  // gives m e_g = (m' e_g) e_j + m' [e_j, e_g]; both recursions shrink the
  // (degree, inversion) measure.
  const UeaElement& mul_mono_gen(const Expvec& m, std::uint32_t g) const {
    const auto key = std::make_pair(m, g);
    const auto hit = cache_.find(key);
    if (hit != cache_.end()) return hit->second;

    UeaElement res;
    std::size_t jpos = m.size();
    for (std::size_t i = m.size(); i-- > 0;)
      if (m[i] > 0) {
        jpos = i;
        break;
      }

    if (jpos == m.size() || jpos <= g) {
      Expvec r = m;
      r[g] += 1;
      res.emplace(std::move(r), Rational(1));
    } else {
      Expvec mp = m;
      mp[jpos] -= 1;
      const UeaElement swapped = mul_mono_gen(mp, g);
      for (const auto& [mx, cx] : swapped)
        add_scaled(res, mul_mono_gen(mx, static_cast<std::uint32_t>(jpos)), cx);
      const QVec br = L_.bracket_basis(jpos, g);
      for (std::size_t k = 0; k < br.size(); ++k)
        if (br[k] != 0) add_scaled(res, mul_mono_gen(mp, static_cast<std::uint32_t>(k)), br[k]);
    }
    return cache_.emplace(key, std::move(res)).first->second;
  }

  LieAlgebra L_;
  mutable std::map<std::pair<Expvec, std::uint32_t>, UeaElement> cache_;
};

}  // namespace lieamk
