#pragma once

// Smash products A # H for a truncated module algebra A and H either an
// enveloping algebra U(h) or a finite group algebra. The twist
//   tau = (mu_{H,A} (x) 1_H) . (1_H (x) flip) . (Delta_H (x) 1_A)
// is evaluated literally; smash multiplication is the bilinear extension of
// (a1 (x) h1)(a2 (x) h2) = a1 * tau(h1 (x) a2) * h2 with exact products.
// Whenever an A-side product leaves the truncation window the operation
// throws TruncationOverflow instead of silently dropping terms: silent
// truncation breaks associativity in ways that are miserable to debug.
//
// H-basis keys reuse Expvec: a PBW exponent vector for the enveloping kind,
// a one-entry vector {g} holding the element index for the group kind.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lieamk/uea.hpp"

namespace lieamk {

using HElement = UeaElement;
using HTensor = TensorElement;

struct FiniteGroup {
  std::string name;
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = a.b
  std::size_t identity = 0;

  std::size_t order() const { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table.at(a).at(b); }

  std::size_t inverse(std::size_t a) const {
    for (std::size_t b = 0; b < order(); ++b)
      if (mul(a, b) == identity) return b;
    throw InternalCheckError("group element without inverse slipped past validate()");
  }

  /// Full axiom check: shape, closure, identity, inverses, associativity.
  void validate() {
    const std::size_t n = order();
    if (n == 0) throw InputError("group must have at least one element");
    if (table.size() != n) throw InputError("group table has wrong number of rows");
    for (const auto& row : table) {
      if (row.size() != n) throw InputError("group table has a ragged row");
      for (const std::size_t x : row)
        if (x >= n) throw InputError("group table entry out of range");
    }
    bool found_identity = false;
    for (std::size_t e = 0; e < n; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n; ++x) ok = ok && mul(e, x) == x && mul(x, e) == x;
      if (ok) {
        identity = e;
        found_identity = true;
        break;
      }
    }
    if (!found_identity) throw InputError("group table has no identity element");
    for (std::size_t a = 0; a < n; ++a) {
      bool has_inverse = false;
      for (std::size_t b = 0; b < n; ++b) has_inverse = has_inverse || mul(a, b) == identity;
      if (!has_inverse) throw InputError("group element '" + elements[a] + "' has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InputError("group table is not associative");
  }

  static FiniteGroup trivial() {
    FiniteGroup g;
    g.name = "trivial";
    g.elements = {"e"};
    g.table = {{0}};
    g.validate();
    return g;
  }
};

/// U(L) truncated at a fixed total degree, with an enumerated monomial basis.
/// Products are computed exactly and must land inside the window.
class TruncatedAlgebra {
 public:
  TruncatedAlgebra(LieAlgebra generators, std::size_t bound)
      : pbw_(std::move(generators)),
        bound_(bound),
        basis_(enumerate_monomials(pbw_.algebra().dim(), bound)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
  }

  std::size_t bound() const { return bound_; }
  std::size_t num_generators() const { return pbw_.algebra().dim(); }
  const PbwAlgebra& pbw() const { return pbw_; }
  const std::vector<Expvec>& basis() const { return basis_; }

  std::size_t index_of(const Expvec& m) const {
    const auto it = index_.find(m);
    if (it == index_.end()) throw TruncationOverflow(total_degree(m), bound_);
    return it->second;
  }

  UeaElement one() const { return pbw_.one(); }

  UeaElement multiply(const UeaElement& x, const UeaElement& y) const {
    UeaElement out = pbw_.multiply(x, y);
    const std::size_t top = max_degree(out);
    if (top > bound_) throw TruncationOverflow(top, bound_);
    return out;
  }

 private:
  PbwAlgebra pbw_;
  std::size_t bound_;
  std::vector<Expvec> basis_;
  std::map<Expvec, std::size_t> index_;
};

enum class HopfKind { enveloping, group_algebra };

/// The Hopf algebra acting in a smash product. Enveloping kind is
/// cocommutative with primitive generators; group kind has a group-like
/// basis: Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}.
class HopfHandle {
 public:
  static HopfHandle enveloping(LieAlgebra h) {
    HopfHandle out;
    out.kind_ = HopfKind::enveloping;
    out.pbw_.emplace(std::move(h));
    return out;
  }

  static HopfHandle group_algebra(FiniteGroup g) {
    HopfHandle out;
    out.kind_ = HopfKind::group_algebra;
    out.group_ = std::move(g);
    return out;
  }

  HopfKind kind() const { return kind_; }

  const PbwAlgebra& pbw() const {
    if (kind_ != HopfKind::enveloping) throw PreconditionError("not an enveloping algebra");
    return *pbw_;
  }

  const FiniteGroup& group() const {
    if (kind_ != HopfKind::group_algebra) throw PreconditionError("not a group algebra");
    return *group_;
  }

  /// Number of H generators carrying action data: dim h, or |G|.
  std::size_t num_generators() const {
    return kind_ == HopfKind::enveloping ? pbw_->algebra().dim() : group_->order();
  }

  Expvec key_of_generator(std::size_t i) const {
    if (kind_ == HopfKind::enveloping) {
      Expvec m(pbw_->algebra().dim(), 0);
      m.at(i) = 1;
      return m;
    }
    return Expvec{static_cast<std::uint32_t>(i)};
  }

  Expvec one_key() const {
    return kind_ == HopfKind::enveloping ? pbw_->unit_monomial()
                                         : Expvec{static_cast<std::uint32_t>(group_->identity)};
  }

  HElement one() const { return {{one_key(), Rational(1)}}; }

  /// Basis keys with degree <= bound (every group element has degree 0).
  std::vector<Expvec> basis(std::size_t degree_bound) const {
    if (kind_ == HopfKind::enveloping)
      return enumerate_monomials(pbw_->algebra().dim(), degree_bound);
    std::vector<Expvec> out;
    for (std::size_t g = 0; g < group_->order(); ++g)
      out.push_back(Expvec{static_cast<std::uint32_t>(g)});
    return out;
  }

  HElement multiply(const HElement& x, const HElement& y) const {
    if (kind_ == HopfKind::enveloping) return pbw_->multiply(x, y);
    HElement out;
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y)
        add_term(out, Expvec{static_cast<std::uint32_t>(group_->mul(kx.at(0), ky.at(0)))}, cx * cy);
    return out;
  }

  HTensor coproduct(const HElement& x) const {
    if (kind_ == HopfKind::enveloping) return pbw_->coproduct(x);
    HTensor out;
    for (const auto& [k, c] : x) add_term(out, k, k, c);
    return out;
  }

  Rational counit_key(const Expvec& k) const {
    if (kind_ == HopfKind::enveloping) return total_degree(k) == 0 ? Rational(1) : Rational(0);
    return Rational(1);
  }

  Rational counit(const HElement& x) const {
    Rational s(0);
    for (const auto& [k, c] : x) s += c * counit_key(k);
    return s;
  }

  HElement antipode(const HElement& x) const {
    if (kind_ == HopfKind::enveloping) return pbw_->antipode(x);
    HElement out;
    for (const auto& [k, c] : x)
      add_term(out, Expvec{static_cast<std::uint32_t>(group_->inverse(k.at(0)))}, c);
    return out;
  }

 private:
  HopfHandle() = default;
  HopfKind kind_ = HopfKind::enveloping;
  std::optional<PbwAlgebra> pbw_;
  std::optional<FiniteGroup> group_;
};

/// An H-module algebra structure on a truncated algebra A. Each H generator
/// carries a linear endomorphism of A's monomial basis: a derivation matrix
/// for primitive generators, an automorphism matrix for group-likes.
class ModuleAlgebraAction {
 public:
  /// Enveloping case. `adapted` is a Lie algebra whose first `dim_radical`
  /// basis vectors span an ideal r and whose remaining vectors span a
  /// subalgebra h; A = U(r) truncated at `bound`, and each h generator acts
  /// by the derivation extending X -> [X, -].
  static ModuleAlgebraAction adjoint(const LieAlgebra& adapted, std::size_t dim_radical,
                                     std::size_t bound) {
    const std::size_t n = adapted.dim();
    const std::size_t m = dim_radical;
    if (m > n) throw PreconditionError("dim_radical exceeds the algebra dimension");

    ModuleAlgebraAction out(HopfHandle::enveloping(block(adapted, m, n - m, "levi")),
                            TruncatedAlgebra(block(adapted, 0, m, "radical"), bound));

    // derivation of U(r) induced by ad(X_t) for each Levi generator
    const auto& A = out.coeff_;
    for (std::size_t t = 0; t < n - m; ++t) {
      QMatrix mat(A.basis().size(), A.basis().size());
      for (std::size_t col = 0; col < A.basis().size(); ++col) {
        const UeaElement image = derive(adapted, A, m + t, A.basis()[col]);
        for (const auto& [mm, c] : image) mat.set(A.index_of(mm), col, c);
      }
      out.gen_matrices_.push_back(std::move(mat));
    }
    return out;
  }

  /// Group case. `generator_images[g]` is the matrix of g on the generators
  /// of A (column j = coordinates of g . x_j), extended multiplicatively to
  /// the monomial basis. Matrices must define automorphisms; callers are
  /// expected to have validated homomorphism data (see validate_group_action).
  static ModuleAlgebraAction group_action(FiniteGroup g, LieAlgebra a_generators,
                                          const std::vector<Dense>& generator_images,
                                          std::size_t bound) {
    if (generator_images.size() != g.order())
      throw InputError("need one action matrix per group element");
    ModuleAlgebraAction out(HopfHandle::group_algebra(std::move(g)),
                            TruncatedAlgebra(std::move(a_generators), bound));

    const auto& A = out.coeff_;
    const std::size_t gens = A.num_generators();
    for (const Dense& img : generator_images) {
      if (img.size() != gens) throw InputError("action matrix of wrong size");
      for (const auto& row : img)
        if (row.size() != gens) throw InputError("action matrix of wrong size");

      QMatrix mat(A.basis().size(), A.basis().size());
      for (std::size_t col = 0; col < A.basis().size(); ++col) {
        const Expvec& mono = A.basis()[col];
        UeaElement image = A.one();
        for (std::size_t j = 0; j < gens; ++j) {
          UeaElement xj_image;
          for (std::size_t i = 0; i < gens; ++i)
            add_scaled(xj_image, A.pbw().generator(i), img[i][j]);
          for (std::uint32_t rep = 0; rep < mono[j]; ++rep) image = A.multiply(image, xj_image);
        }
        for (const auto& [mm, c] : image) mat.set(A.index_of(mm), col, c);
      }
      out.gen_matrices_.push_back(std::move(mat));
    }
    return out;
  }

  const HopfHandle& hopf() const { return hopf_; }
  const TruncatedAlgebra& coeffs() const { return coeff_; }
  const QMatrix& generator_matrix(std::size_t i) const { return gen_matrices_.at(i); }

  /// Action of one H generator (Levi basis vector or group element) on a.
  UeaElement apply_generator(std::size_t i, const UeaElement& a) const {
    const QMatrix& mat = gen_matrices_.at(i);
    UeaElement out;
    for (const auto& [m, c] : a) {
      const std::size_t col = coeff_.index_of(m);
      for (const auto& [rc, v] : mat.entries())
        if (rc.second == col) add_term(out, coeff_.basis()[rc.first], c * v);
    }
    return out;
  }

  /// Action of an H basis key. A PBW monomial acts by composing generator
  /// actions, rightmost factor first; a group key acts by its matrix.
  UeaElement apply_key(const Expvec& key, const UeaElement& a) const {
    if (hopf_.kind() == HopfKind::group_algebra) return apply_generator(key.at(0), a);
    UeaElement cur = a;
    for (std::size_t i = key.size(); i-- > 0;)
      for (std::uint32_t t = 0; t < key[i]; ++t) cur = apply_generator(i, cur);
    return cur;
  }

  UeaElement apply(const HElement& h, const UeaElement& a) const {
    UeaElement out;
    for (const auto& [k, c] : h) add_scaled(out, apply_key(k, a), c);
    return out;
  }

 private:
  ModuleAlgebraAction(HopfHandle h, TruncatedAlgebra a)
      : hopf_(std::move(h)), coeff_(std::move(a)) {}

  /// Extracts the Lie algebra spanned by basis vectors [from, from+count);
  /// their brackets must stay inside the block.
  static LieAlgebra block(const LieAlgebra& L, std::size_t from, std::size_t count,
                          const std::string& what) {
    std::vector<std::string> names(L.basis_names().begin() + from,
                                   L.basis_names().begin() + from + count);
    LieAlgebra out(L.name() + "." + what, std::move(names));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) {
        const QVec b = L.bracket_basis(from + i, from + j);
        QVec c(count, Rational(0));
        for (std::size_t k = 0; k < L.dim(); ++k) {
          if (b[k] == 0) continue;
          if (k < from || k >= from + count)
            throw InternalCheckError(what + " block is not closed under the bracket");
          c[k - from] = b[k];
        }
        if (!is_zero_vec(c)) out.set_bracket(i, j, std::move(c));
      }
    return out;
  }

  /// Leibniz extension of ad(X_gen) to a PBW monomial of U(r):
  /// X.(e_i m') = [X, e_i] m' + e_i (X.m').
  static UeaElement derive(const LieAlgebra& adapted, const TruncatedAlgebra& A, std::size_t gen,
                           const Expvec& mono) {
    std::size_t first = mono.size();
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i] > 0) {
        first = i;
        break;
      }
    if (first == mono.size()) return {};  // X . 1 = 0

    Expvec rest = mono;
    rest[first] -= 1;

    const QVec b = adapted.bracket_basis(gen, first);
    UeaElement bracket_part;
    for (std::size_t k = 0; k < A.num_generators(); ++k)
      if (b[k] != 0) add_scaled(bracket_part, A.pbw().generator(k), b[k]);
    for (std::size_t k = A.num_generators(); k < b.size(); ++k)
      if (b[k] != 0) throw InternalCheckError("Levi action leaves the radical block");

    UeaElement out = A.multiply(bracket_part, A.pbw().monomial(rest));
    add_scaled(out, A.multiply(A.pbw().generator(first), derive(adapted, A, gen, rest)),
               Rational(1));
    return out;
  }

  HopfHandle hopf_;
  TruncatedAlgebra coeff_;
  std::vector<QMatrix> gen_matrices_;
};

/// Checks that per-element generator matrices define a group action by
/// algebra automorphisms: invertible, bracket-preserving, multiplicative
/// over the group table. Throws InputError with the offending element.
inline void validate_group_action(const FiniteGroup& g, const LieAlgebra& a_generators,
                                  const std::vector<Dense>& images) {
  if (images.size() != g.order()) throw InputError("need one action matrix per group element");
  const std::size_t n = a_generators.dim();
  for (std::size_t e = 0; e < images.size(); ++e) {
    const Dense& m = images[e];
    if (m.size() != n) throw InputError("action matrix for '" + g.elements[e] + "' has wrong size");
    for (const auto& row : m)
      if (row.size() != n)
        throw InputError("action matrix for '" + g.elements[e] + "' has wrong size");
    if (rank(QMatrix::from_dense(m)) != n)
      throw InputError("action matrix for '" + g.elements[e] + "' is singular");
  }

  auto apply = [&](const Dense& m, const QVec& v) {
    QVec out(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
    return out;
  };

  for (std::size_t e = 0; e < images.size(); ++e)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const QVec lhs = a_generators.bracket(apply(images[e], a_generators.unit(i)),
                                              apply(images[e], a_generators.unit(j)));
        const QVec rhs = apply(images[e], a_generators.bracket_basis(i, j));
        if (lhs != rhs)
          throw InputError("matrix for '" + g.elements[e] + "' is not a Lie algebra automorphism");
      }

  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      const Dense& mab = images[g.mul(a, b)];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Rational s(0);
          for (std::size_t t = 0; t < n; ++t) s += images[a][i][t] * images[b][t][j];
          if (s != mab[i][j])
            throw InputError("action matrices are not multiplicative over the group table ('" +
                             g.elements[a] + "', '" + g.elements[b] + "')");
        }
    }
}

// (A key, H key) -> coefficient; same shape as TensorElement, so the
// TensorElement add_term overload applies.
using SmashElement = std::map<std::pair<Expvec, Expvec>, Rational>;

inline SmashElement smash_i1(const ModuleAlgebraAction& act, const UeaElement& a) {
  SmashElement out;
  for (const auto& [m, c] : a) add_term(out, m, act.hopf().one_key(), c);
  return out;
}

inline SmashElement smash_i2(const ModuleAlgebraAction& act, const HElement& h) {
  SmashElement out;
  const Expvec unit = act.coeffs().pbw().unit_monomial();
  for (const auto& [k, c] : h) add_term(out, unit, k, c);
  return out;
}

inline SmashElement smash_one(const ModuleAlgebraAction& act) {
  return smash_i1(act, act.coeffs().one());
}

/// tau(h (x) a): comultiply h, flip the middle legs, act with the left leg.
inline SmashElement tau(const ModuleAlgebraAction& act, const HElement& h, const UeaElement& a) {
  SmashElement out;
  const HTensor delta = act.hopf().coproduct(h);
  for (const auto& [legs, c] : delta) {
    const UeaElement acted = act.apply_key(legs.first, a);
    for (const auto& [am, ac] : acted) add_term(out, am, legs.second, c * ac);
  }
  return out;
}

inline SmashElement smash_multiply(const ModuleAlgebraAction& act, const SmashElement& u,
                                   const SmashElement& v) {
  SmashElement out;
  for (const auto& [ku, cu] : u)
    for (const auto& [kv, cv] : v) {
      const SmashElement t = tau(act, {{ku.second, Rational(1)}}, {{kv.first, Rational(1)}});
      for (const auto& [kt, ct] : t) {
        const UeaElement apart =
            act.coeffs().multiply({{ku.first, Rational(1)}}, {{kt.first, Rational(1)}});
        const HElement hpart =
            act.hopf().multiply({{kt.second, Rational(1)}}, {{kv.second, Rational(1)}});
        for (const auto& [am, ac] : apart)
          for (const auto& [hm, hc] : hpart) add_term(out, am, hm, cu * cv * ct * ac * hc);
      }
    }
  return out;
}

/// The A # H module structure on A: u . b = (1_A (x) eps)(u . (b (x) 1)).
inline UeaElement smash_action_on_coeffs(const ModuleAlgebraAction& act, const SmashElement& u,
                                         const UeaElement& b) {
  const SmashElement prod = smash_multiply(act, u, smash_i1(act, b));
  UeaElement out;
  for (const auto& [k, c] : prod) add_term(out, k.first, c * act.hopf().counit_key(k.second));
  return out;
}

struct CheckReport {
  bool ok = true;
  std::size_t checked = 0;
  std::string counterexample;
};

/// Verifies (1_A (x) eps) tau(h (x) a) == h . a over basis pairs within the
/// truncation window, exhaustively (samples == 0) or on a random subset.
inline CheckReport check_counit_tau(const ModuleAlgebraAction& act, std::size_t samples = 0,
                                    std::uint64_t seed = 1) {
  CheckReport rep;
  const auto hkeys = act.hopf().basis(act.coeffs().bound());
  const auto& amons = act.coeffs().basis();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t hi = 0; hi < hkeys.size(); ++hi)
    for (std::size_t ai = 0; ai < amons.size(); ++ai) pairs.push_back({hi, ai});
  if (samples > 0 && samples < pairs.size()) {
    std::uint64_t state = seed;
    auto next = [&state]() {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      return state >> 33;
    };
    std::vector<std::pair<std::size_t, std::size_t>> picked;
    for (std::size_t t = 0; t < samples; ++t) picked.push_back(pairs[next() % pairs.size()]);
    pairs = std::move(picked);
  }

  for (const auto& [hi, ai] : pairs) {
    const HElement h = {{hkeys[hi], Rational(1)}};
    const UeaElement a = {{amons[ai], Rational(1)}};
    const SmashElement t = tau(act, h, a);
    UeaElement lhs;
    for (const auto& [k, c] : t) add_term(lhs, k.first, c * act.hopf().counit_key(k.second));
    const UeaElement rhs = act.apply(h, a);
    ++rep.checked;
    if (lhs != rhs) {
      rep.ok = false;
      rep.counterexample = "h key #" + std::to_string(hi) + ", A monomial #" + std::to_string(ai);
      return rep;
    }
  }
  return rep;
}

struct RetractionReport {
  struct Identity {
    std::string name;
    bool ok = true;
    std::string detail;
  };
  bool ok = true;
  std::vector<Identity> identities;
};

/// For H = QG, x0 = |G|^{-1} sum_g g is the normalized integral. Verifies the
/// five identities making rho(a) = a (x) x0 a module retraction:
///   eps(x0) = 1, h x0 = eps(h) x0, rho(ab) = a.rho(b), rho(h.a) = h.rho(a),
///   (1 (x) eps) rho = id.
inline RetractionReport check_retraction(const ModuleAlgebraAction& act) {
  if (act.hopf().kind() != HopfKind::group_algebra)
    throw PreconditionError("check_retraction needs a group-algebra action");
  const FiniteGroup& G = act.hopf().group();
  RetractionReport rep;

  HElement x0;
  const Rational w = Rational(1) / Rational(static_cast<unsigned>(G.order()));
  for (std::size_t g = 0; g < G.order(); ++g)
    add_term(x0, Expvec{static_cast<std::uint32_t>(g)}, w);

  auto rho = [&](const UeaElement& a) {
    SmashElement out;
    for (const auto& [m, c] : a)
      for (const auto& [k, xc] : x0) add_term(out, m, k, c * xc);
    return out;
  };

  auto record = [&rep](const std::string& name, bool ok, const std::string& detail) {
    rep.identities.push_back({name, ok, ok ? "" : detail});
    rep.ok = rep.ok && ok;
  };

  record("counit(x0) = 1", act.hopf().counit(x0) == 1, "normalized integral has wrong counit");

  bool invariant = true;
  std::string det;
  for (std::size_t g = 0; g < G.order() && invariant; ++g) {
    const HElement left = act.hopf().multiply({{Expvec{static_cast<std::uint32_t>(g)}, Rational(1)}}, x0);
    if (left != x0) {
      invariant = false;
      det = "h x0 != eps(h) x0 for h = " + G.elements[g];
    }
  }
  record("h x0 = eps(h) x0", invariant, det);

  const auto& amons = act.coeffs().basis();
  bool amod = true;
  det.clear();
  for (std::size_t i = 0; i < amons.size() && amod; ++i)
    for (std::size_t j = 0; j < amons.size() && amod; ++j) {
      if (total_degree(amons[i]) + total_degree(amons[j]) > act.coeffs().bound()) continue;
      const UeaElement a = {{amons[i], Rational(1)}}, b = {{amons[j], Rational(1)}};
      const SmashElement lhs = rho(act.coeffs().multiply(a, b));
      const SmashElement rhs = smash_multiply(act, smash_i1(act, a), rho(b));
      if (lhs != rhs) {
        amod = false;
        det = "rho(ab) != a rho(b) at basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  record("rho(ab) = a rho(b)", amod, det);

  bool hmod = true;
  det.clear();
  for (std::size_t g = 0; g < G.order() && hmod; ++g)
    for (std::size_t i = 0; i < amons.size() && hmod; ++i) {
      const UeaElement a = {{amons[i], Rational(1)}};
      const HElement h = {{Expvec{static_cast<std::uint32_t>(g)}, Rational(1)}};
      const SmashElement lhs = rho(act.apply(h, a));
      const SmashElement rhs = smash_multiply(act, smash_i2(act, h), rho(a));
      if (lhs != rhs) {
        hmod = false;
        det = "rho(h.a) != h rho(a) for h = " + G.elements[g];
      }
    }
  record("rho(h.a) = h rho(a)", hmod, det);

  bool retract = true;
  det.clear();
  for (std::size_t i = 0; i < amons.size() && retract; ++i) {
    const UeaElement a = {{amons[i], Rational(1)}};
    UeaElement back;
    for (const auto& [k, c] : rho(a)) add_term(back, k.first, c * act.hopf().counit_key(k.second));
    if (back != a) {
      retract = false;
      det = "(1 (x) eps) rho != id at basis monomial " + std::to_string(i);
    }
  }
  record("(1 (x) eps) rho = id", retract, det);

  return rep;
}

struct LeviSmashReport {
  bool ok = false;
  bool bijection_ok = false;
  bool multiplicative_ok = false;
  std::size_t pairs_checked = 0;
  std::size_t basis_size = 0;
  std::size_t truncation = 0;
  std::string counterexample;
};

/// Checks that Phi : U(r) # U(h) -> U(g), x (x) y -> x y (PBW product in the
/// adapted order) is a linear bijection of truncated bases and multiplicative
/// on every basis pair of combined degree <= N.
inline LeviSmashReport levi_smash_iso_check(const LeviReport& levi, std::size_t N) {
  if (!levi.ok || !levi.adapted.has_value())
    throw PreconditionError("levi_smash_iso_check needs a verified Levi decomposition");
  LeviSmashReport rep;
  rep.truncation = N;

  const LieAlgebra& g = *levi.adapted;
  const std::size_t m = levi.dim_radical;
  const std::size_t k = levi.dim_levi;
  const ModuleAlgebraAction act = ModuleAlgebraAction::adjoint(g, m, N);
  const PbwAlgebra gpbw(g);

  auto phi_key = [&](const Expvec& am, const Expvec& hm) {
    Expvec out(m + k, 0);
    for (std::size_t i = 0; i < m; ++i) out[i] = am[i];
    for (std::size_t i = 0; i < k; ++i) out[m + i] = hm[i];
    return out;
  };
  auto phi = [&](const SmashElement& u) {
    UeaElement out;
    for (const auto& [key, c] : u) add_term(out, phi_key(key.first, key.second), c);
    return out;
  };

  // (a) linear bijection between the truncated PBW bases
  std::map<Expvec, bool> targets;
  for (const auto& mono : enumerate_monomials(m + k, N)) targets.emplace(mono, false);
  std::vector<std::pair<Expvec, Expvec>> smash_basis;
  for (const auto& am : enumerate_monomials(m, N))
    for (const auto& hm : enumerate_monomials(k, N)) {
      if (total_degree(am) + total_degree(hm) > N) continue;
      smash_basis.push_back({am, hm});
    }
  rep.basis_size = smash_basis.size();
  bool bij = smash_basis.size() == targets.size();
  for (const auto& [am, hm] : smash_basis) {
    if (!bij) break;
    const auto it = targets.find(phi_key(am, hm));
    if (it == targets.end() || it->second)
      bij = false;
    else
      it->second = true;
  }
  if (bij)
    for (const auto& [mono, hit] : targets) bij = bij && hit;
  rep.bijection_ok = bij;

  // (b) multiplicativity on basis pairs of combined degree <= N
  rep.multiplicative_ok = true;
  for (std::size_t i = 0; i < smash_basis.size() && rep.multiplicative_ok; ++i)
    for (std::size_t j = 0; j < smash_basis.size(); ++j) {
      const auto& [a1, h1] = smash_basis[i];
      const auto& [a2, h2] = smash_basis[j];
      if (total_degree(a1) + total_degree(h1) + total_degree(a2) + total_degree(h2) > N) continue;
      SmashElement u, v;
      add_term(u, a1, h1, Rational(1));
      add_term(v, a2, h2, Rational(1));
      const UeaElement lhs = phi(smash_multiply(act, u, v));
      const UeaElement rhs = gpbw.multiply(gpbw.monomial(phi_key(a1, h1)),
                                           gpbw.monomial(phi_key(a2, h2)));
      ++rep.pairs_checked;
      if (lhs != rhs) {
        rep.multiplicative_ok = false;
        rep.counterexample = "Phi(uv) != Phi(u)Phi(v) at basis pair (" +
                             format_monomial(phi_key(a1, h1), g.basis_names()) + ", " +
                             format_monomial(phi_key(a2, h2), g.basis_names()) + ")";
        break;
      }
    }

  rep.ok = rep.bijection_ok && rep.multiplicative_ok;
  return rep;
}

inline LeviSmashReport levi_smash_iso_check(const LieAlgebra& L, const Subspace& h, std::size_t N) {
  const LeviReport levi = verify_levi(L, h);
  if (!levi.ok) throw PreconditionError("Levi verification failed: " + levi.failure);
  return levi_smash_iso_check(levi, N);
}

}  // namespace lieamk
