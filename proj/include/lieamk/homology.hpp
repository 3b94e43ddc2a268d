#pragma once

// Chevalley-Eilenberg chains C_p = Lambda^p g (x) A with exact rational
// coefficients. The differential is the standard two-sum formula
//
//   d(X_1 ^ ... ^ X_p (x) a) =
//       sum_i (-1)^i      X_1 ^ ... ^ hat X_i ^ ... ^ X_p (x) X_i . a
//     + sum_{i<j} (-1)^{i+j} [X_i, X_j] ^ X_1 ^ ... hat i ... hat j ... (x) a
//
// with the bracket placed in front and then sorted into the wedge (each
// transposition contributes a sign). X_i . a is a LEFT module action; the
// action sign (-1)^i is forced by d . d = 0 for left modules (the classical
// (-1)^{i-1} variant of the same formula is the right-action convention,
// and the two complexes are isomorphic through the antipode). Trivial
// coefficients see no difference. Degree-k homology of a non-solvable
// algebra with coefficients in truncated U(r) carries the obstruction
// certificate: a cycle eta (x) 1 detected by a degree-zero functional that
// kills the whole image of d.

#include <algorithm>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lieamk/smash.hpp"

namespace lieamk {

using Wedge = std::vector<std::uint32_t>;  // strictly increasing generator indices

struct ChainKey {
  Wedge wedge;
  Expvec coeff;  // A-basis key; empty exponent vector for the trivial module

  auto operator<=>(const ChainKey&) const = default;
};

using ChainElement = std::map<ChainKey, Rational>;

inline void add_term(ChainElement& e, const ChainKey& k, const Rational& c) {
  if (c == 0) return;
  auto it = e.find(k);
  if (it == e.end()) {
    e.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

/// Coefficient module for the standard complex: a basis enumeration plus the
/// action of each ambient basis vector.
class CoeffModule {
 public:
  virtual ~CoeffModule() = default;

  /// Basis keys of A-degree <= bound. Finite modules ignore the bound.
  virtual std::vector<Expvec> basis(std::size_t degree_bound) const = 0;
  virtual std::size_t degree(const Expvec& key) const = 0;
  virtual bool finite_dimensional() const = 0;

  /// Action of basis vector e_i on a basis key, as a sparse A-vector.
  virtual UeaElement act(std::size_t i, const Expvec& key) const = 0;
};

/// Q with every generator acting by zero.
class TrivialModule final : public CoeffModule {
 public:
  std::vector<Expvec> basis(std::size_t) const override { return {Expvec{}}; }
  std::size_t degree(const Expvec&) const override { return 0; }
  bool finite_dimensional() const override { return true; }
  UeaElement act(std::size_t, const Expvec&) const override { return {}; }
};

/// Finite-dimensional module given by one matrix per generator
/// (column j = image of the j-th module basis vector). Keys are {j}.
class MatrixModule final : public CoeffModule {
 public:
  MatrixModule(std::vector<Dense> matrices, std::size_t dim)
      : matrices_(std::move(matrices)), dim_(dim) {
    for (const auto& m : matrices_)
      if (m.size() != dim_) throw PreconditionError("module matrix of wrong size");
  }

  std::vector<Expvec> basis(std::size_t) const override {
    std::vector<Expvec> out;
    for (std::size_t j = 0; j < dim_; ++j) out.push_back(Expvec{static_cast<std::uint32_t>(j)});
    return out;
  }
  std::size_t degree(const Expvec&) const override { return 0; }
  bool finite_dimensional() const override { return true; }

  UeaElement act(std::size_t i, const Expvec& key) const override {
    UeaElement out;
    const Dense& m = matrices_.at(i);
    for (std::size_t r = 0; r < dim_; ++r)
      add_term(out, Expvec{static_cast<std::uint32_t>(r)}, m[r][key.at(0)]);
    return out;
  }

 private:
  std::vector<Dense> matrices_;
  std::size_t dim_;
};

/// Truncated U(r) with the smash-module action: the first dim_radical
/// generators of the adapted algebra multiply from the left (raising
/// A-degree by one), the Levi generators act by derivations (degree
/// preserving). The window is the hard ceiling; actions beyond it throw.
class UrModule final : public CoeffModule {
 public:
  UrModule(const LieAlgebra& adapted, std::size_t dim_radical, std::size_t window)
      : action_(std::make_shared<ModuleAlgebraAction>(
            ModuleAlgebraAction::adjoint(adapted, dim_radical, window))),
        dim_radical_(dim_radical),
        window_(window) {}

  std::vector<Expvec> basis(std::size_t degree_bound) const override {
    return enumerate_monomials(dim_radical_, std::min(degree_bound, window_));
  }
  std::size_t degree(const Expvec& key) const override { return total_degree(key); }
  bool finite_dimensional() const override { return false; }

  UeaElement act(std::size_t i, const Expvec& key) const override {
    const auto& A = action_->coeffs();
    if (i < dim_radical_)
      return A.multiply(A.pbw().generator(i), A.pbw().monomial(key));
    return action_->apply_generator(i - dim_radical_, A.pbw().monomial(key));
  }

  std::size_t window() const { return window_; }
  const ModuleAlgebraAction& action() const { return *action_; }

 private:
  std::shared_ptr<ModuleAlgebraAction> action_;  // shared: modules are copied by value
  std::size_t dim_radical_;
  std::size_t window_;
};

inline std::vector<Wedge> enumerate_wedges(std::size_t n, std::size_t p) {
  std::vector<Wedge> out;
  if (p > n) return out;
  Wedge cur;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = next; i < n; ++i) {
      cur.push_back(static_cast<std::uint32_t>(i));
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Basis of C_p with A-degree <= degree_bound, with an index lookup.
struct ChainSpace {
  std::size_t p = 0;
  std::vector<ChainKey> basis;
  std::map<ChainKey, std::size_t> index;
};

inline ChainSpace chain_space(std::size_t p, std::size_t n, const CoeffModule& M,
                              std::size_t degree_bound) {
  ChainSpace out;
  out.p = p;
  for (const auto& w : enumerate_wedges(n, p))
    for (const auto& m : M.basis(degree_bound)) out.basis.push_back({w, m});
  for (std::size_t i = 0; i < out.basis.size(); ++i) out.index.emplace(out.basis[i], i);
  return out;
}

/// Sorts `k` into the strictly increasing tuple `rest`; the sign is
/// (-1)^(number of entries passed). Returns 0 on a duplicate index.
inline int wedge_insert(Wedge& rest, std::uint32_t k) {
  const auto it = std::lower_bound(rest.begin(), rest.end(), k);
  if (it != rest.end() && *it == k) return 0;
  const int sign = (it - rest.begin()) % 2 == 0 ? 1 : -1;
  rest.insert(it, k);
  return sign;
}

inline ChainElement chain_differential(const LieAlgebra& L, const CoeffModule& M,
                                       const ChainElement& z) {
  ChainElement out;
  for (const auto& [key, c] : z) {
    const Wedge& w = key.wedge;
    const std::size_t p = w.size();

    // action terms, sign (-1)^i for the 1-based position i
    for (std::size_t t = 0; t < p; ++t) {
      const Rational sign = (t % 2 == 0) ? -c : c;
      Wedge rest = w;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
      for (const auto& [m2, c2] : M.act(w[t], key.coeff)) add_term(out, {rest, m2}, sign * c2);
    }

    // bracket terms, sign (-1)^{i+j}, bracket sorted in from the front
    for (std::size_t s = 0; s < p; ++s)
      for (std::size_t t = s + 1; t < p; ++t) {
        const QVec br = L.bracket_basis(w[s], w[t]);
        Wedge rest = w;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(s));
        const Rational base = ((s + t) % 2 == 0) ? c : -c;  // (s+1)+(t+1) keeps parity of s+t
        for (std::size_t k = 0; k < br.size(); ++k) {
          if (br[k] == 0) continue;
          Wedge merged = rest;
          const int ins = wedge_insert(merged, static_cast<std::uint32_t>(k));
          if (ins == 0) continue;
          add_term(out, {std::move(merged), key.coeff}, base * br[k] * ins);
        }
      }
  }
  return out;
}

/// Matrix of d : domain -> codomain in the ChainKey bases.
inline QMatrix ce_matrix(const LieAlgebra& L, const CoeffModule& M, const ChainSpace& domain,
                         const ChainSpace& codomain) {
  QMatrix out(codomain.basis.size(), domain.basis.size());
  for (std::size_t col = 0; col < domain.basis.size(); ++col) {
    const ChainElement d = chain_differential(L, M, {{domain.basis[col], Rational(1)}});
    for (const auto& [key, c] : d) {
      const auto it = codomain.index.find(key);
      if (it == codomain.index.end())
        throw InternalCheckError("differential left the codomain enumeration");
      out.set(it->second, col, c);
    }
  }
  return out;
}

/// Differential matrix d_p : C_p -> C_{p-1} for a finite-dimensional module.
inline QMatrix ce_differential(std::size_t p, const LieAlgebra& L, const CoeffModule& M) {
  if (!M.finite_dimensional())
    throw PreconditionError("ce_differential(p) needs a finite-dimensional module");
  if (p < 1 || p > L.dim()) throw PreconditionError("ce_differential: need 1 <= p <= dim");
  const ChainSpace dom = chain_space(p, L.dim(), M, 0);
  const ChainSpace cod = chain_space(p - 1, L.dim(), M, 0);
  return ce_matrix(L, M, dom, cod);
}

/// b_p = dim C_p - rank d_p - rank d_{p+1}, with d_0 and d_{n+1} zero maps.
inline std::size_t betti(const LieAlgebra& L, const CoeffModule& M, std::size_t p) {
  if (!M.finite_dimensional())
    throw PreconditionError("betti needs a finite-dimensional coefficient module");
  const std::size_t n = L.dim();
  if (p > n) return 0;
  const std::size_t dim_cp = chain_space(p, n, M, 0).basis.size();
  const std::size_t rank_in = (p >= 1) ? rank(ce_differential(p, L, M)) : 0;
  const std::size_t rank_out = (p + 1 <= n) ? rank(ce_differential(p + 1, L, M)) : 0;
  return dim_cp - rank_in - rank_out;
}

inline std::vector<std::size_t> betti_table(const LieAlgebra& L, const CoeffModule& M) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p <= L.dim(); ++p) out.push_back(betti(L, M, p));
  return out;
}

struct TopDifferentialReport {
  bool ok = false;
  std::string nonzero_entry;  // description of the first nonzero entry, if any
};

/// For a semisimple algebra the top differential
/// d : Lambda^n g -> Lambda^{n-1} g with trivial coefficients must vanish.
inline TopDifferentialReport top_differential_zero(const LieAlgebra& L) {
  if (classify(L).cls != AlgebraClass::semisimple)
    throw PreconditionError("top_differential_zero needs a semisimple algebra");
  TopDifferentialReport rep;
  const TrivialModule M;
  const QMatrix d = ce_differential(L.dim(), L, M);
  rep.ok = d.is_zero();
  if (!rep.ok) {
    const auto& [rc, v] = *d.entries().begin();
    rep.nonzero_entry = "entry (" + std::to_string(rc.first) + "," + std::to_string(rc.second) +
                        ") = " + to_string(v);
  }
  return rep;
}

struct Certificate {
  std::size_t k = 0;             // dim of the Levi factor
  std::size_t dim_radical = 0;
  std::size_t truncation = 0;    // N
  bool vacuous = false;          // k == 0: solvable, nothing to certify
  Wedge eta;                     // adapted indices of the Levi wedge
  std::vector<std::string> eta_names;

  bool c1_cycle = false;         // d(eta (x) 1) = 0
  bool c2_image_killed = false;  // (xi (x) eps_A) d(w) = 0 for all basis w
  std::size_t c2_chains_checked = 0;
  bool c3_detects = false;       // (xi (x) eps_A)(eta (x) 1) = 1
  bool solve_no_solution = false;  // no w with d(w) = eta (x) 1 in the window
  bool consistent = false;       // solve agrees with the functional verdict
  bool pass = false;
  std::string detail;            // counterexample / failure description
};

/// Builds A = U(r) truncated at N with the smash-module action and verifies
/// the three certificate conditions for the class [eta (x) 1] in degree
/// k = dim h, plus an independent linear-solve check that the cycle is not a
/// boundary of the truncated complex. The functional xi is the dual of eta
/// in the adapted wedge basis (so xi(eta) = 1 and xi vanishes on every wedge
/// touching the radical), and eps_A takes the coefficient of the empty PBW
/// monomial. The differential raises A-degree by at most one, so chains of
/// A-degree <= N are evaluated inside a window of N + 1.
inline Certificate obstruction_certificate(const LieAlgebra& L, const Subspace& h,
                                           std::size_t N) {
  if (N < 1) throw PreconditionError("obstruction_certificate needs N >= 1");
  const LeviReport levi = verify_levi(L, h);
  if (!levi.ok)
    throw PreconditionError("Levi verification failed: " + levi.failure);

  Certificate cert;
  cert.k = levi.dim_levi;
  cert.dim_radical = levi.dim_radical;
  cert.truncation = N;

  if (cert.k == 0) {
    cert.vacuous = true;
    cert.pass = true;
    cert.detail = "solvable: no obstruction (k = 0)";
    return cert;
  }

  const LieAlgebra& g = *levi.adapted;
  const std::size_t n = g.dim();
  const std::size_t m = cert.dim_radical;
  const UrModule M(g, m, N + 1);

  for (std::size_t i = m; i < n; ++i) cert.eta.push_back(static_cast<std::uint32_t>(i));
  for (std::size_t i = m; i < n; ++i) cert.eta_names.push_back(g.basis_names()[i]);
  const ChainKey eta_key{cert.eta, Expvec(m, 0)};
  const ChainElement z = {{eta_key, Rational(1)}};

  // (C1) cycle condition
  const ChainElement dz = chain_differential(g, M, z);
  cert.c1_cycle = dz.empty();
  if (!cert.c1_cycle) cert.detail = "d(eta (x) 1) != 0";

  // (C2) the functional kills the image of d on the truncated C_{k+1}
  const ChainSpace dom = chain_space(cert.k + 1, n, M, N);
  cert.c2_image_killed = true;
  for (const auto& key : dom.basis) {
    const ChainElement dw = chain_differential(g, M, {{key, Rational(1)}});
    ++cert.c2_chains_checked;
    const auto hit = dw.find(eta_key);
    if (hit != dw.end() && hit->second != 0) {
      cert.c2_image_killed = false;
      cert.detail = "functional does not vanish on d(" +
                    format_monomial(key.coeff, std::vector<std::string>(
                                                   g.basis_names().begin(),
                                                   g.basis_names().begin() + m)) +
                    " chain)";
      break;
    }
  }

  // (C3) the functional detects the cycle
  {
    const auto it = z.find(eta_key);
    cert.c3_detects = it != z.end() && it->second == 1;
  }

  // independent double check: eta (x) 1 is not d of anything in the window
  const ChainSpace cod = chain_space(cert.k, n, M, N + 1);
  const QMatrix d = ce_matrix(g, M, dom, cod);
  QVec b(cod.basis.size(), Rational(0));
  b[cod.index.at(eta_key)] = 1;
  cert.solve_no_solution = !solve(d, b).has_value();

  const bool functional_pass = cert.c1_cycle && cert.c2_image_killed && cert.c3_detects;
  cert.consistent = !functional_pass || cert.solve_no_solution;
  cert.pass = functional_pass && cert.consistent;
  if (functional_pass && !cert.consistent)
    cert.detail = "functional certificate passed but a solve found a preimage";
  return cert;
}

}  // namespace lieamk
