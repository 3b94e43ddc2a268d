#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <tuple>

#include "lieamk/uea.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace lieamk;
namespace fx = lieamk::testing;

namespace {

Expvec ev(const std::vector<std::uint32_t>& v) { return v; }

UeaElement random_element(std::mt19937& rng, const PbwAlgebra& A, std::size_t max_deg = 3) {
  const auto monos = enumerate_monomials(A.num_generators(), max_deg);
  std::uniform_int_distribution<std::size_t> nterms(1, 3);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  UeaElement x;
  const std::size_t t = nterms(rng);
  for (std::size_t i = 0; i < t; ++i)
    add_term(x, monos[pick(rng)], fx::random_nonzero_rational(rng, 3));
  return x;
}

using Tensor3 = std::map<std::tuple<Expvec, Expvec, Expvec>, Rational>;

Tensor3 delta_left(const PbwAlgebra& A, const TensorElement& t) {
  Tensor3 out;
  for (const auto& [legs, c] : t)
    for (const auto& [inner, ic] : A.coproduct({{legs.first, Rational(1)}})) {
      auto key = std::make_tuple(inner.first, inner.second, legs.second);
      out[key] += c * ic;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

Tensor3 delta_right(const PbwAlgebra& A, const TensorElement& t) {
  Tensor3 out;
  for (const auto& [legs, c] : t)
    for (const auto& [inner, ic] : A.coproduct({{legs.second, Rational(1)}})) {
      auto key = std::make_tuple(legs.first, inner.first, inner.second);
      out[key] += c * ic;
      if (out[key] == 0) out.erase(key);
    }
  return out;
}

}  // namespace

TEST_CASE("sl2 straightening: e.f = fe + h") {
  const PbwAlgebra U(fx::sl2());
  // basis order f < h < e, so e has exponent vector (0,0,1)
  const UeaElement p = U.multiply(U.generator(2), U.generator(0));
  UeaElement expected;
  add_term(expected, ev({1, 0, 1}), Rational(1));
  add_term(expected, ev({0, 1, 0}), Rational(1));
  CHECK(p == expected);
}

TEST_CASE("sl2 straightening at degree three: e.f^2") {
  const PbwAlgebra U(fx::sl2());
  const UeaElement f2 = U.multiply(U.generator(0), U.generator(0));
  const UeaElement p = U.multiply(U.generator(2), f2);
  // hand rewriting: e f f = f^2 e + 2 f h - 2 f
  UeaElement expected;
  add_term(expected, ev({2, 0, 1}), Rational(1));
  add_term(expected, ev({1, 1, 0}), Rational(2));
  add_term(expected, ev({1, 0, 0}), Rational(-2));
  CHECK(p == expected);
}

TEST_CASE("abelian straightening is a commutative merge") {
  const PbwAlgebra U(fx::abelian(3));
  CHECK(U.multiply(U.generator(1), U.generator(0)) == U.multiply(U.generator(0), U.generator(1)));
  CHECK(U.multiply(U.generator(1), U.generator(0)) == UeaElement{{ev({1, 1, 0}), Rational(1)}});
}

TEST_CASE("one is a two-sided unit") {
  const PbwAlgebra U(fx::sl2_semidirect_c2());
  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    const UeaElement x = random_element(rng, U);
    CHECK(U.multiply(U.one(), x) == x);
    CHECK(U.multiply(x, U.one()) == x);
  }
}

TEST_CASE("associativity on random low-degree elements") {
  std::mt19937 rng(20240812);
  for (const auto& L : {fx::sl2(), fx::heis3(), fx::sl2_semidirect_c2()}) {
    const PbwAlgebra U(L);
    for (int i = 0; i < 200; ++i) {
      const UeaElement x = random_element(rng, U);
      const UeaElement y = random_element(rng, U);
      const UeaElement z = random_element(rng, U);
      CHECK(U.multiply(U.multiply(x, y), z) == U.multiply(x, U.multiply(y, z)));
    }
  }
}

TEST_CASE("multiplying a basis monomial by a generator never collapses to zero") {
  for (const auto& L : {fx::sl2(), fx::gl2(), fx::heis3(), fx::sl2_semidirect_c2()}) {
    const PbwAlgebra U(L);
    for (const auto& m : enumerate_monomials(L.dim(), 3))
      for (std::size_t g = 0; g < L.dim(); ++g)
        CHECK(!U.multiply(U.monomial(m), U.generator(g)).empty());
  }
}

TEST_CASE("coproduct of a generator is primitive") {
  const PbwAlgebra U(fx::sl2());
  const TensorElement d = U.coproduct(U.generator(2));
  TensorElement expected;
  add_term(expected, ev({0, 0, 1}), ev({0, 0, 0}), Rational(1));
  add_term(expected, ev({0, 0, 0}), ev({0, 0, 1}), Rational(1));
  CHECK(d == expected);
}

TEST_CASE("coproduct of a square is binomial") {
  const PbwAlgebra U(fx::sl2());
  const UeaElement f2 = U.multiply(U.generator(0), U.generator(0));
  const TensorElement d = U.coproduct(f2);
  TensorElement expected;
  add_term(expected, ev({2, 0, 0}), ev({0, 0, 0}), Rational(1));
  add_term(expected, ev({1, 0, 0}), ev({1, 0, 0}), Rational(2));
  add_term(expected, ev({0, 0, 0}), ev({2, 0, 0}), Rational(1));
  CHECK(d == expected);
}

TEST_CASE("coproduct of one is one tensor one") {
  const PbwAlgebra U(fx::heis3());
  TensorElement expected;
  add_term(expected, ev({0, 0, 0}), ev({0, 0, 0}), Rational(1));
  CHECK(U.coproduct(U.one()) == expected);
}

TEST_CASE("counit and antipode on pinned examples") {
  const PbwAlgebra U(fx::sl2());
  UeaElement x = U.one();
  add_scaled(x, U.generator(2), Rational(3));  // 1 + 3e
  CHECK(U.counit(x) == 1);
  CHECK(U.counit(U.generator(0)) == 0);
  CHECK(U.counit(U.multiply(U.generator(1), U.generator(1))) == 0);

  // S(ef) = S(f)S(e) = fe, computed on the normal form of ef
  const UeaElement ef = U.multiply(U.generator(2), U.generator(0));
  CHECK(U.antipode(ef) == U.multiply(U.generator(0), U.generator(2)));

  CHECK(U.antipode(U.one()) == U.one());
  CHECK(U.counit(U.one()) == 1);

  const auto [eps, s] = U.counit_antipode(x);
  CHECK(eps == 1);
  CHECK(s == U.antipode(x));
}

TEST_CASE("truncate drops exactly the high-degree terms") {
  const PbwAlgebra U(fx::sl2());
  UeaElement x = U.one();
  add_scaled(x, U.generator(2), Rational(1));
  const UeaElement e2 = U.multiply(U.generator(2), U.generator(2));
  add_scaled(x, e2, Rational(1));  // 1 + e + e^2

  UeaElement expected = U.one();
  add_scaled(expected, U.generator(2), Rational(1));
  CHECK(truncate(x, 1) == expected);
  CHECK(truncate(expected, 1) == expected);
  CHECK(truncate(e2, 1).empty());
}

TEST_CASE("coassociativity on all monomials of degree <= 3") {
  for (const auto& L : {fx::sl2(), fx::heis3()}) {
    const PbwAlgebra U(L);
    for (const auto& m : enumerate_monomials(L.dim(), 3)) {
      const TensorElement d = U.coproduct(U.monomial(m));
      CHECK(delta_left(U, d) == delta_right(U, d));
    }
  }
}

TEST_CASE("counit axiom (eps (x) 1) Delta = id = (1 (x) eps) Delta") {
  std::mt19937 rng(7);
  for (const auto& L : {fx::sl2(), fx::sl2_semidirect_c2()}) {
    const PbwAlgebra U(L);
    for (int i = 0; i < 50; ++i) {
      const UeaElement x = random_element(rng, U);
      const TensorElement d = U.coproduct(x);
      UeaElement left, right;
      for (const auto& [legs, c] : d) {
        add_term(left, legs.second, c * U.counit({{legs.first, Rational(1)}}));
        add_term(right, legs.first, c * U.counit({{legs.second, Rational(1)}}));
      }
      CHECK(left == x);
      CHECK(right == x);
    }
  }
}

TEST_CASE("antipode axiom mu(S (x) 1)Delta = eps . 1") {
  std::mt19937 rng(11);
  for (const auto& L : {fx::sl2(), fx::heis3()}) {
    const PbwAlgebra U(L);
    for (int i = 0; i < 50; ++i) {
      const UeaElement x = random_element(rng, U);
      const TensorElement d = U.coproduct(x);
      UeaElement left, right;
      for (const auto& [legs, c] : d) {
        add_scaled(left, U.multiply(U.antipode({{legs.first, Rational(1)}}),
                                    {{legs.second, Rational(1)}}),
                   c);
        add_scaled(right, U.multiply({{legs.first, Rational(1)}},
                                     U.antipode({{legs.second, Rational(1)}})),
                   c);
      }
      UeaElement expected;
      add_scaled(expected, U.one(), U.counit(x));
      CHECK(left == expected);
      CHECK(right == expected);
    }
  }
}

TEST_CASE("cocommutativity: flip Delta = Delta") {
  std::mt19937 rng(13);
  for (const auto& L : {fx::sl2(), fx::gl2(), fx::sl2_semidirect_c2()}) {
    const PbwAlgebra U(L);
    for (int i = 0; i < 50; ++i) {
      const TensorElement d = U.coproduct(random_element(rng, U));
      TensorElement flipped;
      for (const auto& [legs, c] : d) add_term(flipped, legs.second, legs.first, c);
      CHECK(flipped == d);
    }
  }
}
