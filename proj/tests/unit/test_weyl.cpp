#include <doctest.h>

#include "stabkit/pencils.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/weyl.hpp"
#include "support.hpp"

using namespace stabkit;
using namespace stabkit::testing;

namespace {

WeylOp D() { return WeylOp::d(1, 0); }
WeylOp Z() { return WeylOp::z(1, 0); }

}  // namespace

TEST_CASE("application") {
  const MultiPoly z3 = poly(1, {{{3}, 1}});
  CHECK(apply(D(), z3) == poly(1, {{{2}, 3}}));
  const WeylOp euler = Z() * D();
  for (unsigned k = 0; k < 6; ++k) CHECK(apply(euler, poly(1, {{{k}, 1}})) == poly(1, {{{k}, GaussRat(static_cast<long>(k))}}));
  CHECK_THROWS(apply(D(), poly(2, {{{1, 0}, 1}})));

  // 1 + i d/dz1 keeps stable inputs stable
  const WeylOp T = WeylOp::identity(2) + WeylOp::d(2, 0).scale(GaussRat::i());
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GaussianMatrix> As{random_psd(rng, 3, 2), random_psd(rng, 3, 2)};
    const auto f = pencil_polynomial(As, random_hermitian(rng, 3, 3, 2, true));
    SampleConfig cfg;
    cfg.trials = 50;
    CHECK(check_stable(apply(T, f.poly), StabilityClass::HC, cfg).passed());
  }
}

TEST_CASE("symbols") {
  CHECK(symbol(D()) == poly(2, {{{0, 1}, 1}}));
  WeylOp T(1);
  T.add_term({2}, {3}, GaussRat(1));
  CHECK(symbol(T) == poly(2, {{{2, 3}, 1}}));
  Rng rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    const WeylOp S = random_op(rng, 2, 3, 2, 3);
    CHECK(op_from_symbol(symbol(S)) == S);
    const WeylOp R = random_op(rng, 2, 3, 2, 3);
    CHECK(symbol(S + R) == symbol(S) + symbol(R));
  }
  CHECK_THROWS(op_from_symbol(MultiPoly(3)));
}

TEST_CASE("composition") {
  CHECK(symbol(compose(D(), Z())) == poly(2, {{{1, 1}, 1}, {{0, 0}, 1}}));
  CHECK(compose(Z(), D()) == Z() * D());
  CHECK(compose(D(), Z()) - compose(Z(), D()) == WeylOp::identity(1));
  CHECK_THROWS(compose(D(), WeylOp::d(2, 0)));
}

TEST_CASE("composition against the monomial basis") {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 2));
    const WeylOp S = random_op(rng, n, 3, 2, 3), T = random_op(rng, n, 3, 2, 3);
    const WeylOp ST = compose(S, T);
    for (const auto& m : monomials_up_to(n, 8)) {
      MultiPoly direct(n);
      const MultiPoly inner = apply_to_monomial(T, m);
      for (const auto& [e, c] : inner.terms()) direct += apply_to_monomial(S, e).scale(c);
      CHECK(apply_to_monomial(ST, m) == direct);
    }
  }
}

TEST_CASE("composition is associative and the adjoint reverses products") {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const WeylOp A = random_op(rng, 2, 2, 2, 3), B = random_op(rng, 2, 2, 2, 3), C = random_op(rng, 2, 2, 2, 3);
    CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
    const WeylOp Bi = B.scale(GaussRat(Rational(1), Rational(2)));
    CHECK(adjoint(compose(A, Bi)) == compose(adjoint(Bi), adjoint(A)));
    CHECK(adjoint(adjoint(Bi)) == Bi);
  }
}

TEST_CASE("star product") {
  const MultiPoly z = poly(2, {{{1, 0}, 1}}), w = poly(2, {{{0, 1}, 1}});
  CHECK(star_product(z, w) == poly(2, {{{1, 1}, 1}, {{0, 0}, -1}}));
  CHECK(star_product(MultiPoly::constant(2, 1), z * w + w) == z * w + w);
  CHECK(star_product(w, z) == z * w);
  CHECK_THROWS(star_product(z, MultiPoly(4)));
}

TEST_CASE("star products of certified real stable symbols stay stable") {
  Rng rng(45);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<GaussianMatrix> As{random_psd(rng, 2, 2), random_psd(rng, 2, 2)};
    const auto F = pencil_polynomial(As, random_hermitian(rng, 2, 3, 2, true));
    As = {random_psd(rng, 2, 2), random_psd(rng, 2, 2)};
    const auto G = pencil_polynomial(As, random_hermitian(rng, 2, 3, 2, true));
    SampleConfig cfg;
    cfg.trials = 80;
    CHECK(check_stable(star_product(F.poly, G.poly), StabilityClass::HR, cfg).passed());
  }
}

TEST_CASE("adjoint") {
  CHECK(adjoint(D()) == Z());
  CHECK(adjoint(Z() * D()) == Z() * D());
  CHECK(adjoint(D().scale(GaussRat::i())) == Z().scale(-GaussRat::i()));
}

TEST_CASE("symbol with negated w") {
  const WeylOp T = WeylOp::identity(1) + D().scale(GaussRat::i());
  CHECK(symbol_negate_w(T) == poly(2, {{{0, 0}, 1}, {{0, 1}, -GaussRat::i()}}));
  CHECK(symbol_negate_w(D() * D()) == poly(2, {{{0, 2}, 1}}));
  CHECK(symbol_negate_w(Z() - D()) == poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("multiplier data bridge") {
  MultiplierData lambda({7});
  for (std::size_t k = 0; k < 7; ++k) lambda.values[k] = static_cast<long>(k);
  CHECK(diag_from_sequence(lambda) == Z() * D());

  for (std::size_t k = 0; k < 7; ++k) lambda.values[k] = static_cast<long>(k) + 1;
  const WeylOp T = diag_from_sequence(lambda);
  CHECK(symbol(T) == poly(2, {{{0, 0}, 1}, {{1, 1}, 1}}));
  for (unsigned k = 0; k <= 6; ++k) {
    CHECK(apply(T, poly(1, {{{k}, 1}})) == poly(1, {{{k}, GaussRat(static_cast<long>(k) + 1)}}));
  }

  for (auto& v : lambda.values) v = 1;
  CHECK(diag_from_sequence(lambda) == WeylOp::identity(1));

  Rng rng(46);
  MultiplierData box({3, 4});
  for (auto& v : box.values) v = rng.rational(-5, 5, 4);
  const MultiplierData back = sequence_from_diag(diag_from_sequence(box), box.extents);
  CHECK(back.values == box.values);
  CHECK_THROWS_AS(sequence_from_diag(D(), {3}), std::invalid_argument);
}
