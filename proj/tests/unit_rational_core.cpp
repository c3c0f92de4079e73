#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbembed/blaschke.hpp"
#include "kbembed/errors.hpp"
#include "kbembed/json_io.hpp"
#include "kbembed/polynomial.hpp"
#include "kbembed/schur.hpp"
#include "test_support.hpp"

using namespace kbembed;
using kbembed::testing::Rng;

TEST_CASE("polynomial roots recover constructed zeros") {
  std::vector<cplx> zeros{{0.3, 0.4}, {-0.7, 0.1}, {0.0, -0.9}, {1.5, 0.2}};
  Polynomial p = Polynomial::from_roots(zeros, {2.0, -1.0});
  auto roots = p.roots();
  REQUIRE(roots.size() == zeros.size());
  for (cplx z : zeros) {
    double best = 1e9;
    for (cplx r : roots) best = std::min(best, std::abs(r - z));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("reversed polynomial") {
  CHECK(reversed(Polynomial({{1.0, 0.0}, {2.0, 0.0}}), 1).coeffs() ==
        std::vector<cplx>{{2.0, 0.0}, {1.0, 0.0}});
  CHECK(reversed(Polynomial::constant(1.0), 2).coeffs() ==
        std::vector<cplx>{{0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}});
  CHECK(reversed(Polynomial({{0.0, 1.0}, {2.0, 0.0}}), 1).coeffs() ==
        std::vector<cplx>{{2.0, 0.0}, {0.0, -1.0}});
  CHECK_THROWS_AS(reversed(Polynomial({{1.0, 0.0}, {0.0, 0.0}, {3.0, 0.0}}), 1),
                  DegreeMismatch);
}

TEST_CASE("double reversal is the identity") {
  Rng rng(1);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> c(1 + trial % 6);
    for (auto& v : c) v = {coeff(rng), coeff(rng)};
    c.back() += cplx{3.0, 0.0};  // keep the degree stable
    Polynomial q(c);
    int m = q.degree() + trial % 3;
    CHECK(reversed(reversed(q, m), m) == q);
  }
}

TEST_CASE("blaschke evaluation examples") {
  BlaschkeProduct identity = BlaschkeProduct::monomial(1);
  CHECK(std::abs(identity.eval(0.5) - 0.5) < 1e-15);

  BlaschkeProduct square = BlaschkeProduct::monomial(2);
  CHECK(std::abs(square.eval({0.0, 1.0}) - cplx{-1.0, 0.0}) < 1e-15);

  BlaschkeProduct half({BlaschkeZero{0.5, 1}});
  CHECK(std::abs(half.eval(0.0) - 0.5) < 1e-15);

  CHECK_THROWS_AS(half.eval(2.0), PoleProximity);
}

TEST_CASE("unimodular on the circle") {
  Rng rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    BlaschkeProduct b = testing::random_fbp(rng, 1 + trial % 6);
    for (int i = 0; i < 16; ++i) {
      cplx t = testing::random_unimodular(rng);
      CHECK(std::abs(std::abs(b.eval(t)) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("log derivative examples") {
  CHECK(std::abs(BlaschkeProduct::monomial(1).log_derivative(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(BlaschkeProduct::monomial(2).log_derivative({0.0, 1.0}) - 2.0) < 1e-14);
  BlaschkeProduct half({BlaschkeZero{0.5, 1}});
  CHECK(std::abs(half.log_derivative(1.0) - 3.0) < 1e-14);
}

TEST_CASE("log derivative is positive real on the circle") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BlaschkeProduct b = testing::random_fbp(rng, 1 + trial % 5);
    cplx v = b.log_derivative(testing::random_unimodular(rng));
    CHECK(std::abs(v.imag()) < 1e-10);
    CHECK(v.real() > 0.0);
  }
}

TEST_CASE("multiply merges divisors") {
  BlaschkeProduct z = BlaschkeProduct::monomial(1);
  BlaschkeProduct sq = multiply(z, z);
  CHECK(sq.degree() == 2);
  CHECK(sq.zeros().size() == 1);
  CHECK(sq.zeros()[0].r == 2);

  BlaschkeProduct neg = multiply(BlaschkeProduct(cplx{-1.0, 0.0}), z);
  CHECK(std::abs(neg.eval(0.3) - cplx{-0.3, 0.0}) < 1e-15);

  BlaschkeProduct h1({BlaschkeZero{0.5, 1}}), h2({BlaschkeZero{0.5, 1}});
  BlaschkeProduct merged = multiply(h1, h2);
  CHECK(merged.zeros().size() == 1);
  CHECK(merged.zeros()[0].r == 2);

  // eval agrees with the pointwise product
  Rng rng(4);
  BlaschkeProduct a = testing::random_fbp(rng, 3), b = testing::random_fbp(rng, 2);
  BlaschkeProduct ab = multiply(a, b);
  for (int i = 0; i < 8; ++i) {
    cplx p = testing::random_disk_point(rng, 0.8);
    CHECK(std::abs(ab.eval(p) - a.eval(p) * b.eval(p)) < 1e-13);
  }
}

TEST_CASE("quotient form reproduces the product") {
  Rng rng(5);
  auto check_roundtrip = [](const BlaschkeProduct& b) {
    BlaschkeQuotient quo = to_quotient(b);
    Polynomial qstar = reversed(quo.q, std::max(quo.q.degree(), 0));
    for (int i = 0; i < 64; ++i) {
      cplx t = unit(2.0 * M_PI * i / 64.0);
      CHECK(std::abs(quo.gamma * quo.q.eval(t) / qstar.eval(t) - b.eval(t)) < 1e-12);
    }
  };
  check_roundtrip(BlaschkeProduct::monomial(1));
  check_roundtrip(BlaschkeProduct({BlaschkeZero{0.5, 1}}));
  for (int trial = 0; trial < 10; ++trial)
    check_roundtrip(testing::random_fbp(rng, 1 + trial % 5));

  BlaschkeQuotient constant = to_quotient(BlaschkeProduct(cplx{0.0, 1.0}));
  CHECK(constant.q.degree() == 0);
  CHECK(std::abs(constant.gamma - cplx{0.0, 1.0}) < 1e-15);
}

TEST_CASE("mobius precompose") {
  Rng rng(6);
  BlaschkeProduct b = testing::random_fbp(rng, 3);
  BlaschkeProduct same = mobius_precompose(b, 0.0);
  CHECK(testing::interior_distance([&](cplx z) { return same.eval(z); },
                                   [&](cplx z) { return b.eval(z); }) < 1e-13);

  BlaschkeProduct z_shift = mobius_precompose(BlaschkeProduct::monomial(1), 0.5);
  REQUIRE(z_shift.zeros().size() == 1);
  CHECK(std::abs(z_shift.zeros()[0].z - cplx{-0.5, 0.0}) < 1e-15);

  for (int trial = 0; trial < 10; ++trial) {
    BlaschkeProduct rnd = testing::random_fbp(rng, 1 + trial % 4);
    cplx a = testing::random_disk_point(rng, 0.7);
    BlaschkeProduct composed = mobius_precompose(rnd, a);
    CHECK(composed.degree() == rnd.degree());
    auto direct = [&](cplx z) { return rnd.eval((z + a) / (1.0 + std::conj(a) * z)); };
    CHECK(testing::interior_distance([&](cplx z) { return composed.eval(z); }, direct) <
          1e-12);
    // precomposing with the inverse parameter returns the original
    BlaschkeProduct back = mobius_precompose(composed, -a);
    CHECK(testing::interior_distance([&](cplx z) { return back.eval(z); },
                                     [&](cplx z) { return rnd.eval(z); }) < 1e-12);
  }
}

TEST_CASE("schur membership check") {
  SchurCheck c1 = schur_check(RationalSchur::constant(0.3));
  CHECK(c1.ok);
  CHECK(c1.max_modulus == doctest::Approx(0.3).epsilon(1e-12));

  SchurCheck c2 = schur_check(from_blaschke(BlaschkeProduct::monomial(1)));
  CHECK(c2.ok);
  CHECK(c2.max_modulus == doctest::Approx(1.0).epsilon(1e-12));

  SchurCheck c3 = schur_check(
      RationalSchur(Polynomial({{0.0, 0.0}, {2.0, 0.0}}), Polynomial::constant(1.0)));
  CHECK_FALSE(c3.ok);
  CHECK(c3.max_modulus == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("inner conversion round trip") {
  Rng rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    BlaschkeProduct b = testing::random_fbp(rng, trial % 4);
    BlaschkeProduct back = to_blaschke(from_blaschke(b));
    CHECK(back.degree() == b.degree());
    CHECK(testing::interior_distance([&](cplx z) { return back.eval(z); },
                                     [&](cplx z) { return b.eval(z); }) < 1e-10);
  }
  CHECK_THROWS_AS(to_blaschke(RationalSchur::constant(0.5)), NotFinitelySupported);
}

TEST_CASE("json round trips") {
  Rng rng(8);
  BlaschkeProduct b = testing::random_fbp(rng, 3);
  BlaschkeProduct b2 = blaschke_from_json(to_json(b));
  CHECK(b2.degree() == b.degree());
  CHECK(std::abs(b2.gamma() - b.gamma()) < 1e-15);
  CHECK(testing::interior_distance([&](cplx z) { return b2.eval(z); },
                                   [&](cplx z) { return b.eval(z); }) == 0.0);

  Polynomial p({{1.5, -0.5}, {0.0, 2.0}});
  CHECK(polynomial_from_json(to_json(p)) == p);

  RationalSchur s = from_blaschke(b);
  RationalSchur s2 = schur_from_json(to_json(s));
  CHECK(s2.num() == s.num());
  CHECK(s2.den() == s.den());
}
