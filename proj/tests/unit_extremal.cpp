#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbembed/clark.hpp"
#include "kbembed/errors.hpp"
#include "kbembed/extremal.hpp"
#include "kbembed/model_space.hpp"
#include "test_support.hpp"

using namespace kbembed;
using kbembed::testing::Rng;

namespace {
const BlaschkeProduct kZ = BlaschkeProduct::monomial(1);
const BlaschkeProduct kZ2 = BlaschkeProduct::monomial(2);
const AtomicMeasure kDelta1({{cplx{1.0, 0.0}, 1.0}});
const AtomicMeasure kHalves({{cplx{1.0, 0.0}, 0.5}, {cplx{-1.0, 0.0}, 0.5}});
}  // namespace

TEST_CASE("support-count classification") {
  CHECK(is_extreme(kZ, kDelta1) == Extremality::extreme);
  CHECK(is_extreme(kZ, kHalves) == Extremality::not_extreme);

  // p = 2n-1 is still extreme
  Rng rng(41);
  BlaschkeProduct w1 = testing::random_fbp(rng, 1);
  AtomicMeasure p3 = measure_from_schur(kZ2, w1).measure;
  CHECK(p3.support_size() == 3);
  CHECK(is_extreme(kZ2, p3) == Extremality::extreme);

  CHECK_THROWS_AS(is_extreme(kZ, AtomicMeasure({{cplx{1.0, 0.0}, 0.7}})), NotEmbedding);
}

TEST_CASE("decomposition oracle: explicit cases") {
  ExtremalityReport split = decomposition_oracle(kZ, kHalves);
  CHECK(split.verdict == Extremality::not_extreme);
  REQUIRE(split.decomposition);
  REQUIRE(split.phi0);
  CHECK(std::abs(std::abs((*split.phi0)[0]) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs((*split.phi0)[1]) - 1.0) < 1e-12);
  // the halves are the two Clark measures delta_1 and delta_-1
  const auto& [plus, minus] = *split.decomposition;
  CHECK(plus.support_size() == 1);
  CHECK(minus.support_size() == 1);
  CHECK(std::abs(plus.atoms()[0].s - 1.0) < 1e-12);
  CHECK(std::abs(minus.atoms()[0].s - 1.0) < 1e-12);
  CHECK(std::abs(plus.atoms()[0].t * minus.atoms()[0].t - cplx{-1.0, 0.0}) < 1e-12);

  ExtremalityReport trivial = decomposition_oracle(kZ, kDelta1);
  CHECK(trivial.verdict == Extremality::extreme);
  CHECK_FALSE(trivial.decomposition);

  ExtremalityReport clark = decomposition_oracle(kZ2, clark_measure(kZ2, 1.0));
  CHECK(clark.verdict == Extremality::extreme);
}

TEST_CASE("oracle agrees with the support-count bound") {
  Rng rng(42);
  for (int n = 1; n <= 3; ++n)
    for (int m = 0; m <= n + 1; ++m)
      for (int rep = 0; rep < 3; ++rep) {
        BlaschkeProduct b = testing::random_fbp(rng, n);
        BlaschkeProduct w = testing::random_fbp(rng, m);
        AtomicMeasure sigma = measure_from_schur(b, w).measure;
        ExtremalityReport report = decomposition_oracle(b, sigma);
        CHECK(report.verdict == is_extreme(b, sigma));
        if (report.decomposition) {
          const auto& [plus, minus] = *report.decomposition;
          CHECK(verify_isometry(b, plus, 1e-8).passed);
          CHECK(verify_isometry(b, minus, 1e-8).passed);
          // averaging the halves returns sigma atomwise
          for (const auto& atom : sigma.atoms()) {
            double w_plus = 0.0, w_minus = 0.0;
            int ip = plus.nearest_atom(atom.t);
            if (ip >= 0 && std::abs(plus.atoms()[ip].t - atom.t) < 1e-10)
              w_plus = plus.atoms()[ip].s;
            int im = minus.nearest_atom(atom.t);
            if (im >= 0 && std::abs(minus.atoms()[im].t - atom.t) < 1e-10)
              w_minus = minus.atoms()[im].s;
            CHECK(std::abs(0.5 * (w_plus + w_minus) - atom.s) < 1e-10);
          }
        }
      }
}

TEST_CASE("verdicts are Mobius invariant") {
  Rng rng(43);
  for (int trial = 0; trial < 8; ++trial) {
    BlaschkeProduct b = testing::random_fbp(rng, 2);
    BlaschkeProduct w = testing::random_fbp(rng, trial % 4);
    AtomicMeasure sigma = measure_from_schur(b, w).measure;
    cplx a = testing::random_disk_point(rng, 0.6);
    BlaschkeProduct moved = mobius_precompose(b, a);
    AtomicMeasure pushed = mobius_pushforward(sigma, a);
    CHECK(pushed.support_size() == sigma.support_size());
    CHECK(is_extreme(moved, pushed) == is_extreme(b, sigma));
  }
}

TEST_CASE("theta product: identities") {
  Rng rng(44);
  BlaschkeProduct theta = testing::random_fbp(rng, 2);

  // idempotence
  for (int trial = 0; trial < 6; ++trial) {
    RationalSchur s = testing::random_schur(rng, 3, trial % 2 == 0);
    RationalSchur prod = theta_product(theta, s, s);
    CHECK(testing::interior_distance([&](cplx z) { return prod.eval(z); },
                                     [&](cplx z) { return s.eval(z); }) < 1e-12);
  }

  // constant theta = 1 with s2 = 1 collapses to 1
  BlaschkeProduct one{};
  for (int trial = 0; trial < 4; ++trial) {
    RationalSchur s1 = testing::random_schur(rng, 3, false);
    RationalSchur prod = theta_product(one, s1, RationalSchur::constant(1.0));
    CHECK(testing::interior_distance([&](cplx z) { return prod.eval(z); },
                                     [](cplx) { return cplx{1.0, 0.0}; }) < 1e-12);
  }

  // theta = z, s1 = 1/2, s2 = -1/2 gives z/4
  RationalSchur quarter = theta_product(BlaschkeProduct::monomial(1),
                                        RationalSchur::constant(0.5),
                                        RationalSchur::constant(-0.5));
  CHECK(testing::interior_distance([&](cplx z) { return quarter.eval(z); },
                                   [](cplx z) { return z / 4.0; }) < 1e-14);

  CHECK_THROWS_AS(theta_product(theta,
                                RationalSchur(Polynomial({{0.0, 0.0}, {2.0, 0.0}}),
                                              Polynomial::constant(1.0)),
                                RationalSchur::constant(0.1)),
                  Error);
}

TEST_CASE("theta product: closure and innerness") {
  Rng rng(45);
  for (int td = 1; td <= 3; ++td) {
    BlaschkeProduct theta = testing::random_fbp(rng, td);
    for (int trial = 0; trial < 25; ++trial) {
      bool i1 = trial % 4 < 2;
      bool i2 = trial % 2 == 0;
      RationalSchur s1 = testing::random_schur(rng, 3, i1);
      RationalSchur s2 = testing::random_schur(rng, 3, i2);
      RationalSchur prod = theta_product(theta, s1, s2);
      CHECK(schur_check(prod).ok);
      CHECK(is_inner(prod) == (i1 && i2));
    }
  }
}

TEST_CASE("primality by degree") {
  CHECK(theta_prime_fbp(kZ2, BlaschkeProduct{}));
  Rng rng(46);
  CHECK(theta_prime_fbp(kZ2, testing::random_fbp(rng, 1)));
  CHECK_FALSE(theta_prime_fbp(kZ, BlaschkeProduct::monomial(1)));
}

TEST_CASE("factor witness") {
  auto w = factor_witness(kZ, BlaschkeProduct::monomial(1));
  REQUIRE(w);
  // the Clark parameters of delta_1 and delta_-1: constants 1 and -1
  CHECK(std::abs(std::abs(w->first.eval(0.2)) - 1.0) < 1e-10);
  CHECK(std::abs(std::abs(w->second.eval(0.2)) - 1.0) < 1e-10);
  CHECK(std::abs(w->first.eval(0.2) + w->second.eval(0.2)) < 1e-10);

  CHECK_FALSE(factor_witness(kZ2, BlaschkeProduct{}));

  Rng rng(47);
  for (int trial = 0; trial < 6; ++trial) {
    BlaschkeProduct theta = testing::random_fbp(rng, 2);
    BlaschkeProduct omega = testing::random_fbp(rng, 3);
    auto pair = factor_witness(theta, omega);
    REQUIRE(pair);
    RationalSchur prod = theta_product(theta, pair->first, pair->second);
    CHECK(testing::interior_distance([&](cplx z) { return prod.eval(z); },
                                     [&](cplx z) { return omega.eval(z); }) < 1e-7);
  }
}

TEST_CASE("products of distinct inner factors leave the low-degree class") {
  // if the product were a parameter of degree <= n-1 it would be prime and
  // force equal factors
  Rng rng(48);
  for (int trial = 0; trial < 10; ++trial) {
    BlaschkeProduct theta = testing::random_fbp(rng, 2);
    RationalSchur w1 = from_blaschke(testing::random_fbp(rng, trial % 3));
    RationalSchur w2 = from_blaschke(testing::random_fbp(rng, (trial + 1) % 3 + 1));
    RationalSchur prod = theta_product(theta, w1, w2);
    CHECK(prod.degree() >= theta.degree());
  }
}

TEST_CASE("clark measures are extreme for every parameter") {
  Rng rng(49);
  for (int trial = 0; trial < 16; ++trial) {
    BlaschkeProduct b = testing::random_fbp(rng, 1 + trial % 4);
    AtomicMeasure sigma = clark_measure(b, testing::random_unimodular(rng));
    CHECK(static_cast<int>(sigma.support_size()) == b.degree());
    CHECK(is_extreme(b, sigma) == Extremality::extreme);
    CHECK(decomposition_oracle(b, sigma).verdict == Extremality::extreme);
  }
}
