#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modinv/genera.hpp"
#include "support/oracle.hpp"

using namespace modinv;

TEST_CASE("variant names") {
  CHECK(parse_l_variant("full") == LVariant::full_angle);
  CHECK(parse_l_variant("half") == LVariant::half_angle);
  CHECK(to_string(LVariant::half_angle) == "half");
  CHECK_THROWS_AS(parse_l_variant("quarter"), std::invalid_argument);
}

TEST_CASE("low-degree genera") {
  const RootProfile prof(2, 4);
  const GradedClass p1 = GradedClass::pontryagin(prof, 1);
  CHECK(a_hat(prof).degree_component(4) == p1 * Rational(-1, 24));
  CHECK(l_class(prof, LVariant::full_angle).degree_component(4) == p1 * Rational(1, 3));
  CHECK(l_class(prof, LVariant::half_angle).degree_component(4) == p1 * Rational(1, 6));
  CHECK(l_class(prof, LVariant::half_angle).constant() == 2);
  CHECK(l_class(RootProfile(3, 4), LVariant::half_angle).constant() == 4);
}

TEST_CASE("half/full conversion factor matches the classes") {
  for (int dim = 1; dim <= 12; ++dim) {
    const RootProfile prof(dim, 16);
    const GradedClass full = l_class(prof, LVariant::full_angle);
    const GradedClass half = l_class(prof, LVariant::half_angle);
    for (int degree = 0; degree <= 16; degree += 4) {
      CHECK(half.degree_component(degree) ==
            full.degree_component(degree) * l_variant_factor(prof, degree));
    }
  }
  CHECK_THROWS_AS(l_variant_factor(RootProfile(2, 8), 6), std::invalid_argument);
}

TEST_CASE("spinor character against direct evaluation") {
  std::mt19937_64 rng(99);
  for (int dim : {2, 4, 7}) {
    const RootProfile prof(dim, 12);
    const int k = prof.max_x_degree();
    const auto roots = oracle::random_roots(rng, prof.n_pairs());
    const auto per_root = oracle::qscale(oracle::cosh_poly(k + 1, Rational(1, 2)), 2);
    CHECK(eval_at_roots(spinor_character(prof), roots) == oracle::eval_product(per_root, roots, false, k));
  }
  CHECK(spinor_character(RootProfile(6, 0)).constant() == 8);
}
