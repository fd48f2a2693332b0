#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modinv/chroot.hpp"
#include "modinv/genera.hpp"
#include "modinv/witten.hpp"
#include "support/oracle.hpp"

using namespace modinv;

namespace {

GradedClass p(const RootProfile& prof, int i) { return GradedClass::pontryagin(prof, i); }

}  // namespace

TEST_CASE("root profile bookkeeping") {
  const RootProfile odd(7, 12);
  CHECK(odd.n_pairs() == 3);
  CHECK(odd.has_zero_root());
  CHECK(odd.max_weight() == 3);
  CHECK(odd.max_x_degree() == 6);
  CHECK_THROWS_AS(RootProfile(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(RootProfile(4, 3), std::invalid_argument);
}

TEST_CASE("graded lexicographic order and weights") {
  CHECK(monomial_weight({1, 1, 0}) == 3);
  GradedLex lt;
  CHECK(lt({1, 0}, {0, 1}));      // weight 1 before weight 2
  CHECK(lt({2, 0}, {0, 1}));      // p1^2 before p2 at weight 2
  CHECK_FALSE(lt({0, 1}, {2, 0}));
}

TEST_CASE("truncation drops terms beyond the profile") {
  const RootProfile prof(4, 4);
  const GradedClass x = p(prof, 1) * p(prof, 1);
  CHECK(x.is_zero());
  CHECK(p(prof, 2).is_zero());
  CHECK(p(prof, 3).is_zero());
  CHECK_THROWS_AS(p(prof, 1).degree_component(6), std::out_of_range);
  CHECK_THROWS_AS(p(prof, 1).degree_component(8), std::out_of_range);
  CHECK(p(prof, 1).degree_component(2).is_zero());
}

TEST_CASE("A-hat, L and ch(T) closed forms") {
  const RootProfile f4(4, 8);
  const GradedClass ahat = a_hat(f4);
  const GradedClass expected_ahat = GradedClass::scalar(f4, 1) - p(f4, 1) * Rational(1, 24) +
                                    (p(f4, 1) * p(f4, 1) * Rational(7) - p(f4, 2) * Rational(4)) *
                                        Rational(1, 5760);
  CHECK(ahat == expected_ahat);

  const RootProfile f6(6, 8);
  const GradedClass l8 = l_class(f6, LVariant::full_angle).degree_component(8);
  CHECK(l8 == (p(f6, 2) * Rational(7) - p(f6, 1) * p(f6, 1)) * Rational(1, 45));
  CHECK(l_class(f6, LVariant::full_angle).degree_component(4) == p(f6, 1) * Rational(1, 3));

  const GradedClass ch6 = CharacterElement::tangent(f6).character();
  CHECK(ch6 == GradedClass::scalar(f6, 6) + p(f6, 1) +
                   (p(f6, 1) * p(f6, 1) - p(f6, 2) * Rational(2)) * Rational(1, 12));
  const RootProfile f3(3, 8);
  CHECK(CharacterElement::tangent(f3).character() ==
        GradedClass::scalar(f3, 3) + p(f3, 1) + p(f3, 1) * p(f3, 1) * Rational(1, 12));
}

TEST_CASE("power sums match direct evaluation") {
  std::mt19937_64 rng(5);
  const RootProfile prof(8, 16);
  const auto ps = power_sums(prof);
  for (int trial = 0; trial < 10; ++trial) {
    const auto roots = oracle::random_roots(rng, prof.n_pairs());
    for (int k = 1; k <= prof.max_weight(); ++k) {
      Rational direct = 0;
      for (const auto& x : roots) direct += oracle::power(x, 2 * k);
      CHECK(eval_at_roots(ps[k], roots) == direct);
    }
  }
}

TEST_CASE("Newton conversion roundtrip: 50 random root vectors") {
  std::mt19937_64 rng(20240601);
  int checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int dim = 1 + trial % 11;
    const RootProfile prof(dim, 4 * (1 + trial % 4));
    const int k = prof.max_x_degree();
    const auto roots = oracle::random_roots(rng, prof.n_pairs());
    const bool z = prof.has_zero_root();

    CHECK(eval_at_roots(a_hat(prof), roots) == oracle::eval_product(oracle::a_hat_poly(k + 1), roots, z, k));
    CHECK(eval_at_roots(l_class(prof, LVariant::full_angle), roots) ==
          oracle::eval_product(oracle::l_full_poly(k + 1), roots, z, k));
    CHECK(eval_at_roots(CharacterElement::tangent(prof).character(), roots) ==
          oracle::eval_sum(oracle::exp_poly(k + 1, 1), roots, z, k));
    ++checked;
  }
  CHECK(checked == 50);
}

TEST_CASE("class inverse") {
  const RootProfile prof(6, 12);
  const GradedClass ahat = a_hat(prof);
  CHECK(ahat * ahat.inverse() == GradedClass::scalar(prof, 1));
  CHECK_THROWS(p(prof, 1).inverse());
}

TEST_CASE("restriction and display") {
  const RootProfile prof(4, 8);
  const GradedClass ahat = a_hat(prof);
  CHECK(ahat.restricted(4) == GradedClass::scalar(RootProfile(4, 4), 1) -
                                  p(RootProfile(4, 4), 1) * Rational(1, 24));
  CHECK(ahat.to_display() == "1 - 1/24 p1 + 7/5760 p1^2 - 1/1440 p2");
  CHECK_THROWS_AS(ahat.restricted(12), std::invalid_argument);
}

TEST_CASE("mismatched profiles are rejected") {
  CHECK_THROWS_AS(p(RootProfile(4, 8), 1) + p(RootProfile(6, 8), 1), std::invalid_argument);
}
