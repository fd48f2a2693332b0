#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modinv/genera.hpp"
#include "modinv/witten.hpp"

using namespace modinv;

namespace {

GradedClass ch_t(const RootProfile& p) { return CharacterElement::tangent(p).character(); }

// ch of Lambda^2 of a virtual bundle with character c and Adams image psi2
GradedClass lambda2(const GradedClass& c, const GradedClass& psi2) {
  return (c * c - psi2) * Rational(1, 2);
}

}  // namespace

TEST_CASE("Lambda/S duality: S_t(E) Lambda_{-t}(E) = 1") {
  for (int dim : {1, 2, 5, 6}) {
    const RootProfile prof(dim, 8);
    for (VirtualRoots e : {VirtualRoots::tangent(), VirtualRoots::reduced_tangent(prof),
                           VirtualRoots::trivial(3), VirtualRoots{-2, 1}}) {
      for (TMonomial t : {TMonomial{1, 1}, TMonomial{-1, 1}, TMonomial{1, 2}}) {
        const auto s = s_t_character(e, t, prof, 7);
        const auto l = lambda_t_character(e, {-t.sign, t.exp2}, prof, 7);
        CHECK((s * l).truncated(7) == ClassQSeries::one(prof, 7));
      }
    }
  }
}

TEST_CASE("Lambda_t is multiplicative over direct sums") {
  const RootProfile prof(6, 8);
  const TMonomial t{1, 1};
  const auto a = lambda_t_character({2, -3}, t, prof, 6);
  const auto b = lambda_t_character({1, 0}, t, prof, 6).pow(2) * lambda_t_character({0, -3}, t, prof, 6);
  CHECK(a == b.truncated(6));
}

TEST_CASE("low exterior powers of T_C Z") {
  const RootProfile prof(7, 8);
  const auto l = lambda_t_character(VirtualRoots::tangent(), {1, 2}, prof, 6);
  CHECK(l.coeff(0) == GradedClass::scalar(prof, 1));
  CHECK(l.coeff(1).is_zero());
  CHECK(l.coeff(2) == ch_t(prof));
  const GradedClass psi2 = sum_over_roots(exp_series(prof.max_x_degree() + 1, 2), prof);
  CHECK(l.coeff(4) == lambda2(ch_t(prof), psi2));
}

TEST_CASE("Theta_2 Fourier coefficients") {
  const RootProfile prof(10, 8);
  const auto th = build_theta_bundle(ThetaKind::theta2, prof, 4);
  const GradedClass one = GradedClass::scalar(prof, 1);
  const GradedClass reduced = ch_t(prof) - one * 10;
  CHECK(extract_fourier(th, 0).character() == one);
  CHECK(extract_fourier(th, 1).character() == -reduced);
  // q^1: S^1 from the first factor plus Lambda^2 from the second
  const GradedClass psi2 =
      sum_over_roots(exp_series(prof.max_x_degree() + 1, 2), prof) - one * 10;
  CHECK(extract_fourier(th, 2).character() == reduced + lambda2(reduced, psi2));
  CHECK(*extract_fourier(th, 1).label == "B_1");
  CHECK_THROWS_AS(extract_fourier(th, 4), std::out_of_range);
}

TEST_CASE("Theta_1 Fourier coefficients") {
  const RootProfile prof(6, 8);
  const auto th = build_theta_bundle(ThetaKind::theta1, prof, 4);
  const GradedClass reduced = ch_t(prof) - GradedClass::scalar(prof, 6);
  CHECK(extract_fourier(th, 0).character() == GradedClass::scalar(prof, 1));
  CHECK(extract_fourier(th, 1).character().is_zero());
  CHECK(extract_fourier(th, 2).character() == reduced * 2);
  CHECK(*extract_fourier(th, 0).label == "A_0");
}

TEST_CASE("character elements") {
  const RootProfile prof(6, 8);
  const auto t = CharacterElement::tangent(prof);
  CHECK(t.virtual_rank == 6);
  CHECK(*t.label == "T_C Z");
  CHECK(t * CharacterElement::trivial(prof, 2) == t + t);
  CHECK((t - t).form_part.is_zero());
  CHECK_THROWS_AS(CharacterElement::from_character(GradedClass::scalar(prof, Rational(1, 2))),
                  std::domain_error);
  CHECK_THROWS_AS(build_theta_bundle(ThetaKind::theta2, prof, 0), std::invalid_argument);
  CHECK_THROWS_AS(lambda_t_character(VirtualRoots::tangent(), {1, 0}, prof, 3), std::invalid_argument);
}
