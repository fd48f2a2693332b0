#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "modinv/anomaly.hpp"
#include "modinv/thetanum.hpp"
#include "support/oracle.hpp"

using namespace modinv;

namespace {

GradedClass p(const RootProfile& prof, int i) { return GradedClass::pontryagin(prof, i); }

}  // namespace

TEST_CASE("form kinds and routes") {
  CHECK(parse_form_kind("P2") == FormKind::p2);
  CHECK(to_string(FormKind::q1) == "Q1");
  CHECK(parse_route("theta_product") == Route::theta_product);
  CHECK_THROWS_AS(parse_form_kind("R1"), std::invalid_argument);
  CHECK_THROWS_AS(p_form(FormKind::p2, 1, RootProfile(6, 4), Route::ktheory, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_form(FormKind::q2, 0, RootProfile(2, 4), Route::ktheory, 3), std::invalid_argument);
}

TEST_CASE("q^0 terms of the forms") {
  const RootProfile prof(2, 4);
  const auto p2 = p_form(FormKind::p2, 0, prof, Route::ktheory, 4);
  CHECK(p2.series.coeff(0) == p(p2.profile, 1) * Rational(-1, 24));
  const auto p1 = p_form(FormKind::p1, 0, prof, Route::ktheory, 4);
  CHECK(p1.series.coeff(0) == p(p1.profile, 1) * Rational(1, 3));

  const RootProfile ten(10, 12);
  const auto p2_10 = p_form(FormKind::p2, 1, ten, Route::ktheory, 3);
  const GradedClass ahat = a_hat(ten);
  const GradedClass ch_t = CharacterElement::tangent(ten).character();
  CHECK(p2_10.series.coeff(1) ==
        (ahat * (GradedClass::scalar(ten, 10) - ch_t)).degree_component(12));
}

TEST_CASE("decomposition identity") {
  const auto r0 = verify_decomposition_identity(0, RootProfile(2, 4), 5);
  CHECK(r0.status == Status::pass);
  CHECK(r0.residuals.empty());
  // P_2 = (p1/24) (8 delta_2): the q^{1/2} coefficient is -24 * (p1/24)
  const RootProfile prof(2, 4);
  CHECK(r0.lhs.coeff(1) == p(prof, 1) * Rational(-1));
  CHECK(verify_decomposition_identity(1, RootProfile(10, 4), 6).status == Status::pass);
  CHECK(verify_decomposition_identity(1, RootProfile(6, 4)).status == Status::pass);
  CHECK(verify_decomposition_identity(0, RootProfile(1, 4)).status == Status::degenerate_zero);
  CHECK_THROWS_AS(verify_decomposition_identity(1, RootProfile(10, 4), 1), std::invalid_argument);
}

TEST_CASE("guard raise keeps the decomposition residual empty") {
  for (int dim : {2, 3, 5, 6, 7, 9, 10, 11, 13, 17}) {
    const auto [m, kind] = fiber_class(dim);
    (void)kind;
    CHECK(verify_decomposition_identity(m, RootProfile(dim, 4), m + 5).status == Status::pass);
  }
}

TEST_CASE("P_2 basis coefficients at m = 1, fiber 10") {
  const RootProfile prof(10, 12);
  const auto p2 = p_form(FormKind::p2, 1, prof, Route::ktheory, 5);
  const auto h = basis_decompose(p2.series, 6);
  REQUIRE(h.size() == 2);
  CHECK(h[0] == -a_hat(p2.profile).degree_component(12));
}

TEST_CASE("main identity examples") {
  const auto full = verify_main_identity(0, RootProfile(2, 4), LVariant::full_angle);
  CHECK(full.status == Status::pass);
  CHECK(*full.lambda == 8);
  CHECK(*full.reference_ratio == 1);
  const auto half = verify_main_identity(0, RootProfile(2, 4), LVariant::half_angle);
  CHECK(*half.lambda == 4);
  CHECK(*half.reference_ratio == Rational(1, 2));

  const auto z = verify_main_identity(1, RootProfile(6, 4));
  CHECK(z.status == Status::pass);
  CHECK(*z.lambda == 64);
  // 22 A_2 - {A ch T}_2 = L_2 in fiber 6
  const RootProfile six(6, 8);
  const GradedClass ahat = a_hat(six);
  const GradedClass lhs = (ahat * 22 - ahat * CharacterElement::tangent(six).character()).degree_component(8);
  CHECK(lhs == l_class(six, LVariant::full_angle).degree_component(8));

  CHECK(*verify_main_identity(1, RootProfile(10, 4)).lambda == 512);
  CHECK(verify_main_identity(0, RootProfile(1, 4)).status == Status::degenerate_zero);
  CHECK_FALSE(verify_main_identity(0, RootProfile(1, 4)).lambda.has_value());
}

TEST_CASE("convention coherence") {
  for (int dim : {2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15, 17, 18, 19}) {
    const auto [m, kind] = fiber_class(dim);
    const auto full = verify_main_identity(m, RootProfile(dim, 4), LVariant::full_angle);
    const auto half = verify_main_identity(m, RootProfile(dim, 4), LVariant::half_angle);
    REQUIRE(full.lambda);
    REQUIRE(half.lambda);
    CHECK(half.status == Status::pass);
    const int degree = target_degree(m, kind);
    CHECK(*half.lambda / *full.lambda == l_variant_factor(RootProfile(dim, degree), degree));
    CHECK(is_power_of_two(*half.reference_ratio));
  }
}

TEST_CASE("cancellation formulas") {
  for (int dim : {2, 6, 10}) {
    const auto r = verify_agw(dim);
    CHECK(r.status == Status::pass);
    CHECK(r.residuals.empty());
    CHECK(*r.reference_ratio == 1);
    CHECK(verify_agw(dim, LVariant::half_angle).status == Status::fail);
  }
  CHECK_THROWS_AS(verify_agw(4), std::invalid_argument);
}

TEST_CASE("cancellation formulas at random roots") {
  // a class of degree 4k in n = dim/2 pairs vanishes iff it vanishes at generic roots
  std::mt19937_64 rng(1010);
  for (int dim : {2, 6, 10}) {
    const auto c = agw_coefficients(dim);
    const int k = (dim + 2) / 2;
    const auto ahat = oracle::a_hat_poly(k + 1);
    const auto l = oracle::l_full_poly(k + 1);
    for (int trial = 0; trial < 3; ++trial) {
      const auto roots = oracle::random_roots(rng, dim / 2);
      Rational a_ch_t = 0;
      for (int a = 0; a <= k; ++a) {
        Rational ch = 0;
        for (const auto& x : roots) ch += (oracle::power(x, k - a) + oracle::power(-x, k - a)) / oracle::factorial(k - a);
        a_ch_t += oracle::eval_product_degree(ahat, roots, false, a) * ch;
      }
      const Rational i_half = oracle::eval_product_degree(ahat, roots, false, k);
      const Rational i_three_halves = a_ch_t - i_half;
      const Rational i_a = -oracle::eval_product_degree(l, roots, false, k) / 8;
      CHECK(c[0] * i_half + c[1] * i_three_halves + c[2] * i_a == 0);
    }
  }
}

TEST_CASE("corollary vectors") {
  CHECK(corollary_coefficients(6).coefficients == std::array<Rational, 3>{1, 1, -22});
  CHECK(corollary_coefficients(7).coefficients == std::array<Rational, 3>{1, 1, -23});
  CHECK(corollary_coefficients(10).coefficients == std::array<Rational, 3>{1, -8, 16});
  CHECK(corollary_coefficients(11).coefficients == std::array<Rational, 3>{1, -8, 24});
  CHECK(corollary_coefficients(2).coefficients == std::array<Rational, 3>{1, 0, 8});
  for (int dim : {2, 6, 10}) {
    const auto v = corollary_coefficients(dim);
    REQUIRE(v.agw_translation);
    CHECK(*v.agw_translation == v.coefficients);
  }
  CHECK_FALSE(corollary_coefficients(9).agw_translation);
  CHECK_THROWS_AS(corollary_coefficients(4), std::invalid_argument);
  CHECK_THROWS_AS(corollary_coefficients(12), std::invalid_argument);
}

TEST_CASE("route equivalence for P_2 and Q_2") {
  CHECK(verify_route_equivalence(0, RootProfile(2, 4), 6).status == Status::pass);
  CHECK(verify_route_equivalence(1, RootProfile(10, 4), 6).status == Status::pass);
  CHECK(verify_route_equivalence(1, RootProfile(6, 4), 6).status == Status::pass);
  const auto trivial = verify_route_equivalence(0, RootProfile(1, 4), 6);
  CHECK(trivial.status == Status::degenerate_zero);
  CHECK(trivial.lhs == trivial.rhs);
  const auto cal = calibrate_theta_route(FormKind::p2, RootProfile(10, 12), LVariant::full_angle);
  CHECK(cal.constant == 1);
  CHECK(cal.scale == 1);
}

TEST_CASE("P_1 route: exact under half-angle, off at q^1 under full-angle") {
  const auto half = verify_route_equivalence(1, RootProfile(10, 4), 6, FormKind::p1, LVariant::half_angle);
  CHECK(half.status == Status::pass);
  CHECK(half.calibration->constant == 2);
  CHECK(half.calibration->scale == 1);
  const auto full = verify_route_equivalence(1, RootProfile(10, 4), 6, FormKind::p1, LVariant::full_angle);
  CHECK(full.status == Status::fail);
  CHECK(full.calibration->scale == 2);
  REQUIRE_FALSE(full.residuals.empty());
  CHECK(*full.residuals.front().exp2 == 2);
  // the q^0 term is matched by construction
  CHECK(full.lhs.coeff(0) == full.rhs.coeff(0));
}

TEST_CASE("numeric jet of P_2 matches the exact series") {
  const RootProfile prof(2, 4);
  const auto p2 = p_form(FormKind::p2, 0, prof, Route::ktheory, 30);
  for (const auto& s : standard_samples(5)) {
    const double x = 0.15;
    Complex exact = 0.0;
    const std::vector<Rational> roots{Rational(3, 20)};
    for (const auto& [e, c] : p2.series.terms()) {
      exact += eval_at_roots(c, roots).get_d() * std::exp(Complex(0, M_PI) * s.tau * double(e));
    }
    const Complex numeric = jet_component(ThetaFunction::theta2, {x}, 2, s.tau, 1.0);
    CHECK(std::abs(numeric - exact) / std::abs(exact) < 1e-9);
  }
}
