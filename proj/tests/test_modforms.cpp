#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "modinv/genera.hpp"
#include "modinv/modforms.hpp"
#include "support/oracle.hpp"

using namespace modinv;

namespace {

RationalQSeries from_dense(const oracle::QPoly& p) {
  RationalQSeries s({}, static_cast<int>(p.size()));
  for (std::size_t e = 0; e < p.size(); ++e) s.set(static_cast<int>(e), p[e]);
  return s;
}

RationalQSeries literal(int order, std::initializer_list<std::pair<int, Rational>> terms) {
  RationalQSeries s({}, order);
  for (const auto& [e, c] : terms) s.set(e, c);
  return s;
}

// delta_2 and eps_2 from the theta sums
oracle::QPoly delta2_oracle(int order) {
  const auto t1 = oracle::theta1_fourth_sum(order);
  const auto t3 = oracle::qpow(oracle::theta_sum(order, false), 4);
  return oracle::qscale(oracle::qadd(t1, t3), Rational(-1, 8));
}

oracle::QPoly eps2_oracle(int order) {
  const auto t1 = oracle::theta1_fourth_sum(order);
  const auto t3 = oracle::qpow(oracle::theta_sum(order, false), 4);
  return oracle::qscale(oracle::qmul(t1, t3), Rational(1, 16));
}

}  // namespace

TEST_CASE("theta nullwerte agree with the theta sums") {
  const int order = 30;
  CHECK(theta_nullwert(ThetaFunction::theta3, order) == from_dense(oracle::theta_sum(order, false)));
  CHECK(theta_nullwert(ThetaFunction::theta2, order) == from_dense(oracle::theta_sum(order, true)));
  CHECK(theta_nullwert_fourth(ThetaFunction::theta1, order) == from_dense(oracle::theta1_fourth_sum(order)));
  CHECK(theta_nullwert(ThetaFunction::theta, order).is_zero());
  CHECK_THROWS_AS(theta_nullwert(ThetaFunction::theta1, order), std::invalid_argument);
  const auto th2 = theta_nullwert(ThetaFunction::theta2, 6);
  CHECK(th2.coeff(0) == 1);
  CHECK(th2.coeff(1) == -2);
  CHECK(theta_nullwert_fourth(ThetaFunction::theta1, 4).coeff(1) == 16);
}

TEST_CASE("Jacobi quartic identity") {
  const int order = 24;
  CHECK(theta_nullwert_fourth(ThetaFunction::theta3, order) ==
        theta_nullwert_fourth(ThetaFunction::theta2, order) +
            theta_nullwert_fourth(ThetaFunction::theta1, order));
}

TEST_CASE("printed expansions of delta and epsilon") {
  CHECK(delta_epsilon(DeltaEps::delta1, 5).series ==
        literal(5, {{0, Rational(1, 4)}, {2, 6}, {4, 6}}));
  CHECK(delta_epsilon(DeltaEps::eps1, 5).series ==
        literal(5, {{0, Rational(1, 16)}, {2, -1}, {4, 7}}));
  CHECK(delta_epsilon(DeltaEps::delta2, 3).series ==
        literal(3, {{0, Rational(-1, 8)}, {1, -3}, {2, -3}}));
  CHECK(delta_epsilon(DeltaEps::eps2, 3).series == literal(3, {{1, 1}, {2, 8}}));
  CHECK(delta_epsilon(DeltaEps::delta2, 2).weight == 2);
  CHECK(delta_epsilon(DeltaEps::eps1, 2).group == CongruenceGroup::gamma_0_2);
  CHECK(to_string(delta_epsilon(DeltaEps::eps2, 2).group) == "Gamma^0(2)");
}

TEST_CASE("delta/epsilon integrality through q^10") {
  for (DeltaEps w : {DeltaEps::delta1, DeltaEps::eps1, DeltaEps::delta2, DeltaEps::eps2}) {
    const auto s = delta_epsilon(w, 21).series;
    for (int e = 1; e < 21; ++e) CHECK(is_integer(s.coeff(e)));
  }
  CHECK(delta_epsilon(DeltaEps::delta2, 21).series == from_dense(delta2_oracle(21)));
  CHECK(delta_epsilon(DeltaEps::eps2, 21).series == from_dense(eps2_oracle(21)));
}

TEST_CASE("basis monomials") {
  const auto d = delta_epsilon(DeltaEps::delta2, 8).series * Rational(8);
  const auto sq = basis_monomial(4, 0, 6);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 48);
  CHECK(basis_monomial(6, 0, 2).coeff(1) == -72);
  CHECK(basis_monomial(4, 1, 6) == delta_epsilon(DeltaEps::eps2, 6).series);
  CHECK(basis_size(10) == 3);
  CHECK_THROWS_AS(basis_monomial(4, 2, 6), std::invalid_argument);
  CHECK(d.pow(3).truncated(6) == basis_monomial(6, 0, 6));
}

TEST_CASE("basis decomposition of scalar forms") {
  const auto cube = basis_monomial(6, 0, 8);
  CHECK(basis_decompose(cube, 6) == std::vector<Rational>{1, 0});
  CHECK(basis_decompose(delta_epsilon(DeltaEps::eps2, 8).series, 4) == std::vector<Rational>{0, 1});

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int weight = 2 * (1 + trial % 6);
    std::vector<Rational> h;
    for (int r = 0; r < basis_size(weight); ++r) h.push_back(Rational(int(rng() % 19) - 9, 1 + int(rng() % 5)));
    const auto f = basis_reconstruct(h, weight, 12, ScalarContext{});
    CHECK(basis_decompose(f, weight) == h);
  }

  auto bad = delta_epsilon(DeltaEps::eps2, 8).series;
  bad.add_to(5, 1);
  try {
    basis_decompose(bad, 4);
    FAIL("expected NotInSpanError");
  } catch (const NotInSpanError& e) {
    CHECK(e.exp2() == 5);
  }
  CHECK_THROWS_AS(basis_decompose(RationalQSeries({}, 1), 4), std::invalid_argument);
}

TEST_CASE("fiber classification") {
  CHECK(classify_fiber(0, 2) == DecompositionCase::b_case);
  CHECK(classify_fiber(1, 6) == DecompositionCase::z_case);
  CHECK_THROWS_AS(classify_fiber(0, 6), std::invalid_argument);
  CHECK_THROWS_AS(classify_fiber(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(classify_fiber(1, 8), std::invalid_argument);
  CHECK(fiber_class(13) == std::pair{2, DecompositionCase::z_case});
  CHECK(fiber_class(19) == std::pair{2, DecompositionCase::b_case});
  CHECK_THROWS_AS(fiber_class(12), std::invalid_argument);
  CHECK(target_degree(1, DecompositionCase::b_case) == 12);
  CHECK(target_degree(2, DecompositionCase::z_case) == 16);
}

TEST_CASE("closed forms of b_0, b_1, z_0, z_1") {
  for (int m = 0; m <= 2; ++m) {
    for (int r = 1; r <= 3; ++r) {
      const int dim = 8 * m + r;
      const RootProfile prof(dim, 8 * m + 4);
      const auto d = decompose_theta2(m, prof);
      const GradedClass ch_t = CharacterElement::tangent(prof).character();
      CHECK(d.elements[0].character() == GradedClass::scalar(prof, -1));
      if (m >= 1) {
        CHECK(d.elements[1].character() == ch_t + GradedClass::scalar(prof, 24 * (2 * m + 1) - dim));
      }
      CHECK(*d.elements[0].label == "b_0");
    }
  }
  for (int m = 1; m <= 2; ++m) {
    for (int r = 1; r <= 3; ++r) {
      const int dim = 8 * m - r;
      const RootProfile prof(dim, 8 * m);
      const auto d = decompose_theta2(m, prof);
      const GradedClass ch_t = CharacterElement::tangent(prof).character();
      CHECK(d.elements[0].character() == GradedClass::scalar(prof, 1));
      CHECK(d.elements[1].character() == -ch_t - GradedClass::scalar(prof, 48 * m - dim));
      CHECK(*d.elements[1].label == "z_1");
    }
  }
}

TEST_CASE("combination matrix is integral and lower triangular") {
  for (int dim : {2, 9, 10, 17, 18, 5, 13, 14}) {
    const auto [m, kind] = fiber_class(dim);
    const auto d = decompose_theta2(m, RootProfile(dim, target_degree(m, kind)));
    CHECK(d.window_residual.is_zero());
    for (std::size_t r = 0; r < d.combination.size(); ++r) {
      for (std::size_t j = 0; j < d.combination.size(); ++j) {
        CHECK(is_integer(d.combination[r][j]));
        if (j > r) CHECK(d.combination[r][j] == 0);
      }
      CHECK(abs(d.combination[r][r]) == 1);
    }
  }
}

TEST_CASE("b_2 at m = 2, fiber 18, against a scalar re-solve at random roots") {
  const RootProfile prof(18, 20);
  const auto th = build_theta_bundle(ThetaKind::theta2, prof, 3);
  const auto d = decompose_theta2(2, th);
  const auto dl = delta2_oracle(3);
  const auto ep = eps2_oracle(3);
  // basis (8 delta_2)^{5-2r} eps_2^r, r = 0, 1, 2, from the oracle sums
  std::vector<oracle::QPoly> basis;
  for (int r = 0; r < 3; ++r) {
    basis.push_back(oracle::qmul(oracle::qpow(oracle::qscale(dl, 8), 5 - 2 * r), oracle::qpow(ep, r)));
  }
  std::mt19937_64 rng(18);
  for (int trial = 0; trial < 3; ++trial) {
    const auto roots = oracle::random_roots(rng, prof.n_pairs());
    std::vector<Rational> f;
    for (int e = 0; e < 3; ++e) f.push_back(eval_at_roots(th.series.coeff(e), roots));
    std::vector<Rational> h(3);
    for (int j = 0; j < 3; ++j) {
      Rational rhs = f[j];
      for (int r = 0; r < j; ++r) rhs -= h[r] * basis[r][j];
      h[j] = rhs / basis[j][j];
    }
    CHECK(eval_at_roots(d.elements[2].character(), roots) == h[2]);
  }
}
