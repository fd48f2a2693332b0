#include "modinv/modforms.hpp"

namespace modinv {

std::string to_string(ThetaFunction f) {
  switch (f) {
    case ThetaFunction::theta: return "theta";
    case ThetaFunction::theta1: return "theta1";
    case ThetaFunction::theta2: return "theta2";
    case ThetaFunction::theta3: return "theta3";
  }
  return "?";
}

ThetaFunction parse_theta_function(const std::string& s) {
  if (s == "0" || s == "theta") return ThetaFunction::theta;
  if (s == "1" || s == "theta1") return ThetaFunction::theta1;
  if (s == "2" || s == "theta2") return ThetaFunction::theta2;
  if (s == "3" || s == "theta3") return ThetaFunction::theta3;
  throw std::invalid_argument("unknown theta function '" + s + "'");
}

namespace {

// 1 + sign * q^{exp2/2}
RationalQSeries binomial(int sign, int exp2, int q_order) {
  RationalQSeries s = RationalQSeries::one({}, q_order);
  s.add_to(exp2, sign);
  return s;
}

// prod_{j>=1} (1-q^j)^a (1 + s q^{j-1/2})^b  or with q^j in the second factor
RationalQSeries theta_product(int q_order, int pow_euler, int sign, bool half_shift, int pow_second) {
  RationalQSeries acc = RationalQSeries::one({}, q_order);
  for (int j = 1; 2 * j - 1 < q_order; ++j) {
    if (2 * j < q_order && pow_euler > 0) {
      acc = acc * binomial(-1, 2 * j, q_order).pow(static_cast<unsigned>(pow_euler));
    }
    const int e = half_shift ? 2 * j - 1 : 2 * j;
    if (e < q_order) acc = acc * binomial(sign, e, q_order).pow(static_cast<unsigned>(pow_second));
  }
  return acc.truncated(q_order);
}

}  // namespace

RationalQSeries theta_nullwert(ThetaFunction f, int q_order) {
  switch (f) {
    case ThetaFunction::theta: return RationalQSeries({}, q_order);
    case ThetaFunction::theta1:
      throw std::invalid_argument(
          "theta1(0, tau) has a q^(1/8) prefactor and is only available as its fourth power");
    case ThetaFunction::theta2: return theta_product(q_order, 1, -1, true, 2);
    case ThetaFunction::theta3: return theta_product(q_order, 1, +1, true, 2);
  }
  throw std::logic_error("unreachable");
}

RationalQSeries theta_nullwert_fourth(ThetaFunction f, int q_order) {
  if (f == ThetaFunction::theta1) {
    // (2 q^{1/8})^4 = 16 q^{1/2}
    const RationalQSeries rest = theta_product(q_order, 4, +1, false, 8);
    return (RationalQSeries::monomial({}, q_order, 1, 16) * rest).truncated(q_order);
  }
  return theta_nullwert(f, q_order).pow(4);
}

std::string to_string(DeltaEps which) {
  switch (which) {
    case DeltaEps::delta1: return "delta1";
    case DeltaEps::eps1: return "eps1";
    case DeltaEps::delta2: return "delta2";
    case DeltaEps::eps2: return "eps2";
  }
  return "?";
}

DeltaEps parse_delta_eps(const std::string& s) {
  if (s == "delta1") return DeltaEps::delta1;
  if (s == "eps1" || s == "epsilon1") return DeltaEps::eps1;
  if (s == "delta2") return DeltaEps::delta2;
  if (s == "eps2" || s == "epsilon2") return DeltaEps::eps2;
  throw std::invalid_argument("unknown form '" + s + "' (expected delta1, eps1, delta2, eps2)");
}

std::string to_string(CongruenceGroup g) {
  switch (g) {
    case CongruenceGroup::gamma_0_2: return "Gamma_0(2)";
    case CongruenceGroup::gamma0_2: return "Gamma^0(2)";
    case CongruenceGroup::none: return "none";
  }
  return "?";
}

ModularFormSeries delta_epsilon(DeltaEps which, int q_order) {
  const auto t2 = [&] { return theta_nullwert_fourth(ThetaFunction::theta2, q_order); };
  const auto t3 = [&] { return theta_nullwert_fourth(ThetaFunction::theta3, q_order); };
  const auto t1 = [&] { return theta_nullwert_fourth(ThetaFunction::theta1, q_order); };
  switch (which) {
    case DeltaEps::delta1:
      return {(t2() + t3()) * Rational(1, 8), 2, CongruenceGroup::gamma_0_2};
    case DeltaEps::eps1:
      return {(t2() * t3()).truncated(q_order) * Rational(1, 16), 4, CongruenceGroup::gamma_0_2};
    case DeltaEps::delta2:
      return {(t1() + t3()) * Rational(-1, 8), 2, CongruenceGroup::gamma0_2};
    case DeltaEps::eps2:
      return {(t1() * t3()).truncated(q_order) * Rational(1, 16), 4, CongruenceGroup::gamma0_2};
  }
  throw std::logic_error("unreachable");
}

int basis_size(int weight) {
  if (weight < 0 || weight % 2 != 0) throw std::invalid_argument("weight must be even and >= 0");
  return weight / 4 + 1;
}

RationalQSeries basis_monomial(int weight, int r, int q_order) {
  const int a = weight / 2 - 2 * r;
  if (r < 0 || a < 0) throw std::invalid_argument("basis index out of range for this weight");
  const RationalQSeries eight_delta2 = delta_epsilon(DeltaEps::delta2, q_order).series * Rational(8);
  const RationalQSeries eps2 = delta_epsilon(DeltaEps::eps2, q_order).series;
  return (eight_delta2.pow(static_cast<unsigned>(a)) * eps2.pow(static_cast<unsigned>(r)))
      .truncated(q_order);
}

DecompositionCase classify_fiber(int m, int fiber_dim) {
  if (m < 0) throw std::invalid_argument("m must be non-negative");
  const int r = fiber_dim - 8 * m;
  if (r >= 1 && r <= 3) return DecompositionCase::b_case;
  if (m >= 1 && r >= -3 && r <= -1) return DecompositionCase::z_case;
  throw std::invalid_argument("fiber dimension " + std::to_string(fiber_dim) +
                              " is not of the form 8m+1..8m+3 or 8m-3..8m-1 for m = " +
                              std::to_string(m));
}

std::pair<int, DecompositionCase> fiber_class(int fiber_dim) {
  if (fiber_dim < 1) throw std::invalid_argument("fiber dimension must be positive");
  const int r = fiber_dim % 8;
  if (r >= 1 && r <= 3) return {fiber_dim / 8, DecompositionCase::b_case};
  if (r >= 5) return {fiber_dim / 8 + 1, DecompositionCase::z_case};
  throw std::invalid_argument("fiber dimension " + std::to_string(fiber_dim) +
                              " is divisible by 4; no decomposition applies");
}

int target_degree(int m, DecompositionCase c) {
  return c == DecompositionCase::b_case ? 8 * m + 4 : 8 * m;
}

Theta2Decomposition decompose_theta2(int m, const RootProfile& profile) {
  const auto kind = classify_fiber(m, profile.fiber_dim());
  (void)kind;
  return decompose_theta2(m, build_theta_bundle(ThetaKind::theta2, profile, m + 1));
}

Theta2Decomposition decompose_theta2(int m, const ThetaBundleSeries& theta2) {
  if (theta2.kind != ThetaKind::theta2) throw std::invalid_argument("decomposition needs Theta_2");
  const RootProfile& profile = theta2.profile;
  const auto kind = classify_fiber(m, profile.fiber_dim());
  const int weight = kind == DecompositionCase::b_case ? 4 * m + 2 : 4 * m;
  const int window = m + 1;
  if (basis_size(weight) != window) throw std::logic_error("basis size does not match m + 1");

  const ClassQSeries matched = theta2.series.truncated(window);
  const auto chars = solve_against_basis(matched, weight);

  Theta2Decomposition out;
  out.m = m;
  out.kind = kind;
  out.profile = profile;
  const std::string prefix = kind == DecompositionCase::b_case ? "b_" : "z_";
  for (int r = 0; r < window; ++r) {
    out.elements.push_back(CharacterElement::from_character(chars[r], prefix + std::to_string(r)));
  }

  // Same solve on unit targets: column j is the response to B_j.
  out.combination.assign(window, std::vector<Rational>(window, Rational(0)));
  for (int j = 0; j < window; ++j) {
    RationalQSeries unit({}, window);
    unit.set(j, 1);
    const auto col = solve_against_basis(unit, weight);
    for (int r = 0; r < window; ++r) {
      if (!is_integer(col[r])) throw std::logic_error("non-integral combination coefficient");
      out.combination[r][j] = col[r];
    }
  }

  out.window_residual =
      matched - basis_reconstruct(chars, weight, window, profile);
  if (!out.window_residual.is_zero()) throw std::logic_error("matched-window residual is nonzero");
  return out;
}

}  // namespace modinv
