#include "modinv/witten.hpp"

#include <stdexcept>

namespace modinv {

GradedClass CharacterElement::character() const {
  return form_part + GradedClass::scalar(form_part.profile(), Rational(virtual_rank));
}

CharacterElement CharacterElement::from_character(const GradedClass& ch,
                                                  std::optional<std::string> label) {
  const Rational rank = ch.constant();
  if (!is_integer(rank)) {
    throw std::domain_error("character has non-integral rank " + to_string(rank));
  }
  return CharacterElement{rank.get_num(), ch.positive_part(), std::move(label)};
}

CharacterElement CharacterElement::trivial(const RootProfile& profile, const Integer& rank) {
  return CharacterElement{rank, GradedClass(profile), std::nullopt};
}

CharacterElement CharacterElement::tangent(const RootProfile& profile) {
  auto ch = sum_over_roots(exp_series(profile.max_x_degree() + 1, 1), profile);
  return from_character(ch, "T_C Z");
}

CharacterElement CharacterElement::operator-() const {
  return CharacterElement{-virtual_rank, -form_part, std::nullopt};
}

CharacterElement operator+(const CharacterElement& a, const CharacterElement& b) {
  return CharacterElement{a.virtual_rank + b.virtual_rank, a.form_part + b.form_part, std::nullopt};
}

CharacterElement operator-(const CharacterElement& a, const CharacterElement& b) { return a + (-b); }

CharacterElement operator*(const CharacterElement& a, const CharacterElement& b) {
  return CharacterElement::from_character(a.character() * b.character());
}

namespace {

// 1 + t: scalar series.
RationalQSeries one_plus_t(TMonomial t, int q_order) {
  RationalQSeries s = RationalQSeries::one({}, q_order);
  s.add_to(t.exp2, t.sign);
  return s;
}

RationalQSeries integer_power(const RationalQSeries& s, int k) {
  return k >= 0 ? s.pow(static_cast<unsigned>(k)) : s.inverse().pow(static_cast<unsigned>(-k));
}

}  // namespace

ClassQSeries lambda_t_character(const VirtualRoots& roots, TMonomial t, const RootProfile& profile,
                                int q_order) {
  if (t.exp2 <= 0) throw std::invalid_argument("t must carry a positive power of q");
  if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("t sign must be +1 or -1");

  const GradedClass one = GradedClass::scalar(profile, 1);
  ClassQSeries result = ClassQSeries::one(profile, q_order);

  if (roots.tangent_copies != 0) {
    // per pair: (1 + t e^x)(1 + t e^{-x}) = 1 + t^2 + 2 t cosh x
    const int x_order = profile.max_x_degree() + 1;
    BivariateSeries pair({x_order}, q_order);
    pair.add_to(0, XSeries::constant(x_order, 1));
    pair.add_to(t.exp2, cosh_series(x_order, 1) * Rational(2 * t.sign));
    pair.add_to(2 * t.exp2, XSeries::constant(x_order, 1));
    ClassQSeries tangent = product_over_pairs(pair, profile);
    if (profile.has_zero_root()) tangent = tangent * scale(one_plus_t(t, q_order), one);
    if (roots.tangent_copies > 0) {
      result = tangent.pow(static_cast<unsigned>(roots.tangent_copies));
    } else {
      result = tangent.inverse().pow(static_cast<unsigned>(-roots.tangent_copies));
    }
  }
  if (roots.trivial_rank != 0) {
    result = result * scale(integer_power(one_plus_t(t, q_order), roots.trivial_rank), one);
  }
  return result.truncated(q_order);
}

ClassQSeries s_t_character(const VirtualRoots& roots, TMonomial t, const RootProfile& profile,
                           int q_order) {
  return lambda_t_character(roots, TMonomial{-t.sign, t.exp2}, profile, q_order).inverse();
}

std::string to_string(ThetaKind k) { return k == ThetaKind::theta1 ? "theta1" : "theta2"; }

ThetaBundleSeries build_theta_bundle(ThetaKind kind, const RootProfile& profile, int q_order) {
  if (q_order < 1) throw std::invalid_argument("q-order must be positive");
  const VirtualRoots reduced = VirtualRoots::reduced_tangent(profile);
  ClassQSeries series = ClassQSeries::one(profile, q_order);
  for (int n = 1; 2 * n < q_order; ++n) {
    series = series * s_t_character(reduced, {1, 2 * n}, profile, q_order);
  }
  if (kind == ThetaKind::theta1) {
    for (int n = 1; 2 * n < q_order; ++n) {
      series = series * lambda_t_character(reduced, {1, 2 * n}, profile, q_order);
    }
  } else {
    for (int n = 1; 2 * n - 1 < q_order; ++n) {
      series = series * lambda_t_character(reduced, {-1, 2 * n - 1}, profile, q_order);
    }
  }
  return ThetaBundleSeries{kind, profile, series.truncated(q_order)};
}

CharacterElement extract_fourier(const ThetaBundleSeries& theta, int j) {
  if (j < 0 || j >= theta.series.order()) {
    throw std::out_of_range("Fourier index " + std::to_string(j) + " is beyond the truncation " +
                            std::to_string(theta.series.order()));
  }
  const std::string prefix = theta.kind == ThetaKind::theta1 ? "A_" : "B_";
  return CharacterElement::from_character(theta.series.coeff(j), prefix + std::to_string(j));
}

}  // namespace modinv
