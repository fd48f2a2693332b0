#include "modinv/genera.hpp"

#include <stdexcept>

namespace modinv {

std::string to_string(LVariant v) { return v == LVariant::full_angle ? "full" : "half"; }

LVariant parse_l_variant(const std::string& s) {
  if (s == "full" || s == "full_angle" || s == "full-angle") return LVariant::full_angle;
  if (s == "half" || s == "half_angle" || s == "half-angle") return LVariant::half_angle;
  throw std::invalid_argument("unknown L-class variant '" + s + "' (expected full or half)");
}

XSeries a_hat_root_series(int order) {
  // (x/2) / sinh(x/2)
  return sinhc_series(order, Rational(1, 2)).inverse();
}

XSeries l_root_series(int order, LVariant variant) {
  if (variant == LVariant::full_angle) {
    // x / tanh x = cosh x * (sinh x / x)^{-1}
    return cosh_series(order, 1) * sinhc_series(order, 1).inverse();
  }
  // x / tanh(x/2) = 2 cosh(x/2) * (x/2)/sinh(x/2)
  return cosh_series(order, Rational(1, 2)) * sinhc_series(order, Rational(1, 2)).inverse() *
         Rational(2);
}

XSeries spinor_root_series(int order) { return cosh_series(order, Rational(1, 2)) * Rational(2); }

GradedClass a_hat(const RootProfile& profile) {
  return product_over_roots(a_hat_root_series(profile.max_x_degree() + 1), profile);
}

Rational l_variant_factor(const RootProfile& profile, int form_degree) {
  if (form_degree < 0 || form_degree % 4 != 0) {
    throw std::invalid_argument("form degree must be a non-negative multiple of 4");
  }
  const int roots = profile.n_pairs() + (profile.has_zero_root() ? 1 : 0);
  return pow(Rational(2), roots - form_degree / 2);
}

GradedClass l_class(const RootProfile& profile, LVariant variant) {
  return product_over_roots(l_root_series(profile.max_x_degree() + 1, variant), profile);
}

GradedClass spinor_character(const RootProfile& profile, SpinorKind) {
  return product_over_pairs(spinor_root_series(profile.max_x_degree() + 1), profile);
}

}  // namespace modinv
