#pragma once

#include <string>

#include "modinv/chroot.hpp"

namespace modinv {

/// Angle convention for the L-class.
///   full: prod x / tanh(x)        (zero roots contribute 1)
///   half: prod x / tanh(x / 2)    (zero roots contribute the limit 2)
enum class LVariant { full_angle, half_angle };

std::string to_string(LVariant v);
LVariant parse_l_variant(const std::string& s);

enum class SpinorKind { even_full, odd_full };

/// Per-root series, each known through x^{order-1}.
XSeries a_hat_root_series(int order);
XSeries l_root_series(int order, LVariant variant);
XSeries spinor_root_series(int order);

GradedClass a_hat(const RootProfile& profile);
/// Ratio {L_half}^{(form_degree)} / {L_full}^{(form_degree)}. Each root
/// contributes 2 f(x/2) under the half-angle convention, so the ratio is
/// 2^{n_pairs + zero_roots - form_degree/2}.
Rational l_variant_factor(const RootProfile& profile, int form_degree);
GradedClass l_class(const RootProfile& profile, LVariant variant);
/// prod over root pairs of 2 cosh(x_j / 2). Both kinds share the formula.
GradedClass spinor_character(const RootProfile& profile, SpinorKind kind = SpinorKind::even_full);

}  // namespace modinv
