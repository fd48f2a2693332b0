#pragma once

// Chern-character algebra of virtual bundles built from the complexified
// vertical tangent bundle, and the q-series bundles Theta_1, Theta_2.

#include <optional>
#include <string>

#include "modinv/chroot.hpp"

namespace modinv {

/// ch = virtual_rank + form_part, with form_part free of degree 0.
struct CharacterElement {
  Integer virtual_rank = 0;
  GradedClass form_part;
  std::optional<std::string> label;

  GradedClass character() const;

  /// Splits a full character into rank and positive-degree part. Throws if
  /// the degree-0 part is not an integer.
  static CharacterElement from_character(const GradedClass& ch,
                                         std::optional<std::string> label = std::nullopt);
  static CharacterElement trivial(const RootProfile& profile, const Integer& rank);
  /// T_C Z
  static CharacterElement tangent(const RootProfile& profile);

  CharacterElement operator-() const;
  friend CharacterElement operator+(const CharacterElement& a, const CharacterElement& b);
  friend CharacterElement operator-(const CharacterElement& a, const CharacterElement& b);
  /// Tensor product.
  friend CharacterElement operator*(const CharacterElement& a, const CharacterElement& b);
  /// Equality of characters; labels are ignored.
  friend bool operator==(const CharacterElement& a, const CharacterElement& b) {
    return a.virtual_rank == b.virtual_rank && a.form_part == b.form_part;
  }
};

/// A virtual bundle whose root multiset is `tangent_copies` copies of the
/// roots of T_C Z plus `trivial_rank` zero roots; either count may be
/// negative. The reduced tangent bundle is {1, -dim Z}.
struct VirtualRoots {
  int tangent_copies = 0;
  int trivial_rank = 0;

  static VirtualRoots tangent() { return {1, 0}; }
  static VirtualRoots reduced_tangent(const RootProfile& p) { return {1, -p.fiber_dim()}; }
  static VirtualRoots trivial(int rank) { return {0, rank}; }
};

/// t = sign * q^{exp2/2}
struct TMonomial {
  int sign = 1;
  int exp2 = 2;
};

/// ch(Lambda_t(E)) = prod over roots (1 + t e^root); for virtual E = E' - F
/// the quotient Lambda_t(E') / Lambda_t(F).
ClassQSeries lambda_t_character(const VirtualRoots& roots, TMonomial t, const RootProfile& profile,
                                int q_order);

/// ch(S_t(E)) = 1 / ch(Lambda_{-t}(E)).
ClassQSeries s_t_character(const VirtualRoots& roots, TMonomial t, const RootProfile& profile,
                           int q_order);

enum class ThetaKind { theta1, theta2 };

std::string to_string(ThetaKind k);

struct ThetaBundleSeries {
  ThetaKind kind = ThetaKind::theta2;
  RootProfile profile;
  ClassQSeries series;
};

/// Theta_1 = (x)_n S_{q^n}(T~) (x) (x)_m Lambda_{q^m}(T~)
/// Theta_2 = (x)_n S_{q^n}(T~) (x) (x)_m Lambda_{-q^{m-1/2}}(T~)
/// truncated at q_order (doubled units, exclusive).
ThetaBundleSeries build_theta_bundle(ThetaKind kind, const RootProfile& profile, int q_order);

/// The coefficient of q^{j/2}: A_j for Theta_1, B_j for Theta_2.
CharacterElement extract_fourier(const ThetaBundleSeries& theta, int j);

}  // namespace modinv
