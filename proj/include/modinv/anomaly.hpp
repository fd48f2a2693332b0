#pragma once

// Form-level identities built on the theta bundles: the forms P_1, P_2
// (b-case) and Q_1, Q_2 (z-case), their modular decomposition, the
// L-class identity with its normalization scalar, the dimension 2/6/10
// cancellation formulas, and the resulting twist-coefficient vectors.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modinv/genera.hpp"
#include "modinv/modforms.hpp"
#include "modinv/witten.hpp"

namespace modinv {

/// P_1 = {L ch Theta_1}, P_2 = {A ch Theta_2} in degree 8m+4;
/// Q_1, Q_2 the same in degree 8m.
enum class FormKind { p1, p2, q1, q2 };
std::string to_string(FormKind k);
FormKind parse_form_kind(const std::string& s);

enum class Route { ktheory, theta_product };
std::string to_string(Route r);
Route parse_route(const std::string& s);

/// Source of Theta bundle expansions; lets callers plug in a cache.
using ThetaProvider = std::function<ThetaBundleSeries(ThetaKind, const RootProfile&, int)>;
ThetaProvider direct_theta_provider();

/// Per-root normalization of the theta-product route: each root contributes
/// constant * g(scale x) * (theta quotients at scale x).
struct Calibration {
  Rational constant = 1;
  Rational scale = 1;
};

struct PForm {
  FormKind kind = FormKind::p2;
  int m = 0;
  RootProfile profile;
  Route route = Route::ktheory;
  LVariant l_variant = LVariant::full_angle;
  /// 8m+4 for P, 8m for Q
  int degree = 4;
  /// Each coefficient is homogeneous of form degree `degree`.
  ClassQSeries series;
  std::optional<Calibration> calibration;
};

/// The fiber dimension must lie in the class matching `kind`. The profile's
/// own truncation is replaced by the target degree.
PForm p_form(FormKind kind, int m, const RootProfile& profile, Route route, int q_order,
             LVariant l_variant = LVariant::full_angle, const ThetaProvider& provider = {});

/// Calibration of the theta-product route against the q^0 term of the
/// K-theory route. Throws std::domain_error when no rational constant/scale
/// reproduces that term.
Calibration calibrate_theta_route(FormKind kind, const RootProfile& profile, LVariant l_variant,
                                  const ThetaProvider& provider = {});

enum class Status { pass, fail, degenerate_zero };
std::string to_string(Status s);

struct ResidualTerm {
  /// Doubled q-exponent for series-level identities.
  std::optional<int> exp2;
  Monomial monomial;
  Rational value;
};

struct IdentityReport {
  std::string identity;
  int fiber_dim = 0;
  int m = 0;
  LVariant l_variant = LVariant::full_angle;
  std::string route = "ktheory";
  std::optional<Rational> lambda;
  std::optional<Rational> reference_ratio;
  std::vector<ResidualTerm> residuals;
  Status status = Status::fail;
  /// Series-level identities keep whole q-series; class-level ones store
  /// the class as the q^0 coefficient of an order-1 series.
  bool series_level = false;
  ClassQSeries lhs;
  ClassQSeries rhs;
  std::optional<Calibration> calibration;
  std::string detail;
};

/// h_r = {A ch(b_r)} or {A ch(z_r)} in the target degree.
std::vector<GradedClass> identity_basis(const Theta2Decomposition& dec);

/// Normalization constant of the L-class identity: 8 * 2^{6m} (b-case),
/// 2^{6m} (z-case).
Rational reference_constant(int m, DecompositionCase c);

/// P_2 (or Q_2) against sum_r h_r (8 delta_2)^{..} eps_2^r over the whole
/// truncation. q_order = 0 picks the matched window plus two guard
/// coefficients. Also cross-checks basis_decompose on the computed series.
IdentityReport verify_decomposition_identity(int m, const RootProfile& profile, int q_order = 0,
                                             const ThetaProvider& provider = {});

/// {L}^{(D)} = lambda * sum_r 2^{-6r} h_r, solved for a single lambda over
/// every p-monomial.
IdentityReport verify_main_identity(int m, const RootProfile& profile,
                                    LVariant l_variant = LVariant::full_angle,
                                    const ThetaProvider& provider = {});

/// Cancellation formulas in dimensions 2, 6, 10:
///   2:  -I_{1/2} + I_A = 0
///   6:  21 I_{1/2} - I_{3/2} + 8 I_A = 0
///   10: -I_{1/2} + I_{3/2} + I_A = 0
/// with I_{1/2} = {A}, I_{3/2} = {A (ch T - 1)}, I_A = -{L}/8 in degree dim+2.
/// lambda is the L-coefficient that would make the combination vanish.
IdentityReport verify_agw(int dim, LVariant l_variant = LVariant::full_angle);

/// Coefficients (c_{1/2}, c_{3/2}, c_A) of the cancellation formula.
std::array<Rational, 3> agw_coefficients(int dim);

struct CorollaryVector {
  int fiber_dim = 0;
  int m = 0;
  /// (signature twist, T_C Z twist, trivial twist), leading entry 1
  std::array<Rational, 3> coefficients;
  /// For dims 2, 6, 10: the cancellation formula rewritten in the same
  /// basis and normalized the same way.
  std::optional<std::array<Rational, 3>> agw_translation;
};

/// Writes sum_r c 2^{-6r} ch(b_r) (or z_r) as alpha ch(T_C Z) + beta and
/// returns (1, -alpha, -beta). Supported dims: 1, 2, 3, 5, 6, 7, 9, 10, 11.
CorollaryVector corollary_coefficients(int fiber_dim, const ThetaProvider& provider = {});

/// The known integer combinations for the supported dimensions.
std::array<Rational, 3> reference_corollary(int fiber_dim);

/// K-theory route against the calibrated theta-product route, exactly, to
/// q_order. `kind` selects P_1/Q_1 or P_2/Q_2.
IdentityReport verify_route_equivalence(int m, const RootProfile& profile, int q_order,
                                        FormKind kind = FormKind::p2,
                                        LVariant l_variant = LVariant::full_angle,
                                        const ThetaProvider& provider = {});

}  // namespace modinv
