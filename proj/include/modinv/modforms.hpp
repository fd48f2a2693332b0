#pragma once

// Exact q-expansions of theta nullwerte and of the level-2 forms
// delta_1, eps_1 (Gamma_0(2)) and delta_2, eps_2 (Gamma^0(2)); triangular
// decomposition of Theta_2 against the basis (8 delta_2)^a eps_2^r.

#include <stdexcept>
#include <string>
#include <vector>

#include "modinv/qseries.hpp"
#include "modinv/witten.hpp"

namespace modinv {

enum class ThetaFunction { theta, theta1, theta2, theta3 };

std::string to_string(ThetaFunction f);
ThetaFunction parse_theta_function(const std::string& s);

/// theta_i(0, tau) as an exact q^{1/2}-series. theta(0, tau) is identically
/// zero. Bare theta_1(0, tau) carries q^{1/8} and is rejected; use
/// theta_nullwert_fourth for it.
RationalQSeries theta_nullwert(ThetaFunction f, int q_order);

/// theta_i(0, tau)^4; for theta_1 this is 16 q^{1/2} prod (1-q^j)^4 (1+q^j)^8.
RationalQSeries theta_nullwert_fourth(ThetaFunction f, int q_order);

enum class DeltaEps { delta1, eps1, delta2, eps2 };
enum class CongruenceGroup { gamma_0_2, gamma0_2, none };

std::string to_string(DeltaEps which);
DeltaEps parse_delta_eps(const std::string& s);
std::string to_string(CongruenceGroup g);

struct ModularFormSeries {
  RationalQSeries series;
  int weight = 0;
  CongruenceGroup group = CongruenceGroup::none;
};

ModularFormSeries delta_epsilon(DeltaEps which, int q_order);

/// (8 delta_2)^{weight/2 - 2r} eps_2^r
RationalQSeries basis_monomial(int weight, int r, int q_order);

/// Number of basis monomials of the given weight (weight/4 + 1).
int basis_size(int weight);

class NotInSpanError : public std::runtime_error {
 public:
  NotInSpanError(const std::string& what, int exp2) : std::runtime_error(what), exp2_(exp2) {}
  /// First exponent (doubled) where the reconstruction disagrees.
  int exp2() const { return exp2_; }

 private:
  int exp2_;
};

/// Forward substitution against the basis using coefficients q^{0/2} ...
/// q^{(count-1)/2}. The r-th diagonal entry is (-1)^{weight/2 - 2r}.
template <class R>
std::vector<R> solve_against_basis(const HalfQSeries<R>& f, int weight) {
  const int count = basis_size(weight);
  if (f.order() < count) {
    throw std::invalid_argument("need " + std::to_string(count) +
                                " matched coefficients, series is known to order " +
                                std::to_string(f.order()));
  }
  std::vector<RationalQSeries> basis;
  for (int r = 0; r < count; ++r) basis.push_back(basis_monomial(weight, r, count));
  std::vector<R> h;
  for (int j = 0; j < count; ++j) {
    R rhs = f.coeff(j);
    for (int r = 0; r < j; ++r) {
      const Rational b = basis[r].coeff(j);
      if (b != 0) rhs = rhs - h[r] * b;
    }
    const Rational diag = basis[j].coeff(j);
    if (diag != 1 && diag != -1) throw std::logic_error("basis diagonal entry is not a unit");
    h.push_back(rhs * diag);
  }
  return h;
}

template <class R>
HalfQSeries<R> basis_reconstruct(const std::vector<R>& h, int weight, int q_order,
                                 const typename CoefficientRing<R>::Context& ctx) {
  HalfQSeries<R> out(ctx, q_order);
  for (std::size_t r = 0; r < h.size(); ++r) {
    out = out + scale(basis_monomial(weight, static_cast<int>(r), q_order), h[r]);
  }
  return out.truncated(q_order);
}

/// Coefficients h_r with f = sum h_r (8 delta_2)^{w/2-2r} eps_2^r, checked
/// against every known coefficient of f. Throws NotInSpanError otherwise.
template <class R>
std::vector<R> basis_decompose(const HalfQSeries<R>& f, int weight) {
  auto h = solve_against_basis(f, weight);
  const auto recon = basis_reconstruct(h, weight, f.order(), f.context());
  const auto diff = f - recon;
  if (!diff.is_zero()) {
    const int e = diff.terms().begin()->first;
    throw NotInSpanError("input not in the span of the weight-" + std::to_string(weight) +
                             " basis: residual at q^(" + std::to_string(e) + "/2)",
                         e);
  }
  return h;
}

enum class DecompositionCase { b_case, z_case };

/// b-case: fiber_dim in {8m+1, 8m+2, 8m+3}; z-case: {8m-1, 8m-2, 8m-3}, m >= 1.
/// Throws std::invalid_argument for any other combination.
DecompositionCase classify_fiber(int m, int fiber_dim);

/// Recover m and the case from a fiber dimension; throws for dims = 0, 4 mod 8.
std::pair<int, DecompositionCase> fiber_class(int fiber_dim);

/// Form degree of the identity: 8m+4 (b-case) or 8m (z-case).
int target_degree(int m, DecompositionCase c);

struct Theta2Decomposition {
  int m = 0;
  DecompositionCase kind = DecompositionCase::b_case;
  RootProfile profile;
  /// b_0..b_m or z_0..z_m
  std::vector<CharacterElement> elements;
  /// elements[r] = sum_j combination[r][j] * B_j
  std::vector<std::vector<Rational>> combination;
  /// ch(Theta_2) minus the reconstruction on the matched window (must be zero)
  ClassQSeries window_residual;
};

/// Solves ch(Theta_2) = sum_r b_r (8 delta_2)^{2m+1-2r} eps_2^r (b-case) or
/// sum_r z_r (8 delta_2)^{2m-2r} eps_2^r (z-case) modulo q^{(m+1)/2}.
Theta2Decomposition decompose_theta2(int m, const RootProfile& profile);
Theta2Decomposition decompose_theta2(int m, const ThetaBundleSeries& theta2);

}  // namespace modinv
