#pragma once

// Double-precision evaluation of the four theta functions from their product
// formulas, and numeric checks of their modular transformation laws.

#include <complex>
#include <string>
#include <vector>

#include "modinv/genera.hpp"
#include "modinv/modforms.hpp"

namespace modinv {

using Complex = std::complex<double>;

struct ComplexPoint {
  Complex v;
  Complex tau;
};

/// Number of product factors so that |q|^n (times the size of e^{±2 pi i v})
/// drops below 1e-16.
int default_theta_terms(const ComplexPoint& p);

/// Throws std::domain_error when Im(tau) <= 0. n_terms = 0 picks the default.
Complex theta_eval(ThetaFunction kind, const ComplexPoint& p, int n_terms = 0);

/// d/dv theta(v, tau) at v = 0, i.e. 2 pi q^{1/8} prod (1 - q^j)^3.
Complex theta_prime_zero(Complex tau, int n_terms = 0);

/// Evaluate an exact q^{1/2}-series at tau with q^{1/2} = exp(pi i tau).
Complex evaluate_series(const RationalQSeries& s, Complex tau);

/// Modular transformation laws that can be checked numerically.
enum class Law {
  theta,              // theta under tau+1 and -1/tau
  theta1,             // theta_1
  theta2,             // theta_2
  theta3,             // theta_3
  delta_inversion,    // delta_2(-1/tau) = tau^2 delta_1(tau)
  eps_inversion,      // eps_2(-1/tau) = tau^4 eps_1(tau)
  p_inversion,        // P_1(-1/tau) = 2^{4m+2} tau^{4m+2} P_2(tau)
  q_inversion,        // Q_1(-1/tau) = 2^{4m} tau^{4m} Q_2(tau)
};

std::string to_string(Law law);
Law parse_law(const std::string& s);
std::vector<Law> all_laws();

/// Root data for the P/Q inversion laws: one small real value per root pair.
struct JetSpec {
  int m = 0;
  int fiber_dim = 2;
  std::vector<double> roots;
};

struct NumericCheckReport {
  Law law = Law::theta;
  std::vector<ComplexPoint> samples;
  /// One entry per sample and sub-identity, in evaluation order.
  std::vector<double> residuals;
  double tolerance = 1e-9;
  bool pass = false;
  std::string detail;
};

/// Per-root value of u theta'(0)/theta(u) * theta_k(u)/theta_k(0) with
/// u = x / (2 pi i) * scale; `partner` is theta_1 or theta_2.
Complex theta_root_factor(ThetaFunction partner, Complex x, Complex tau, double scale);

/// Degree-(2*x_degree) jet component of prod_j F(t x_j) at t = 1, computed by
/// a contour integral in t. `scale` is 2 for P_1/Q_1 and 1 for P_2/Q_2.
Complex jet_component(ThetaFunction partner, const std::vector<double>& roots, int x_degree,
                      Complex tau, double scale);

/// Residual metric: |lhs - rhs| / max(1, |rhs|).
double residual(Complex lhs, Complex rhs);

NumericCheckReport check_transformation(Law law, const std::vector<ComplexPoint>& samples,
                                        double tol = 1e-9, const JetSpec& jet = {});

/// Deterministic sample set: |Re v| <= 0.5, 0 <= Im v <= 0.5,
/// |Re tau| <= 0.5, 0.5 <= Im tau <= 2.
std::vector<ComplexPoint> standard_samples(int count, unsigned long long seed = 20240601ULL);

}  // namespace modinv
