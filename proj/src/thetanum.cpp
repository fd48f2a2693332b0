#include "modinv/thetanum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace modinv {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

void require_upper_half_plane(Complex tau) {
  if (!(tau.imag() > 0.0)) throw std::domain_error("tau must lie in the upper half plane");
}

}  // namespace

int default_theta_terms(const ComplexPoint& p) {
  require_upper_half_plane(p.tau);
  const double abs_q = std::exp(-2.0 * kPi * p.tau.imag());
  // |e^{±2 pi i v}| = e^{∓2 pi Im v}; q^{j-1/2} shifts by one more half step.
  const double growth = std::exp(2.0 * kPi * std::abs(p.v.imag())) / std::sqrt(abs_q);
  const double n = std::log(1e-16 / growth) / std::log(abs_q);
  return std::max(4, static_cast<int>(std::ceil(n)) + 2);
}

Complex theta_eval(ThetaFunction kind, const ComplexPoint& p, int n_terms) {
  require_upper_half_plane(p.tau);
  if (n_terms <= 0) n_terms = default_theta_terms(p);
  const Complex q = std::exp(2.0 * kPi * kI * p.tau);
  const Complex q_half = std::exp(kPi * kI * p.tau);
  const Complex z = std::exp(2.0 * kPi * kI * p.v);
  const Complex z_inv = 1.0 / z;

  Complex prod = 1.0;
  Complex qj = 1.0;
  for (int j = 1; j <= n_terms; ++j) {
    qj *= q;
    const Complex qh = qj / q_half;  // q^{j-1/2}
    switch (kind) {
      case ThetaFunction::theta: prod *= (1.0 - qj) * (1.0 - z * qj) * (1.0 - z_inv * qj); break;
      case ThetaFunction::theta1: prod *= (1.0 - qj) * (1.0 + z * qj) * (1.0 + z_inv * qj); break;
      case ThetaFunction::theta2: prod *= (1.0 - qj) * (1.0 - z * qh) * (1.0 - z_inv * qh); break;
      case ThetaFunction::theta3: prod *= (1.0 - qj) * (1.0 + z * qh) * (1.0 + z_inv * qh); break;
    }
  }
  const Complex q_eighth = std::exp(kPi * kI * p.tau / 4.0);
  switch (kind) {
    case ThetaFunction::theta: return 2.0 * q_eighth * std::sin(kPi * p.v) * prod;
    case ThetaFunction::theta1: return 2.0 * q_eighth * std::cos(kPi * p.v) * prod;
    default: return prod;
  }
}

Complex theta_prime_zero(Complex tau, int n_terms) {
  require_upper_half_plane(tau);
  if (n_terms <= 0) n_terms = default_theta_terms({0.0, tau});
  const Complex q = std::exp(2.0 * kPi * kI * tau);
  Complex prod = 1.0;
  Complex qj = 1.0;
  for (int j = 1; j <= n_terms; ++j) {
    qj *= q;
    prod *= std::pow(1.0 - qj, 3);
  }
  return 2.0 * kPi * std::exp(kPi * kI * tau / 4.0) * prod;
}

Complex evaluate_series(const RationalQSeries& s, Complex tau) {
  Complex total = 0.0;
  for (const auto& [e, c] : s.terms()) total += c.get_d() * std::exp(kPi * kI * tau * double(e));
  return total;
}

std::string to_string(Law law) {
  switch (law) {
    case Law::theta: return "theta";
    case Law::theta1: return "theta1";
    case Law::theta2: return "theta2";
    case Law::theta3: return "theta3";
    case Law::delta_inversion: return "delta-inversion";
    case Law::eps_inversion: return "eps-inversion";
    case Law::p_inversion: return "p-inversion";
    case Law::q_inversion: return "q-inversion";
  }
  return "?";
}

Law parse_law(const std::string& s) {
  for (Law l : all_laws()) {
    if (to_string(l) == s) return l;
  }
  throw std::invalid_argument("unknown transformation law '" + s + "'");
}

std::vector<Law> all_laws() {
  return {Law::theta,           Law::theta1,        Law::theta2,      Law::theta3,
          Law::delta_inversion, Law::eps_inversion, Law::p_inversion, Law::q_inversion};
}

Complex theta_root_factor(ThetaFunction partner, Complex x, Complex tau, double scale) {
  if (x == 0.0) return 1.0;
  const Complex u = scale * x / (2.0 * kPi * kI);
  const Complex num = u * theta_prime_zero(tau) * theta_eval(partner, {u, tau});
  const Complex den = theta_eval(ThetaFunction::theta, {u, tau}) * theta_eval(partner, {0.0, tau});
  return num / den;
}

namespace {

// min |a + b tau| over small nonzero lattice vectors
double lattice_gap(Complex tau) {
  double best = 1e300;
  for (int a = -4; a <= 4; ++a) {
    for (int b = -4; b <= 4; ++b) {
      if (a == 0 && b == 0) continue;
      best = std::min(best, std::abs(double(a) + double(b) * tau));
    }
  }
  return best;
}

}  // namespace

Complex jet_component(ThetaFunction partner, const std::vector<double>& roots, int x_degree,
                      Complex tau, double scale) {
  double x_max = 0.0;
  for (double r : roots) x_max = std::max(x_max, std::abs(r));
  if (x_max == 0.0) return x_degree == 0 ? Complex(1.0) : Complex(0.0);
  // zeros of theta(u) sit at u = a + b tau, i.e. |x| = (2 pi / scale) |a + b tau|
  const double pole = 2.0 * kPi / scale * lattice_gap(tau);
  const double radius = 0.5 * pole / x_max;
  constexpr int kPoints = 128;
  Complex acc = 0.0;
  for (int k = 0; k < kPoints; ++k) {
    const Complex t = radius * std::exp(2.0 * kPi * kI * double(k) / double(kPoints));
    Complex g = 1.0;
    for (double r : roots) g *= theta_root_factor(partner, t * r, tau, scale);
    acc += g * std::pow(t, -x_degree);
  }
  return acc / double(kPoints);
}

double residual(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

namespace {

double relative_residual(Complex lhs, Complex rhs) {
  const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  return std::abs(lhs - rhs) / scale;
}

// (tau / i)^{1/2}, principal branch
Complex sqrt_tau_over_i(Complex tau) { return std::sqrt(tau / kI); }

void check_theta_laws(ThetaFunction f, const ComplexPoint& p, std::vector<double>& out) {
  const Complex v = p.v;
  const Complex tau = p.tau;
  const Complex t_inv = -1.0 / tau;
  const Complex gauss = std::exp(kPi * kI * tau * v * v);
  const Complex eighth = std::exp(kPi * kI / 4.0);
  const Complex pref = sqrt_tau_over_i(tau) * gauss;
  const ComplexPoint scaled{tau * v, tau};

  Complex shift_lhs = theta_eval(f, {v, tau + 1.0});
  Complex shift_rhs;
  Complex inv_lhs = theta_eval(f, {v, t_inv});
  Complex inv_rhs;
  switch (f) {
    case ThetaFunction::theta:
      shift_rhs = eighth * theta_eval(f, p);
      inv_rhs = (1.0 / kI) * pref * theta_eval(ThetaFunction::theta, scaled);
      break;
    case ThetaFunction::theta1:
      shift_rhs = eighth * theta_eval(f, p);
      inv_rhs = pref * theta_eval(ThetaFunction::theta2, scaled);
      break;
    case ThetaFunction::theta2:
      shift_rhs = theta_eval(ThetaFunction::theta3, p);
      inv_rhs = pref * theta_eval(ThetaFunction::theta1, scaled);
      break;
    case ThetaFunction::theta3:
      shift_rhs = theta_eval(ThetaFunction::theta2, p);
      inv_rhs = pref * theta_eval(ThetaFunction::theta3, scaled);
      break;
  }
  out.push_back(residual(shift_lhs, shift_rhs));
  out.push_back(residual(inv_lhs, inv_rhs));
}

Complex delta_numeric(DeltaEps which, Complex tau) {
  const auto fourth = [&](ThetaFunction f) { return std::pow(theta_eval(f, {0.0, tau}), 4); };
  switch (which) {
    case DeltaEps::delta1: return (fourth(ThetaFunction::theta2) + fourth(ThetaFunction::theta3)) / 8.0;
    case DeltaEps::eps1: return fourth(ThetaFunction::theta2) * fourth(ThetaFunction::theta3) / 16.0;
    case DeltaEps::delta2: return -(fourth(ThetaFunction::theta1) + fourth(ThetaFunction::theta3)) / 8.0;
    case DeltaEps::eps2: return fourth(ThetaFunction::theta1) * fourth(ThetaFunction::theta3) / 16.0;
  }
  return 0.0;
}

}  // namespace

NumericCheckReport check_transformation(Law law, const std::vector<ComplexPoint>& samples,
                                        double tol, const JetSpec& jet) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  NumericCheckReport report;
  report.law = law;
  report.samples = samples;
  report.tolerance = tol;

  std::vector<double> roots = jet.roots;
  if (law == Law::p_inversion || law == Law::q_inversion) {
    const int m = jet.m;
    const auto kind = classify_fiber(m, jet.fiber_dim);
    if ((law == Law::p_inversion) != (kind == DecompositionCase::b_case)) {
      throw std::invalid_argument("fiber dimension " + std::to_string(jet.fiber_dim) +
                                  " does not match the " + to_string(law) + " law");
    }
    const std::size_t n = static_cast<std::size_t>(jet.fiber_dim / 2);
    if (roots.empty()) {
      for (std::size_t j = 0; j < n; ++j) roots.push_back(0.2 - 0.1 * double(j) / double(std::max<std::size_t>(n, 1)));
    }
    if (roots.size() != n) throw std::invalid_argument("need one root value per root pair");
    std::ostringstream os;
    os << "m=" << m << " fiber_dim=" << jet.fiber_dim << " roots=[";
    for (std::size_t j = 0; j < roots.size(); ++j) os << (j ? "," : "") << roots[j];
    os << "]";
    report.detail = os.str();
  }

  for (const auto& p : samples) {
    require_upper_half_plane(p.tau);
    switch (law) {
      case Law::theta: check_theta_laws(ThetaFunction::theta, p, report.residuals); break;
      case Law::theta1: check_theta_laws(ThetaFunction::theta1, p, report.residuals); break;
      case Law::theta2: check_theta_laws(ThetaFunction::theta2, p, report.residuals); break;
      case Law::theta3: check_theta_laws(ThetaFunction::theta3, p, report.residuals); break;
      case Law::delta_inversion: {
        const Complex lhs = delta_numeric(DeltaEps::delta2, -1.0 / p.tau);
        const Complex rhs = p.tau * p.tau * delta_numeric(DeltaEps::delta1, p.tau);
        report.residuals.push_back(residual(lhs, rhs));
        break;
      }
      case Law::eps_inversion: {
        const Complex lhs = delta_numeric(DeltaEps::eps2, -1.0 / p.tau);
        const Complex rhs = std::pow(p.tau, 4) * delta_numeric(DeltaEps::eps1, p.tau);
        report.residuals.push_back(residual(lhs, rhs));
        break;
      }
      case Law::p_inversion:
      case Law::q_inversion: {
        const int weight = law == Law::p_inversion ? 4 * jet.m + 2 : 4 * jet.m;
        const Complex lhs = jet_component(ThetaFunction::theta1, roots, weight, -1.0 / p.tau, 2.0);
        const Complex rhs = std::pow(2.0, weight) * std::pow(p.tau, weight) *
                            jet_component(ThetaFunction::theta2, roots, weight, p.tau, 1.0);
        report.residuals.push_back(relative_residual(lhs, rhs));
        break;
      }
    }
  }
  report.pass = std::all_of(report.residuals.begin(), report.residuals.end(),
                            [&](double r) { return r < tol; });
  return report;
}

std::vector<ComplexPoint> standard_samples(int count, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> half(-0.5, 0.5);
  std::uniform_real_distribution<double> im_v(0.0, 0.5);
  std::uniform_real_distribution<double> im_tau(0.5, 2.0);
  std::vector<ComplexPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double rv = half(rng);
    const double iv = im_v(rng);
    const double rt = half(rng);
    const double it = im_tau(rng);
    out.push_back({Complex(rv, iv), Complex(rt, it)});
  }
  return out;
}

}  // namespace modinv
