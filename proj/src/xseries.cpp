#include "modinv/xseries.hpp"

#include <stdexcept>
#include <string>

namespace modinv {

XSeries::XSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative x-series order");
  coeffs_.assign(static_cast<std::size_t>(order), Rational(0));
}

XSeries XSeries::constant(int order, const Rational& c) {
  XSeries s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

Rational XSeries::coeff(int k) const {
  if (k < 0 || k >= order()) {
    throw std::out_of_range("x^" + std::to_string(k) + " is beyond the x-series truncation " +
                            std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

void XSeries::set(int k, const Rational& c) {
  if (k < 0) throw std::invalid_argument("negative x exponent");
  if (k >= order()) return;
  coeffs_[static_cast<std::size_t>(k)] = c;
}

bool XSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool XSeries::is_even() const {
  for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

XSeries XSeries::truncated(int order) const {
  XSeries out(std::min(order, this->order()));
  for (int k = 0; k < out.order(); ++k) out.coeffs_[k] = coeffs_[k];
  return out;
}

XSeries XSeries::inverse() const {
  if (order() == 0 || coeffs_[0] == 0) throw std::domain_error("x-series inverse: zero constant term");
  XSeries out(order());
  const Rational inv0 = 1 / coeffs_[0];
  out.coeffs_[0] = inv0;
  for (int n = 1; n < order(); ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (coeffs_[k] != 0) acc += coeffs_[k] * out.coeffs_[n - k];
    }
    out.coeffs_[n] = -inv0 * acc;
  }
  return out;
}

XSeries XSeries::operator-() const {
  XSeries out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  for (int k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  for (int k = 0; k < out.order(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
  XSeries out(std::min(a.order(), b.order()));
  const int n = out.order();
  for (int i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

XSeries operator*(const XSeries& a, const Rational& s) {
  XSeries out = a;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

XSeries exp_series(int order, const Rational& a) {
  XSeries s(order);
  Rational term = 1;
  for (int k = 0; k < order; ++k) {
    if (k > 0) term = term * a / k;
    s.set(k, term);
  }
  return s;
}

XSeries cosh_series(int order, const Rational& a) {
  XSeries s(order);
  Rational term = 1;
  for (int k = 0; k < order; ++k) {
    if (k > 0) term = term * a / k;
    if (k % 2 == 0) s.set(k, term);
  }
  return s;
}

XSeries sinhc_series(int order, const Rational& a) {
  // sinh(ax)/(ax) = sum (ax)^{2k} / (2k+1)!
  XSeries s(order);
  Rational term = 1;  // a^k / (k+1)!
  for (int k = 0; k < order; ++k) {
    if (k > 0) term = term * a / (k + 1);
    if (k % 2 == 0) s.set(k, term);
  }
  return s;
}

}  // namespace modinv
