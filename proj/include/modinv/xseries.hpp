#pragma once

#include <vector>

#include "modinv/qseries.hpp"
#include "modinv/rational.hpp"

namespace modinv {

/// Dense truncated power series in a single formal variable x with exact
/// rational coefficients; x^k is known for 0 <= k < order().
class XSeries {
 public:
  XSeries() = default;
  explicit XSeries(int order);

  static XSeries constant(int order, const Rational& c);

  int order() const { return static_cast<int>(coeffs_.size()); }
  Rational coeff(int k) const;
  void set(int k, const Rational& c);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// All odd-degree coefficients vanish.
  bool is_even() const;
  XSeries truncated(int order) const;
  XSeries inverse() const;

  XSeries operator-() const;
  friend XSeries operator+(const XSeries& a, const XSeries& b);
  friend XSeries operator-(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const XSeries& b);
  friend XSeries operator*(const XSeries& a, const Rational& s);
  friend XSeries operator*(const Rational& s, const XSeries& a) { return a * s; }
  friend bool operator==(const XSeries& a, const XSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// e^{a x}
XSeries exp_series(int order, const Rational& a);
/// cosh(a x)
XSeries cosh_series(int order, const Rational& a);
/// sinh(a x) / (a x), with value 1 at x = 0
XSeries sinhc_series(int order, const Rational& a);

struct XContext {
  int order = 0;
  bool operator==(const XContext&) const = default;
};

template <>
struct CoefficientRing<XSeries> {
  using Context = XContext;
  static Context context_of(const XSeries& r) { return {r.order()}; }
  static XSeries zero(const Context& c) { return XSeries(c.order); }
  static XSeries one(const Context& c) { return XSeries::constant(c.order, 1); }
  static bool is_zero(const XSeries& r) { return r.is_zero(); }
  static std::optional<XSeries> inverse(const XSeries& r) {
    if (r.order() == 0 || r.coeff(0) == 0) return std::nullopt;
    return r.inverse();
  }
};

/// Bivariate series: q^{1/2}-series whose coefficients are x-series.
using BivariateSeries = HalfQSeries<XSeries>;

}  // namespace modinv
