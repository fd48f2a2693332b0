#pragma once

// Truncated formal power series in q^{1/2} over a pluggable coefficient ring.
//
// Exponents are stored doubled ("exp2"): q^{3/2} has exp2 == 3. A series knows
// its truncation order (exclusive, in the same doubled units); every stored
// coefficient is exact and nonzero.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "modinv/rational.hpp"

namespace modinv {

/// Ring adaptor. Specializations provide
///   Context, context_of(r), zero(ctx), one(ctx), is_zero(r), inverse(r).
template <class R>
struct CoefficientRing;

struct ScalarContext {
  bool operator==(const ScalarContext&) const = default;
};

template <>
struct CoefficientRing<Rational> {
  using Context = ScalarContext;
  static Context context_of(const Rational&) { return {}; }
  static Rational zero(const Context&) { return 0; }
  static Rational one(const Context&) { return 1; }
  static bool is_zero(const Rational& r) { return r == 0; }
  static std::optional<Rational> inverse(const Rational& r) {
    if (r == 0) return std::nullopt;
    return Rational(1 / r);
  }
};

template <class R>
class HalfQSeries {
 public:
  using Ring = CoefficientRing<R>;
  using Context = typename Ring::Context;
  using Terms = std::map<int, R>;

  HalfQSeries() = default;
  HalfQSeries(Context ctx, int order) : ctx_(std::move(ctx)), order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
  }

  static HalfQSeries monomial(const Context& ctx, int order, int exp2, const R& c) {
    HalfQSeries s(ctx, order);
    s.set(exp2, c);
    return s;
  }
  static HalfQSeries constant(const Context& ctx, int order, const R& c) {
    return monomial(ctx, order, 0, c);
  }
  static HalfQSeries one(const Context& ctx, int order) {
    return constant(ctx, order, Ring::one(ctx));
  }

  int order() const { return order_; }
  const Context& context() const { return ctx_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Lowest exponent carrying a nonzero coefficient; order() if none.
  int valuation() const { return terms_.empty() ? order_ : terms_.begin()->first; }

  R coeff(int exp2) const {
    if (exp2 < 0 || exp2 >= order_) {
      throw std::out_of_range("coefficient q^(" + std::to_string(exp2) +
                              "/2) is beyond the truncation order " + std::to_string(order_));
    }
    auto it = terms_.find(exp2);
    return it == terms_.end() ? Ring::zero(ctx_) : it->second;
  }

  void set(int exp2, const R& value) {
    if (exp2 < 0) throw std::invalid_argument("negative exponent in q-series");
    if (exp2 >= order_) return;
    if (Ring::is_zero(value)) {
      terms_.erase(exp2);
    } else {
      terms_.insert_or_assign(exp2, value);
    }
  }

  void add_to(int exp2, const R& value) {
    if (exp2 < 0) throw std::invalid_argument("negative exponent in q-series");
    if (exp2 >= order_) return;
    auto it = terms_.find(exp2);
    if (it == terms_.end()) {
      if (!Ring::is_zero(value)) terms_.emplace(exp2, value);
      return;
    }
    it->second = it->second + value;
    if (Ring::is_zero(it->second)) terms_.erase(it);
  }

  HalfQSeries truncated(int order) const {
    HalfQSeries out(ctx_, std::min(order, order_));
    for (const auto& [e, c] : terms_) {
      if (e >= out.order_) break;
      out.terms_.emplace(e, c);
    }
    return out;
  }

  /// Apply f to every coefficient; f may change the coefficient ring.
  template <class F>
  auto map(F&& f) const {
    using Out = std::decay_t<decltype(f(std::declval<const R&>()))>;
    using OutRing = CoefficientRing<Out>;
    HalfQSeries<Out> out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Out v = f(c);
      if (first) {
        out = HalfQSeries<Out>(OutRing::context_of(v), order_);
        first = false;
      }
      out.set(e, v);
    }
    if (first) {
      throw std::logic_error("map over an empty series needs an explicit context; use map_with");
    }
    return out;
  }

  template <class Out, class F>
  HalfQSeries<Out> map_with(const typename CoefficientRing<Out>::Context& ctx, F&& f) const {
    HalfQSeries<Out> out(ctx, order_);
    for (const auto& [e, c] : terms_) out.set(e, f(c));
    return out;
  }

  HalfQSeries operator-() const {
    HalfQSeries out(ctx_, order_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
  }

  HalfQSeries& operator+=(const HalfQSeries& b) { return *this = *this + b; }
  HalfQSeries& operator-=(const HalfQSeries& b) { return *this = *this - b; }
  HalfQSeries& operator*=(const HalfQSeries& b) { return *this = *this * b; }

  friend HalfQSeries operator+(const HalfQSeries& a, const HalfQSeries& b) {
    check_same_ring(a, b);
    HalfQSeries out = a.truncated(std::min(a.order_, b.order_));
    for (const auto& [e, c] : b.terms_) out.add_to(e, c);
    return out;
  }

  friend HalfQSeries operator-(const HalfQSeries& a, const HalfQSeries& b) { return a + (-b); }

  /// Cauchy product; the result order is the largest bound for which every
  /// coefficient is fully determined by the operands.
  friend HalfQSeries operator*(const HalfQSeries& a, const HalfQSeries& b) {
    check_same_ring(a, b);
    const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    HalfQSeries out(a.ctx_, order);
    for (const auto& [ea, ca] : a.terms_) {
      if (ea >= order) break;
      for (const auto& [eb, cb] : b.terms_) {
        if (ea + eb >= order) break;
        out.add_to(ea + eb, ca * cb);
      }
    }
    return out;
  }

  friend HalfQSeries operator*(const HalfQSeries& a, const Rational& s) {
    HalfQSeries out(a.ctx_, a.order_);
    if (s == 0) return out;
    for (const auto& [e, c] : a.terms_) out.set(e, c * s);
    return out;
  }
  friend HalfQSeries operator*(const Rational& s, const HalfQSeries& a) { return a * s; }

  friend bool operator==(const HalfQSeries& a, const HalfQSeries& b) {
    return a.order_ == b.order_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

  /// Multiplicative inverse up to the truncation order.
  HalfQSeries inverse() const {
    auto it = terms_.find(0);
    if (it == terms_.end()) throw std::domain_error("q-series inverse: zero constant term");
    const auto c0_inv = Ring::inverse(it->second);
    if (!c0_inv) throw std::domain_error("q-series inverse: constant term is not invertible");
    HalfQSeries out(ctx_, order_);
    out.set(0, *c0_inv);
    for (int e = 1; e < order_; ++e) {
      R acc = Ring::zero(ctx_);
      bool any = false;
      for (const auto& [ea, ca] : terms_) {
        if (ea == 0) continue;
        if (ea > e) break;
        auto ib = out.terms_.find(e - ea);
        if (ib == out.terms_.end()) continue;
        acc = acc + ca * ib->second;
        any = true;
      }
      if (any) out.set(e, -(*c0_inv * acc));
    }
    return out;
  }

  HalfQSeries pow(unsigned k) const {
    HalfQSeries result = one(ctx_, order_);
    HalfQSeries base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

 private:
  static void check_same_ring(const HalfQSeries& a, const HalfQSeries& b) {
    if (!(a.ctx_ == b.ctx_)) throw std::invalid_argument("q-series: mismatched coefficient rings");
  }

  Context ctx_{};
  int order_ = 0;
  Terms terms_;
};

using RationalQSeries = HalfQSeries<Rational>;

/// Embed a scalar series into another coefficient ring by multiplying with c.
template <class R>
HalfQSeries<R> scale(const RationalQSeries& s, const R& c) {
  using Ring = CoefficientRing<R>;
  HalfQSeries<R> out(Ring::context_of(c), s.order());
  for (const auto& [e, v] : s.terms()) out.set(e, c * v);
  return out;
}

/// Truncate both to the smaller order and compare.
template <class R>
bool equal_to_order(const HalfQSeries<R>& a, const HalfQSeries<R>& b, int order) {
  if (a.order() < order || b.order() < order) return false;
  return a.truncated(order) == b.truncated(order);
}

/// exp(u) = sum u^k/k! for a nilpotent element of a truncated ring.
template <class T>
T nilpotent_exp(const T& u, const T& one, int max_terms = 4096) {
  T result = one;
  T term = one;
  for (int k = 1; k <= max_terms; ++k) {
    term = term * u * Rational(1, k);
    if (term.is_zero()) return result;
    result = result + term;
  }
  throw std::domain_error("nilpotent_exp: argument is not nilpotent at this truncation");
}

/// log(1+u) = sum (-1)^{k+1} u^k/k for a nilpotent element of a truncated ring.
template <class T>
T nilpotent_log1p(const T& u, int max_terms = 4096) {
  T result = u;
  T power = u;
  for (int k = 2; k <= max_terms; ++k) {
    power = power * u;
    if (power.is_zero()) return result;
    result = result + power * Rational(k % 2 == 0 ? -1 : 1, k);
  }
  throw std::domain_error("nilpotent_log1p: argument is not nilpotent at this truncation");
}

}  // namespace modinv
