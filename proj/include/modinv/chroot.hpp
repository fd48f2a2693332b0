#pragma once

// Characteristic forms of the vertical tangent bundle, modeled on formal Chern
// roots {±x_1, ..., ±x_n} (plus a zero root for odd fibers) and stored in the
// Pontryagin basis p_i = e_i(x_1^2, ..., x_n^2). A p-monomial
// p_1^{a_1}...p_n^{a_n} has form degree 4 * sum(i * a_i).

#include <map>
#include <span>
#include <string>
#include <vector>

#include "modinv/qseries.hpp"
#include "modinv/rational.hpp"
#include "modinv/xseries.hpp"

namespace modinv {

class RootProfile {
 public:
  RootProfile() = default;
  /// fiber_dim >= 1; max_form_degree even and >= 0.
  RootProfile(int fiber_dim, int max_form_degree);

  int fiber_dim() const { return fiber_dim_; }
  int max_form_degree() const { return max_form_degree_; }
  int n_pairs() const { return fiber_dim_ / 2; }
  bool has_zero_root() const { return fiber_dim_ % 2 == 1; }
  /// Largest p-weight sum(i * a_i) kept by the truncation.
  int max_weight() const { return max_form_degree_ / 4; }
  /// Largest power of a single root that can reach the truncation.
  int max_x_degree() const { return max_form_degree_ / 2; }

  RootProfile with_max_degree(int max_form_degree) const {
    return RootProfile(fiber_dim_, max_form_degree);
  }

  bool operator==(const RootProfile&) const = default;

 private:
  int fiber_dim_ = 1;
  int max_form_degree_ = 0;
};

/// Exponent vector (a_1, ..., a_n) over p_1..p_n, n = n_pairs.
using Monomial = std::vector<int>;

int monomial_weight(const Monomial& m);

/// Graded lexicographic: lower weight first, then larger a_1, a_2, ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class GradedClass {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  GradedClass() = default;
  explicit GradedClass(RootProfile profile) : profile_(profile) {}

  static GradedClass scalar(const RootProfile& profile, const Rational& c);
  /// p_i; zero when i > n_pairs or when p_i lies beyond the truncation.
  static GradedClass pontryagin(const RootProfile& profile, int i);

  const RootProfile& profile() const { return profile_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Monomial& m) const;
  Rational constant() const;
  /// Adds c * m; monomials beyond the truncation are dropped silently.
  void add_term(const Monomial& m, const Rational& c);

  GradedClass degree_component(int form_degree) const;
  /// Everything except the degree-0 part.
  GradedClass positive_part() const;
  GradedClass inverse() const;
  /// Re-truncate to a smaller max_form_degree.
  GradedClass restricted(int max_form_degree) const;

  /// Human-readable "1 - 1/24 p1 + ..." form.
  std::string to_display() const;

  GradedClass operator-() const;
  GradedClass& operator+=(const GradedClass& b);
  GradedClass& operator-=(const GradedClass& b);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(const GradedClass& a, const Rational& s);
  friend GradedClass operator*(const Rational& s, const GradedClass& a) { return a * s; }
  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.profile_ == b.profile_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_profile(const GradedClass& b) const;

  RootProfile profile_;
  Terms terms_;
};

template <>
struct CoefficientRing<GradedClass> {
  using Context = RootProfile;
  static Context context_of(const GradedClass& r) { return r.profile(); }
  static GradedClass zero(const Context& p) { return GradedClass(p); }
  static GradedClass one(const Context& p) { return GradedClass::scalar(p, 1); }
  static bool is_zero(const GradedClass& r) { return r.is_zero(); }
  static std::optional<GradedClass> inverse(const GradedClass& r) {
    if (r.constant() == 0) return std::nullopt;
    return r.inverse();
  }
};

using ClassQSeries = HalfQSeries<GradedClass>;

/// Power sums sum_j x_j^{2k}, k = 1..max_weight, in the p-basis via Newton's
/// identities. Entry 0 is unused (zero).
std::vector<GradedClass> power_sums(const RootProfile& profile);

/// prod_j f(x_j) over the root pairs only (no zero-root factor).
GradedClass product_over_pairs(const XSeries& f, const RootProfile& profile);

/// prod_j f(x_j) * (f(0) if the profile has a zero root). f must be even
/// with a nonzero constant term and known through x^{max_x_degree}.
GradedClass product_over_roots(const XSeries& f, const RootProfile& profile);

/// Sum of g over the complex root multiset {±x_j} (and 0 for odd fibers).
GradedClass sum_over_roots(const XSeries& g, const RootProfile& profile);

/// Root-pair product of a bivariate per-root factor F(x, q). Each q-coefficient
/// must be even in x; F(0, q) must have a nonzero constant term.
ClassQSeries product_over_pairs(const BivariateSeries& f, const RootProfile& profile);
ClassQSeries product_over_roots(const BivariateSeries& f, const RootProfile& profile);

GradedClass degree_component(const GradedClass& g, int form_degree);

/// Substitute p_i = e_i(values_1^2, ..., values_n^2).
Rational eval_at_roots(const GradedClass& g, std::span<const Rational> values);

}  // namespace modinv
