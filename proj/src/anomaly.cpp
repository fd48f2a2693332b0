#include "modinv/anomaly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace modinv {

std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::p1: return "P1";
    case FormKind::p2: return "P2";
    case FormKind::q1: return "Q1";
    case FormKind::q2: return "Q2";
  }
  return "?";
}

FormKind parse_form_kind(const std::string& s) {
  if (s == "P1" || s == "p1") return FormKind::p1;
  if (s == "P2" || s == "p2") return FormKind::p2;
  if (s == "Q1" || s == "q1") return FormKind::q1;
  if (s == "Q2" || s == "q2") return FormKind::q2;
  throw std::invalid_argument("unknown form '" + s + "' (expected P1, P2, Q1 or Q2)");
}

std::string to_string(Route r) { return r == Route::ktheory ? "ktheory" : "theta_product"; }

Route parse_route(const std::string& s) {
  if (s == "ktheory") return Route::ktheory;
  if (s == "theta_product" || s == "theta-product") return Route::theta_product;
  throw std::invalid_argument("unknown route '" + s + "' (expected ktheory or theta_product)");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate_zero: return "degenerate-zero";
  }
  return "?";
}

ThetaProvider direct_theta_provider() {
  return [](ThetaKind kind, const RootProfile& profile, int q_order) {
    return build_theta_bundle(kind, profile, q_order);
  };
}

namespace {

const ThetaProvider& provider_or_default(const ThetaProvider& p) {
  static const ThetaProvider direct = direct_theta_provider();
  return p ? p : direct;
}

bool uses_theta1(FormKind k) { return k == FormKind::p1 || k == FormKind::q1; }
bool is_p_kind(FormKind k) { return k == FormKind::p1 || k == FormKind::p2; }

ThetaKind theta_of(FormKind k) { return uses_theta1(k) ? ThetaKind::theta1 : ThetaKind::theta2; }

// Degree of the identity for this form, after checking the fiber class.
int checked_degree(FormKind kind, int m, int fiber_dim) {
  const auto c = classify_fiber(m, fiber_dim);
  if (is_p_kind(kind) != (c == DecompositionCase::b_case)) {
    throw std::invalid_argument(to_string(kind) + " is not defined for fiber dimension " +
                                std::to_string(fiber_dim) + " at m = " + std::to_string(m));
  }
  return target_degree(m, c);
}

GradedClass genus_for(FormKind kind, const RootProfile& profile, LVariant lv) {
  return uses_theta1(kind) ? l_class(profile, lv) : a_hat(profile);
}

ClassQSeries degree_part(const ClassQSeries& s, int degree) {
  return s.map_with<GradedClass>(s.context(),
                                 [&](const GradedClass& c) { return c.degree_component(degree); });
}

// g(y) with g = (y/2)/sinh(y/2) for theta_2, (y/2) coth(y/2) for theta_1
XSeries root_prefactor(ThetaKind partner, int x_order, const Rational& s) {
  const XSeries inv_sinhc = sinhc_series(x_order, s / 2).inverse();
  if (partner == ThetaKind::theta2) return inv_sinhc;
  return cosh_series(x_order, s / 2) * inv_sinhc;
}

BivariateSeries lift(const RationalQSeries& s, int x_order) {
  return s.map_with<XSeries>(XContext{x_order},
                             [&](const Rational& c) { return XSeries::constant(x_order, c); });
}

// 1 + a * 2cosh(sx) q^{e/2} + q^{e}
BivariateSeries cosh_trinomial(int sign, int exp2, const Rational& s, int x_order, int q_order) {
  BivariateSeries out({x_order}, q_order);
  out.add_to(0, XSeries::constant(x_order, 1));
  out.add_to(exp2, cosh_series(x_order, s) * Rational(2 * sign));
  out.add_to(2 * exp2, XSeries::constant(x_order, 1));
  return out;
}

RationalQSeries one_plus(int sign, int exp2, int q_order) {
  RationalQSeries out = RationalQSeries::one({}, q_order);
  out.add_to(exp2, sign);
  return out;
}

// c * g(sx) * prod_n T(0)/T(sx) * T_k(sx)/T_k(0)
BivariateSeries theta_root_series(ThetaKind partner, const Calibration& cal, int x_order,
                                  int q_order) {
  BivariateSeries f =
      BivariateSeries::constant({x_order}, q_order, root_prefactor(partner, x_order, cal.scale) *
                                                        cal.constant);
  for (int n = 1; 2 * n < q_order; ++n) {
    // (1 - q^n)^2 / ((1 - q^n e^{sx})(1 - q^n e^{-sx}))
    f = f * lift(one_plus(-1, 2 * n, q_order).pow(2), x_order) *
        cosh_trinomial(-1, 2 * n, cal.scale, x_order, q_order).inverse();
  }
  if (partner == ThetaKind::theta2) {
    for (int n = 1; 2 * n - 1 < q_order; ++n) {
      const int e = 2 * n - 1;
      f = f * cosh_trinomial(-1, e, cal.scale, x_order, q_order) *
          lift(one_plus(-1, e, q_order).pow(2).inverse(), x_order);
    }
  } else {
    for (int n = 1; 2 * n < q_order; ++n) {
      const int e = 2 * n;
      f = f * cosh_trinomial(+1, e, cal.scale, x_order, q_order) *
          lift(one_plus(+1, e, q_order).pow(2).inverse(), x_order);
    }
  }
  return f.truncated(q_order);
}

Monomial p1_monomial(const RootProfile& p) {
  Monomial m(static_cast<std::size_t>(p.n_pairs()), 0);
  if (!m.empty()) m[0] = 1;
  return m;
}

std::set<Monomial, GradedLex> monomials_of(const GradedClass& a, const GradedClass& b) {
  std::set<Monomial, GradedLex> out;
  for (const auto& [m, c] : a.terms()) out.insert(m);
  for (const auto& [m, c] : b.terms()) out.insert(m);
  return out;
}

void append_residuals(const GradedClass& diff, std::optional<int> exp2,
                      std::vector<ResidualTerm>& out) {
  for (const auto& [m, c] : diff.terms()) out.push_back({exp2, m, c});
}

ClassQSeries as_series(const GradedClass& g) {
  return ClassQSeries::constant(g.profile(), 1, g);
}

}  // namespace

Calibration calibrate_theta_route(FormKind kind, const RootProfile& profile, LVariant l_variant,
                                  const ThetaProvider& provider) {
  const RootProfile p = profile.max_form_degree() >= 4 ? profile : profile.with_max_degree(4);
  const ThetaBundleSeries th = provider_or_default(provider)(theta_of(kind), p, 1);
  const GradedClass k0 = genus_for(kind, p, l_variant) * th.series.coeff(0);

  const int roots = p.n_pairs() + (p.has_zero_root() ? 1 : 0);
  Calibration cal;
  if (!exact_root(k0.constant(), static_cast<unsigned>(roots), cal.constant)) {
    throw std::domain_error("no rational per-root constant reproduces the degree-0 term " +
                            to_string(k0.constant()));
  }
  if (p.n_pairs() == 0) return cal;

  const XSeries g = root_prefactor(theta_of(kind), 3, 1);
  const Rational s2 = k0.coeff(p1_monomial(p)) / (k0.constant() * g.coeff(2));
  if (!exact_root(s2, 2, cal.scale)) {
    throw std::domain_error("no rational root scaling reproduces the p1 term (scale^2 = " +
                            to_string(s2) + ")");
  }
  return cal;
}

PForm p_form(FormKind kind, int m, const RootProfile& profile, Route route, int q_order,
             LVariant l_variant, const ThetaProvider& provider) {
  if (q_order < 1) throw std::invalid_argument("q-order must be positive");
  const int degree = checked_degree(kind, m, profile.fiber_dim());
  const RootProfile p = profile.with_max_degree(degree);

  PForm out;
  out.kind = kind;
  out.m = m;
  out.profile = p;
  out.route = route;
  out.l_variant = l_variant;
  out.degree = degree;

  if (route == Route::ktheory) {
    const ThetaBundleSeries th = provider_or_default(provider)(theta_of(kind), p, q_order);
    const GradedClass genus = genus_for(kind, p, l_variant);
    out.series = th.series.map_with<GradedClass>(
        p, [&](const GradedClass& c) { return (genus * c).degree_component(degree); });
    return out;
  }

  const Calibration cal = calibrate_theta_route(kind, p, l_variant, provider);
  const BivariateSeries f = theta_root_series(theta_of(kind), cal, p.max_x_degree() + 1, q_order);
  out.series = degree_part(product_over_roots(f, p), degree);
  out.calibration = cal;
  return out;
}

std::vector<GradedClass> identity_basis(const Theta2Decomposition& dec) {
  const int degree = target_degree(dec.m, dec.kind);
  const RootProfile p = dec.profile;
  const GradedClass ahat = a_hat(p);
  std::vector<GradedClass> h;
  for (const auto& el : dec.elements) h.push_back((ahat * el.character()).degree_component(degree));
  return h;
}

Rational reference_constant(int m, DecompositionCase c) {
  const Rational base = pow(Rational(2), 6 * m);
  return c == DecompositionCase::b_case ? base * 8 : base;
}

IdentityReport verify_decomposition_identity(int m, const RootProfile& profile, int q_order,
                                             const ThetaProvider& provider) {
  const auto kind = classify_fiber(m, profile.fiber_dim());
  const int degree = target_degree(m, kind);
  const int weight = kind == DecompositionCase::b_case ? 4 * m + 2 : 4 * m;
  if (q_order == 0) q_order = m + 3;
  if (q_order < m + 1) {
    throw std::invalid_argument("q-order must cover the matched window of " +
                                std::to_string(m + 1) + " coefficients");
  }
  const RootProfile p = profile.with_max_degree(degree);
  const auto& prov = provider_or_default(provider);
  const Theta2Decomposition dec = decompose_theta2(m, prov(ThetaKind::theta2, p, q_order));
  const auto h = identity_basis(dec);
  const FormKind form = kind == DecompositionCase::b_case ? FormKind::p2 : FormKind::q2;
  const PForm lhs = p_form(form, m, p, Route::ktheory, q_order, LVariant::full_angle, prov);

  IdentityReport rep;
  rep.identity = "decomposition";
  rep.fiber_dim = p.fiber_dim();
  rep.m = m;
  rep.route = to_string(Route::ktheory);
  rep.series_level = true;
  rep.lhs = lhs.series;
  rep.rhs = basis_reconstruct(h, weight, q_order, p);

  const ClassQSeries diff = rep.lhs - rep.rhs;
  for (const auto& [e, c] : diff.terms()) append_residuals(c, e, rep.residuals);

  std::string cross = "basis_decompose agrees";
  bool cross_ok = true;
  try {
    const auto recovered = basis_decompose(rep.lhs, weight);
    if (recovered != h) {
      cross_ok = false;
      cross = "basis_decompose recovers different coefficients";
    }
  } catch (const NotInSpanError& e) {
    cross_ok = false;
    cross = e.what();
  }
  rep.detail = (form == FormKind::p2 ? "P2" : "Q2") + std::string(" to q^(") +
               std::to_string(q_order) + "/2), window " + std::to_string(m + 1) + "; " + cross;

  if (rep.lhs.is_zero() && rep.rhs.is_zero()) {
    rep.status = Status::degenerate_zero;
  } else {
    rep.status = rep.residuals.empty() && cross_ok ? Status::pass : Status::fail;
  }
  return rep;
}

IdentityReport verify_main_identity(int m, const RootProfile& profile, LVariant l_variant,
                                    const ThetaProvider& provider) {
  const auto kind = classify_fiber(m, profile.fiber_dim());
  const int degree = target_degree(m, kind);
  const RootProfile p = profile.with_max_degree(degree);
  const Theta2Decomposition dec =
      decompose_theta2(m, provider_or_default(provider)(ThetaKind::theta2, p, m + 1));
  const auto h = identity_basis(dec);

  GradedClass rhs(p);
  for (std::size_t r = 0; r < h.size(); ++r) rhs += h[r] * pow(Rational(2), -6 * long(r));
  const GradedClass lhs = l_class(p, l_variant).degree_component(degree);

  IdentityReport rep;
  rep.identity = "main";
  rep.fiber_dim = p.fiber_dim();
  rep.m = m;
  rep.l_variant = l_variant;
  rep.route = to_string(Route::ktheory);
  rep.lhs = as_series(lhs);
  rep.rhs = as_series(rhs);

  if (lhs.is_zero() && rhs.is_zero()) {
    rep.status = Status::degenerate_zero;
    rep.detail = "both sides vanish in degree " + std::to_string(degree);
    return rep;
  }
  if (rhs.is_zero()) {
    append_residuals(lhs, std::nullopt, rep.residuals);
    rep.status = Status::fail;
    rep.detail = "right-hand side vanishes while the L-class does not";
    return rep;
  }
  const Monomial& lead = rhs.terms().begin()->first;
  const Rational lambda = lhs.coeff(lead) / rhs.coeff(lead);
  append_residuals(lhs - rhs * lambda, std::nullopt, rep.residuals);
  const Rational ref = reference_constant(m, dec.kind);
  rep.lambda = lambda;
  rep.reference_ratio = Rational(lambda / ref);
  rep.status = rep.residuals.empty() ? Status::pass : Status::fail;
  rep.detail = "degree " + std::to_string(degree) + ", " +
               std::to_string(monomials_of(lhs, rhs).size()) + " monomials; half/full factor " +
               to_string(l_variant_factor(p, degree));
  return rep;
}

std::array<Rational, 3> agw_coefficients(int dim) {
  switch (dim) {
    case 2: return {Rational(-1), Rational(0), Rational(1)};
    case 6: return {Rational(21), Rational(-1), Rational(8)};
    case 10: return {Rational(-1), Rational(1), Rational(1)};
    default:
      throw std::invalid_argument("cancellation formulas exist for dimensions 2, 6, 10, not " +
                                  std::to_string(dim));
  }
}

IdentityReport verify_agw(int dim, LVariant l_variant) {
  const auto c = agw_coefficients(dim);
  const int degree = dim + 2;
  const RootProfile p(dim, degree);
  const GradedClass ahat = a_hat(p);
  const GradedClass i_half = ahat.degree_component(degree);
  const GradedClass ch_t = CharacterElement::tangent(p).character();
  const GradedClass i_three_halves =
      (ahat * (ch_t - GradedClass::scalar(p, 1))).degree_component(degree);
  const GradedClass l = l_class(p, l_variant).degree_component(degree);

  // c_{1/2} I_{1/2} + c_{3/2} I_{3/2} = (c_A / 8) L
  const GradedClass lhs = i_half * c[0] + i_three_halves * c[1];
  const GradedClass rhs = l * Rational(c[2] / 8);

  IdentityReport rep;
  rep.identity = "agw";
  rep.fiber_dim = dim;
  rep.m = 0;
  rep.l_variant = l_variant;
  rep.route = to_string(Route::ktheory);
  rep.lhs = as_series(lhs);
  rep.rhs = as_series(rhs);
  append_residuals(lhs - rhs, std::nullopt, rep.residuals);

  // measured L-coefficient mu with lhs = mu L, compared with c_A / 8
  if (!l.is_zero()) {
    const Monomial& lead = l.terms().begin()->first;
    const Rational mu = lhs.coeff(lead) / l.coeff(lead);
    if ((lhs - l * mu).is_zero()) {
      rep.lambda = mu;
      rep.reference_ratio = Rational(mu / (c[2] / 8));
    }
  }
  rep.status = rep.residuals.empty() ? Status::pass : Status::fail;
  rep.detail = "degree " + std::to_string(degree) + " over " +
               std::to_string(monomials_of(lhs, rhs).size()) + " monomials";
  return rep;
}

std::array<Rational, 3> reference_corollary(int fiber_dim) {
  switch (fiber_dim) {
    case 1:
    case 2:
    case 3: return {Rational(1), Rational(0), Rational(8)};
    case 5: return {Rational(1), Rational(1), Rational(-21)};
    case 6: return {Rational(1), Rational(1), Rational(-22)};
    case 7: return {Rational(1), Rational(1), Rational(-23)};
    case 9: return {Rational(1), Rational(-8), Rational(8)};
    case 10: return {Rational(1), Rational(-8), Rational(16)};
    case 11: return {Rational(1), Rational(-8), Rational(24)};
    default:
      throw std::invalid_argument("no twist combination for fiber dimension " +
                                  std::to_string(fiber_dim) +
                                  " (supported: 1, 2, 3, 5, 6, 7, 9, 10, 11)");
  }
}

CorollaryVector corollary_coefficients(int fiber_dim, const ThetaProvider& provider) {
  reference_corollary(fiber_dim);  // rejects unsupported dimensions
  const auto [m, kind] = fiber_class(fiber_dim);
  const int degree = target_degree(m, kind);
  const RootProfile p(fiber_dim, degree);
  const Theta2Decomposition dec =
      decompose_theta2(m, provider_or_default(provider)(ThetaKind::theta2, p, m + 1));

  const Rational c = reference_constant(m, kind);
  // B_0 = C and B_1 = -T~ = -T_C Z + dim C, so only two columns can occur.
  Rational on_b0 = 0, on_b1 = 0;
  GradedClass total(p);
  for (std::size_t r = 0; r < dec.elements.size(); ++r) {
    const Rational w = c * pow(Rational(2), -6 * long(r));
    const auto& row = dec.combination[r];
    for (std::size_t j = 2; j < row.size(); ++j) {
      if (row[j] != 0) throw std::logic_error("combination reaches beyond B_1");
    }
    on_b0 += w * row[0];
    if (row.size() > 1) on_b1 += w * row[1];
    total += dec.elements[r].character() * w;
  }
  const Rational alpha = -on_b1;
  const Rational beta = on_b0 + on_b1 * fiber_dim;
  const GradedClass ch_t = CharacterElement::tangent(p).character();
  if (!(total == ch_t * alpha + GradedClass::scalar(p, beta))) {
    throw std::logic_error("character-level combination disagrees with the B_j expansion");
  }

  CorollaryVector out;
  out.fiber_dim = fiber_dim;
  out.m = m;
  out.coefficients = {Rational(1), Rational(-alpha), Rational(-beta)};
  if (fiber_dim == 2 || fiber_dim == 6 || fiber_dim == 10) {
    const auto a = agw_coefficients(fiber_dim);
    // c_{1/2} A + c_{3/2} A (ch T - 1) - (c_A / 8) L
    const Rational sig = -a[2] / 8;
    out.agw_translation = std::array<Rational, 3>{Rational(1), Rational(a[1] / sig),
                                                  Rational((a[0] - a[1]) / sig)};
  }
  return out;
}

IdentityReport verify_route_equivalence(int m, const RootProfile& profile, int q_order,
                                        FormKind kind, LVariant l_variant,
                                        const ThetaProvider& provider) {
  const auto c = classify_fiber(m, profile.fiber_dim());
  // keep the theta index, pick P or Q from the fiber class
  const bool first = uses_theta1(kind);
  if (c == DecompositionCase::b_case) {
    kind = first ? FormKind::p1 : FormKind::p2;
  } else {
    kind = first ? FormKind::q1 : FormKind::q2;
  }
  const auto& prov = provider_or_default(provider);
  const PForm kt = p_form(kind, m, profile, Route::ktheory, q_order, l_variant, prov);
  const PForm th = p_form(kind, m, profile, Route::theta_product, q_order, l_variant, prov);

  IdentityReport rep;
  rep.identity = "routes";
  rep.fiber_dim = profile.fiber_dim();
  rep.m = m;
  rep.l_variant = l_variant;
  rep.route = "ktheory|theta_product";
  rep.series_level = true;
  rep.lhs = kt.series;
  rep.rhs = th.series;
  rep.calibration = th.calibration;

  const ClassQSeries diff = kt.series - th.series;
  for (const auto& [e, coef] : diff.terms()) append_residuals(coef, e, rep.residuals);
  rep.detail = to_string(kind) + " to q^(" + std::to_string(q_order) + "/2)";
  if (!diff.is_zero()) {
    rep.detail += "; first difference at q^(" + std::to_string(diff.terms().begin()->first) + "/2)";
  }
  if (kt.series.is_zero() && th.series.is_zero()) {
    rep.status = Status::degenerate_zero;
  } else {
    rep.status = diff.is_zero() ? Status::pass : Status::fail;
  }
  return rep;
}

}  // namespace modinv
