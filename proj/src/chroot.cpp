#include "modinv/chroot.hpp"

#include <sstream>
#include <stdexcept>

namespace modinv {

RootProfile::RootProfile(int fiber_dim, int max_form_degree)
    : fiber_dim_(fiber_dim), max_form_degree_(max_form_degree) {
  if (fiber_dim < 1) throw std::invalid_argument("fiber dimension must be positive");
  if (max_form_degree < 0 || max_form_degree % 2 != 0) {
    throw std::invalid_argument("max form degree must be a non-negative even integer");
  }
}

int monomial_weight(const Monomial& m) {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); ++i) w += static_cast<int>(i + 1) * m[i];
  return w;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = monomial_weight(a);
  const int wb = monomial_weight(b);
  if (wa != wb) return wa < wb;
  return a > b;
}

GradedClass GradedClass::scalar(const RootProfile& profile, const Rational& c) {
  GradedClass g(profile);
  g.add_term(Monomial(static_cast<std::size_t>(profile.n_pairs()), 0), c);
  return g;
}

GradedClass GradedClass::pontryagin(const RootProfile& profile, int i) {
  if (i < 1) throw std::invalid_argument("Pontryagin index must be >= 1");
  GradedClass g(profile);
  if (i > profile.n_pairs()) return g;
  Monomial m(static_cast<std::size_t>(profile.n_pairs()), 0);
  m[static_cast<std::size_t>(i - 1)] = 1;
  g.add_term(m, 1);
  return g;
}

Rational GradedClass::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedClass::constant() const {
  return coeff(Monomial(static_cast<std::size_t>(profile_.n_pairs()), 0));
}

void GradedClass::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != profile_.n_pairs()) {
    throw std::invalid_argument("monomial length does not match the number of root pairs");
  }
  if (c == 0 || monomial_weight(m) > profile_.max_weight()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GradedClass GradedClass::degree_component(int form_degree) const {
  if (form_degree < 0 || form_degree % 2 != 0) {
    throw std::invalid_argument("form degree must be a non-negative even integer");
  }
  if (form_degree > profile_.max_form_degree()) {
    throw std::out_of_range("form degree " + std::to_string(form_degree) +
                            " exceeds the truncation " + std::to_string(profile_.max_form_degree()));
  }
  GradedClass out(profile_);
  if (form_degree % 4 != 0) return out;
  const int w = form_degree / 4;
  for (const auto& [m, c] : terms_) {
    if (monomial_weight(m) == w) out.terms_.emplace(m, c);
  }
  return out;
}

GradedClass GradedClass::positive_part() const {
  GradedClass out = *this;
  out.terms_.erase(Monomial(static_cast<std::size_t>(profile_.n_pairs()), 0));
  return out;
}

GradedClass GradedClass::inverse() const {
  const Rational c = constant();
  if (c == 0) throw std::domain_error("class with zero degree-0 part is not invertible");
  // (c(1+u))^{-1} = c^{-1} sum (-u)^k
  const GradedClass u = positive_part() * (1 / c);
  const GradedClass one = scalar(profile_, 1);
  GradedClass result = one;
  GradedClass power = one;
  for (int k = 1; k <= profile_.max_weight(); ++k) {
    power = power * (-u);
    if (power.is_zero()) break;
    result += power;
  }
  return result * (1 / c);
}

GradedClass GradedClass::restricted(int max_form_degree) const {
  if (max_form_degree > profile_.max_form_degree()) {
    throw std::invalid_argument("cannot extend a truncated class to a higher degree");
  }
  GradedClass out(profile_.with_max_degree(max_form_degree));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

std::string GradedClass::to_display() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_const = monomial_weight(m) == 0;
    if (is_const || mag != 1) os << mag.get_str();
    bool need_sep = !is_const && mag != 1;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_sep) os << " ";
      os << "p" << (i + 1);
      if (m[i] > 1) os << "^" << m[i];
      need_sep = true;
    }
  }
  return os.str();
}

GradedClass GradedClass::operator-() const {
  GradedClass out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void GradedClass::check_same_profile(const GradedClass& b) const {
  if (!(profile_ == b.profile_)) throw std::invalid_argument("graded classes over different root profiles");
}

GradedClass& GradedClass::operator+=(const GradedClass& b) {
  check_same_profile(b);
  for (const auto& [m, c] : b.terms_) add_term(m, c);
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& b) {
  check_same_profile(b);
  for (const auto& [m, c] : b.terms_) add_term(m, -c);
  return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  a.check_same_profile(b);
  GradedClass out(a.profile_);
  const int max_w = a.profile_.max_weight();
  Monomial prod(static_cast<std::size_t>(a.profile_.n_pairs()), 0);
  for (const auto& [ma, ca] : a.terms_) {
    const int wa = monomial_weight(ma);
    for (const auto& [mb, cb] : b.terms_) {
      // terms_ is weight-ordered, so the rest of b is heavier still
      if (wa + monomial_weight(mb) > max_w) break;
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      out.add_term(prod, ca * cb);
    }
  }
  return out;
}

GradedClass operator*(const GradedClass& a, const Rational& s) {
  GradedClass out(a.profile_);
  if (s == 0) return out;
  for (const auto& [m, c] : a.terms_) out.terms_.emplace(m, c * s);
  return out;
}

std::vector<GradedClass> power_sums(const RootProfile& profile) {
  const int w = profile.max_weight();
  std::vector<GradedClass> e(static_cast<std::size_t>(w + 1), GradedClass(profile));
  for (int i = 1; i <= w; ++i) e[i] = GradedClass::pontryagin(profile, i);
  std::vector<GradedClass> pk(static_cast<std::size_t>(w + 1), GradedClass(profile));
  // P_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i P_{k-i} + (-1)^{k-1} k e_k
  for (int k = 1; k <= w; ++k) {
    GradedClass acc = e[k] * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      GradedClass t = e[i] * pk[k - i];
      if (i % 2 == 0) t = -t;
      acc += t;
    }
    pk[k] = acc;
  }
  return pk;
}

namespace {

void require_order(int have, const RootProfile& profile) {
  if (have < profile.max_x_degree() + 1) {
    throw std::invalid_argument("root series known to x^" + std::to_string(have - 1) +
                                " but the truncation needs x^" + std::to_string(profile.max_x_degree()));
  }
}

GradedClass from_even_coefficients(const XSeries& s, const std::vector<GradedClass>& pk,
                                   const RootProfile& profile) {
  GradedClass out(profile);
  for (int k = 1; k <= profile.max_weight(); ++k) {
    const Rational c = s.coeff(2 * k);
    if (c != 0) out += pk[k] * c;
  }
  return out;
}

}  // namespace

GradedClass product_over_pairs(const XSeries& f, const RootProfile& profile) {
  require_order(f.order(), profile);
  if (!f.is_even()) throw std::invalid_argument("product over roots needs an even root series");
  const Rational c = f.coeff(0);
  if (c == 0) throw std::invalid_argument("product over roots needs a nonzero constant term");
  const XSeries g = f.truncated(profile.max_x_degree() + 1) * (1 / c);
  const XSeries log_g = nilpotent_log1p(g - XSeries::constant(g.order(), 1));
  const auto pk = power_sums(profile);
  const GradedClass a = from_even_coefficients(log_g, pk, profile);
  const GradedClass one = GradedClass::scalar(profile, 1);
  return nilpotent_exp(a, one) * pow(c, profile.n_pairs());
}

GradedClass product_over_roots(const XSeries& f, const RootProfile& profile) {
  GradedClass out = product_over_pairs(f, profile);
  if (profile.has_zero_root()) out = out * f.coeff(0);
  return out;
}

GradedClass sum_over_roots(const XSeries& g, const RootProfile& profile) {
  require_order(g.order(), profile);
  const auto pk = power_sums(profile);
  GradedClass out = from_even_coefficients(g, pk, profile) * Rational(2);
  const int zero_roots = profile.has_zero_root() ? 1 : 0;
  out += GradedClass::scalar(profile, g.coeff(0) * (2 * profile.n_pairs() + zero_roots));
  return out;
}

ClassQSeries product_over_pairs(const BivariateSeries& f, const RootProfile& profile) {
  require_order(f.context().order, profile);
  const int x_order = profile.max_x_degree() + 1;
  RationalQSeries c0({}, f.order());
  for (const auto& [e, xs] : f.terms()) {
    if (!xs.is_even()) throw std::invalid_argument("product over roots needs an even root series");
    c0.set(e, xs.coeff(0));
  }
  const RationalQSeries c0_inv = c0.inverse();

  BivariateSeries g({x_order}, f.order());
  for (const auto& [e, xs] : f.terms()) g.set(e, xs.truncated(x_order));
  g = g * scale(c0_inv, XSeries::constant(x_order, 1));
  const BivariateSeries log_g = nilpotent_log1p(g - BivariateSeries::one({x_order}, g.order()));

  const auto pk = power_sums(profile);
  ClassQSeries a(profile, log_g.order());
  for (const auto& [e, xs] : log_g.terms()) a.set(e, from_even_coefficients(xs, pk, profile));
  const ClassQSeries one = ClassQSeries::one(profile, a.order());
  const ClassQSeries prod = nilpotent_exp(a, one);
  const auto scalars = scale(c0.pow(static_cast<unsigned>(profile.n_pairs())),
                             GradedClass::scalar(profile, 1));
  return prod * scalars;
}

ClassQSeries product_over_roots(const BivariateSeries& f, const RootProfile& profile) {
  ClassQSeries out = product_over_pairs(f, profile);
  if (!profile.has_zero_root()) return out;
  RationalQSeries c0({}, f.order());
  for (const auto& [e, xs] : f.terms()) c0.set(e, xs.coeff(0));
  return out * scale(c0, GradedClass::scalar(profile, 1));
}

GradedClass degree_component(const GradedClass& g, int form_degree) {
  return g.degree_component(form_degree);
}

Rational eval_at_roots(const GradedClass& g, std::span<const Rational> values) {
  const int n = g.profile().n_pairs();
  if (static_cast<int>(values.size()) != n) {
    throw std::invalid_argument("expected " + std::to_string(n) + " root values, got " +
                                std::to_string(values.size()));
  }
  // e[i] = e_i(y), y_j = values_j^2
  std::vector<Rational> e(static_cast<std::size_t>(n + 1), Rational(0));
  e[0] = 1;
  for (const auto& v : values) {
    const Rational y = v * v;
    for (int i = n; i >= 1; --i) e[i] += e[i - 1] * y;
  }
  Rational total = 0;
  for (const auto& [m, c] : g.terms()) {
    Rational term = c;
    for (int i = 0; i < n; ++i) {
      if (m[i] > 0) term *= pow(e[i + 1], m[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace modinv
