#include "modinv/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace modinv {

namespace {

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json optional_rational(const std::optional<Rational>& r) {
  return r ? Json(to_string(*r)) : Json(nullptr);
}

Json vector_json(const std::array<Rational, 3>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::string q_power(int exp2) {
  if (exp2 == 0) return "";
  if (exp2 == 2) return "q";
  if (exp2 % 2 == 0) return "q^" + std::to_string(exp2 / 2);
  return "q^(" + std::to_string(exp2) + "/2)";
}

std::string signed_term(bool first, const Rational& c, const std::string& unit) {
  const Rational mag = abs(c);
  std::string body;
  if (unit.empty()) {
    body = mag.get_str();
  } else if (mag == 1) {
    body = unit;
  } else {
    body = mag.get_str() + (unit.front() == 'q' ? "" : " ") + unit;
  }
  if (first) return c < 0 ? "-" + body : body;
  return (c < 0 ? " - " : " + ") + body;
}

// "64/1" -> "64" for the table view; JSON keeps the num/den form.
std::string plain(const Json& rational) {
  std::string s = rational.get<std::string>();
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
  return s;
}

}  // namespace

Json to_json(const RationalQSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exp2", e}, {"coef", to_string(c)}});
  return out;
}

Json to_json(const GradedClass& g) {
  Json out = Json::array();
  for (const auto& [m, c] : g.terms()) out.push_back({{"monomial", m}, {"coef", to_string(c)}});
  return out;
}

Json to_json(const ClassQSeries& s) {
  Json out = Json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exp2", e}, {"coef", to_json(c)}});
  return out;
}

Json to_json(const CharacterElement& e) {
  Json out;
  out["label"] = e.label ? Json(*e.label) : Json(nullptr);
  out["rank"] = e.virtual_rank.get_str();
  out["form"] = to_json(e.form_part);
  return out;
}

Json to_json(const ThetaBundleSeries& t) {
  Json out;
  out["kind"] = to_string(t.kind);
  out["fiber_dim"] = t.profile.fiber_dim();
  out["max_degree"] = t.profile.max_form_degree();
  out["q_order"] = t.series.order();
  out["series"] = to_json(t.series);
  return out;
}

Json to_json(const Theta2Decomposition& d) {
  Json out;
  out["m"] = d.m;
  out["fiber_dim"] = d.profile.fiber_dim();
  out["case"] = d.kind == DecompositionCase::b_case ? "b" : "z";
  Json elements = Json::array();
  for (std::size_t r = 0; r < d.elements.size(); ++r) {
    Json e = to_json(d.elements[r]);
    e["display"] = display_element(d, r);
    elements.push_back(e);
  }
  out["elements"] = elements;
  Json comb = Json::array();
  for (const auto& row : d.combination) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(to_string(x));
    comb.push_back(jr);
  }
  out["combination"] = comb;
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["identity"] = r.identity;
  out["fiber_dim"] = r.fiber_dim;
  out["m"] = r.m;
  out["l_variant"] = to_string(r.l_variant);
  out["route"] = r.route;
  out["lambda"] = optional_rational(r.lambda);
  out["paper_ratio"] = optional_rational(r.reference_ratio);
  Json res = Json::array();
  for (const auto& t : r.residuals) {
    Json jt;
    if (t.exp2) jt["exp2"] = *t.exp2;
    jt["monomial"] = t.monomial;
    jt["coef"] = to_string(t.value);
    res.push_back(jt);
  }
  out["residuals"] = res;
  out["status"] = to_string(r.status);
  if (r.series_level) {
    out["lhs"] = to_json(r.lhs);
    out["rhs"] = to_json(r.rhs);
  } else {
    out["lhs"] = to_json(r.lhs.coeff(0));
    out["rhs"] = to_json(r.rhs.coeff(0));
  }
  if (r.calibration) {
    out["calibration"] = {{"constant", to_string(r.calibration->constant)},
                          {"scale", to_string(r.calibration->scale)}};
  }
  out["detail"] = r.detail;
  return out;
}

Json to_json(const NumericCheckReport& r) {
  Json out;
  out["identity"] = "numeric";
  out["law"] = to_string(r.law);
  out["status"] = r.pass ? "pass" : "fail";
  out["tolerance"] = r.tolerance;
  const double worst =
      r.residuals.empty() ? 0.0 : *std::max_element(r.residuals.begin(), r.residuals.end());
  out["max_residual"] = worst;
  Json samples = Json::array();
  for (const auto& p : r.samples) samples.push_back({{"v", complex_json(p.v)}, {"tau", complex_json(p.tau)}});
  out["samples"] = samples;
  out["residuals"] = r.residuals;
  out["detail"] = r.detail;
  return out;
}

Json to_json(const CorollaryVector& v) {
  const auto ref = reference_corollary(v.fiber_dim);
  bool ok = v.coefficients == ref;
  if (v.agw_translation && *v.agw_translation != v.coefficients) ok = false;
  Json out;
  out["identity"] = "corollary";
  out["fiber_dim"] = v.fiber_dim;
  out["m"] = v.m;
  out["coefficients"] = vector_json(v.coefficients);
  out["reference"] = vector_json(ref);
  out["agw_translation"] = v.agw_translation ? vector_json(*v.agw_translation) : Json(nullptr);
  out["status"] = ok ? "pass" : "fail";
  return out;
}

RationalQSeries rational_series_from_json(const Json& j, int order) {
  RationalQSeries out({}, order);
  for (const auto& t : j) out.set(t.at("exp2").get<int>(), parse_rational(t.at("coef").get<std::string>()));
  return out;
}

GradedClass graded_class_from_json(const Json& j, const RootProfile& profile) {
  GradedClass out(profile);
  for (const auto& t : j) {
    out.add_term(t.at("monomial").get<Monomial>(), parse_rational(t.at("coef").get<std::string>()));
  }
  return out;
}

ThetaBundleSeries theta_bundle_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  ThetaBundleSeries out;
  out.kind = kind == "theta1" ? ThetaKind::theta1 : ThetaKind::theta2;
  out.profile = RootProfile(j.at("fiber_dim").get<int>(), j.at("max_degree").get<int>());
  out.series = ClassQSeries(out.profile, j.at("q_order").get<int>());
  for (const auto& t : j.at("series")) {
    out.series.set(t.at("exp2").get<int>(), graded_class_from_json(t.at("coef"), out.profile));
  }
  return out;
}

std::string display_series(const RationalQSeries& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : s.terms()) {
    out += signed_term(first, c, q_power(e));
    first = false;
  }
  return out + " + O(" + (s.order() == 0 ? std::string("1") : q_power(s.order())) + ")";
}

std::string display_element(const Theta2Decomposition& d, std::size_t r) {
  const auto& row = d.combination.at(r);
  const bool linear = std::all_of(row.begin() + std::min<std::ptrdiff_t>(2, row.size()), row.end(),
                                  [](const Rational& x) { return x == 0; });
  if (!linear) {
    const auto& e = d.elements[r];
    return "rank " + e.virtual_rank.get_str() + ", form " + e.form_part.to_display();
  }
  // M0 C + M1 (-T + dim C)
  const Rational m1 = row.size() > 1 ? row[1] : Rational(0);
  const Rational t_coef = -m1;
  const Rational c_coef = row[0] + m1 * d.profile.fiber_dim();
  std::string out;
  if (t_coef != 0) out += signed_term(true, t_coef, "T_C Z");
  if (c_coef != 0 || out.empty()) out += signed_term(out.empty(), c_coef, "C");
  return out;
}

std::string result_status(const Json& result) { return result.value("status", std::string("fail")); }

std::string render_table(const Json& results) {
  std::ostringstream os;
  for (const auto& r : results) {
    const std::string id = r.value("identity", std::string("?"));
    os << std::left << std::setw(14) << id << std::setw(17) << result_status(r);
    if (id == "numeric") {
      os << "law=" << r.at("law").get<std::string>() << " max_residual=" << std::setprecision(3)
         << r.at("max_residual").get<double>();
    } else if (id == "corollary") {
      os << "dim=" << r.at("fiber_dim").get<int>() << " (";
      bool first = true;
      for (const auto& c : r.at("coefficients")) {
        os << (first ? "" : ", ") << plain(c);
        first = false;
      }
      os << ")";
    } else {
      os << "dim=" << r.at("fiber_dim").get<int>() << " m=" << r.at("m").get<int>()
         << " L=" << r.at("l_variant").get<std::string>();
      if (!r.at("lambda").is_null()) os << " lambda=" << plain(r.at("lambda"));
      if (!r.at("paper_ratio").is_null()) os << " ratio=" << plain(r.at("paper_ratio"));
      os << " residuals=" << r.at("residuals").size();
    }
    const std::string detail = r.value("detail", std::string());
    if (!detail.empty()) os << "  [" << detail << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace modinv
