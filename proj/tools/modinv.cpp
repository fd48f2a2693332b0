// modinv: expand theta/modular-form series, decompose Theta_2, and verify
// the characteristic-form identities with exact arithmetic.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "modinv/cache.hpp"
#include "modinv/suites.hpp"

using namespace modinv;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct ExpandArgs {
  std::string target;
  std::string i = "2";
  bool fourth = false;
  std::string which = "delta2";
  std::string kind = "theta2";
  int dim = 2;
};

struct DecomposeArgs {
  int m = -1;
  int dim = -1;
};

struct VerifyArgs {
  std::string suite;
  int m = -1;
  int dim = -1;
  std::string law;
  std::string tau;
  int kind = 2;
  bool allow_degenerate = false;
};

struct ReportArgs {
  std::string in;
  bool allow_degenerate = false;
};

Json wrap(const RunConfig& cfg, Json results) {
  Json doc;
  doc["version"] = 1;
  doc["config"] = config_json(cfg);
  doc["results"] = std::move(results);
  return doc;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + cfg.out);
  out << text;
}

std::string json_text(const Json& doc) { return doc.dump(2) + "\n"; }

int run_expand(const ExpandArgs& a, const RunConfig& cfg) {
  Json item;
  std::ostringstream table;
  if (a.target == "theta-nullwert") {
    const int order = cfg.q_order ? cfg.q_order : 8;
    const ThetaFunction f = parse_theta_function(a.i);
    const RationalQSeries s = a.fourth ? theta_nullwert_fourth(f, order) : theta_nullwert(f, order);
    item["target"] = a.target;
    item["function"] = to_string(f);
    item["power"] = a.fourth ? 4 : 1;
    item["q_order"] = order;
    item["series"] = to_json(s);
    table << to_string(f) << "(0,tau)" << (a.fourth ? "^4" : "") << " = " << display_series(s) << "\n";
  } else if (a.target == "delta-eps") {
    const int order = cfg.q_order ? cfg.q_order : 8;
    const DeltaEps which = parse_delta_eps(a.which);
    const ModularFormSeries f = delta_epsilon(which, order);
    item["target"] = a.target;
    item["which"] = to_string(which);
    item["weight"] = f.weight;
    item["group"] = to_string(f.group);
    item["q_order"] = order;
    item["series"] = to_json(f.series);
    table << to_string(which) << " (weight " << f.weight << ", " << to_string(f.group)
          << ") = " << display_series(f.series) << "\n";
  } else if (a.target == "theta-bundle") {
    const int order = cfg.q_order ? cfg.q_order : 4;
    const int degree = cfg.max_degree ? cfg.max_degree : 8;
    const ThetaKind kind = a.kind == "theta1" || a.kind == "1" ? ThetaKind::theta1
                           : a.kind == "theta2" || a.kind == "2"
                               ? ThetaKind::theta2
                               : throw std::invalid_argument("--kind must be theta1 or theta2");
    const ThetaBundleSeries t = build_theta_bundle(kind, RootProfile(a.dim, degree), order);
    item["target"] = a.target;
    item["kind"] = to_string(kind);
    item["fiber_dim"] = a.dim;
    item["max_degree"] = degree;
    item["q_order"] = order;
    Json coeffs = Json::array();
    for (int j = 0; j < order; ++j) {
      const CharacterElement e = extract_fourier(t, j);
      coeffs.push_back(to_json(e));
      table << *e.label << " (q^(" << j << "/2)): rank " << e.virtual_rank.get_str() << ", form "
            << e.form_part.to_display() << "\n";
    }
    item["coefficients"] = coeffs;
  } else {
    throw std::invalid_argument("unknown expansion target '" + a.target + "'");
  }
  emit(cfg, cfg.format == "json" ? json_text(wrap(cfg, Json::array({item}))) : table.str());
  return kExitPass;
}

int run_decompose(const DecomposeArgs& a, const RunConfig& cfg) {
  if (a.m < 0 || a.dim < 1) throw std::invalid_argument("decompose needs --m >= 0 and --dim >= 1");
  const auto kind = classify_fiber(a.m, a.dim);
  const int degree = cfg.max_degree ? cfg.max_degree : target_degree(a.m, kind);
  const Theta2Decomposition d = decompose_theta2(a.m, RootProfile(a.dim, degree));
  if (cfg.format == "json") {
    emit(cfg, json_text(wrap(cfg, Json::array({to_json(d)}))));
  } else {
    std::ostringstream os;
    for (std::size_t r = 0; r < d.elements.size(); ++r) {
      os << *d.elements[r].label << " = " << display_element(d, r) << "\n";
    }
    emit(cfg, os.str());
  }
  return kExitPass;
}

int run_verify_cmd(const VerifyArgs& a, const RunConfig& cfg) {
  VerifyParams p;
  if (a.m >= 0) p.m = a.m;
  if (a.dim >= 0) p.dim = a.dim;
  if (!a.law.empty() && a.law != "all") p.law = parse_law(a.law);
  if (!a.tau.empty()) {
    p.tau = parse_complex(a.tau);
    if (!(p.tau->imag() > 0)) throw std::invalid_argument("--tau must have positive imaginary part");
  }
  p.theta_index = a.kind;
  p.allow_degenerate = a.allow_degenerate;

  std::unique_ptr<SeriesCache> cache;
  if (!cfg.cache_dir.empty()) cache = std::make_unique<SeriesCache>(cfg.cache_dir);
  const Json doc = run_verify(a.suite, p, cfg, cached_theta_provider(cache.get()));
  emit(cfg, cfg.format == "json" ? json_text(doc) : render_table(doc.at("results")));
  const bool ok = all_pass(doc.at("results"), a.allow_degenerate);
  if (!cfg.out.empty()) {
    std::cerr << a.suite << ": " << doc.at("results").size() << " results, "
              << (ok ? "all pass" : "FAILURES") << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int run_report(const ReportArgs& a, const RunConfig& cfg) {
  std::ifstream in(a.in, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read report " + a.in);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
  if (!doc.contains("results") || !doc.at("results").is_array()) {
    throw std::invalid_argument("report has no results array");
  }
  emit(cfg, cfg.format == "json" ? json_text(doc) : render_table(doc.at("results")));
  return all_pass(doc.at("results"), a.allow_degenerate) ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-series expansions and characteristic-form identity checks"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Flat key=value file; flags override it");

  RunConfig cfg;
  std::string l_variant = "full";
  app.add_option("--q-order", cfg.q_order, "q-series truncation in half steps (exclusive); 0 = default")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--max-degree", cfg.max_degree, "Form-degree truncation for expansions; 0 = default")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--tol", cfg.tolerance, "Tolerance for numeric checks");
  app.add_option("--l-variant", l_variant, "L-class convention")
      ->check(CLI::IsMember({"full", "half"}));
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
  app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached series");
  app.add_option("--jobs", cfg.jobs, "Worker threads; 0 = one per hardware thread")
      ->check(CLI::NonNegativeNumber);

  ExpandArgs ex;
  auto* expand = app.add_subcommand("expand", "Expand a series exactly");
  expand->add_option("target", ex.target, "theta-nullwert | delta-eps | theta-bundle")
      ->required()
      ->check(CLI::IsMember({"theta-nullwert", "delta-eps", "theta-bundle"}));
  expand->add_option("--i", ex.i, "Theta function: 0..3 or theta, theta1, theta2, theta3");
  expand->add_flag("--fourth", ex.fourth, "Expand the fourth power (needed for theta1)");
  expand->add_option("--which", ex.which, "delta1 | eps1 | delta2 | eps2");
  expand->add_option("--kind", ex.kind, "theta1 | theta2");
  expand->add_option("--dim", ex.dim, "Fiber dimension")->check(CLI::PositiveNumber);

  DecomposeArgs de;
  auto* decompose = app.add_subcommand("decompose", "Solve for b_r / z_r");
  decompose->add_option("--m", de.m, "m >= 0")->required();
  decompose->add_option("--dim", de.dim, "Fiber dimension")->required();

  VerifyArgs ve;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", ve.suite, "main | decomposition | agw | corollaries | routes | numeric | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", ve.m, "Restrict to this m")->check(CLI::NonNegativeNumber);
  verify->add_option("--dim", ve.dim, "Restrict to this fiber dimension")->check(CLI::PositiveNumber);
  verify->add_option("--law", ve.law,
                     "theta | theta1 | theta2 | theta3 | delta-inversion | eps-inversion | "
                     "p-inversion | q-inversion | all");
  verify->add_option("--tau", ve.tau, "Evaluate numeric laws at this tau, e.g. 0.3+1.2i");
  verify->add_option("--kind", ve.kind, "Route suite: 1 for P_1/Q_1, 2 for P_2/Q_2")
      ->check(CLI::IsMember({1, 2}));
  verify->add_flag("--allow-degenerate", ve.allow_degenerate,
                   "Count degenerate-zero results as passing");

  ReportArgs re;
  auto* report = app.add_subcommand("report", "Render a saved report and recompute its exit code");
  report->add_option("--in", re.in, "Report JSON file")->required();
  report->add_flag("--allow-degenerate", re.allow_degenerate,
                   "Count degenerate-zero results as passing");

  for (auto* sub : {expand, decompose, verify, report}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.l_variant = parse_l_variant(l_variant);
    cfg.validate();
    if (*expand) return run_expand(ex, cfg);
    if (*decompose) return run_decompose(de, cfg);
    if (*verify) return run_verify_cmd(ve, cfg);
    if (*report) return run_report(re, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
