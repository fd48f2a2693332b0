#include "modinv/suites.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

namespace modinv {

void RunConfig::validate() const {
  if (q_order < 0) throw std::invalid_argument("--q-order must be non-negative");
  if (max_degree < 0 || max_degree % 2 != 0) {
    throw std::invalid_argument("--max-degree must be even and non-negative");
  }
  if (!(tolerance > 0.0)) throw std::invalid_argument("--tol must be positive");
  if (format != "json" && format != "table") {
    throw std::invalid_argument("--format must be json or table");
  }
  if (jobs < 0) throw std::invalid_argument("--jobs must be non-negative");
}

Json config_json(const RunConfig& c) {
  Json out;
  out["q_order"] = c.q_order;
  out["max_degree"] = c.max_degree;
  out["tolerance"] = c.tolerance;
  out["l_variant"] = to_string(c.l_variant);
  return out;
}

std::vector<Json> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<Json> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  unsigned workers = jobs > 0 ? static_cast<unsigned>(jobs) : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, std::max<std::size_t>(tasks.size(), 1));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

std::vector<std::string> suite_names() {
  return {"main", "decomposition", "agw", "corollaries", "routes", "numeric", "all"};
}

namespace {

struct Case {
  int m;
  int dim;
};

// (m, dim) pairs in fiber-dimension order, restricted by the params.
std::vector<Case> identity_cases(const VerifyParams& p, int max_m) {
  std::vector<Case> out;
  if (p.dim) {
    if (p.m) {
      classify_fiber(*p.m, *p.dim);
      out.push_back({*p.m, *p.dim});
    } else {
      out.push_back({fiber_class(*p.dim).first, *p.dim});
    }
    return out;
  }
  const int lo = p.m ? *p.m : 0;
  const int hi = p.m ? *p.m : max_m;
  for (int m = lo; m <= hi; ++m) {
    for (int r = 3; r >= 1 && m >= 1; --r) out.push_back({m, 8 * m - r});
    for (int r = 1; r <= 3; ++r) out.push_back({m, 8 * m + r});
  }
  std::sort(out.begin(), out.end(), [](const Case& a, const Case& b) { return a.dim < b.dim; });
  return out;
}

std::vector<int> listed_dims(const VerifyParams& p, std::vector<int> all) {
  if (p.m) throw std::invalid_argument("this suite is selected by --dim only");
  if (p.dim) return {*p.dim};
  return all;
}

void add_main(std::vector<Task>& tasks, const VerifyParams& p, std::vector<LVariant> variants,
              const ThetaProvider& prov) {
  for (const auto& c : identity_cases(p, 2)) {
    for (LVariant v : variants) {
      tasks.push_back([c, v, prov] { return to_json(verify_main_identity(c.m, RootProfile(c.dim, 4), v, prov)); });
    }
  }
}

void add_decomposition(std::vector<Task>& tasks, const VerifyParams& p, const RunConfig& cfg,
                       const ThetaProvider& prov) {
  for (const auto& c : identity_cases(p, 2)) {
    if (cfg.q_order != 0 && cfg.q_order < c.m + 3) {
      throw std::invalid_argument("--q-order " + std::to_string(cfg.q_order) +
                                  " is below the matched window plus two guard coefficients (" +
                                  std::to_string(c.m + 3) + ") for m = " + std::to_string(c.m));
    }
    const int order = cfg.q_order;
    tasks.push_back([c, order, prov] {
      return to_json(verify_decomposition_identity(c.m, RootProfile(c.dim, 4), order, prov));
    });
  }
}

void add_agw(std::vector<Task>& tasks, const VerifyParams& p, const RunConfig& cfg) {
  for (int d : listed_dims(p, {2, 6, 10})) {
    agw_coefficients(d);
    const LVariant v = cfg.l_variant;
    tasks.push_back([d, v] { return to_json(verify_agw(d, v)); });
  }
}

void add_corollaries(std::vector<Task>& tasks, const VerifyParams& p, const ThetaProvider& prov) {
  for (int d : listed_dims(p, {1, 2, 3, 5, 6, 7, 9, 10, 11})) {
    reference_corollary(d);
    tasks.push_back([d, prov] { return to_json(corollary_coefficients(d, prov)); });
  }
}

void add_routes(std::vector<Task>& tasks, const VerifyParams& p, const RunConfig& cfg,
                const ThetaProvider& prov) {
  if (p.theta_index != 1 && p.theta_index != 2) throw std::invalid_argument("--kind must be 1 or 2");
  const int order = cfg.q_order == 0 ? 6 : cfg.q_order;
  const FormKind kind = p.theta_index == 1 ? FormKind::p1 : FormKind::p2;
  const LVariant v = cfg.l_variant;
  for (const auto& c : identity_cases(p, 1)) {
    tasks.push_back([c, order, kind, v, prov] {
      return to_json(verify_route_equivalence(c.m, RootProfile(c.dim, 4), order, kind, v, prov));
    });
  }
}

void add_numeric(std::vector<Task>& tasks, const VerifyParams& p, const RunConfig& cfg) {
  std::vector<Law> laws = p.law ? std::vector<Law>{*p.law} : all_laws();
  for (Law law : laws) {
    const bool scalar_law = law == Law::delta_inversion || law == Law::eps_inversion;
    auto samples = standard_samples(scalar_law ? 10 : 20);
    if (law == Law::p_inversion || law == Law::q_inversion) samples.resize(5);
    if (p.tau) {
      for (auto& s : samples) s.tau = *p.tau;
    }
    JetSpec jet;
    if (law == Law::q_inversion) {
      jet.m = 1;
      jet.fiber_dim = 6;
    }
    if (law == Law::p_inversion || law == Law::q_inversion) {
      if (p.dim) {
        jet.fiber_dim = *p.dim;
        jet.m = p.m ? *p.m : fiber_class(*p.dim).first;
      } else if (p.m) {
        jet.m = *p.m;
        jet.fiber_dim = law == Law::p_inversion ? 8 * *p.m + 2 : 8 * *p.m - 2;
      }
    }
    const double tol = cfg.tolerance;
    tasks.push_back([law, samples, tol, jet] {
      return to_json(check_transformation(law, samples, tol, jet));
    });
  }
}

}  // namespace

std::vector<Task> suite_tasks(const std::string& suite, const VerifyParams& params,
                              const RunConfig& config, const ThetaProvider& provider) {
  config.validate();
  const ThetaProvider prov = provider ? provider : direct_theta_provider();
  std::vector<Task> tasks;
  if (suite == "main") {
    add_main(tasks, params, {config.l_variant}, prov);
  } else if (suite == "decomposition") {
    add_decomposition(tasks, params, config, prov);
  } else if (suite == "agw") {
    add_agw(tasks, params, config);
  } else if (suite == "corollaries") {
    add_corollaries(tasks, params, prov);
  } else if (suite == "routes") {
    add_routes(tasks, params, config, prov);
  } else if (suite == "numeric") {
    add_numeric(tasks, params, config);
  } else if (suite == "all") {
    if (params.m || params.dim || params.law || params.tau) {
      throw std::invalid_argument("suite 'all' takes no case selectors");
    }
    add_agw(tasks, params, config);
    add_corollaries(tasks, params, prov);
    add_decomposition(tasks, params, config, prov);
    add_main(tasks, params, {LVariant::full_angle, LVariant::half_angle}, prov);
    add_numeric(tasks, params, config);
    RunConfig routes_cfg = config;
    routes_cfg.q_order = 0;
    add_routes(tasks, params, routes_cfg, prov);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  return tasks;
}

Json run_verify(const std::string& suite, const VerifyParams& params, const RunConfig& config,
                const ThetaProvider& provider) {
  const auto tasks = suite_tasks(suite, params, config, provider);
  Json doc;
  doc["version"] = 1;
  doc["config"] = config_json(config);
  doc["suite"] = suite;
  Json results = Json::array();
  for (auto& r : run_tasks(tasks, config.jobs)) results.push_back(std::move(r));
  doc["results"] = std::move(results);
  return doc;
}

bool all_pass(const Json& results, bool allow_degenerate) {
  for (const auto& r : results) {
    if (!r.contains("status")) continue;
    const std::string s = result_status(r);
    if (s == "pass") continue;
    if (s == "degenerate-zero" && allow_degenerate) continue;
    return false;
  }
  return true;
}

Complex parse_complex(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  const auto bad = [&] { return std::invalid_argument("cannot parse complex number '" + text + "'"); };
  const auto number = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != t.size()) throw bad();
    return v;
  };
  if (s.back() != 'i') return {number(s), 0.0};
  s.pop_back();
  // split at the last sign that is not the leading one and not an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  const std::string re = s.substr(0, split);
  if (re.empty()) throw bad();
  return {number(re), number(s.substr(split))};
}

}  // namespace modinv
