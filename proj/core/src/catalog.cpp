// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/catalog.hpp"

#include <random>

#include "literals.hpp"
#include "ltoeplitz/config.hpp"
#include "ltoeplitz/error.hpp"

namespace ltoeplitz {

using literals::Json;

namespace {

using Runner = std::function<CheckReport(const RunOptions&)>;

struct Task {
  std::string kind;
  std::string label;
  Runner run;
};

// Folds several reports into one, prefixing residual names with the case.
CheckReport merge(const std::string& kind, const std::vector<std::pair<std::string, CheckReport>>& parts) {
  CheckReport out{kind, true, {}, {}, {}};
  for (const auto& [name, r] : parts) {
    out.passed = out.passed && r.passed;
    for (const auto& [k, v] : r.residuals) out.residuals[name + "." + k] = v;
    for (const auto& [k, v] : r.budget) out.budget[name + "." + k] = v;
    if (!r.detail.empty()) out.detail += (out.detail.empty() ? "" : "; ") + name + ": " + r.detail;
  }
  return out;
}

double number_or(const Json& j, const char* key, double fallback) {
  return j.contains(key) ? static_cast<double>(literals::parse_real(j[key], key)) : fallback;
}

class Parser {
 public:
  explicit Parser(const Json& doc) {
    literals::require_keys(doc, {"description", "cases", "checks"}, "catalog");
    if (doc.contains("cases")) {
      literals::require_object(doc["cases"], "catalog.cases");
      for (const auto& [name, c] : doc["cases"].items()) {
        const std::string where = "cases." + name;
        literals::require_keys(c, {"description", "group", "lambda", "symbol"}, where);
        if (!c.contains("group") || !c.contains("lambda") || !c.contains("symbol")) {
          throw ConfigError(where + ": a case needs group, lambda and symbol");
        }
        const GroupSpec g = literals::parse_group(c["group"]);
        cases.emplace(name, LambdaToeplitz(literals::parse_lambda(c["lambda"], g), literals::parse_symbol(c["symbol"], g)));
      }
    }
    if (!doc.contains("checks") || !doc["checks"].is_array()) throw ConfigError("catalog: missing 'checks' list");
    for (std::size_t i = 0; i < doc["checks"].size(); ++i) tasks.push_back(task(doc["checks"][i], i));
  }

  std::map<std::string, LambdaToeplitz> cases;
  std::vector<Task> tasks;

 private:
  const LambdaToeplitz& lookup(const Json& j, const std::string& where) const {
    if (!j.is_string()) throw ConfigError(where + ": case reference must be a name");
    const auto it = cases.find(j.get<std::string>());
    if (it == cases.end()) throw ConfigError(where + ": unknown case '" + j.get<std::string>() + "'");
    return it->second;
  }

  // The "case"/"cases" field as a list of (name, operator).
  std::vector<std::pair<std::string, LambdaToeplitz>> case_list(const Json& j, const std::string& where) const {
    std::vector<std::pair<std::string, LambdaToeplitz>> out;
    if (j.contains("case")) out.emplace_back(j["case"].get<std::string>(), lookup(j["case"], where));
    if (j.contains("cases")) {
      if (!j["cases"].is_array()) throw ConfigError(where + ": cases must be a list of names");
      for (const auto& c : j["cases"]) out.emplace_back(c.get<std::string>(), lookup(c, where));
    }
    if (out.empty()) throw ConfigError(where + ": no case given");
    return out;
  }

  Task task(const Json& j, std::size_t index) const {
    const std::string where = "checks[" + std::to_string(index) + "]";
    literals::require_object(j, where);
    if (!j.contains("kind") || !j["kind"].is_string()) throw ConfigError(where + ": missing kind");
    const std::string kind = j["kind"];
    std::string label = j.contains("label") ? j["label"].get<std::string>()
                        : j.contains("case") ? j["case"].get<std::string>()
                                             : std::to_string(index);
    const std::string at = where + " (" + kind + ")";
    if (kind == "defining_relation") return {kind, label, defining_relation(j, at)};
    if (kind == "norm_identity") return {kind, label, norm_identity(j, at)};
    if (kind == "power_factorization") return {kind, label, power_factorization(j, at)};
    if (kind == "index_suite") return {kind, label, index_suite(j, at)};
    if (kind == "spectrum_shapes") return {kind, label, spectrum_shapes(j, at)};
    if (kind == "noncompactness") return {kind, label, noncompactness(j, at)};
    if (kind == "negative_control") return {kind, label, negative_control(j, at)};
    if (kind == "rotation_index") return {kind, label, rotation_index_task(j, at)};
    if (kind == "spectral_radius") return {kind, label, spectral_radius_task(j, at)};
    throw ConfigError(where + ": unknown check kind '" + kind + "'");
  }

  Runner defining_relation(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "case", "cases", "random", "window", "tolerance", "fault"}, at);
    const double tol = number_or(j, "tolerance", 1e-12);
    if (!j.contains("window")) throw ConfigError(at + ": missing window");
    const Json window_json = j["window"];
    std::optional<std::pair<std::uint64_t, std::size_t>> random;
    std::vector<std::pair<std::string, LambdaToeplitz>> ops;
    if (j.contains("random")) {
      literals::require_keys(j["random"], {"count", "seed"}, at + ".random");
      random.emplace(static_cast<std::uint64_t>(literals::parse_integer(j["random"].value("seed", Json(0)), at)),
                     literals::parse_size(j["random"].value("count", Json(20)), at));
    } else {
      ops = case_list(j, at);
      for (const auto& [n, op] : ops) (void)literals::parse_window(window_json, op.group());
    }
    struct Fault {
      std::size_t row, col;
      std::complex<double> delta;
    };
    std::optional<Fault> fault;
    if (j.contains("fault")) {
      literals::require_keys(j["fault"], {"row", "col", "delta"}, at + ".fault");
      fault = Fault{literals::parse_size(j["fault"].value("row", Json(0)), at),
                    literals::parse_size(j["fault"].value("col", Json(0)), at),
                    literals::parse_complex(j["fault"].value("delta", Json(0)), at)};
    }
    return [=](const RunOptions& opt) {
      auto list = ops;
      if (random) {
        const auto generated = random_operators(opt.seed.value_or(random->first), random->second);
        for (std::size_t i = 0; i < generated.size(); ++i) list.emplace_back("random" + std::to_string(i), generated[i]);
      }
      std::vector<std::pair<std::string, CheckReport>> parts;
      for (const auto& [name, op] : list) {
        const TruncationWindow w = literals::parse_window(window_json, op.group()).resolve(op.group());
        FiniteSection s = build_finite_section(op, w);
        if (fault) {
          if (fault->row >= w.size() || fault->col >= w.size()) throw InvalidArgument("fault position outside the window");
          s.matrix(static_cast<Eigen::Index>(fault->row), static_cast<Eigen::Index>(fault->col)) += fault->delta;
        }
        parts.emplace_back(name, check_defining_relation(s, op.lambda(), tol));
      }
      return merge("defining_relation", parts);
    };
  }

  Runner norm_identity(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "case", "windows", "max_relative_gap"}, at);
    const auto op = case_list(j, at).front().second;
    if (!j.contains("windows") || !j["windows"].is_array()) throw ConfigError(at + ": missing windows list");
    std::vector<WindowSpec> windows;
    for (const auto& w : j["windows"]) windows.push_back(literals::parse_window(w, op.group()));
    const double gap = number_or(j, "max_relative_gap", 0.01);
    return [=](const RunOptions&) {
      std::vector<TruncationWindow> resolved;
      for (const auto& w : windows) resolved.push_back(w.resolve(op.group()));
      return check_norm_identity(op, resolved, gap);
    };
  }

  Runner power_factorization(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "case", "cases", "window", "powers", "tolerance"}, at);
    const auto ops = case_list(j, at);
    if (!j.contains("window")) throw ConfigError(at + ": missing window");
    const Json window_json = j["window"];
    for (const auto& [n, op] : ops) (void)literals::parse_window(window_json, op.group());
    std::vector<unsigned> powers{1, 2, 3};
    if (j.contains("powers")) {
      powers.clear();
      for (auto k : literals::parse_sizes(j["powers"], at)) powers.push_back(static_cast<unsigned>(k));
    }
    const double tol = number_or(j, "tolerance", 1e-10);
    return [=](const RunOptions&) {
      std::vector<std::pair<std::string, CheckReport>> parts;
      for (const auto& [name, op] : ops) {
        const auto w = literals::parse_window(window_json, op.group()).resolve(op.group());
        for (unsigned k : powers) {
          parts.emplace_back(name + ".k" + std::to_string(k), check_power_factorization(op, w, k, tol));
        }
      }
      return merge("power_factorization", parts);
    };
  }

  Runner index_suite(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "case", "q", "chi0", "mu"}, at);
    const auto op = case_list(j, at).front().second;
    if (!j.contains("q") || !j.contains("chi0") || !j.contains("mu")) throw ConfigError(at + ": needs q, chi0 and mu");
    const std::int64_t q = literals::parse_integer(j["q"], at + ".q");
    const Character chi0 = literals::parse_character(j["chi0"], op.group(), at + ".chi0");
    std::vector<IndexCase> mus;
    for (const auto& m : j["mu"]) {
      literals::require_keys(m, {"value", "expected"}, at + ".mu");
      IndexCase c{literals::parse_complex(m.value("value", Json(0)), at + ".mu"), std::nullopt};
      if (m.contains("expected")) c.expected = literals::parse_integer(m["expected"], at + ".mu.expected");
      mus.push_back(c);
    }
    return [=](const RunOptions&) { return check_index_suite(op, mus, q, chi0); };
  }

  Runner spectrum_shapes(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "cases"}, at);
    if (!j.contains("cases") || !j["cases"].is_array()) throw ConfigError(at + ": missing cases list");
    std::vector<ShapeCase> shapes;
    for (const auto& c : j["cases"]) {
      literals::require_keys(c, {"case", "variant", "radius", "radius_tolerance", "probe_sizes", "probes"}, at);
      if (!c.contains("case") || !c.contains("variant")) throw ConfigError(at + ": shape needs case and variant");
      ShapeCase s{c["case"].get<std::string>(), lookup(c["case"], at), c["variant"].get<std::string>(),
                  std::nullopt, number_or(c, "radius_tolerance", 1e-6), {}, {}};
      if (c.contains("radius")) s.expected_radius = static_cast<double>(literals::parse_real(c["radius"], at));
      if (c.contains("probe_sizes")) s.probe_sizes = literals::parse_sizes(c["probe_sizes"], at);
      if (c.contains("probes")) {
        for (const auto& p : c["probes"]) {
          literals::require_keys(p, {"mu", "expect", "threshold"}, at + ".probes");
          const std::string expect = p.value("expect", "on");
          if (expect != "on" && expect != "off") throw ConfigError(at + ": probe expectation is 'on' or 'off'");
          s.probes.push_back({literals::parse_complex(p.value("mu", Json(0)), at),
                              expect == "on" ? ProbeExpectation::OnSpectrum : ProbeExpectation::OffSpectrum,
                              number_or(p, "threshold", expect == "on" ? 0.05 : 0.2)});
        }
        if (s.probe_sizes.empty()) throw ConfigError(at + ": probes need probe_sizes");
      }
      shapes.push_back(std::move(s));
    }
    return [=](const RunOptions&) { return check_spectrum_shapes(shapes); };
  }

  Runner noncompactness(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "case", "cases", "window", "tolerance"}, at);
    const auto ops = case_list(j, at);
    if (!j.contains("window")) throw ConfigError(at + ": missing window");
    const Json window_json = j["window"];
    for (const auto& [n, op] : ops) (void)literals::parse_window(window_json, op.group());
    const double tol = number_or(j, "tolerance", 1e-14);
    return [=](const RunOptions&) {
      std::vector<std::pair<std::string, CheckReport>> parts;
      for (const auto& [name, op] : ops) {
        const auto w = literals::parse_window(window_json, op.group()).resolve(op.group());
        parts.emplace_back(name, check_noncompactness(op, w, tol));
      }
      return merge("noncompactness", parts);
    };
  }

  Runner negative_control(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "resolution", "curve_tolerance", "min_mismatch", "probe_sizes",
                               "probe_ceiling", "probe_floor"},
                           at);
    NegativeControlOptions o;
    if (j.contains("resolution")) o.resolution = literals::parse_size(j["resolution"], at);
    o.curve_tolerance = number_or(j, "curve_tolerance", o.curve_tolerance);
    o.min_mismatch = number_or(j, "min_mismatch", o.min_mismatch);
    if (j.contains("probe_sizes")) o.probe_sizes = literals::parse_sizes(j["probe_sizes"], at);
    o.probe_ceiling = number_or(j, "probe_ceiling", o.probe_ceiling);
    o.probe_floor = number_or(j, "probe_floor", o.probe_floor);
    return [=](const RunOptions&) { return check_negative_control(o); };
  }

  Runner rotation_index_task(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "group", "bound", "oracle_bound"}, at);
    if (!j.contains("group")) throw ConfigError(at + ": missing group");
    const GroupSpec g = literals::parse_group(j["group"]);
    const std::int64_t bound = j.contains("bound") ? literals::parse_integer(j["bound"], at) : 8;
    const std::int64_t oracle = j.contains("oracle_bound") ? literals::parse_integer(j["oracle_bound"], at) : 2 * bound + 2;
    return [=](const RunOptions&) { return check_rotation_index_oracle(g, bound, oracle); };
  }

  Runner spectral_radius_task(const Json& j, const std::string& at) const {
    literals::require_keys(j, {"kind", "label", "cases"}, at);
    if (!j.contains("cases") || !j["cases"].is_array()) throw ConfigError(at + ": missing cases list");
    std::vector<RadiusCase> radii;
    for (const auto& c : j["cases"]) {
      literals::require_keys(c, {"case", "expected", "tolerance", "gelfand_window", "gelfand_powers",
                                 "gelfand_relative_tolerance"},
                             at);
      if (!c.contains("case") || !c.contains("expected")) throw ConfigError(at + ": radius case needs case and expected");
      RadiusCase rc{c["case"].get<std::string>(), lookup(c["case"], at),
                    static_cast<double>(literals::parse_real(c["expected"], at)), number_or(c, "tolerance", 1e-6),
                    c.contains("gelfand_window") ? literals::parse_size(c["gelfand_window"], at) : 0, {},
                    number_or(c, "gelfand_relative_tolerance", 0.1)};
      if (c.contains("gelfand_powers")) {
        for (auto k : literals::parse_sizes(c["gelfand_powers"], at)) rc.gelfand_powers.push_back(static_cast<unsigned>(k));
      }
      radii.push_back(std::move(rc));
    }
    return [=](const RunOptions&) { return check_spectral_radius(radii); };
  }
};

}  // namespace

struct Catalog::Impl {
  std::map<std::string, LambdaToeplitz> cases;
  std::vector<Task> tasks;
};

Catalog Catalog::parse(std::string_view text) {
  Parser p(literals::parse_document(text, "catalog"));
  Catalog c;
  c.impl_ = std::make_shared<const Impl>(Impl{std::move(p.cases), std::move(p.tasks)});
  return c;
}

Catalog Catalog::load(const std::filesystem::path& path) { return parse(read_text_file(path)); }

const std::map<std::string, LambdaToeplitz>& Catalog::cases() const { return impl_->cases; }

std::vector<std::string> Catalog::check_names() const {
  std::vector<std::string> out;
  for (const auto& t : impl_->tasks) out.push_back(t.kind + ":" + t.label);
  return out;
}

std::vector<CheckReport> Catalog::run(const RunOptions& options) const {
  std::vector<CheckReport> out;
  for (const auto& t : impl_->tasks) {
    const std::string name = t.kind + ":" + t.label;
    if (options.check != "all" && options.check != t.kind && options.check != name) continue;
    CheckReport r;
    try {
      r = t.run(options);
    } catch (const Error& e) {
      r = CheckReport{t.kind, false, {}, {}, e.what()};
    }
    r.check_name = name;
    out.push_back(std::move(r));
  }
  if (out.empty()) throw InvalidArgument("no check matches '" + options.check + "'");
  return out;
}

const std::vector<std::string>& known_check_kinds() {
  static const std::vector<std::string> kinds{"defining_relation", "norm_identity",   "power_factorization",
                                              "index_suite",       "spectrum_shapes", "noncompactness",
                                              "negative_control",  "rotation_index",  "spectral_radius"};
  return kinds;
}

std::vector<LambdaToeplitz> random_operators(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  const GroupSpec circle = GroupSpec::lattice_lex(1);
  const GroupSpec plane = GroupSpec::lattice_lex(2);
  const GroupSpec real = GroupSpec::real_embedded({1.0L, std::sqrt(2.0L)});

  auto angle = [&](bool finite) {
    if (!finite) return Angle::real(std::uniform_real_distribution<long double>(0.0L, 1.0L)(rng));
    const std::int64_t q = den(rng);
    return Angle::rational(std::uniform_int_distribution<std::int64_t>(0, q - 1)(rng), q);
  };
  auto symbol = [&](const GroupSpec& g) {
    Symbol phi(g);
    const int terms = std::uniform_int_distribution<int>(2, 6)(rng);
    std::uniform_int_distribution<std::int64_t> e(-3, 3);
    for (int t = 0; t < terms; ++t) {
      std::vector<std::int64_t> exps(g.dimension());
      for (auto& x : exps) x = e(rng);
      phi.add(Character::from_exponents(exps), {unit(rng), unit(rng)});
    }
    return phi;
  };

  std::vector<LambdaToeplitz> out;
  for (std::size_t i = 0; i < count; ++i) {
    const bool finite = coin(rng) == 1;
    switch (i % 3) {
      case 0:
        out.emplace_back(GroupPoint::torus({angle(finite)}), symbol(circle));
        break;
      case 1:
        out.emplace_back(GroupPoint::torus({angle(finite), angle(finite)}), symbol(plane));
        break;
      default:
        out.emplace_back(GroupPoint::real_parameter(std::uniform_real_distribution<long double>(-2.0L, 2.0L)(rng), real),
                         symbol(real));
        break;
    }
  }
  return out;
}

}  // namespace ltoeplitz
