// SPDX-License-Identifier: Apache-2.0

#include "cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "ltoeplitz/ltoeplitz.hpp"

namespace ltoeplitz::cli {

namespace {

std::string complex_text(std::complex<double> z) {
  if (z.imag() == 0.0) return format_real(z.real());
  return format_real(z.real()) + (z.imag() < 0 ? "-" : "+") + format_real(std::abs(z.imag())) + "i";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
}

std::filesystem::path output_dir(const Options& o) {
  const std::filesystem::path dir = o.out.value_or(".");
  std::filesystem::create_directories(dir);
  return dir;
}

Character default_chi0(const GroupSpec& g) {
  if (auto z = smallest_positive(g)) return *z;
  return Character::unit(0);
}

nlohmann::ordered_json probe_json(const ResolventProbe& p) {
  nlohmann::ordered_json j;
  j["mu"] = {p.mu.real(), p.mu.imag()};
  j["window_sizes"] = p.window_sizes;
  j["min_singular_values"] = p.min_singular_values;
  return j;
}

}  // namespace

int cmd_index(const Options& o, std::ostream& out) {
  const ExperimentConfig cfg = load_experiment(o.config);
  const GroupSpec& g = cfg.group;
  std::ostringstream text;
  nlohmann::ordered_json record;
  record["group"] = g.describe();

  auto& chars = record["characters"] = nlohmann::ordered_json::array();
  for (const auto& chi : cfg.characters) {
    const auto ind = rotation_index(chi, g);
    text << "character " << chi.to_string(g.dimension()) << ": "
         << (ind ? "index " + std::to_string(*ind) : std::string("no index")) << '\n';
    chars.push_back({{"character", chi.dense(g.dimension())}, {"index", ind ? nlohmann::ordered_json(*ind) : nullptr}});
  }

  if (cfg.symbol) {
    try {
      const auto w = winding_index(*cfg.symbol);
      text << "symbol winding: " << (w ? "index " + std::to_string(*w) : std::string("no index")) << '\n';
      record["symbol_index"] = w ? nlohmann::ordered_json(*w) : nullptr;
    } catch (const Error& e) {
      text << "symbol winding: " << e.what() << '\n';
      record["symbol_index"] = e.what();
    }
  }

  if (cfg.lambda && cfg.symbol) {
    const LambdaToeplitz op = cfg.make_operator();
    const auto order = order_of_point(op.lambda());
    const std::vector<std::complex<double>> mus = cfg.mu.empty() ? std::vector<std::complex<double>>{0.0} : cfg.mu;
    auto& fred = record["fredholm"] = nlohmann::ordered_json::array();
    for (const auto& mu : mus) {
      text << "mu " << complex_text(mu) << ": ";
      nlohmann::ordered_json entry{{"mu", {mu.real(), mu.imag()}}};
      try {
        std::optional<std::int64_t> index;
        if (cfg.q || order) {
          index = fredholm_index(op, mu, cfg.q.value_or(*order), cfg.chi0.value_or(default_chi0(g)));
        } else if (mu == 0.0) {
          // Ind T = -ind phi_lambda needs no order of lambda.
          const auto w = winding_index(op.modified_symbol());
          if (w) index = -*w;
        } else {
          throw NotApplicable("lambda has infinite order, so only mu = 0 has an index formula");
        }
        text << (index ? "Fredholm index " + std::to_string(*index) : std::string("not Fredholm (no index)")) << '\n';
        entry["index"] = index ? nlohmann::ordered_json(*index) : nullptr;
      } catch (const NotApplicable& e) {
        text << "not applicable: " << e.what() << '\n';
        entry["error"] = e.what();
      } catch (const SymbolVanishes& e) {
        text << "essential: " << e.what() << '\n';
        entry["error"] = e.what();
      }
      fred.push_back(std::move(entry));
    }
  }

  out << text.str();
  if (o.out) {
    const auto dir = output_dir(o);
    write_file(dir / "report.txt", text.str());
    write_file(dir / "report.struct", record.dump(2) + "\n");
  }
  return 0;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const ExperimentConfig cfg = load_experiment(o.config);
  const LambdaToeplitz op = cfg.make_operator();
  const std::size_t resolution = o.resolution.value_or(cfg.resolution.value_or(kDefaultCurveResolution));
  std::ostringstream text;
  nlohmann::ordered_json record;
  std::ostringstream csv;
  csv << "set,re,im\n";

  for (const std::string which : {"essential", "full"}) {
    try {
      const SpectrumDescriptor d = which == "essential" ? essential_spectrum(op, resolution) : full_spectrum(op, resolution);
      text << which << " spectrum: " << d.variant_name();
      if (d.holds<Circle>()) text << " radius " << format_real(d.as<Circle>().radius);
      if (d.holds<Disk>()) text << " radius " << format_real(d.as<Disk>().radius);
      if (d.holds<RootLift>()) text << " q " << d.as<RootLift>().q << " of " << d.as<RootLift>().base->variant_name();
      text << '\n';
      record[which] = nlohmann::ordered_json::parse(descriptor_record(d, resolution));
      for (const auto& z : sample_points(d, resolution)) {
        csv << which << ',' << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
      }
    } catch (const NotApplicable& e) {
      text << which << " spectrum: not applicable: " << e.what() << '\n';
      record[which] = nullptr;
    }
  }

  std::vector<std::size_t> sizes = cfg.probe_sizes;
  if (o.window) {
    sizes.clear();
    for (std::size_t n = std::max<std::size_t>(*o.window / 8, 1); n < *o.window; n *= 2) sizes.push_back(n);
    sizes.push_back(*o.window);
  }
  if (sizes.empty()) sizes = {64, 128, 256, 512};
  std::vector<ResolventProbe> probes;
  auto& probe_records = record["probes"] = nlohmann::ordered_json::array();
  for (const auto& mu : cfg.mu) {
    probes.push_back(resolvent_probe(op, mu, sizes));
    probe_records.push_back(probe_json(probes.back()));
    text << "probe mu " << complex_text(mu) << ":";
    for (double v : probes.back().min_singular_values) text << ' ' << format_real(v);
    text << '\n';
  }

  const auto dir = output_dir(o);
  write_file(dir / "spectrum.csv", csv.str());
  std::ostringstream pcsv;
  write_probes_csv(pcsv, probes);
  write_file(dir / "probes.csv", pcsv.str());
  write_file(dir / "report.txt", text.str());
  write_file(dir / "report.struct", record.dump() + "\n");
  out << text.str();
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Catalog catalog = Catalog::load(o.config);
  const auto reports = catalog.run(RunOptions{o.check, o.seed});
  const std::string text = reports_text(reports);
  out << text;
  if (o.out) {
    const auto dir = output_dir(o);
    write_file(dir / "report.txt", text);
    write_file(dir / "report.struct", reports_record(reports));
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
  return ok ? 0 : 1;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambda-Toeplitz operators: indices, spectra and property checks"};
  app.require_subcommand(1);
  Options o;
  std::string config;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t resolution = 0, window = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "experiment or catalog file")->required();
    sub->add_option("--out", out_dir, "output directory");
  };
  auto* index = app.add_subcommand("index", "rotation, winding and Fredholm indices");
  add_common(index);
  auto* spectrum = app.add_subcommand("spectrum", "spectrum descriptors and resolvent probes");
  add_common(spectrum);
  auto* resolution_opt = spectrum->add_option("--resolution", resolution, "curve samples")->check(CLI::PositiveNumber);
  auto* window_opt = spectrum->add_option("--window", window, "largest probe window")->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "run catalog checks");
  add_common(verify);
  auto* seed_opt = verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--check", o.check, "check kind, kind:label, or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? 0 : 2;
  }
  o.config = config;
  if (!out_dir.empty()) o.out = out_dir;
  if (*seed_opt) o.seed = seed;
  if (*resolution_opt) o.resolution = resolution;
  if (*window_opt) o.window = window;

  try {
    if (*index) return cmd_index(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (o.check != "all") {
      const auto& kinds = known_check_kinds();
      const Catalog catalog = Catalog::load(o.config);
      const auto names = catalog.check_names();
      const bool known = std::find(kinds.begin(), kinds.end(), o.check) != kinds.end() ||
                         std::find(names.begin(), names.end(), o.check) != names.end();
      if (!known) {
        err << "error: unknown check '" << o.check << "'\n";
        return 2;
      }
    }
    return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ltoeplitz::cli
