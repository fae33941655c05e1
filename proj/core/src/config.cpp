// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "literals.hpp"

namespace ltoeplitz {

namespace literals {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ConfigError(where + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

long double parse_decimal(std::string_view s, const std::string& where) {
  long double v = 0.0L;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    bad(where, "cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

const long double kGolden = (std::sqrt(5.0L) - 1.0L) / 2.0L;

// "sqrt(k)", "golden" or a decimal.
long double parse_real_string(const std::string& raw, const std::string& where) {
  const std::string s = trim(raw);
  if (s == "golden") return kGolden;
  if (s.rfind("sqrt(", 0) == 0 && s.back() == ')') {
    const long double x = parse_decimal(std::string_view(s).substr(5, s.size() - 6), where);
    if (x < 0) bad(where, "square root of a negative number");
    return std::sqrt(x);
  }
  return parse_decimal(s, where);
}

// Plain decimal "[-]digits[.digits]" as an exact fraction.
std::optional<Angle> exact_decimal(const std::string& s) {
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  std::int64_t num = 0, den = 1;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '.' && !dot) {
      dot = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    if (num > (std::int64_t{1} << 58) || den > (std::int64_t{1} << 58)) return std::nullopt;
    num = num * 10 + (c - '0');
    if (dot) den *= 10;
    digits = true;
  }
  if (!digits) return std::nullopt;
  return Angle::rational(negative ? -num : num, den);
}

}  // namespace

void require_object(const Json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
}

void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& where) {
  require_object(j, where);
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) bad(where, "unknown field '" + key + "'");
  }
}

long double parse_real(const Json& j, const std::string& where) {
  if (j.is_number()) return j.get<long double>();
  if (j.is_string()) return parse_real_string(j.get<std::string>(), where);
  bad(where, "expected a number or numeric string");
}

std::int64_t parse_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<std::int64_t>();
}

std::size_t parse_size(const Json& j, const std::string& where) {
  const std::int64_t v = parse_integer(j, where);
  if (v < 0) bad(where, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

std::complex<double> parse_complex(const Json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) bad(where, "complex literal needs [re, im]");
    return {static_cast<double>(parse_real(j[0], where)), static_cast<double>(parse_real(j[1], where))};
  }
  if (j.is_object()) {
    require_keys(j, {"re", "im"}, where);
    const double re = j.contains("re") ? static_cast<double>(parse_real(j["re"], where)) : 0.0;
    const double im = j.contains("im") ? static_cast<double>(parse_real(j["im"], where)) : 0.0;
    return {re, im};
  }
  return {static_cast<double>(parse_real(j, where)), 0.0};
}

Angle parse_angle(const Json& j, const std::string& where) {
  if (j.is_number()) return Angle::real(j.get<long double>());
  if (!j.is_string()) bad(where, "angle must be a string or number");
  const std::string s = trim(j.get<std::string>());
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const auto p = parse_integer(Json::parse(s.substr(0, slash), nullptr, false), where);
    const auto q = parse_integer(Json::parse(s.substr(slash + 1), nullptr, false), where);
    if (q <= 0) bad(where, "angle denominator must be positive");
    return Angle::rational(p, q);
  }
  if (auto exact = exact_decimal(s)) return *exact;
  return Angle::real(parse_real_string(s, where));
}

GroupSpec parse_group(const Json& j) {
  const std::string where = "group";
  require_keys(j, {"type", "dimension", "basis", "guard"}, where);
  if (!j.contains("type") || !j["type"].is_string()) bad(where, "missing type");
  const std::string type = j["type"];
  if (type == "lattice_lex") {
    if (!j.contains("dimension")) bad(where, "missing dimension");
    if (j.contains("basis") || j.contains("guard")) bad(where, "lattice_lex takes only a dimension");
    const std::size_t d = parse_size(j["dimension"], where + ".dimension");
    if (d == 0) bad(where, "dimension must be at least 1");
    return GroupSpec::lattice_lex(d);
  }
  if (type == "real_embedded") {
    if (!j.contains("basis") || !j["basis"].is_array()) bad(where, "missing basis list");
    std::vector<long double> basis;
    for (const auto& b : j["basis"]) basis.push_back(parse_real(b, where + ".basis"));
    if (j.contains("dimension") && parse_size(j["dimension"], where) != basis.size()) {
      bad(where, "dimension does not match basis length");
    }
    const long double guard = j.contains("guard") ? parse_real(j["guard"], where) : GroupSpec::kDefaultGuard;
    return GroupSpec::real_embedded(std::move(basis), guard);
  }
  if (type == "cyclic" || type == "finite") bad(where, "torsion groups admit no total order");
  bad(where, "unknown group type '" + type + "'");
}

GroupPoint parse_lambda(const Json& j, const GroupSpec& spec) {
  const std::string where = "lambda";
  require_keys(j, {"angles", "t"}, where);
  if (j.contains("angles") == j.contains("t")) bad(where, "give exactly one of 'angles' or 't'");
  if (j.contains("angles")) {
    if (spec.kind() != GroupSpec::Kind::LatticeLex) bad(where, "torus angles need a lattice_lex group");
    if (!j["angles"].is_array()) bad(where, "angles must be a list");
    std::vector<Angle> angles;
    for (const auto& a : j["angles"]) angles.push_back(parse_angle(a, where + ".angles"));
    if (angles.size() != spec.dimension()) bad(where, "number of angles does not match the group dimension");
    return GroupPoint::torus(std::move(angles));
  }
  if (spec.kind() != GroupSpec::Kind::RealEmbedded) bad(where, "a real parameter needs a real_embedded group");
  return GroupPoint::real_parameter(parse_real(j["t"], where + ".t"), spec);
}

Character parse_character(const Json& j, const GroupSpec& spec, const std::string& where) {
  if (!j.is_array()) bad(where, "character must be an integer vector");
  std::vector<std::int64_t> e;
  for (const auto& x : j) e.push_back(parse_integer(x, where));
  if (e.size() != spec.dimension()) bad(where, "character length does not match the group dimension");
  return Character::from_exponents(e);
}

Symbol parse_symbol(const Json& j, const GroupSpec& spec) {
  const std::string where = "symbol";
  if (!j.is_array()) bad(where, "symbol must be a list of coefficients");
  Symbol phi(spec);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    require_keys(j[i], {"exponents", "re", "im"}, at);
    if (!j[i].contains("exponents")) bad(at, "missing exponents");
    const Character chi = parse_character(j[i]["exponents"], spec, at + ".exponents");
    const double re = j[i].contains("re") ? static_cast<double>(parse_real(j[i]["re"], at)) : 0.0;
    const double im = j[i].contains("im") ? static_cast<double>(parse_real(j[i]["im"], at)) : 0.0;
    phi.add(chi, {re, im});
  }
  return phi;
}

WindowSpec parse_window(const Json& j, const GroupSpec& spec) {
  const std::string where = "window";
  require_keys(j, {"size", "box", "box_bound"}, where);
  WindowSpec w;
  if (j.contains("size")) w.size = parse_size(j["size"], where + ".size");
  if (j.contains("box") && j.contains("box_bound")) bad(where, "give either 'box' or 'box_bound'");
  if (j.contains("box_bound")) {
    w.box = ExponentBox::cube(spec.dimension(), parse_integer(j["box_bound"], where + ".box_bound"));
  }
  if (j.contains("box")) {
    const auto& b = j["box"];
    if (!b.is_array() || b.size() != spec.dimension()) bad(where, "box needs one [lo, hi] pair per coordinate");
    std::vector<ExponentBox::Range> ranges;
    for (const auto& r : b) {
      if (!r.is_array() || r.size() != 2) bad(where, "box ranges are [lo, hi] pairs");
      ranges.emplace_back(parse_integer(r[0], where), parse_integer(r[1], where));
    }
    w.box = ExponentBox(std::move(ranges));
  }
  if (!w.size && !w.box) bad(where, "give a size or a box");
  return w;
}

std::vector<std::size_t> parse_sizes(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of sizes");
  std::vector<std::size_t> out;
  for (const auto& x : j) out.push_back(parse_size(x, where));
  return out;
}

Json parse_document(std::string_view text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(where, std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace literals

TruncationWindow WindowSpec::resolve(const GroupSpec& spec) const {
  if (box) return TruncationWindow::from_box(spec, *box, size);
  return TruncationWindow::leading(spec, *size);
}

LambdaToeplitz ExperimentConfig::make_operator() const {
  if (!lambda) throw ConfigError("config: missing 'lambda'");
  if (!symbol) throw ConfigError("config: missing 'symbol'");
  return LambdaToeplitz(*lambda, *symbol);
}

ExperimentConfig parse_experiment(std::string_view text) {
  using namespace literals;
  const Json j = parse_document(text, "config");
  require_keys(j, {"description", "group", "lambda", "symbol", "window", "characters", "mu", "q", "chi0",
                   "resolution", "probe_sizes", "seed"},
               "config");
  if (!j.contains("group")) throw ConfigError("config: missing 'group'");
  ExperimentConfig cfg{parse_group(j["group"])};
  const GroupSpec& g = cfg.group;
  if (j.contains("lambda")) cfg.lambda = parse_lambda(j["lambda"], g);
  if (j.contains("symbol")) cfg.symbol = parse_symbol(j["symbol"], g);
  if (j.contains("window")) cfg.window = parse_window(j["window"], g);
  if (j.contains("characters")) {
    if (!j["characters"].is_array()) throw ConfigError("characters: expected a list");
    for (const auto& c : j["characters"]) cfg.characters.push_back(parse_character(c, g, "characters"));
  }
  if (j.contains("mu")) {
    const auto& m = j["mu"];
    if (!m.is_array()) throw ConfigError("mu: expected a list");
    for (const auto& x : m) cfg.mu.push_back(parse_complex(x, "mu"));
  }
  if (j.contains("q")) cfg.q = parse_integer(j["q"], "q");
  if (j.contains("chi0")) cfg.chi0 = parse_character(j["chi0"], g, "chi0");
  if (j.contains("resolution")) cfg.resolution = parse_size(j["resolution"], "resolution");
  if (j.contains("probe_sizes")) cfg.probe_sizes = parse_sizes(j["probe_sizes"], "probe_sizes");
  if (j.contains("seed")) cfg.seed = static_cast<std::uint64_t>(parse_integer(j["seed"], "seed"));
  return cfg;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExperimentConfig load_experiment(const std::filesystem::path& path) {
  return parse_experiment(read_text_file(path));
}

}  // namespace ltoeplitz
