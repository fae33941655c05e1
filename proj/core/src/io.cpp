// SPDX-License-Identifier: Apache-2.0

#include "ltoeplitz/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

#include <json.hpp>

namespace ltoeplitz {

namespace {

nlohmann::ordered_json record(const SpectrumDescriptor& desc, std::size_t resolution) {
  nlohmann::ordered_json j;
  j["variant"] = std::string(desc.variant_name());
  if (desc.holds<Circle>()) j["radius"] = desc.as<Circle>().radius;
  if (desc.holds<Disk>()) j["radius"] = desc.as<Disk>().radius;
  if (desc.holds<RootLift>()) {
    j["q"] = desc.as<RootLift>().q;
    j["base"] = record(*desc.as<RootLift>().base, resolution);
  }
  auto samples = nlohmann::ordered_json::array();
  for (const auto& z : sample_points(desc, resolution)) samples.push_back({z.real(), z.imag()});
  j["samples"] = std::move(samples);
  return j;
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_section_csv(std::ostream& out, const FiniteSection& section) {
  out << "row,col,re,im\n";
  const auto& m = section.matrix;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      const auto z = m(r, c);
      if (z == 0.0) continue;
      out << r << ',' << c << ',' << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
    }
  }
}

void write_points_csv(std::ostream& out, const Points& points) {
  out << "re,im\n";
  for (const auto& z : points) out << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
}

void write_probes_csv(std::ostream& out, const std::vector<ResolventProbe>& probes) {
  out << "mu_re,mu_im,window_size,min_singular_value\n";
  for (const auto& p : probes) {
    for (std::size_t i = 0; i < p.window_sizes.size(); ++i) {
      out << format_real(p.mu.real()) << ',' << format_real(p.mu.imag()) << ',' << p.window_sizes[i] << ','
          << format_real(p.min_singular_values[i]) << '\n';
    }
  }
}

std::string descriptor_record(const SpectrumDescriptor& desc, std::size_t resolution) {
  return record(desc, resolution).dump();
}

std::string reports_text(const std::vector<CheckReport>& reports) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out += r.passed ? "PASS " : "FAIL ";
    out += r.check_name;
    for (const auto& [k, v] : r.residuals) out += " " + k + "=" + format_real(v);
    if (!r.detail.empty()) out += " | " + r.detail;
    out += '\n';
    if (!r.passed) ++failed;
  }
  out += std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " checks passed\n";
  return out;
}

std::string reports_record(const std::vector<CheckReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["check_name"] = r.check_name;
    j["passed"] = r.passed;
    j["residuals"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.residuals) {
      j["residuals"][k] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
    }
    j["budget"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.budget) j["budget"][k] = v;
    j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace ltoeplitz
