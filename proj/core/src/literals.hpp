// SPDX-License-Identifier: Apache-2.0
//
// JSON literal parsers shared by experiment configs and the catalog.

#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ltoeplitz/config.hpp"
#include "ltoeplitz/operator.hpp"

namespace ltoeplitz::literals {

using Json = nlohmann::json;

/// Throws ConfigError naming `where` if `j` has a key outside `allowed`.
void require_keys(const Json& j, std::initializer_list<std::string_view> allowed, const std::string& where);
void require_object(const Json& j, const std::string& where);

[[nodiscard]] long double parse_real(const Json& j, const std::string& where);
[[nodiscard]] std::int64_t parse_integer(const Json& j, const std::string& where);
[[nodiscard]] std::size_t parse_size(const Json& j, const std::string& where);
[[nodiscard]] std::complex<double> parse_complex(const Json& j, const std::string& where);
[[nodiscard]] Angle parse_angle(const Json& j, const std::string& where);

[[nodiscard]] GroupSpec parse_group(const Json& j);
[[nodiscard]] GroupPoint parse_lambda(const Json& j, const GroupSpec& spec);
[[nodiscard]] Symbol parse_symbol(const Json& j, const GroupSpec& spec);
[[nodiscard]] Character parse_character(const Json& j, const GroupSpec& spec, const std::string& where);
[[nodiscard]] WindowSpec parse_window(const Json& j, const GroupSpec& spec);
[[nodiscard]] std::vector<std::size_t> parse_sizes(const Json& j, const std::string& where);

[[nodiscard]] Json parse_document(std::string_view text, const std::string& where);

}  // namespace ltoeplitz::literals
