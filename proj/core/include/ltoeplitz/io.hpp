// SPDX-License-Identifier: Apache-2.0
//
// CSV and structured-record output. Reals are written with 17 significant
// digits so that they survive a round trip.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ltoeplitz/operator.hpp"
#include "ltoeplitz/spectral.hpp"
#include "ltoeplitz/verify.hpp"

namespace ltoeplitz {

[[nodiscard]] std::string format_real(double x);

/// row,col,re,im for every nonzero entry, column-major.
void write_section_csv(std::ostream& out, const FiniteSection& section);

/// re,im per line.
void write_points_csv(std::ostream& out, const Points& points);

/// mu_re,mu_im,window_size,min_singular_value per probe and size.
void write_probes_csv(std::ostream& out, const std::vector<ResolventProbe>& probes);

/// One JSON object {variant, radius?, q?, base?, samples: [[re, im], ...]}.
[[nodiscard]] std::string descriptor_record(const SpectrumDescriptor& desc,
                                            std::size_t resolution = kDefaultCurveResolution);

/// One line per report: PASS/FAIL, name, residuals, detail.
[[nodiscard]] std::string reports_text(const std::vector<CheckReport>& reports);

/// JSON array of {check_name, passed, residuals, budget, detail}; non-finite
/// residuals become null.
[[nodiscard]] std::string reports_record(const std::vector<CheckReport>& reports);

}  // namespace ltoeplitz
