#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fpd/fpd.hpp"

namespace fpd {

/// Fixed-point with `digits` fractional digits, trailing zeros removed.
std::string format_decimal(long double value, int digits = 12);
/// "0" or scientific notation with three significant digits.
std::string format_bound(long double bound);

nlohmann::json spec_to_json(const BoundAlgebraSpec& spec);
nlohmann::json to_json(const SpectralRadius& rho);
nlohmann::json to_json(const FpdReport& report);

/// Canonical JSON text: sorted keys, two-space indent, trailing newline.
std::string render_json(const FpdReport& report);
/// Human-readable report; matrices are labelled with brick names.
std::string render_text(const FpdReport& report);

}  // namespace fpd
