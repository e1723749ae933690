#pragma once

#include <string>

#include <json.hpp>

#include "permgrowth/rational.hpp"
#include "permgrowth/series.hpp"

namespace permgrowth {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kDefaultPrecision = 6;

/// The machine-readable report envelope every CLI command emits: command
/// echo, inputs, outputs, timing, version. Key order is fixed so output
/// is byte-deterministic apart from the timing field.
nlohmann::ordered_json make_report(const std::string& command, nlohmann::ordered_json inputs,
                                   nlohmann::ordered_json outputs, double elapsed_ms);

/// Bracket as JSON: exact rationals plus decimal renderings of the
/// midpoint and width at the requested precision.
nlohmann::ordered_json bracket_json(const GrowthRate& rate, int precision);

}  // namespace permgrowth
