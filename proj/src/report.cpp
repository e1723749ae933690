#include "permgrowth/report.hpp"

namespace permgrowth {

nlohmann::ordered_json make_report(const std::string& command, nlohmann::ordered_json inputs,
                                   nlohmann::ordered_json outputs, double elapsed_ms) {
  nlohmann::ordered_json report;
  report["command"] = command;
  report["inputs"] = std::move(inputs);
  report["outputs"] = std::move(outputs);
  report["timing_ms"] = elapsed_ms;
  report["version"] = kVersion;
  return report;
}

nlohmann::ordered_json bracket_json(const GrowthRate& rate, int precision) {
  nlohmann::ordered_json out;
  out["lo"] = to_fraction_string(rate.lo);
  out["hi"] = to_fraction_string(rate.hi);
  out["decimal"] = to_decimal_string(rate.midpoint(), precision);
  out["width"] = to_decimal_string(rate.width(), 3);
  if (!rate.poly.empty()) out["polynomial"] = rate.poly;
  return out;
}

}  // namespace permgrowth
