#include "gchar/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gchar/error.hpp"

namespace gchar {

std::string probabilistic(std::uint64_t seed) { return "probabilistic(seed=" + std::to_string(seed) + ")"; }

Format parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  throw InputError("unknown format '" + s + "' (expected table or json)");
}

void Report::add(std::string invariant, std::string module, std::string value, std::string status, std::string bounds) {
  records_.push_back({std::move(invariant), std::move(module), std::move(value), std::move(status), std::move(bounds)});
}

std::string Report::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json j;
    j["invariant"] = r.invariant;
    j["module"] = r.module;
    j["value"] = r.value;
    j["status"] = r.status;
    j["bounds"] = r.bounds;
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string Report::to_table() const {
  bool one_module = std::all_of(records_.begin(), records_.end(),
                                [&](const Record& r) { return r.module == records_.front().module; });
  std::size_t wm = 0, wi = 0;
  for (const auto& r : records_) {
    wm = std::max(wm, r.module.size());
    wi = std::max(wi, r.invariant.size());
  }
  std::ostringstream os;
  for (const auto& r : records_) {
    std::string line;
    if (!one_module) line += r.module + std::string(wm - r.module.size() + 2, ' ');
    line += r.invariant;
    if (!one_module || records_.size() > 1) line += std::string(wi - r.invariant.size(), ' ');
    line += " = " + r.value + " (" + r.status + ")";
    if (!r.bounds.empty()) line += "  [" + r.bounds + "]";
    os << line << "\n";
  }
  return os.str();
}

std::string join(const std::vector<long long>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

}  // namespace gchar
