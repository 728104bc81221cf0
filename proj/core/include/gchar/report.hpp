#pragma once

// Flat result records and their two renderings.

#include <cstdint>
#include <string>
#include <vector>

namespace gchar {

inline const std::string kExact = "exact";
inline const std::string kCatalogRestricted = "catalog-restricted";
inline const std::string kWitnessOnly = "witness-only";
std::string probabilistic(std::uint64_t seed);

struct Record {
  std::string invariant;
  std::string module;
  std::string value;
  std::string status;
  std::string bounds;
};

enum class Format { table, json };
Format parse_format(const std::string& s);

class Report {
 public:
  void add(Record r) { records_.push_back(std::move(r)); }
  void add(std::string invariant, std::string module, std::string value, std::string status = kExact,
           std::string bounds = {});
  const std::vector<Record>& records() const noexcept { return records_; }

  // Array of {invariant, module, value, status, bounds}, keys in that order.
  std::string to_json() const;
  // One line per record; the module column is dropped when all records share one module.
  std::string to_table() const;
  std::string render(Format f) const { return f == Format::json ? to_json() : to_table(); }

 private:
  std::vector<Record> records_;
};

std::string join(const std::vector<long long>& v, const std::string& sep = ",");

}  // namespace gchar
