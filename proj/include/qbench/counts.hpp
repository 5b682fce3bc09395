#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace qbench {

// Aggregated measurement record.  Keys are bitstrings over the classical
// register with clbit 0 as the rightmost character; all keys share one
// width and the counts sum to `shots`.
struct CountsTable {
  std::string backend;
  std::string date;  // "YYYY-MM-DDTHH:MM:SSZ"
  std::uint64_t shots = 0;
  std::optional<std::uint64_t> seed;
  std::map<std::string, std::uint64_t> counts;
  std::string circuit_name;

  std::size_t key_width() const;
  void validate() const;  // throws std::invalid_argument on schema violations
};

std::string counts_to_json(const CountsTable& table);
CountsTable counts_from_json(const std::string& json_text);

std::string utc_timestamp_now();

}  // namespace qbench
