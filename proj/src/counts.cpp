#include "qbench/counts.hpp"

#include <json.hpp>

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace qbench {

std::size_t CountsTable::key_width() const {
  return counts.empty() ? 0 : counts.begin()->first.size();
}

void CountsTable::validate() const {
  std::uint64_t total = 0;
  const std::size_t width = key_width();
  for (const auto& [key, count] : counts) {
    if (key.empty() || key.size() != width)
      throw std::invalid_argument("counts keys must share one width");
    for (char c : key)
      if (c != '0' && c != '1')
        throw std::invalid_argument("counts key is not a bitstring: " + key);
    total += count;
  }
  if (total != shots)
    throw std::invalid_argument("counts sum to " + std::to_string(total) +
                                " but shots is " + std::to_string(shots));
}

std::string counts_to_json(const CountsTable& table) {
  nlohmann::json j;
  j["backend"] = table.backend;
  j["date"] = table.date;
  j["shots"] = table.shots;
  if (table.seed)
    j["seed"] = *table.seed;
  else
    j["seed"] = nullptr;
  j["counts"] = nlohmann::json::object();
  for (const auto& [key, count] : table.counts) j["counts"][key] = count;
  j["circuit_name"] = table.circuit_name;
  return j.dump(2) + "\n";
}

CountsTable counts_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad counts JSON: ") + e.what());
  }
  CountsTable t;
  try {
    t.backend = j.at("backend").get<std::string>();
    t.date = j.at("date").get<std::string>();
    t.shots = j.at("shots").get<std::uint64_t>();
    if (j.contains("seed") && !j.at("seed").is_null())
      t.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("counts").items())
      t.counts[key] = value.get<std::uint64_t>();
    t.circuit_name = j.value("circuit_name", "");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad counts JSON: ") + e.what());
  }
  t.validate();
  return t;
}

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace qbench
