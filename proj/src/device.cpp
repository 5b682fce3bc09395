#include "qbench/device.hpp"

#include <json.hpp>
#include <stdexcept>

namespace qbench {

namespace {

Device make_star_v1() {
  Device d;
  d.name = "ibmqe-v1";
  d.coupling.num_qubits = 5;
  d.coupling.allowed = {{0, 2}, {1, 2}, {3, 2}, {4, 2}};
  return d;
}

Device make_star_v2() {
  Device d = make_star_v1();
  d.name = "ibmqe-v2";
  d.coupling.allowed.insert({0, 1});
  d.coupling.allowed.insert({3, 4});
  return d;
}

}  // namespace

Device builtin_device(const std::string& name) {
  if (name == "ibmqe-v1") return make_star_v1();
  if (name == "ibmqe-v2") return make_star_v2();
  throw std::invalid_argument("unknown device: " + name);
}

std::vector<std::string> builtin_device_names() {
  return {"ibmqe-v1", "ibmqe-v2"};
}

Device load_device(const std::string& json_text) {
  Device d;
  try {
    nlohmann::json j = nlohmann::json::parse(json_text);
    d.name = j.value("name", "custom");
    d.coupling.num_qubits = j.at("num_qubits").get<int>();
    if (d.coupling.num_qubits < 1) throw std::invalid_argument("num_qubits must be positive");
    for (const auto& pair : j.at("allowed")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("allowed entries must be [control, target]");
      int c = pair[0].get<int>();
      int t = pair[1].get<int>();
      if (c < 0 || t < 0 || c >= d.coupling.num_qubits || t >= d.coupling.num_qubits || c == t)
        throw std::invalid_argument("bad coupling pair");
      d.coupling.allowed.insert({c, t});
    }
    d.profile.duration_1q_ns = j.value("duration_1q_ns", 130.0);
    d.profile.duration_cx_ns = j.value("duration_cx_ns", 650.0);
    d.profile.coherence_us = j.value("coherence_us", 100.0);
    d.profile.max_gates = j.value("max_gates", 80);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad device JSON: ") + e.what());
  }
  if (d.profile.duration_1q_ns <= 0 || d.profile.duration_cx_ns <= 0 ||
      d.profile.coherence_us <= 0 || d.profile.max_gates <= 0)
    throw std::invalid_argument("device timing fields must be positive");
  return d;
}

std::string device_to_json(const Device& device) {
  nlohmann::json j;
  j["name"] = device.name;
  j["num_qubits"] = device.coupling.num_qubits;
  auto pairs = nlohmann::json::array();
  for (const auto& [c, t] : device.coupling.allowed) pairs.push_back({c, t});
  j["allowed"] = pairs;
  j["duration_1q_ns"] = device.profile.duration_1q_ns;
  j["duration_cx_ns"] = device.profile.duration_cx_ns;
  j["coherence_us"] = device.profile.coherence_us;
  j["max_gates"] = device.profile.max_gates;
  return j.dump(2) + "\n";
}

std::vector<CouplingViolation> validate_coupling(const Circuit& circuit,
                                                 const CouplingMap& map) {
  if (circuit.num_qubits() > map.num_qubits)
    throw std::invalid_argument("circuit is wider than the coupling map");
  std::vector<CouplingViolation> out;
  const auto& gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind != GateKind::CX) continue;
    if (!map.allows(g.qubits[0], g.qubits[1]))
      out.push_back({i, g.qubits[0], g.qubits[1]});
  }
  return out;
}

DurationEstimate estimate_duration(const Circuit& circuit, const DeviceProfile& profile) {
  DurationEstimate est;
  double ns = 0.0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    ns += (g.kind == GateKind::CX) ? profile.duration_cx_ns : profile.duration_1q_ns;
    est.gate_count++;
  }
  est.seconds = ns * 1e-9;
  est.exceeds_coherence = est.seconds > profile.coherence_us * 1e-6;
  est.exceeds_max_gates = est.gate_count > static_cast<std::size_t>(profile.max_gates);
  return est;
}

}  // namespace qbench
