#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qbench/circuit.hpp"

namespace qbench {

// Directed CX connectivity: (control, target) pairs that the device executes
// natively.  Everything else has to be rewritten by the transpiler.
struct CouplingMap {
  int num_qubits = 0;
  std::set<std::pair<int, int>> allowed;

  bool allows(int control, int target) const {
    return allowed.count({control, target}) > 0;
  }
  bool connected_undirected(int a, int b) const {
    return allows(a, b) || allows(b, a);
  }
};

struct DeviceProfile {
  double duration_1q_ns = 130.0;
  double duration_cx_ns = 650.0;
  double coherence_us = 100.0;
  int max_gates = 80;
};

struct Device {
  std::string name;
  CouplingMap coupling;
  DeviceProfile profile;
};

// The 5-qubit star devices: all CX target the center qubit 2; the second
// revision adds the (0,1) and (3,4) edge pairs.
Device builtin_device(const std::string& name);  // "ibmqe-v1" | "ibmqe-v2"
std::vector<std::string> builtin_device_names();

Device load_device(const std::string& json_text);
std::string device_to_json(const Device& device);

struct CouplingViolation {
  std::size_t gate_index;
  int control;
  int target;
  bool operator==(const CouplingViolation&) const = default;
};

// Every CX whose (control, target) pair the map does not allow, in order.
std::vector<CouplingViolation> validate_coupling(const Circuit& circuit,
                                                 const CouplingMap& map);

struct DurationEstimate {
  double seconds = 0.0;
  std::size_t gate_count = 0;  // timed gates only; barriers and measures are free
  bool exceeds_coherence = false;
  bool exceeds_max_gates = false;  // advisory, mirrors the device's gate cap
};

DurationEstimate estimate_duration(const Circuit& circuit, const DeviceProfile& profile);

// [[m, k, d]] code descriptor used by the error-correction benchmarks.
struct CodeSpec {
  int physical_qubits;
  int logical_qubits;
  int distance;
};

}  // namespace qbench
