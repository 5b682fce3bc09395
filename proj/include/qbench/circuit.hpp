#pragma once

#include <string>
#include <vector>

#include "qbench/gate.hpp"

namespace qbench {

// A straight-line program over one quantum and one classical register.
// Append validates every gate; once a qubit has been measured no further
// gate may touch it, so measurements are always terminal per qubit.
class Circuit {
 public:
  Circuit(int num_qubits, int num_clbits, std::string name = "");

  Circuit& append(Gate gate);  // throws std::invalid_argument / std::out_of_range

  // Convenience builders, all returning *this for chaining.
  Circuit& x(int q) { return append(Gate::x(q)); }
  Circuit& y(int q) { return append(Gate::y(q)); }
  Circuit& z(int q) { return append(Gate::z(q)); }
  Circuit& h(int q) { return append(Gate::h(q)); }
  Circuit& s(int q) { return append(Gate::s(q)); }
  Circuit& sdg(int q) { return append(Gate::sdg(q)); }
  Circuit& t(int q) { return append(Gate::t(q)); }
  Circuit& tdg(int q) { return append(Gate::tdg(q)); }
  Circuit& u1(double lambda, int q) { return append(Gate::u1(lambda, q)); }
  Circuit& cx(int control, int target) { return append(Gate::cx(control, target)); }
  Circuit& barrier(std::vector<int> qs) { return append(Gate::barrier(std::move(qs))); }
  Circuit& measure(int q, int c) { return append(Gate::measure(q, c)); }

  int num_qubits() const { return num_qubits_; }
  int num_clbits() const { return num_clbits_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }

  std::size_t count_kind(GateKind kind) const;
  bool has_measure() const;

  // Structural equality: registers and gate list; the name is metadata.
  bool operator==(const Circuit& other) const;

 private:
  int num_qubits_;
  int num_clbits_;
  std::string name_;
  std::vector<Gate> gates_;
  std::vector<bool> measured_;
};

// Gate-list concatenation; registers must match.
Circuit concat(const Circuit& a, const Circuit& b);

}  // namespace qbench
