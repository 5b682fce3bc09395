#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/device.hpp"
#include "qbench/matrix.hpp"

namespace qbench {

// Two-qubit rewrite over the native gate set.  Expansions are written on
// abstract qubits 0 (control / first operand) and 1 and are checked against
// the target unitary to 1e-10 when the registry is built.
struct RewriteRule {
  std::string name;
  std::vector<Gate> expansion;
  Matrix target;  // 4x4, qubit 0 is the low bit of the index
};

class RewriteRegistry {
 public:
  static const RewriteRegistry& instance();
  const RewriteRule& rule(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  RewriteRegistry();
  void add(RewriteRule rule);
  std::vector<RewriteRule> rules_;
};

// Emit a rule's expansion onto concrete qubits of a circuit.
void emit_rule(Circuit& circuit, const std::string& rule_name, int q0, int q1);

// Convenience wrappers for the registered rules.
void emit_cz(Circuit& circuit, int control, int target);
void emit_minus_cz(Circuit& circuit, int control, int target);
void emit_cy(Circuit& circuit, int control, int target);
void emit_reversed_cx(Circuit& circuit, int control, int target);
void emit_swap(Circuit& circuit, int a, int b);

// Controlled phase; parametric, so checked in tests rather than the registry.
void emit_cu1(Circuit& circuit, double lambda, int control, int target);

class RouteError : public std::runtime_error {
 public:
  explicit RouteError(const std::string& message) : std::runtime_error(message) {}
};

struct RouteStats {
  int swaps = 0;        // SWAPs inserted (3 CX each)
  int reversals = 0;    // reversed-CX expansions (4 H each)
  int cx_added = 0;     // CX gates beyond the input's
  int h_added = 0;      // H gates beyond the input's
};

struct RouteResult {
  Circuit circuit{1, 0};  // on the device's qubit count
  // slot_of_phys[p] = input qubit occupying physical qubit p at the end;
  // physical slots that never held an input qubit keep their own index.
  std::vector<int> slot_of_phys;
  RouteStats stats;

  int physical_of(int logical) const;
};

// Map a circuit onto a device so every CX respects the directed coupling.
// Policy: allowed CX pass through; a CX allowed only in reverse gets the
// four-H reversal; otherwise the control is swapped along a shortest
// undirected path until adjacent.  Swaps persist (they are not undone), so
// the final layout can differ from the initial one.
RouteResult route(const Circuit& circuit, const Device& device);

struct EquivalenceReport {
  bool equivalent = false;
  double max_deviation = 0.0;
  double global_phase = 0.0;  // radians; phase of routed relative to permuted original
};

// Compares unitaries up to global phase, accounting for the routing
// permutation.  Measure gates are ignored; circuits above 10 qubits are
// rejected because the dense check is exponential.
EquivalenceReport verify_equivalence(const Circuit& original, const Circuit& routed,
                                     const std::vector<int>& slot_of_phys,
                                     double tol = 1e-10);

}  // namespace qbench
