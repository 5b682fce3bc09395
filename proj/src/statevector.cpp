#include "qbench/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qbench {

namespace {

constexpr cdouble kI{0.0, 1.0};

struct Mat2 {
  cdouble m00, m01, m10, m11;
};

// diag(1, phase) gates share one kernel; others get the generic 2x2 path.
Mat2 matrix_1q(const Gate& g) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  switch (g.kind) {
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -kI, kI, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {inv_sqrt2, inv_sqrt2, inv_sqrt2, -inv_sqrt2};
    case GateKind::S: return {1, 0, 0, kI};
    case GateKind::Sdg: return {1, 0, 0, -kI};
    case GateKind::T: return {1, 0, 0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1, 0, 0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::U1: return {1, 0, 0, std::polar(1.0, g.lambda)};
    default: throw std::invalid_argument("not a single-qubit gate");
  }
}

bool is_phase_only(GateKind kind) {
  switch (kind) {
    case GateKind::Z:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::T:
    case GateKind::Tdg:
    case GateKind::U1:
      return true;
    default:
      return false;
  }
}

}  // namespace

StateVector::StateVector(int num_qubits)
    : num_qubits_(num_qubits), amps_(std::size_t{1} << num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) throw std::invalid_argument("bad qubit count");
  amps_[0] = 1.0;
}

void StateVector::reset_to_basis(std::uint64_t basis_index) {
  if (basis_index >= amps_.size()) throw std::out_of_range("basis index out of range");
  std::fill(amps_.begin(), amps_.end(), cdouble{});
  amps_[basis_index] = 1.0;
}

void StateVector::apply(const Gate& gate) {
  if (gate.kind == GateKind::Barrier) return;
  if (gate.kind == GateKind::Measure)
    throw std::invalid_argument("measure is not a state map");

  const std::size_t n = amps_.size();
  if (gate.kind == GateKind::CX) {
    const std::uint64_t cmask = std::uint64_t{1} << gate.qubits[0];
    const std::uint64_t tmask = std::uint64_t{1} << gate.qubits[1];
    for (std::uint64_t i = 0; i < n; ++i) {
      if ((i & cmask) && !(i & tmask)) std::swap(amps_[i], amps_[i | tmask]);
    }
    return;
  }

  const std::uint64_t mask = std::uint64_t{1} << gate.qubits[0];
  if (is_phase_only(gate.kind)) {
    const cdouble phase = matrix_1q(gate).m11;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (i & mask) amps_[i] *= phase;
    }
    return;
  }

  const Mat2 m = matrix_1q(gate);
  const std::uint64_t lo_mask = mask - 1;
  const std::uint64_t hi_mask = ~lo_mask;
  const std::uint64_t pairs = n >> 1;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const std::uint64_t i0 = ((i & hi_mask) << 1) | (i & lo_mask);
    const std::uint64_t i1 = i0 | mask;
    const cdouble a0 = amps_[i0];
    const cdouble a1 = amps_[i1];
    amps_[i0] = m.m00 * a0 + m.m01 * a1;
    amps_[i1] = m.m10 * a0 + m.m11 * a1;
  }
}

void StateVector::apply_all(const Circuit& circuit) {
  if (circuit.num_qubits() != num_qubits_)
    throw std::invalid_argument("circuit size mismatch");
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::Measure) continue;  // terminal by circuit invariant
    apply(g);
  }
}

double StateVector::norm() const {
  double s = 0.0;
  for (const cdouble& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

double StateVector::probability(std::uint64_t basis_index) const {
  return std::norm(amps_[basis_index]);
}

Matrix unitary_of(const Circuit& circuit) {
  if (circuit.num_qubits() > 10)
    throw std::invalid_argument("unitary extraction limited to 10 qubits");
  if (circuit.has_measure())
    throw std::invalid_argument("unitary of a measuring circuit is undefined");
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  Matrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector sv(circuit.num_qubits());
    sv.reset_to_basis(col);
    sv.apply_all(circuit);
    for (std::size_t row = 0; row < dim; ++row) u.at(row, col) = sv.amplitude(row);
  }
  return u;
}

}  // namespace qbench
