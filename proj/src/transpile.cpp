#include "qbench/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>

#include "qbench/statevector.hpp"

namespace qbench {

namespace {

// Rules are written on abstract qubits 0 and 1; remap to concrete ones.
Gate remap(const Gate& gate, int q0, int q1) {
  Gate out = gate;
  for (int& q : out.qubits) q = (q == 0) ? q0 : q1;
  return out;
}

Matrix rule_unitary(const std::vector<Gate>& expansion) {
  Circuit probe(2, 2);
  for (const Gate& gate : expansion) probe.append(gate);
  return unitary_of(probe);
}

}  // namespace

RewriteRegistry::RewriteRegistry() {
  const cdouble one(1.0, 0.0);
  const cdouble im(0.0, 1.0);

  {
    RewriteRule rule;
    rule.name = "cz";
    rule.expansion = {Gate::h(1), Gate::cx(0, 1), Gate::h(1)};
    Matrix m(4);
    m.at(0, 0) = one, m.at(1, 1) = one, m.at(2, 2) = one, m.at(3, 3) = -one;
    rule.target = m;
    add(std::move(rule));
  }
  {
    // Controlled minus-Z: CZ with an extra Z on the control.
    RewriteRule rule;
    rule.name = "minus_cz";
    rule.expansion = {Gate::h(1), Gate::cx(0, 1), Gate::h(1), Gate::z(0)};
    Matrix m(4);
    m.at(0, 0) = one, m.at(1, 1) = -one, m.at(2, 2) = one, m.at(3, 3) = one;
    rule.target = m;
    add(std::move(rule));
  }
  {
    // CY = S on the control after CZ then CX (Y = i X Z).
    RewriteRule rule;
    rule.name = "cy";
    rule.expansion = {Gate::h(1), Gate::cx(0, 1), Gate::h(1), Gate::cx(0, 1), Gate::s(0)};
    Matrix m(4);
    m.at(0, 0) = one, m.at(2, 2) = one;
    m.at(3, 1) = im, m.at(1, 3) = -im;
    rule.target = m;
    add(std::move(rule));
  }
  {
    // CX with only the opposite direction available: conjugate by H pairs.
    RewriteRule rule;
    rule.name = "reverse_cx";
    rule.expansion = {Gate::h(0), Gate::h(1), Gate::cx(1, 0), Gate::h(0), Gate::h(1)};
    Matrix m(4);
    m.at(0, 0) = one, m.at(2, 2) = one;
    m.at(3, 1) = one, m.at(1, 3) = one;
    rule.target = m;
    add(std::move(rule));
  }
  {
    RewriteRule rule;
    rule.name = "swap";
    rule.expansion = {Gate::cx(0, 1), Gate::cx(1, 0), Gate::cx(0, 1)};
    Matrix m(4);
    m.at(0, 0) = one, m.at(3, 3) = one;
    m.at(2, 1) = one, m.at(1, 2) = one;
    rule.target = m;
    add(std::move(rule));
  }
}

void RewriteRegistry::add(RewriteRule rule) {
  Matrix got = rule_unitary(rule.expansion);
  double dev = got.max_abs_diff(rule.target);
  if (dev > 1e-10) {
    throw std::logic_error("rewrite rule '" + rule.name + "' deviates from its target by " +
                           std::to_string(dev));
  }
  rules_.push_back(std::move(rule));
}

const RewriteRegistry& RewriteRegistry::instance() {
  static const RewriteRegistry registry;
  return registry;
}

const RewriteRule& RewriteRegistry::rule(const std::string& name) const {
  for (const RewriteRule& rule : rules_) {
    if (rule.name == name) return rule;
  }
  throw std::out_of_range("no rewrite rule named '" + name + "'");
}

std::vector<std::string> RewriteRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(rules_.size());
  for (const RewriteRule& rule : rules_) out.push_back(rule.name);
  return out;
}

void emit_rule(Circuit& circuit, const std::string& rule_name, int q0, int q1) {
  const RewriteRule& rule = RewriteRegistry::instance().rule(rule_name);
  for (const Gate& gate : rule.expansion) circuit.append(remap(gate, q0, q1));
}

void emit_cz(Circuit& circuit, int control, int target) {
  emit_rule(circuit, "cz", control, target);
}

void emit_minus_cz(Circuit& circuit, int control, int target) {
  emit_rule(circuit, "minus_cz", control, target);
}

void emit_cy(Circuit& circuit, int control, int target) {
  emit_rule(circuit, "cy", control, target);
}

void emit_reversed_cx(Circuit& circuit, int control, int target) {
  emit_rule(circuit, "reverse_cx", control, target);
}

void emit_swap(Circuit& circuit, int a, int b) { emit_rule(circuit, "swap", a, b); }

void emit_cu1(Circuit& circuit, double lambda, int control, int target) {
  circuit.u1(lambda / 2, control);
  circuit.u1(lambda / 2, target);
  circuit.cx(control, target);
  circuit.u1(-lambda / 2, target);
  circuit.cx(control, target);
}

int RouteResult::physical_of(int logical) const {
  for (size_t p = 0; p < slot_of_phys.size(); ++p) {
    if (slot_of_phys[p] == logical) return static_cast<int>(p);
  }
  throw std::out_of_range("logical qubit " + std::to_string(logical) + " not in layout");
}

namespace {

class Router {
 public:
  Router(const Circuit& input, const Device& device)
      : input_(input),
        device_(device),
        out_(device.coupling.num_qubits, input.num_clbits(),
             input.name().empty() ? "" : input.name() + "@" + device.name),
        slot_of_phys_(device.coupling.num_qubits) {
    std::iota(slot_of_phys_.begin(), slot_of_phys_.end(), 0);
  }

  RouteResult run() {
    if (input_.num_qubits() > device_.coupling.num_qubits) {
      throw RouteError("circuit needs " + std::to_string(input_.num_qubits()) +
                       " qubits but device " + device_.name + " has " +
                       std::to_string(device_.coupling.num_qubits));
    }
    for (const Gate& gate : input_.gates()) {
      switch (gate.kind) {
        case GateKind::CX:
          route_cx(physical_of(gate.qubits[0]), physical_of(gate.qubits[1]));
          break;
        case GateKind::Barrier: {
          std::vector<int> mapped;
          mapped.reserve(gate.qubits.size());
          for (int q : gate.qubits) mapped.push_back(physical_of(q));
          out_.barrier(mapped);
          break;
        }
        case GateKind::Measure:
          out_.measure(physical_of(gate.qubits[0]), gate.clbit);
          break;
        default: {
          Gate mapped = gate;
          mapped.qubits[0] = physical_of(gate.qubits[0]);
          out_.append(mapped);
          break;
        }
      }
    }
    RouteResult result{std::move(out_), std::move(slot_of_phys_), stats_};
    return result;
  }

 private:
  int physical_of(int slot) const {
    for (size_t p = 0; p < slot_of_phys_.size(); ++p) {
      if (slot_of_phys_[p] == slot) return static_cast<int>(p);
    }
    throw RouteError("lost track of qubit slot " + std::to_string(slot));
  }

  void emit_cx_directed(int control, int target) {
    if (device_.coupling.allows(control, target)) {
      out_.cx(control, target);
    } else {
      emit_reversed_cx(out_, control, target);
      ++stats_.reversals;
      stats_.h_added += 4;
    }
  }

  // SWAP needs CX in both directions; any missing one is reversed.
  void emit_swap_routed(int a, int b) {
    emit_cx_directed(a, b);
    emit_cx_directed(b, a);
    emit_cx_directed(a, b);
    std::swap(slot_of_phys_[a], slot_of_phys_[b]);
    ++stats_.swaps;
    stats_.cx_added += 3;
  }

  void route_cx(int control, int target) {
    if (!device_.coupling.connected_undirected(control, target)) {
      std::vector<int> path = shortest_path(control, target);
      if (path.empty()) {
        throw RouteError("no route between qubits " + std::to_string(control) + " and " +
                         std::to_string(target) + " on device " + device_.name);
      }
      // Walk the control towards the target, one swap per hop.
      while (path.size() > 2) {
        emit_swap_routed(path[0], path[1]);
        path.erase(path.begin());
      }
      control = path[0];
    }
    emit_cx_directed(control, target);
  }

  std::vector<int> shortest_path(int from, int to) const {
    int n = device_.coupling.num_qubits;
    std::vector<int> prev(n, -1);
    std::vector<bool> seen(n, false);
    std::queue<int> frontier;
    frontier.push(from);
    seen[from] = true;
    while (!frontier.empty()) {
      int node = frontier.front();
      frontier.pop();
      if (node == to) break;
      for (int next = 0; next < n; ++next) {
        if (!seen[next] && device_.coupling.connected_undirected(node, next)) {
          seen[next] = true;
          prev[next] = node;
          frontier.push(next);
        }
      }
    }
    if (!seen[to]) return {};
    std::vector<int> path;
    for (int node = to; node != -1; node = prev[node]) path.push_back(node);
    std::reverse(path.begin(), path.end());
    return path;
  }

  const Circuit& input_;
  const Device& device_;
  Circuit out_;
  std::vector<int> slot_of_phys_;
  RouteStats stats_;
};

}  // namespace

RouteResult route(const Circuit& circuit, const Device& device) {
  RouteResult result = Router(circuit, device).run();
  // Recompute the additive stats from the final circuits; the router's
  // incremental bookkeeping only covers CX.
  auto count = [](const Circuit& c, GateKind k) {
    return static_cast<int>(c.count_kind(k));
  };
  result.stats.cx_added = count(result.circuit, GateKind::CX) - count(circuit, GateKind::CX);
  result.stats.h_added = count(result.circuit, GateKind::H) - count(circuit, GateKind::H);
  return result;
}

EquivalenceReport verify_equivalence(const Circuit& original, const Circuit& routed,
                                     const std::vector<int>& slot_of_phys, double tol) {
  int n = routed.num_qubits();
  if (n > 10) {
    throw std::invalid_argument("equivalence check limited to 10 qubits, got " +
                                std::to_string(n));
  }
  if (original.num_qubits() > n) {
    throw std::invalid_argument("routed circuit has fewer qubits than the original");
  }
  if (static_cast<int>(slot_of_phys.size()) != n) {
    throw std::invalid_argument("layout size does not match routed circuit");
  }

  auto strip = [](const Circuit& c, int width) {
    Circuit bare(width, c.num_clbits());
    for (const Gate& gate : c.gates()) {
      if (gate.kind != GateKind::Measure) bare.append(gate);
    }
    return bare;
  };

  Matrix u_orig = unitary_of(strip(original, n));  // embedded: extra qubits idle
  Matrix u_routed = unitary_of(strip(routed, n));

  std::size_t dim = std::size_t{1} << n;
  // P moves the amplitude of |x> (qubits in their starting slots) to the
  // basis state where physical p carries slot slot_of_phys[p].
  auto permute_index = [&](std::size_t x) {
    std::size_t y = 0;
    for (int p = 0; p < n; ++p) {
      std::size_t bit = (x >> slot_of_phys[p]) & 1u;
      y |= bit << p;
    }
    return y;
  };

  // Compare U_routed against P * U_orig without materializing P.
  Matrix expected(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      expected.at(permute_index(row), col) = u_orig.at(row, col);
    }
  }

  // Global phase from the largest-magnitude entry of expected.
  std::size_t best_r = 0, best_c = 0;
  double best_mag = -1.0;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      double mag = std::abs(expected.at(r, c));
      if (mag > best_mag) {
        best_mag = mag;
        best_r = r;
        best_c = c;
      }
    }
  }
  EquivalenceReport report;
  if (best_mag <= 0.0) {
    report.equivalent = false;
    report.max_deviation = 1.0;
    return report;
  }
  cdouble ratio = u_routed.at(best_r, best_c) / expected.at(best_r, best_c);
  double phase = std::arg(ratio);
  cdouble rot = std::exp(cdouble(0.0, phase));
  Matrix rotated(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      rotated.at(r, c) = rot * expected.at(r, c);
    }
  }
  report.global_phase = phase;
  report.max_deviation = u_routed.max_abs_diff(rotated);
  report.equivalent = report.max_deviation <= tol;
  return report;
}

}  // namespace qbench
