#include "qbench/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qbench/rng.hpp"
#include "qbench/statevector.hpp"

namespace qbench {

namespace {

struct MeasureMap {
  std::vector<std::pair<int, int>> qubit_to_clbit;  // in gate order
  int num_clbits;
};

MeasureMap measure_map(const Circuit& circuit) {
  MeasureMap m{{}, circuit.num_clbits()};
  for (const Gate& g : circuit.gates())
    if (g.kind == GateKind::Measure) m.qubit_to_clbit.emplace_back(g.qubits[0], g.clbit);
  if (m.qubit_to_clbit.empty())
    throw std::invalid_argument("circuit has no measurements");
  return m;
}

std::string outcome_key(std::uint64_t basis_index, const MeasureMap& m) {
  std::string key(static_cast<std::size_t>(m.num_clbits), '0');
  for (const auto& [q, c] : m.qubit_to_clbit) {
    if ((basis_index >> q) & 1) key[static_cast<std::size_t>(m.num_clbits - 1 - c)] = '1';
  }
  return key;
}

std::map<std::string, double> distribution_of(const StateVector& sv, const MeasureMap& m) {
  std::map<std::string, double> dist;
  const auto& amps = sv.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p > 0.0) dist[outcome_key(i, m)] += p;
  }
  // Rounding crumbs from irrational gate phases are not outcomes.  The
  // cut sits far below both shot noise and the 1e-10 checks upstream.
  for (auto it = dist.begin(); it != dist.end();) {
    if (it->second <= 1e-24) {
      it = dist.erase(it);
    } else {
      ++it;
    }
  }
  return dist;
}

struct Cdf {
  std::vector<double> edges;
  std::vector<const std::string*> keys;
};

Cdf build_cdf(const std::map<std::string, double>& dist) {
  Cdf cdf;
  cdf.edges.reserve(dist.size());
  cdf.keys.reserve(dist.size());
  double acc = 0.0;
  for (const auto& [key, p] : dist) {
    acc += p;
    cdf.edges.push_back(acc);
    cdf.keys.push_back(&key);
  }
  if (!cdf.edges.empty()) cdf.edges.back() = std::max(cdf.edges.back(), 1.0);
  return cdf;
}

const std::string& draw(const Cdf& cdf, double u) {
  auto it = std::upper_bound(cdf.edges.begin(), cdf.edges.end(), u);
  if (it == cdf.edges.end()) --it;
  return *cdf.keys[static_cast<std::size_t>(it - cdf.edges.begin())];
}

void inject_error(StateVector& sv, const Gate& gate, NoiseChannel channel, ShotRng& rng) {
  for (int q : gate.qubits) {
    if (channel == NoiseChannel::BitFlip) {
      sv.apply(Gate::x(q));
    } else {
      const double r = rng.next_double();
      if (r < 1.0 / 3.0)
        sv.apply(Gate::x(q));
      else if (r < 2.0 / 3.0)
        sv.apply(Gate::y(q));
      else
        sv.apply(Gate::z(q));
    }
  }
}

}  // namespace

std::map<std::string, double> run_exact(const Circuit& circuit) {
  const MeasureMap m = measure_map(circuit);
  StateVector sv(circuit.num_qubits());
  sv.apply_all(circuit);
  return distribution_of(sv, m);
}

CountsTable sample(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed) {
  const auto dist = run_exact(circuit);
  const Cdf cdf = build_cdf(dist);
  CountsTable table;
  table.backend = "ideal-sim";
  table.date = utc_timestamp_now();
  table.shots = shots;
  table.seed = seed;
  table.circuit_name = circuit.name();
  for (std::uint64_t s = 0; s < shots; ++s) {
    ShotRng rng(seed, /*stream=*/0, s);
    table.counts[draw(cdf, rng.next_double())]++;
  }
  return table;
}

CountsTable run_noisy(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                      const NoiseModel& noise) {
  if (noise.p_correct < 0.0 || noise.p_correct > 1.0)
    throw std::invalid_argument("p_correct must lie in [0, 1]");
  const MeasureMap m = measure_map(circuit);
  const auto ideal = run_exact(circuit);
  const Cdf ideal_cdf = build_cdf(ideal);

  CountsTable table;
  table.backend = "noisy-sim";
  table.date = utc_timestamp_now();
  table.shots = shots;
  table.seed = seed;
  table.circuit_name = circuit.name();

  const auto& gates = circuit.gates();
  for (std::uint64_t s = 0; s < shots; ++s) {
    // The measurement draw sits first in the stream, so a shot with no
    // failure reproduces the exact sample() outcome for the same seed.
    ShotRng rng(seed, /*stream=*/0, s);
    const double u_measure = rng.next_double();
    std::ptrdiff_t fail_at = -1;
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
      const GateKind kind = gates[gi].kind;
      if (kind == GateKind::Measure || kind == GateKind::Barrier) continue;
      if (rng.next_double() >= noise.p_correct) {
        fail_at = static_cast<std::ptrdiff_t>(gi);
        break;
      }
    }
    if (fail_at < 0) {
      table.counts[draw(ideal_cdf, u_measure)]++;
      continue;
    }
    StateVector sv(circuit.num_qubits());
    for (std::size_t gi = 0; gi < gates.size(); ++gi) {
      const Gate& g = gates[gi];
      if (g.kind == GateKind::Measure) continue;
      sv.apply(g);
      if (static_cast<std::ptrdiff_t>(gi) == fail_at)
        inject_error(sv, g, noise.channel, rng);
    }
    const auto dist = distribution_of(sv, m);
    table.counts[draw(build_cdf(dist), u_measure)]++;
  }
  return table;
}

}  // namespace qbench
