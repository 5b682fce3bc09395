#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qbench/counts.hpp"

namespace qbench {

// counts / N; the values sum to exactly 1 (last entry absorbs rounding).
std::map<std::string, double> rel_freqs(const CountsTable& counts);

// Worst-case standard error bound for a frequency from N shots.
double se_bound(std::uint64_t shots);  // 1 / sqrt(N)

// |f1 - f2| <= k * se_bound(shots)
bool equal_within(double f1, double f2, std::uint64_t shots, double k = 5.0);

enum class VerdictClass { Correct, Wrong, UnexpectedSuperposition, Inconclusive };

const char* verdict_class_name(VerdictClass cls);
const char* verdict_color(VerdictClass cls);  // green | red | magenta | gray

struct Verdict {
  VerdictClass cls = VerdictClass::Inconclusive;
  std::vector<std::pair<std::string, double>> top_states;  // descending frequency
  std::vector<std::string> expected;                       // oracle support
  double margin = 0.0;  // frequency gap at the oracle-size boundary
  double se = 0.0;
  double k_tie = 1.0;
};

// Classifies observed counts against the expected distribution's support.
// Unique expectation: Correct iff the top state matches; a top-two gap
// within k_tie standard errors is an unresolved superposition.  Multi-state
// expectation: Correct iff the |oracle| most frequent states are exactly
// the expected set.  k_tie defaults to 1: the benchmark tables treat a
// 0.013 gap at N=8192 as a decided outcome and a 0.001 gap as a tie.
Verdict classify(const CountsTable& counts, const std::map<std::string, double>& oracle,
                 double k_tie = 1.0);

struct StationarityReport {
  struct Run {
    std::string top_state;
    double frequency = 0.0;
    std::uint64_t shots = 0;
  };
  std::vector<Run> runs;
  bool same_top = false;
  double max_delta = 0.0;  // largest pairwise top-frequency gap
  double k_se = 5.0;
  double threshold = 0.0;  // k_se * se at the smallest N involved
  bool stationary = false;
};

// Stationary iff every run has the same top state and all pairwise
// top-frequency gaps stay within k_se standard errors (at the smaller N
// of each pair).
StationarityReport stationarity(const std::vector<CountsTable>& records, double k_se = 5.0);

// Probability that an m-gate sequence runs with no gate error.
double predict_success(double p_correct, int gate_count);  // p_correct^m

// Pure-state fit basis, in order: (|01>-|10>)/sqrt2, (|00>-|11>)/sqrt2,
// (|00>+|11>)/sqrt2, (|01>+|10>)/sqrt2.
struct FitPoint {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double F1 = 0.0;
  double F2 = 0.0;
  double F = 0.0;
};

struct PureStateFit {
  std::array<std::complex<double>, 4> coefficients{};  // unit norm, c[0] real >= 0
  double residual = 0.0;                               // sum of squared errors
  bool converged = false;
};

// Least-squares fit of a pure two-qubit state to measured correlators,
// each qubit read along (0, -sin(theta), cos(theta)).  Multi-start
// finite-difference descent; needs at least 4 points.
PureStateFit fit_pure_state(const std::vector<FitPoint>& data);

// Model correlators for a given coefficient vector (exposed for tests and
// forward generation of synthetic datasets).
void predict_correlators(const std::array<std::complex<double>, 4>& coefficients,
                         double theta1, double theta2, double& E1, double& E2, double& E);

}  // namespace qbench
