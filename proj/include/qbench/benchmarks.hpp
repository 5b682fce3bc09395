#pragma once

#include <map>
#include <string>
#include <vector>

#include "qbench/circuit.hpp"
#include "qbench/counts.hpp"

namespace qbench {

// One runnable benchmark: a measuring circuit plus the ideal outcome
// distribution it should produce.  `display_order` lists qubit indices
// leftmost-first for presentation (empty = natural register order, highest
// clbit leftmost).  Cases with exact-amplitude expectations also carry the
// codeword signs (amplitudes are sign/4 at the listed keys, zero elsewhere).
struct BenchmarkCase {
  std::string suite;
  std::string name;
  Circuit circuit{1, 0};
  std::map<std::string, double> oracle;
  std::vector<int> display_order;
  std::map<std::string, int> amplitude_signs;
  std::map<std::string, double> params;  // named generator inputs (thetas, K, ...)
  std::string note;
};

// ---------------------------------------------------------------- singlet

// Prepares (|01> - |10>)/sqrt(2) and measures each qubit along
// (0, -sin(theta), cos(theta)): X X H CX, then H U1(-theta) H per qubit.
Circuit gen_singlet_circuit(double theta1, double theta2);
BenchmarkCase gen_singlet(double theta1, double theta2);

double singlet_theory_correlator(double theta1, double theta2);  // -cos(t1-t2)

struct CorrelatorSet {
  double f00 = 0, f01 = 0, f10 = 0, f11 = 0;  // keys "q1 q0"
  double F1 = 0;  // (-1)^{q0} average: single-qubit asymmetry of qubit 0
  double F2 = 0;  // same for qubit 1
  double F = 0;   // (-1)^{q0+q1} average: the correlator
};
CorrelatorSet singlet_correlators(const CountsTable& counts);

// Both measured sweeps: theta1 = 0 with theta2 on the 17-point grid
// k*pi/8, and theta1 = theta2 on the same grid.
std::vector<BenchmarkCase> singlet_suite();

// ------------------------------------------------------------------ adder

// Two 2-bit registers A = (q0, q1), B = (q2, q3), low bits first; the sum
// lands in B via a Fourier-basis phase accumulation.  Each input qubit can
// be put in superposition instead of a fixed bit; `pair_b` prepares B as
// (|b> + |b XOR 3>)/sqrt(2), the two-state superposition used by the
// benchmark suite (not expressible with per-qubit flags).
struct AdderInputs {
  int a = 0;
  int b = 0;
  bool superpose_a0 = false;
  bool superpose_a1 = false;
  bool superpose_b0 = false;
  bool superpose_b1 = false;
  bool pair_b = false;
};

int adder_sum(int a, int b);  // (a + b) mod 4
Circuit gen_adder_circuit(const AdderInputs& in);
BenchmarkCase gen_adder(const AdderInputs& in);
std::vector<int> adder_display_order();  // {3, 2, 0, 1}

// 16 classical pairs plus the three superposition cases.
std::vector<BenchmarkCase> adder_suite();

// ------------------------------------------------------- identity sequences

// CX blocks raised to even powers compose to the identity; optional
// dressing gates wrap the blocks (chosen so the net map preserves
// computational-basis outcomes, which is verified at generation time).
struct IdentityDescriptor {
  std::string name;
  int num_qubits = 0;
  std::vector<int> input_ones;      // qubits X-prepared to |1>
  std::vector<int> measured;        // qubits measured, clbit order
  struct Block {
    std::vector<std::pair<int, int>> cxs;
    int power = 0;  // must be even
  };
  std::vector<Block> blocks;
  std::vector<Gate> pre_dressing;
  std::vector<Gate> post_dressing;
};

Circuit gen_identity_circuit(const IdentityDescriptor& desc);
BenchmarkCase gen_identity_sequence(const IdentityDescriptor& desc);

// The five documented sequences: (C01)^8 from zeros, (C34)^8 from zeros
// and from q3=1, the 12-CX mixed block run on |111>, and its H/X-dressed
// variant.
std::vector<IdentityDescriptor> identity_descriptors();
std::vector<BenchmarkCase> identity_suite();

// ------------------------------------------------- distance-2 surface code

struct CodewordTable {
  std::vector<std::string> logical0;
  std::vector<std::string> logical1;
};

CodewordTable surface_codewords();  // [[5,1,2]]: 4 strings per codeword

// Encoder mapping alpha|00000> + beta|00100> (data on q2) to
// alpha|0>_L + beta|1>_L.
Circuit surface_encoder();

enum class CodeVariant { PreEncodeT, LogicalX };

// PreEncodeT: H T^K H on the data qubit, then the encoder; P(|0>_L) =
// cos^2(pi K / 8).  LogicalX: encoder, then K logical-X patterns; the
// logical value is exactly K mod 2.
BenchmarkCase gen_surface_code_case(int k, CodeVariant variant);

// Same rotation on one bare qubit, no encoding: the unprotected baseline.
BenchmarkCase gen_single_qubit_reference(int k, CodeVariant variant);

std::vector<BenchmarkCase> surface_suite();  // K = 0..8, both variants + references

struct PostselectResult {
  double f_logical0 = 0.0;
  double f_logical1 = 0.0;
  double retained_fraction = 0.0;
  std::uint64_t retained_shots = 0;
  bool inconclusive = false;  // no shot landed inside the code space
};

// Drops outcomes outside the codeword table, renormalizes over the rest.
PostselectResult postselect(const CountsTable& counts, const CodewordTable& table);

// --------------------------------------------------- [[5,1,3]] perfect code

// Exact codeword amplitudes: sign[key]/4 on 16 five-bit keys.
std::map<std::string, int> code513_amplitude_signs(int q2_value);

// Encoder for |00 q2 00> -> |q2>_L over the CX + single-qubit gate set
// (controlled-Z/Y layers expanded through the rewrite rules).
Circuit code513_encoder();

BenchmarkCase gen_513_encoder(int q2_value);
std::vector<BenchmarkCase> code513_suite();  // q2 = 0 and 1

// ------------------------------------------------------------------ suites

// "singlet" | "adder" | "identity" | "surface" | "code513" | "all"
std::vector<BenchmarkCase> suite_by_name(const std::string& suite);
std::vector<std::string> suite_names();

}  // namespace qbench
