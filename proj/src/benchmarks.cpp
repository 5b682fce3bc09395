#include "qbench/benchmarks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "qbench/matrix.hpp"
#include "qbench/statevector.hpp"
#include "qbench/transpile.hpp"

namespace qbench {

namespace {

std::string basis_key(std::uint64_t index, int width) {
  std::string key(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    if ((index >> i) & 1u) key[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  return key;
}

void prune_zeros(std::map<std::string, double>& dist) {
  for (auto it = dist.begin(); it != dist.end();) {
    it = (it->second < 1e-15) ? dist.erase(it) : std::next(it);
  }
}

std::string grid_name(int k1, int k2) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "t1k%02d_t2k%02d", k1, k2);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------- singlet

Circuit gen_singlet_circuit(double theta1, double theta2) {
  Circuit c(2, 2, "singlet");
  c.x(0).x(1).h(0).cx(0, 1);
  // Basis change: each qubit is read along (0, -sin(theta), cos(theta)).
  c.h(0).u1(-theta1, 0).h(0);
  c.h(1).u1(-theta2, 1).h(1);
  c.barrier({0, 1});
  c.measure(0, 0).measure(1, 1);
  return c;
}

double singlet_theory_correlator(double theta1, double theta2) {
  return -std::cos(theta1 - theta2);
}

BenchmarkCase gen_singlet(double theta1, double theta2) {
  BenchmarkCase bc;
  bc.suite = "singlet";
  bc.circuit = gen_singlet_circuit(theta1, theta2);
  double c = std::cos(theta1 - theta2);
  bc.oracle = {
      {"00", (1 - c) / 4},
      {"01", (1 + c) / 4},
      {"10", (1 + c) / 4},
      {"11", (1 - c) / 4},
  };
  prune_zeros(bc.oracle);
  bc.params = {{"theta1", theta1}, {"theta2", theta2}};
  char buf[96];
  std::snprintf(buf, sizeof buf, "t1_%.4f_t2_%.4f", theta1, theta2);
  for (char* p = buf; *p; ++p) {
    if (*p == '.') *p = 'p';
    if (*p == '-') *p = 'm';
  }
  bc.name = buf;
  std::snprintf(buf, sizeof buf, "singlet pair read out at theta1=%.6f, theta2=%.6f", theta1,
                theta2);
  bc.note = buf;
  return bc;
}

CorrelatorSet singlet_correlators(const CountsTable& counts) {
  counts.validate();
  if (counts.key_width() != 2) {
    throw std::invalid_argument("correlators need two measured bits");
  }
  double n = static_cast<double>(counts.shots);
  auto freq = [&](const char* key) {
    auto it = counts.counts.find(key);
    return it == counts.counts.end() ? 0.0 : static_cast<double>(it->second) / n;
  };
  CorrelatorSet out;
  out.f00 = freq("00");
  out.f01 = freq("01");
  out.f10 = freq("10");
  out.f11 = freq("11");
  out.F1 = out.f00 - out.f01 + out.f10 - out.f11;
  out.F2 = out.f00 + out.f01 - out.f10 - out.f11;
  out.F = out.f00 - out.f01 - out.f10 + out.f11;
  return out;
}

std::vector<BenchmarkCase> singlet_suite() {
  std::vector<BenchmarkCase> cases;
  const double step = M_PI / 8;
  for (int k = 0; k <= 16; ++k) {  // theta1 fixed at 0
    BenchmarkCase bc = gen_singlet(0.0, k * step);
    bc.name = grid_name(0, k);
    cases.push_back(std::move(bc));
  }
  for (int k = 1; k <= 16; ++k) {  // theta1 = theta2 sweep; k=0 already above
    BenchmarkCase bc = gen_singlet(k * step, k * step);
    bc.name = grid_name(k, k);
    cases.push_back(std::move(bc));
  }
  return cases;
}

// ------------------------------------------------------------------ adder

int adder_sum(int a, int b) {
  if (a < 0 || a > 3 || b < 0 || b > 3) {
    throw std::invalid_argument("adder inputs must be 2-bit integers");
  }
  return (a + b) % 4;
}

Circuit gen_adder_circuit(const AdderInputs& in) {
  (void)adder_sum(in.a, in.b);  // range check
  Circuit c(4, 4, "adder");
  // A register, low bit on q0.
  if (in.superpose_a0) {
    c.h(0);
  } else if (in.a & 1) {
    c.x(0);
  }
  if (in.superpose_a1) {
    c.h(1);
  } else if (in.a & 2) {
    c.x(1);
  }
  // B register, low bit on q2.
  if (in.pair_b) {
    if (in.superpose_b0 || in.superpose_b1) {
      throw std::invalid_argument("pair_b excludes per-qubit B superposition");
    }
    c.h(2).cx(2, 3);  // (|00> + |11>)/sqrt(2), then shift by b
    if (in.b & 1) c.x(2);
    if (in.b & 2) c.x(3);
  } else {
    if (in.superpose_b0) {
      c.h(2);
    } else if (in.b & 1) {
      c.x(2);
    }
    if (in.superpose_b1) {
      c.h(3);
    } else if (in.b & 2) {
      c.x(3);
    }
  }
  c.barrier({0, 1, 2, 3});
  // Fourier transform of B (no terminal swap; the phases below match).
  c.h(3);
  emit_cu1(c, M_PI / 2, 2, 3);
  c.h(2);
  // Phase additions from A.
  emit_cu1(c, M_PI, 0, 2);
  emit_cu1(c, M_PI / 2, 0, 3);
  emit_cu1(c, M_PI, 1, 3);
  // Inverse transform.
  c.h(2);
  emit_cu1(c, -M_PI / 2, 2, 3);
  c.h(3);
  c.barrier({0, 1, 2, 3});
  for (int q = 0; q < 4; ++q) c.measure(q, q);
  return c;
}

std::vector<int> adder_display_order() { return {3, 2, 0, 1}; }

BenchmarkCase gen_adder(const AdderInputs& in) {
  BenchmarkCase bc;
  bc.suite = "adder";
  bc.circuit = gen_adder_circuit(in);
  bc.display_order = adder_display_order();

  auto bit_choices = [](bool superposed, int fixed_bit) {
    return superposed ? std::vector<int>{0, 1} : std::vector<int>{fixed_bit};
  };
  std::vector<int> a_values;
  for (int high : bit_choices(in.superpose_a1, (in.a >> 1) & 1)) {
    for (int low : bit_choices(in.superpose_a0, in.a & 1)) {
      a_values.push_back(low | (high << 1));
    }
  }
  std::vector<int> b_values;
  if (in.pair_b) {
    b_values = {in.b, in.b ^ 3};
  } else {
    for (int high : bit_choices(in.superpose_b1, (in.b >> 1) & 1)) {
      for (int low : bit_choices(in.superpose_b0, in.b & 1)) {
        b_values.push_back(low | (high << 1));
      }
    }
  }
  double p = 1.0 / (static_cast<double>(a_values.size()) * static_cast<double>(b_values.size()));
  for (int av : a_values) {
    for (int bv : b_values) {
      int outcome = av | (adder_sum(av, bv) << 2);
      bc.oracle[basis_key(static_cast<std::uint64_t>(outcome), 4)] += p;
    }
  }
  bc.params = {{"a", static_cast<double>(in.a)}, {"b", static_cast<double>(in.b)}};
  char buf[48];
  std::snprintf(buf, sizeof buf, "add_%d_%d%s%s%s%s%s", in.a, in.b,
                in.superpose_a0 ? "_ha0" : "", in.superpose_a1 ? "_ha1" : "",
                in.superpose_b0 ? "_hb0" : "", in.superpose_b1 ? "_hb1" : "",
                in.pair_b ? "_bpair" : "");
  bc.name = buf;
  return bc;
}

std::vector<BenchmarkCase> adder_suite() {
  std::vector<BenchmarkCase> cases;
  char buf[32];
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      BenchmarkCase bc = gen_adder({.a = a, .b = b});
      std::snprintf(buf, sizeof buf, "add_%d_%d", a, b);
      bc.name = buf;
      std::snprintf(buf, sizeof buf, "%d + %d = %d", a, b, adder_sum(a, b));
      bc.note = buf;
      cases.push_back(std::move(bc));
    }
  }
  {
    BenchmarkCase bc = gen_adder({.a = 0, .b = 0, .superpose_a0 = true});
    bc.name = "sup_a01_b0";
    bc.note = "A in (|0>+|1>)/sqrt2, B = 0";
    cases.push_back(std::move(bc));
  }
  {
    BenchmarkCase bc = gen_adder({.a = 1, .b = 0, .pair_b = true});
    bc.name = "sup_a1_bpair";
    bc.note = "A = 1, B in (|0>+|3>)/sqrt2";
    cases.push_back(std::move(bc));
  }
  {
    BenchmarkCase bc = gen_adder({.a = 1, .b = 0, .superpose_a1 = true, .pair_b = true});
    bc.name = "sup_a13_bpair";
    bc.note = "A in (|1>+|3>)/sqrt2, B in (|0>+|3>)/sqrt2";
    cases.push_back(std::move(bc));
  }
  return cases;
}

// ------------------------------------------------------- identity sequences

Circuit gen_identity_circuit(const IdentityDescriptor& desc) {
  if (desc.num_qubits < 1) throw std::invalid_argument("descriptor without qubits");
  if (desc.measured.empty()) throw std::invalid_argument("descriptor measures nothing");
  for (const auto& block : desc.blocks) {
    if (block.power % 2 != 0 || block.power < 0) {
      throw std::invalid_argument("identity block needs an even repeat count");
    }
  }

  // The sequence must leave every computational-basis outcome unchanged:
  // exactly the identity when undressed, phase-only otherwise.
  Circuit body(desc.num_qubits, 1);
  for (const Gate& g : desc.pre_dressing) body.append(g);
  for (const auto& block : desc.blocks) {
    for (int rep = 0; rep < block.power; ++rep) {
      for (const auto& [control, target] : block.cxs) body.cx(control, target);
    }
  }
  for (const Gate& g : desc.post_dressing) body.append(g);
  Matrix u = unitary_of(body);
  bool dressed = !desc.pre_dressing.empty() || !desc.post_dressing.empty();
  if (!dressed && u.max_abs_diff(Matrix::identity(u.dim())) > 1e-10) {
    throw std::logic_error("sequence '" + desc.name + "' is not the identity");
  }
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t col = 0; col < u.dim(); ++col) {
      double mag = std::abs(u.at(r, col));
      bool bad = (r == col) ? std::abs(mag - 1.0) > 1e-10 : mag > 1e-10;
      if (bad) {
        throw std::logic_error("sequence '" + desc.name + "' is not outcome-preserving");
      }
    }
  }

  Circuit c(desc.num_qubits, static_cast<int>(desc.measured.size()), desc.name);
  for (int q : desc.input_ones) c.x(q);
  for (const Gate& g : desc.pre_dressing) c.append(g);
  for (const auto& block : desc.blocks) {
    for (int rep = 0; rep < block.power; ++rep) {
      for (const auto& [control, target] : block.cxs) c.cx(control, target);
    }
  }
  for (const Gate& g : desc.post_dressing) c.append(g);
  c.barrier(desc.measured);
  for (std::size_t i = 0; i < desc.measured.size(); ++i) {
    c.measure(desc.measured[i], static_cast<int>(i));
  }
  return c;
}

BenchmarkCase gen_identity_sequence(const IdentityDescriptor& desc) {
  BenchmarkCase bc;
  bc.suite = "identity";
  bc.name = desc.name;
  bc.circuit = gen_identity_circuit(desc);

  int width = static_cast<int>(desc.measured.size());
  std::string key(static_cast<std::size_t>(width), '0');
  for (int i = 0; i < width; ++i) {
    bool one = std::find(desc.input_ones.begin(), desc.input_ones.end(), desc.measured[i]) !=
               desc.input_ones.end();
    if (one) key[static_cast<std::size_t>(width - 1 - i)] = '1';
  }
  bc.oracle = {{key, 1.0}};
  return bc;
}

std::vector<IdentityDescriptor> identity_descriptors() {
  std::vector<IdentityDescriptor> out;
  {
    IdentityDescriptor d;
    d.name = "c01_pow8";
    d.num_qubits = 2;
    d.measured = {0, 1};
    d.blocks = {{{{0, 1}}, 8}};
    out.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.name = "c34_pow8_zeros";
    d.num_qubits = 5;
    d.measured = {3, 4};
    d.blocks = {{{{3, 4}}, 8}};
    out.push_back(std::move(d));
  }
  {
    IdentityDescriptor d;
    d.name = "c34_pow8_q3";
    d.num_qubits = 5;
    d.input_ones = {3};
    d.measured = {3, 4};
    d.blocks = {{{{3, 4}}, 8}};
    out.push_back(std::move(d));
  }
  IdentityDescriptor mixed;
  mixed.name = "cx_blocks_111";
  mixed.num_qubits = 3;
  mixed.input_ones = {0, 1, 2};
  mixed.measured = {0, 1, 2};
  mixed.blocks = {
      {{{0, 2}, {1, 2}}, 2},
      {{{0, 2}}, 2},
      {{{1, 2}}, 2},
      {{{0, 2}, {1, 2}}, 2},
  };
  out.push_back(mixed);
  {
    IdentityDescriptor d = mixed;
    d.name = "cx_blocks_dressed";
    d.pre_dressing = {Gate::h(0), Gate::h(1), Gate::x(0), Gate::x(1)};
    d.post_dressing = {Gate::h(0), Gate::h(1)};
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<BenchmarkCase> identity_suite() {
  std::vector<BenchmarkCase> cases;
  for (const IdentityDescriptor& desc : identity_descriptors()) {
    cases.push_back(gen_identity_sequence(desc));
  }
  return cases;
}

// ------------------------------------------------- distance-2 surface code

CodewordTable surface_codewords() {
  return {{"00000", "01111", "10110", "11001"}, {"00011", "01100", "10101", "11010"}};
}

Circuit surface_encoder() {
  Circuit c(5, 5, "surface_encoder");
  c.cx(2, 0).cx(2, 1).cx(0, 2);
  c.h(3).h(4);
  c.cx(3, 0).cx(3, 1).cx(3, 2);
  c.cx(4, 1).cx(4, 2);
  return c;
}

namespace {

void check_k(int k) {
  if (k < 0 || k > 8) throw std::invalid_argument("K must be between 0 and 8");
}

double p_zero_after_t(int k) {
  double c = std::cos(M_PI * k / 8);
  return c * c;
}

}  // namespace

BenchmarkCase gen_surface_code_case(int k, CodeVariant variant) {
  check_k(k);
  BenchmarkCase bc;
  bc.suite = "surface";
  CodewordTable table = surface_codewords();
  Circuit c(5, 5);
  char buf[96];
  if (variant == CodeVariant::PreEncodeT) {
    c.h(2);
    for (int i = 0; i < k; ++i) c.t(2);
    c.h(2);
    c = concat(c, surface_encoder());
    double p0 = p_zero_after_t(k);
    for (const std::string& key : table.logical0) bc.oracle[key] = p0 / 4;
    for (const std::string& key : table.logical1) bc.oracle[key] = (1 - p0) / 4;
    prune_zeros(bc.oracle);
    std::snprintf(buf, sizeof buf, "enc_t%d", k);
    bc.name = buf;
    std::snprintf(buf, sizeof buf, "H T^%d H on the data qubit, then encode", k);
    bc.note = buf;
  } else {
    c = concat(c, surface_encoder());
    for (int i = 0; i < k; ++i) c.x(0).x(1);  // logical X
    const auto& keys = (k % 2 == 0) ? table.logical0 : table.logical1;
    for (const std::string& key : keys) bc.oracle[key] = 0.25;
    std::snprintf(buf, sizeof buf, "enc_x%d", k);
    bc.name = buf;
    std::snprintf(buf, sizeof buf, "encode, then %d logical X gates", k);
    bc.note = buf;
  }
  c.barrier({0, 1, 2, 3, 4});
  for (int q = 0; q < 5; ++q) c.measure(q, q);
  c.set_name(bc.name);
  bc.circuit = std::move(c);
  bc.params = {{"k", static_cast<double>(k)}};
  return bc;
}

BenchmarkCase gen_single_qubit_reference(int k, CodeVariant variant) {
  check_k(k);
  BenchmarkCase bc;
  bc.suite = "surface";
  Circuit c(1, 1);
  char buf[64];
  if (variant == CodeVariant::PreEncodeT) {
    c.h(0);
    for (int i = 0; i < k; ++i) c.t(0);
    c.h(0);
    double p0 = p_zero_after_t(k);
    bc.oracle = {{"0", p0}, {"1", 1 - p0}};
    prune_zeros(bc.oracle);
    std::snprintf(buf, sizeof buf, "ref_t%d", k);
  } else {
    for (int i = 0; i < k; ++i) c.x(0);
    bc.oracle = {{k % 2 == 0 ? "0" : "1", 1.0}};
    std::snprintf(buf, sizeof buf, "ref_x%d", k);
  }
  bc.name = buf;
  c.measure(0, 0);
  c.set_name(bc.name);
  bc.circuit = std::move(c);
  bc.params = {{"k", static_cast<double>(k)}};
  bc.note = "bare-qubit baseline without encoding";
  return bc;
}

std::vector<BenchmarkCase> surface_suite() {
  std::vector<BenchmarkCase> cases;
  for (int k = 0; k <= 8; ++k) cases.push_back(gen_surface_code_case(k, CodeVariant::PreEncodeT));
  for (int k = 0; k <= 8; ++k) cases.push_back(gen_surface_code_case(k, CodeVariant::LogicalX));
  for (int k = 0; k <= 8; ++k) {
    cases.push_back(gen_single_qubit_reference(k, CodeVariant::PreEncodeT));
  }
  for (int k = 0; k <= 8; ++k) {
    cases.push_back(gen_single_qubit_reference(k, CodeVariant::LogicalX));
  }
  return cases;
}

PostselectResult postselect(const CountsTable& counts, const CodewordTable& table) {
  counts.validate();
  PostselectResult out;
  std::uint64_t in0 = 0, in1 = 0;
  std::set<std::string> set0(table.logical0.begin(), table.logical0.end());
  std::set<std::string> set1(table.logical1.begin(), table.logical1.end());
  for (const auto& [key, count] : counts.counts) {
    if (set0.count(key)) in0 += count;
    if (set1.count(key)) in1 += count;
  }
  out.retained_shots = in0 + in1;
  if (out.retained_shots == 0) {
    out.inconclusive = true;
    return out;
  }
  double retained = static_cast<double>(out.retained_shots);
  out.f_logical0 = static_cast<double>(in0) / retained;
  out.f_logical1 = static_cast<double>(in1) / retained;
  out.retained_fraction = retained / static_cast<double>(counts.shots);
  return out;
}

// --------------------------------------------------- [[5,1,3]] perfect code

std::map<std::string, int> code513_amplitude_signs(int q2_value) {
  if (q2_value == 0) {
    return {
        {"00000", +1}, {"00011", -1}, {"00101", +1}, {"00110", -1},
        {"01001", +1}, {"01010", +1}, {"01100", -1}, {"01111", -1},
        {"10001", -1}, {"10010", +1}, {"10100", +1}, {"10111", -1},
        {"11000", -1}, {"11011", -1}, {"11101", -1}, {"11110", -1},
    };
  }
  if (q2_value == 1) {
    return {
        {"00001", -1}, {"00010", -1}, {"00100", -1}, {"00111", -1},
        {"01000", -1}, {"01011", +1}, {"01101", +1}, {"01110", -1},
        {"10000", -1}, {"10011", -1}, {"10101", +1}, {"10110", +1},
        {"11001", -1}, {"11010", +1}, {"11100", -1}, {"11111", +1},
    };
  }
  throw std::invalid_argument("q2_value must be 0 or 1");
}

Circuit code513_encoder() {
  // Stabilizer-layer construction; controlled-Z/Y expanded so only native
  // gates remain.  Verified against the signed codeword tables.
  Circuit c(5, 5, "code513_encoder");
  c.z(2);
  c.h(4);
  emit_cz(c, 4, 0);
  emit_cz(c, 4, 1);
  c.cx(4, 2);
  c.h(3).s(3);
  emit_cz(c, 3, 1);
  emit_cy(c, 3, 2);
  emit_cz(c, 3, 4);
  c.h(1).s(1);
  emit_cz(c, 1, 0);
  emit_cy(c, 1, 2);
  emit_cz(c, 1, 3);
  c.h(0);
  c.cx(0, 2);
  emit_cz(c, 0, 3);
  emit_cz(c, 0, 4);
  return c;
}

BenchmarkCase gen_513_encoder(int q2_value) {
  std::map<std::string, int> signs = code513_amplitude_signs(q2_value);
  BenchmarkCase bc;
  bc.suite = "code513";
  bc.name = q2_value ? "encode_q2_1" : "encode_q2_0";
  Circuit c(5, 5, bc.name);
  if (q2_value) c.x(2);
  c = concat(c, code513_encoder());
  c.set_name(bc.name);
  c.barrier({0, 1, 2, 3, 4});
  for (int q = 0; q < 5; ++q) c.measure(q, q);
  bc.circuit = std::move(c);
  for (const auto& [key, sign] : signs) {
    bc.oracle[key] = 1.0 / 16.0;
    (void)sign;
  }
  bc.amplitude_signs = std::move(signs);
  bc.params = {{"q2", static_cast<double>(q2_value)}};
  bc.note = "five-qubit perfect code encoder";
  return bc;
}

std::vector<BenchmarkCase> code513_suite() {
  return {gen_513_encoder(0), gen_513_encoder(1)};
}

// ------------------------------------------------------------------ suites

std::vector<std::string> suite_names() {
  return {"singlet", "adder", "identity", "surface", "code513"};
}

std::vector<BenchmarkCase> suite_by_name(const std::string& suite) {
  if (suite == "singlet") return singlet_suite();
  if (suite == "adder") return adder_suite();
  if (suite == "identity") return identity_suite();
  if (suite == "surface") return surface_suite();
  if (suite == "code513") return code513_suite();
  if (suite == "all") {
    std::vector<BenchmarkCase> cases;
    for (const std::string& name : suite_names()) {
      std::vector<BenchmarkCase> sub = suite_by_name(name);
      cases.insert(cases.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
    }
    return cases;
  }
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace qbench
