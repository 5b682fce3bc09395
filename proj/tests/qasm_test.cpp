#include "qbench/qasm.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <string>

#include "qbench/circuit.hpp"

using namespace qbench;
using qasm::ErrorKind;
using qasm::ParseError;

TEST(QasmParse, CanonicalProgram) {
  const char* text =
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[2];\n"
      "creg c[2];\n"
      "h q[0];\n"
      "cx q[0],q[1];\n"
      "measure q[0] -> c[0];\n"
      "measure q[1] -> c[1];\n";
  Circuit want(2, 2);
  want.h(0).cx(0, 1).measure(0, 0).measure(1, 1);
  EXPECT_EQ(qasm::parse(text), want);
}

TEST(QasmParse, HeaderIsOptionalAndRegistersMayComeInEitherOrder) {
  Circuit a = qasm::parse("qreg q[1]; creg c[1]; x q[0];");
  Circuit b = qasm::parse("creg c[1]; qreg q[1]; x q[0];");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.num_qubits(), 1);
}

TEST(QasmParse, AllGateSpellings) {
  Circuit c = qasm::parse(
      "qreg q[3]; creg c[3];"
      "x q[0]; y q[0]; z q[0]; h q[1]; s q[1]; sdg q[1]; t q[2]; tdg q[2];"
      "u1(0.25) q[0]; cx q[0],q[1]; barrier q[0],q[2]; barrier q;"
      "measure q[2] -> c[0];");
  EXPECT_EQ(c.count_kind(GateKind::Barrier), 2u);
  EXPECT_EQ(c.gates()[10].qubits, (std::vector<int>{0, 2}));
  EXPECT_EQ(c.gates()[11].qubits, (std::vector<int>{0, 1, 2}));  // whole register
  EXPECT_EQ(c.gates()[12].qubits, (std::vector<int>{2}));
  EXPECT_EQ(c.gates()[12].clbit, 0);
}

TEST(QasmParse, AngleExpressions) {
  Circuit c = qasm::parse(
      "qreg q[1]; creg c[1];"
      "u1(pi) q[0]; u1(-pi/2) q[0]; u1(3*pi/4) q[0]; u1(-15*pi/16) q[0];"
      "u1(0.5) q[0]; u1(-1.25e-3) q[0]; u1(2) q[0];");
  EXPECT_DOUBLE_EQ(c.gates()[0].lambda, M_PI);
  EXPECT_DOUBLE_EQ(c.gates()[1].lambda, -M_PI / 2);
  EXPECT_DOUBLE_EQ(c.gates()[2].lambda, 3 * M_PI / 4);
  EXPECT_DOUBLE_EQ(c.gates()[3].lambda, -15 * M_PI / 16);
  EXPECT_DOUBLE_EQ(c.gates()[4].lambda, 0.5);
  EXPECT_DOUBLE_EQ(c.gates()[5].lambda, -1.25e-3);
  EXPECT_DOUBLE_EQ(c.gates()[6].lambda, 2.0);
}

TEST(QasmParse, CommentsAndWhitespace) {
  Circuit c = qasm::parse(
      "// leading comment\n"
      "qreg q[1];  // trailing\n"
      "creg c[1];\n\n"
      "   x   q [ 0 ] ;\n");
  EXPECT_EQ(c.count_kind(GateKind::X), 1u);
}

namespace {
ParseError capture(const std::string& text) {
  try {
    qasm::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  throw std::logic_error("expected a parse error");
}
}  // namespace

TEST(QasmErrors, UnknownGate) {
  ParseError e = capture("qreg q[1]; creg c[1];\nfoo q[0];");
  EXPECT_EQ(e.kind, ErrorKind::UnknownGate);
  EXPECT_EQ(e.span.line, 2);
  EXPECT_EQ(e.span.col, 1);
}

TEST(QasmErrors, UndeclaredRegister) {
  ParseError e = capture("qreg q[1]; creg c[1]; x r[0];");
  EXPECT_EQ(e.kind, ErrorKind::UndeclaredRegister);
  ParseError m = capture("qreg q[1]; creg c[1]; measure q[0] -> d[0];");
  EXPECT_EQ(m.kind, ErrorKind::UndeclaredRegister);
}

TEST(QasmErrors, IndexOutOfRange) {
  ParseError e = capture("qreg q[2]; creg c[2];\nx q[2];");
  EXPECT_EQ(e.kind, ErrorKind::IndexOutOfRange);
  EXPECT_EQ(e.span.line, 2);
  ParseError m = capture("qreg q[2]; creg c[1]; measure q[0] -> c[1];");
  EXPECT_EQ(m.kind, ErrorKind::IndexOutOfRange);
}

TEST(QasmErrors, BadAngle) {
  EXPECT_EQ(capture("qreg q[1]; creg c[1]; u1(pi/0) q[0];").kind, ErrorKind::BadAngleExpr);
  EXPECT_EQ(capture("qreg q[1]; creg c[1]; u1(1.5*pi/2) q[0];").kind,
            ErrorKind::BadAngleExpr);
  EXPECT_EQ(capture("qreg q[1]; creg c[1]; u1(banana) q[0];").kind, ErrorKind::BadAngleExpr);
}

TEST(QasmErrors, StructuralProblems) {
  EXPECT_EQ(capture("x q[0];").kind, ErrorKind::Syntax);  // statement before registers
  EXPECT_EQ(capture("qreg q[1]; qreg r[1]; creg c[1];").kind, ErrorKind::Syntax);
  EXPECT_EQ(capture("qreg q[1]; creg c[1]; x q[0]").kind, ErrorKind::Syntax);  // missing ;
  EXPECT_EQ(capture("qreg q[1]; creg c[1]; measure q[0] c[0];").kind, ErrorKind::Syntax);
  EXPECT_EQ(capture("qreg q[0]; creg c[1];").kind, ErrorKind::Syntax);  // empty register
}

TEST(QasmErrors, MessageCarriesPosition) {
  ParseError e = capture("qreg q[1]; creg c[1];\n\nbork q[0];");
  std::string msg = e.what();
  EXPECT_NE(msg.find("line 3"), std::string::npos);
  EXPECT_NE(msg.find("UnknownGate"), std::string::npos);
}

TEST(QasmSerialize, CanonicalHeaderAndAngles) {
  Circuit c(2, 2);
  c.u1(M_PI / 2, 0).u1(-3 * M_PI / 4, 1).u1(0.5, 0).cx(0, 1).barrier({0, 1}).measure(1, 0);
  std::string text = qasm::serialize(c);
  EXPECT_NE(text.find("OPENQASM 2.0;\n"), std::string::npos);
  EXPECT_NE(text.find("include \"qelib1.inc\";\n"), std::string::npos);
  EXPECT_NE(text.find("u1(pi/2) q[0];"), std::string::npos);
  EXPECT_NE(text.find("u1(-3*pi/4) q[1];"), std::string::npos);
  EXPECT_NE(text.find("u1(0.5) q[0];"), std::string::npos);
  EXPECT_NE(text.find("barrier q[0],q[1];"), std::string::npos);
  EXPECT_NE(text.find("measure q[1] -> c[0];"), std::string::npos);
  EXPECT_EQ(qasm::parse(text), c);
}

// Round-trip property: parse(serialize(c)) == c over generated circuits,
// including awkward angles that have no short decimal form.
TEST(QasmRoundTrip, ThousandRandomCircuits) {
  std::mt19937 gen(20170116);
  std::uniform_int_distribution<int> nq(1, 6);
  std::uniform_int_distribution<int> ngates(0, 30);
  std::uniform_int_distribution<int> kind(0, 11);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  std::uniform_int_distribution<int> pik(-32, 32);
  std::uniform_int_distribution<int> pin(1, 16);
  std::uniform_int_distribution<int> coin(0, 1);

  for (int trial = 0; trial < 1000; ++trial) {
    int n = nq(gen);
    Circuit c(n, n);
    std::uniform_int_distribution<int> qubit(0, n - 1);
    int body = ngates(gen);
    for (int i = 0; i < body; ++i) {
      int q = qubit(gen);
      switch (kind(gen)) {
        case 0: c.x(q); break;
        case 1: c.y(q); break;
        case 2: c.z(q); break;
        case 3: c.h(q); break;
        case 4: c.s(q); break;
        case 5: c.sdg(q); break;
        case 6: c.t(q); break;
        case 7: c.tdg(q); break;
        case 8:
          c.u1(coin(gen) ? angle(gen) : pik(gen) * M_PI / pin(gen), q);
          break;
        case 9: {
          if (n < 2) break;
          int t = qubit(gen);
          if (t != q) c.cx(q, t);
          break;
        }
        case 10: {
          std::vector<int> qs;
          for (int b = 0; b < n; ++b)
            if (coin(gen)) qs.push_back(b);
          if (!qs.empty()) c.barrier(qs);
          break;
        }
        default: c.u1(std::ldexp(angle(gen), -coin(gen)), q); break;
      }
    }
    for (int q = 0; q < n; ++q)
      if (coin(gen)) c.measure(q, q);
    Circuit back = qasm::parse(qasm::serialize(c));
    ASSERT_EQ(back, c) << "trial " << trial << "\n" << qasm::serialize(c);
  }
}

// A device-style singlet listing: prepare (|01>-|10>)/sqrt2, rotate each
// qubit's readout basis, measure.  Census: 2 X, 5 H, 2 U1, 1 CX.
TEST(QasmRoundTrip, SingletListingCensus) {
  const char* listing =
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[5];\n"
      "creg c[5];\n"
      "x q[0];\n"
      "x q[1];\n"
      "h q[0];\n"
      "cx q[0],q[1];\n"
      "h q[0];\n"
      "u1(-pi/8) q[0];\n"
      "h q[0];\n"
      "h q[1];\n"
      "u1(-3*pi/8) q[1];\n"
      "h q[1];\n"
      "measure q[0] -> c[0];\n"
      "measure q[1] -> c[1];\n";
  Circuit c = qasm::parse(listing);
  EXPECT_EQ(c.count_kind(GateKind::X), 2u);
  EXPECT_EQ(c.count_kind(GateKind::H), 5u);
  EXPECT_EQ(c.count_kind(GateKind::U1), 2u);
  EXPECT_EQ(c.count_kind(GateKind::CX), 1u);
  EXPECT_EQ(qasm::parse(qasm::serialize(c)), c);
}

TEST(RenderAngle, ShortestExactForm) {
  EXPECT_EQ(qasm::render_angle(0.0), "0");
  EXPECT_EQ(qasm::render_angle(M_PI), "pi");
  EXPECT_EQ(qasm::render_angle(-M_PI), "-pi");
  EXPECT_EQ(qasm::render_angle(M_PI / 8), "pi/8");
  EXPECT_EQ(qasm::render_angle(-3 * M_PI / 4), "-3*pi/4");
  EXPECT_EQ(qasm::render_angle(2 * M_PI), "2*pi");
  EXPECT_EQ(qasm::render_angle(0.5), "0.5");
  // Every rendering must reparse to the identical double.
  for (double v : {1e-17, -0.1, 123.456, 6 * M_PI / 7, 1.0 / 3.0, 2.5e300}) {
    Circuit probe = qasm::parse("qreg q[1]; creg c[1]; u1(" + qasm::render_angle(v) +
                                ") q[0];");
    EXPECT_EQ(probe.gates()[0].lambda, v);
  }
}
