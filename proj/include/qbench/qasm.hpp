#pragma once

#include <stdexcept>
#include <string>

#include "qbench/circuit.hpp"

namespace qbench::qasm {

struct SourceSpan {
  int line = 0;  // 1-based
  int col = 0;   // 1-based
};

enum class ErrorKind {
  UnknownGate,
  UndeclaredRegister,
  IndexOutOfRange,
  BadAngleExpr,
  Syntax,
};

const char* error_kind_name(ErrorKind kind);

// Parsing stops at the first error; the exception pinpoints it.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, ErrorKind kind, const std::string& message);
  SourceSpan span;
  ErrorKind kind;
};

// Dialect: optional "OPENQASM 2.0;" and include lines, exactly one qreg and
// one creg, then statements over {x,y,z,h,s,sdg,t,tdg,u1(angle),cx,barrier,
// measure}.  Angles are decimal literals or pi fractions k*pi/n with an
// optional leading minus; pi fractions evaluate exactly as k*pi/n.
Circuit parse(const std::string& text);

// Canonical form: LF line endings, registers named q and c, angles rendered
// as the shortest exact form.  parse(serialize(c)) == c for any circuit.
std::string serialize(const Circuit& circuit);

// Shortest of {k*pi/n with n <= 16, decimal} that re-parses to the same
// double; decimals start at 12 significant digits and widen only if needed.
std::string render_angle(double lambda);

}  // namespace qbench::qasm
