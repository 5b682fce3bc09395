#include "qbench/qasm.hpp"

#include <cassert>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace qbench::qasm {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownGate: return "UnknownGate";
    case ErrorKind::UndeclaredRegister: return "UndeclaredRegister";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadAngleExpr: return "BadAngleExpr";
    case ErrorKind::Syntax: return "Syntax";
  }
  return "Syntax";
}

namespace {

std::string format_message(SourceSpan span, ErrorKind kind, const std::string& message) {
  std::ostringstream os;
  os << "line " << span.line << ", col " << span.col << ": "
     << error_kind_name(kind) << ": " << message;
  return os.str();
}

}  // namespace

ParseError::ParseError(SourceSpan s, ErrorKind k, const std::string& message)
    : std::runtime_error(format_message(s, k, message)), span(s), kind(k) {}

namespace {

enum class TokKind { Ident, Number, String, Symbol, Arrow, End };

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    Token tok;
    tok.span = {line_, col_};
    if (pos_ >= text_.size()) {
      tok.kind = TokKind::End;
      return tok;
    }
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      tok.kind = TokKind::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        tok.text.push_back(text_[pos_]);
        advance();
      }
      return tok;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      tok.kind = TokKind::Number;
      bool seen_dot = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          tok.text.push_back(d);
          advance();
        } else if (d == '.' && !seen_dot) {
          seen_dot = true;
          tok.text.push_back(d);
          advance();
        } else if ((d == 'e' || d == 'E') && !tok.text.empty() &&
                   std::isdigit(static_cast<unsigned char>(tok.text.back()))) {
          size_t save = pos_;
          int save_line = line_, save_col = col_;
          std::string suffix(1, d);
          advance();
          if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
            suffix.push_back(text_[pos_]);
            advance();
          }
          if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
              suffix.push_back(text_[pos_]);
              advance();
            }
            tok.text += suffix;
          } else {
            pos_ = save;
            line_ = save_line;
            col_ = save_col;
            break;
          }
        } else {
          break;
        }
      }
      return tok;
    }
    if (c == '"') {
      tok.kind = TokKind::String;
      advance();
      while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
        tok.text.push_back(text_[pos_]);
        advance();
      }
      if (pos_ >= text_.size() || text_[pos_] != '"') {
        throw ParseError(tok.span, ErrorKind::Syntax, "unterminated string literal");
      }
      advance();
      return tok;
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok.kind = TokKind::Arrow;
      tok.text = "->";
      advance();
      advance();
      return tok;
    }
    static const std::string kSymbols = "[](),;*/-";
    if (kSymbols.find(c) != std::string::npos) {
      tok.kind = TokKind::Symbol;
      tok.text = std::string(1, c);
      advance();
      return tok;
    }
    throw ParseError(tok.span, ErrorKind::Syntax,
                     std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Mirrors the serializer: pi fractions evaluate as k*pi/n in this exact
// expression order so rendering and parsing agree bit for bit.
double eval_pi_fraction(long long k, long long n) {
  return static_cast<double>(k) * M_PI / static_cast<double>(n);
}

class Parser {
 public:
  explicit Parser(const std::string& text) : lexer_(text) { shift(); }

  Circuit parse() {
    parse_header();
    parse_declarations();
    Circuit circuit(qreg_size_, creg_size_);
    while (cur_.kind != TokKind::End) {
      parse_statement(circuit);
    }
    return circuit;
  }

 private:
  void shift() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(ErrorKind kind, const std::string& message) {
    throw ParseError(cur_.span, kind, message);
  }

  void expect_symbol(const std::string& sym) {
    if (cur_.kind != TokKind::Symbol || cur_.text != sym) {
      fail(ErrorKind::Syntax, "expected '" + sym + "'");
    }
    shift();
  }

  void expect_semicolon() { expect_symbol(";"); }

  long long expect_integer(const std::string& what) {
    if (cur_.kind != TokKind::Number || cur_.text.find('.') != std::string::npos ||
        cur_.text.find('e') != std::string::npos || cur_.text.find('E') != std::string::npos) {
      fail(ErrorKind::Syntax, "expected integer " + what);
    }
    long long value = 0;
    auto [ptr, ec] = std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), value);
    if (ec != std::errc() || ptr != cur_.text.data() + cur_.text.size()) {
      fail(ErrorKind::Syntax, "bad integer " + what);
    }
    shift();
    return value;
  }

  void parse_header() {
    // Optional "OPENQASM <real>;" then any number of include lines.
    if (cur_.kind == TokKind::Ident && cur_.text == "OPENQASM") {
      shift();
      if (cur_.kind != TokKind::Number) {
        fail(ErrorKind::Syntax, "expected version number after OPENQASM");
      }
      shift();
      expect_semicolon();
    }
    while (cur_.kind == TokKind::Ident && cur_.text == "include") {
      shift();
      if (cur_.kind != TokKind::String) {
        fail(ErrorKind::Syntax, "expected file name string after include");
      }
      shift();
      expect_semicolon();
    }
  }

  void parse_declarations() {
    // Exactly one qreg and one creg, in either order, before any statement.
    while (cur_.kind == TokKind::Ident && (cur_.text == "qreg" || cur_.text == "creg")) {
      bool is_qreg = cur_.text == "qreg";
      Token decl_tok = cur_;
      shift();
      if (cur_.kind != TokKind::Ident) {
        fail(ErrorKind::Syntax, "expected register name");
      }
      std::string name = cur_.text;
      shift();
      expect_symbol("[");
      Token size_tok = cur_;
      long long size = expect_integer("register size");
      if (size < 1) {
        throw ParseError(size_tok.span, ErrorKind::Syntax, "register size must be positive");
      }
      expect_symbol("]");
      expect_semicolon();
      if (is_qreg) {
        if (!qreg_name_.empty()) {
          throw ParseError(decl_tok.span, ErrorKind::Syntax, "multiple qreg declarations");
        }
        qreg_name_ = name;
        qreg_size_ = static_cast<int>(size);
      } else {
        if (!creg_name_.empty()) {
          throw ParseError(decl_tok.span, ErrorKind::Syntax, "multiple creg declarations");
        }
        creg_name_ = name;
        creg_size_ = static_cast<int>(size);
      }
    }
    if (qreg_name_.empty()) {
      fail(ErrorKind::Syntax, "missing qreg declaration");
    }
    if (creg_name_.empty()) {
      fail(ErrorKind::Syntax, "missing creg declaration");
    }
  }

  int parse_qubit_ref() {
    if (cur_.kind != TokKind::Ident) {
      fail(ErrorKind::Syntax, "expected qubit reference");
    }
    if (cur_.text != qreg_name_) {
      fail(ErrorKind::UndeclaredRegister, "unknown register '" + cur_.text + "'");
    }
    shift();
    expect_symbol("[");
    Token index_tok = cur_;
    long long index = expect_integer("qubit index");
    if (index < 0 || index >= qreg_size_) {
      throw ParseError(index_tok.span, ErrorKind::IndexOutOfRange,
                       "qubit index " + std::to_string(index) + " out of range for " +
                           qreg_name_ + "[" + std::to_string(qreg_size_) + "]");
    }
    expect_symbol("]");
    return static_cast<int>(index);
  }

  int parse_clbit_ref() {
    if (cur_.kind != TokKind::Ident) {
      fail(ErrorKind::Syntax, "expected classical bit reference");
    }
    if (cur_.text != creg_name_) {
      fail(ErrorKind::UndeclaredRegister, "unknown register '" + cur_.text + "'");
    }
    shift();
    expect_symbol("[");
    Token index_tok = cur_;
    long long index = expect_integer("classical bit index");
    if (index < 0 || index >= creg_size_) {
      throw ParseError(index_tok.span, ErrorKind::IndexOutOfRange,
                       "classical bit index " + std::to_string(index) + " out of range for " +
                           creg_name_ + "[" + std::to_string(creg_size_) + "]");
    }
    expect_symbol("]");
    return static_cast<int>(index);
  }

  double parse_angle() {
    Token start = cur_;
    bool negative = false;
    if (cur_.kind == TokKind::Symbol && cur_.text == "-") {
      negative = true;
      shift();
    }
    double value = 0.0;
    if (cur_.kind == TokKind::Number) {
      std::string digits = cur_.text;
      char* end = nullptr;
      value = std::strtod(digits.c_str(), &end);
      if (end != digits.c_str() + digits.size()) {
        throw ParseError(cur_.span, ErrorKind::BadAngleExpr, "bad numeric literal");
      }
      shift();
      if (cur_.kind == TokKind::Symbol && cur_.text == "*") {
        // k*pi or k*pi/n; the multiplier must be an integer literal.
        if (digits.find('.') != std::string::npos || digits.find('e') != std::string::npos ||
            digits.find('E') != std::string::npos) {
          throw ParseError(start.span, ErrorKind::BadAngleExpr,
                           "pi multiplier must be an integer");
        }
        shift();
        if (cur_.kind != TokKind::Ident || cur_.text != "pi") {
          fail(ErrorKind::BadAngleExpr, "expected pi after '*'");
        }
        shift();
        long long k = std::stoll(digits);
        long long n = 1;
        if (cur_.kind == TokKind::Symbol && cur_.text == "/") {
          shift();
          n = expect_angle_divisor();
        }
        value = eval_pi_fraction(k, n);
      }
    } else if (cur_.kind == TokKind::Ident && cur_.text == "pi") {
      shift();
      long long n = 1;
      if (cur_.kind == TokKind::Symbol && cur_.text == "/") {
        shift();
        n = expect_angle_divisor();
      }
      value = eval_pi_fraction(1, n);
    } else {
      throw ParseError(start.span, ErrorKind::BadAngleExpr, "expected angle expression");
    }
    return negative ? -value : value;
  }

  long long expect_angle_divisor() {
    if (cur_.kind != TokKind::Number || cur_.text.find('.') != std::string::npos) {
      fail(ErrorKind::BadAngleExpr, "expected integer divisor after '/'");
    }
    long long n = std::stoll(cur_.text);
    if (n == 0) {
      fail(ErrorKind::BadAngleExpr, "division by zero in angle");
    }
    shift();
    return n;
  }

  void parse_statement(Circuit& circuit) {
    if (cur_.kind != TokKind::Ident) {
      fail(ErrorKind::Syntax, "expected statement");
    }
    Token head = cur_;
    const std::string& op = head.text;
    if (op == "qreg" || op == "creg") {
      throw ParseError(head.span, ErrorKind::Syntax,
                       "register declarations must precede statements");
    }
    if (op == "x" || op == "y" || op == "z" || op == "h" || op == "s" || op == "sdg" ||
        op == "t" || op == "tdg") {
      shift();
      int q = parse_qubit_ref();
      expect_semicolon();
      if (op == "x") circuit.x(q);
      else if (op == "y") circuit.y(q);
      else if (op == "z") circuit.z(q);
      else if (op == "h") circuit.h(q);
      else if (op == "s") circuit.s(q);
      else if (op == "sdg") circuit.sdg(q);
      else if (op == "t") circuit.t(q);
      else circuit.tdg(q);
      return;
    }
    if (op == "u1") {
      shift();
      expect_symbol("(");
      double lambda = parse_angle();
      expect_symbol(")");
      int q = parse_qubit_ref();
      expect_semicolon();
      circuit.u1(lambda, q);
      return;
    }
    if (op == "cx") {
      shift();
      int control = parse_qubit_ref();
      expect_symbol(",");
      int target = parse_qubit_ref();
      expect_semicolon();
      circuit.cx(control, target);
      return;
    }
    if (op == "barrier") {
      shift();
      std::vector<int> qubits;
      if (cur_.kind == TokKind::Ident && cur_.text == qreg_name_) {
        // Either a whole-register barrier or a list of indexed qubits.
        Token name_tok = cur_;
        shift();
        if (cur_.kind == TokKind::Symbol && cur_.text == ";") {
          for (int q = 0; q < qreg_size_; ++q) qubits.push_back(q);
          shift();
          circuit.barrier(qubits);
          return;
        }
        expect_symbol("[");
        Token index_tok = cur_;
        long long index = expect_integer("qubit index");
        if (index < 0 || index >= qreg_size_) {
          throw ParseError(index_tok.span, ErrorKind::IndexOutOfRange,
                           "qubit index " + std::to_string(index) + " out of range for " +
                               qreg_name_ + "[" + std::to_string(qreg_size_) + "]");
        }
        expect_symbol("]");
        qubits.push_back(static_cast<int>(index));
        (void)name_tok;
      } else if (cur_.kind == TokKind::Ident) {
        fail(ErrorKind::UndeclaredRegister, "unknown register '" + cur_.text + "'");
      } else {
        fail(ErrorKind::Syntax, "expected qubit list after barrier");
      }
      while (cur_.kind == TokKind::Symbol && cur_.text == ",") {
        shift();
        qubits.push_back(parse_qubit_ref());
      }
      expect_semicolon();
      circuit.barrier(qubits);
      return;
    }
    if (op == "measure") {
      shift();
      int q = parse_qubit_ref();
      if (cur_.kind != TokKind::Arrow) {
        fail(ErrorKind::Syntax, "expected '->' in measure statement");
      }
      shift();
      int c = parse_clbit_ref();
      expect_semicolon();
      circuit.measure(q, c);
      return;
    }
    throw ParseError(head.span, ErrorKind::UnknownGate, "unknown gate '" + op + "'");
  }

  Lexer lexer_;
  Token cur_;
  std::string qreg_name_;
  std::string creg_name_;
  int qreg_size_ = 0;
  int creg_size_ = 0;
};

// Re-parse a rendered angle exactly as Parser::parse_angle would.
std::optional<double> reparse_angle(const std::string& text) {
  try {
    std::string program = "qreg q[1]; creg c[1]; u1(" + text + ") q[0];";
    Circuit circuit = Parser(program).parse();
    if (circuit.size() != 1) return std::nullopt;
    return circuit.gates()[0].lambda;
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

}  // namespace

Circuit parse(const std::string& text) { return Parser(text).parse(); }

std::string render_angle(double lambda) {
  if (lambda == 0.0) return "0";
  std::vector<std::string> candidates;
  bool negative = std::signbit(lambda);
  double mag = std::fabs(lambda);
  for (long long n = 1; n <= 16 && mag < 1e9; ++n) {
    long long k = std::llround(mag * static_cast<double>(n) / M_PI);
    if (k < 1) continue;
    long long g = std::gcd(k, n);
    long long rk = k / g, rn = n / g;
    std::string body;
    if (rn == 1) {
      body = (rk == 1) ? "pi" : std::to_string(rk) + "*pi";
    } else {
      body = (rk == 1) ? "pi/" + std::to_string(rn)
                       : std::to_string(rk) + "*pi/" + std::to_string(rn);
    }
    if (negative) body = "-" + body;
    auto back = reparse_angle(body);
    if (back && *back == lambda) candidates.push_back(body);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", lambda);
  std::string dec12(buf);
  auto back12 = reparse_angle(dec12);
  if (back12 && *back12 == lambda) {
    candidates.push_back(dec12);
  } else {
    std::snprintf(buf, sizeof buf, "%.17g", lambda);
    std::string dec17(buf);
    auto back17 = reparse_angle(dec17);
    if (back17 && *back17 == lambda) candidates.push_back(dec17);
  }
  if (candidates.empty()) {
    // Last resort: hex float always round-trips.
    std::snprintf(buf, sizeof buf, "%.13a", lambda);
    return buf;
  }
  std::string best = candidates[0];
  for (const auto& c : candidates) {
    if (c.size() < best.size()) best = c;
  }
  return best;
}

std::string serialize(const Circuit& circuit) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n";
  os << "include \"qelib1.inc\";\n";
  os << "qreg q[" << circuit.num_qubits() << "];\n";
  os << "creg c[" << circuit.num_clbits() << "];\n";
  for (const Gate& gate : circuit.gates()) {
    switch (gate.kind) {
      case GateKind::X: os << "x q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::Y: os << "y q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::Z: os << "z q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::H: os << "h q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::S: os << "s q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::Sdg: os << "sdg q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::T: os << "t q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::Tdg: os << "tdg q[" << gate.qubits[0] << "];\n"; break;
      case GateKind::U1:
        os << "u1(" << render_angle(gate.lambda) << ") q[" << gate.qubits[0] << "];\n";
        break;
      case GateKind::CX:
        os << "cx q[" << gate.qubits[0] << "],q[" << gate.qubits[1] << "];\n";
        break;
      case GateKind::Barrier: {
        os << "barrier ";
        for (size_t i = 0; i < gate.qubits.size(); ++i) {
          if (i > 0) os << ",";
          os << "q[" << gate.qubits[i] << "]";
        }
        os << ";\n";
        break;
      }
      case GateKind::Measure:
        os << "measure q[" << gate.qubits[0] << "] -> c[" << gate.clbit << "];\n";
        break;
    }
  }
  return os.str();
}

}  // namespace qbench::qasm
