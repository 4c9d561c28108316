// Copyright 2026 The numix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "numix/qasm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string_view>
#include <vector>

#include <Eigen/Eigenvalues>

#include "numix/errors.hpp"

namespace numix {

namespace {

// A single-qubit primitive times a global phase e^{i global_phase}.
struct TargetOp {
  GateKind kind;
  double global_phase = 0.0;
};

struct PhasedU3 {
  double alpha, theta, phi, lambda;
};

// M = e^{i alpha} U3(theta, phi, lambda) with theta in [0, pi].
PhasedU3 zyz(const Matrix2& m) {
  constexpr double kTiny = 1e-14;
  const double c = std::abs(m(0, 0));
  const double s = std::abs(m(1, 0));
  PhasedU3 out{};
  out.theta = 2.0 * std::atan2(s, c);
  if (c > kTiny) {
    out.alpha = std::arg(m(0, 0));
    if (s > kTiny) {
      out.phi = std::arg(m(1, 0)) - out.alpha;
      out.lambda = std::arg(-m(0, 1)) - out.alpha;
    } else {
      out.phi = 0.0;
      out.lambda = std::arg(m(1, 1)) - out.alpha;
    }
  } else {
    out.alpha = std::arg(m(1, 0));
    out.phi = 0.0;
    out.lambda = std::arg(-m(0, 1)) - out.alpha;
  }
  return out;
}

Matrix2 principal_sqrt(const Matrix2& m) {
  Eigen::ComplexEigenSolver<Matrix2> solver(m);
  const Matrix2 vecs = solver.eigenvectors();
  Eigen::Vector2cd roots = solver.eigenvalues();
  for (Eigen::Index k = 0; k < 2; ++k) roots[k] = std::sqrt(roots[k]);
  return vecs * roots.asDiagonal() * vecs.inverse();
}

TargetOp sqrt_of(const TargetOp& op) {
  if (const auto* p = std::get_if<Phase>(&op.kind)) {
    return {Phase{p->lambda / 2}, op.global_phase / 2};
  }
  if (const auto* u = std::get_if<U3>(&op.kind); u && u->phi == -u->lambda) {
    return {U3{u->theta / 2, u->phi, u->lambda}, op.global_phase / 2};
  }
  Matrix2 w = Gate(op.kind, 0).target_matrix() * std::polar(1.0, op.global_phase);
  const PhasedU3 d = zyz(principal_sqrt(w));
  return {U3{d.theta, d.phi, d.lambda}, d.alpha};
}

TargetOp inverse_of(const TargetOp& op) {
  return {Gate(op.kind, 0).inverse().kind(), -op.global_phase};
}

void emit_base(const TargetOp& op, const std::vector<Qubit>& controls,
               Qubit target, Circuit& out) {
  if (controls.empty()) {
    if (op.global_phase != 0.0) {
      throw UnsupportedError("uncontrolled global phase in lowering");
    }
    out.append(Gate(op.kind, target));
    return;
  }
  if (op.global_phase != 0.0) {
    out.append(Gate::phase(op.global_phase, controls.front()));
  }
  out.append(Gate(op.kind, target, controls));
}

void lower_controlled(const TargetOp& op, const std::vector<Qubit>& controls,
                      Qubit target, Circuit& out) {
  if (controls.size() <= 1) {
    emit_base(op, controls, target, out);
    return;
  }
  const Qubit pivot = controls.back();
  const std::vector<Qubit> rest(controls.begin(), controls.end() - 1);
  const TargetOp root = sqrt_of(op);
  const TargetOp root_dag = inverse_of(root);
  const TargetOp flip{PauliX{}, 0.0};
  lower_controlled(root, {pivot}, target, out);
  lower_controlled(flip, rest, pivot, out);
  lower_controlled(root_dag, {pivot}, target, out);
  lower_controlled(flip, rest, pivot, out);
  lower_controlled(root, rest, target, out);
}

void lower_gate(const Gate& g, Circuit& out) {
  if (const auto* s = std::get_if<Swap>(&g.kind())) {
    const Qubit a = g.target();
    const Qubit b = s->other;
    if (g.num_controls() == 0) {
      out.append(Gate::x(b, {a})).append(Gate::x(a, {b})).append(
          Gate::x(b, {a}));
      return;
    }
    // Controlled swap: CX(b->a), C^{S+a} X_b, CX(b->a).
    Circuit tmp(out.n_qubits());
    tmp.append(Gate::x(a, {b}));
    tmp.append(Gate::x(b, g.controls(), g.anticontrols()).with_control(a));
    tmp.append(Gate::x(a, {b}));
    for (const Gate& h : tmp.gates()) lower_gate(h, out);
    return;
  }
  for (Qubit q : g.anticontrols()) out.append(Gate::x(q));
  std::vector<Qubit> controls = g.controls();
  controls.insert(controls.end(), g.anticontrols().begin(),
                  g.anticontrols().end());
  std::sort(controls.begin(), controls.end());
  lower_controlled({g.kind(), 0.0}, controls, g.target(), out);
  for (Qubit q : g.anticontrols()) out.append(Gate::x(q));
}

bool gate_is_lowered(const Gate& g) {
  return !g.is_swap() && g.anticontrols().empty() && g.controls().size() <= 1;
}

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// --- reader -----------------------------------------------------------------

class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail();
    return v;
  }

 private:
  double expr() {
    skip_ws();
    double sign = 1.0;
    while (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      if (text_[pos_] == '-') sign = -sign;
      ++pos_;
      skip_ws();
    }
    double v = term();
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char op = text_[pos_];
      if (op != '*' && op != '/') break;
      ++pos_;
      const double rhs = term();
      v = op == '*' ? v * rhs : v / rhs;
    }
    return sign * v;
  }

  double term() {
    skip_ws();
    if (text_.substr(pos_, 2) == "pi") {
      pos_ += 2;
      return std::numbers::pi;
    }
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail();
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    return v;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail() const {
    throw QasmError("cannot parse angle '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

Qubit parse_qubit(const std::string& ref, const std::string& reg,
                  std::size_t size) {
  const auto open = ref.find('[');
  const auto close = ref.find(']');
  if (open == std::string::npos || close == std::string::npos ||
      trim(ref.substr(0, open)) != reg) {
    throw QasmError("bad qubit reference '" + ref + "'");
  }
  std::size_t q = 0;
  try {
    q = std::stoul(ref.substr(open + 1, close - open - 1));
  } catch (const std::exception&) {
    throw QasmError("bad qubit index in '" + ref + "'");
  }
  if (q >= size) throw QasmError("qubit index out of range in '" + ref + "'");
  return q;
}

}  // namespace

bool is_lowered(const Circuit& circuit) {
  for (const Gate& g : circuit.gates()) {
    if (!gate_is_lowered(g)) return false;
  }
  return true;
}

Circuit lower(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  for (const Gate& g : circuit.gates()) {
    if (gate_is_lowered(g)) {
      out.append(g);
    } else {
      lower_gate(g, out);
    }
  }
  return out;
}

std::string emit_qasm(const Circuit& circuit, const QasmOptions& options) {
  std::ostringstream os;
  const std::size_t n = circuit.n_qubits();
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  os << "qreg q[" << n << "];\ncreg c[" << n << "];\n";
  for (const Gate& g : circuit.gates()) {
    if (!gate_is_lowered(g)) {
      throw QasmError("gate not lowered: " + g.name() + " (" + g.to_string() + ")");
    }
    const bool ctl = !g.controls().empty();
    const std::string qubits =
        ctl ? "q[" + std::to_string(g.controls().front()) + "],q[" +
                  std::to_string(g.target()) + "]"
            : "q[" + std::to_string(g.target()) + "]";
    if (const auto* u = std::get_if<U3>(&g.kind())) {
      os << (ctl ? "cu3(" : "u3(") << format_angle(u->theta) << ","
         << format_angle(u->phi) << "," << format_angle(u->lambda) << ") ";
    } else if (const auto* p = std::get_if<Phase>(&g.kind())) {
      os << (ctl ? "cu1(" : "u1(") << format_angle(p->lambda) << ") ";
    } else {
      os << (ctl ? "cx " : "x ");
    }
    os << qubits << ";\n";
  }
  if (options.measure) {
    for (std::size_t q = 0; q < n; ++q) {
      os << "measure q[" << q << "] -> c[" << q << "];\n";
    }
  }
  return os.str();
}

ParsedQasm parse_qasm(const std::string& text) {
  // Strip comments, then split on ';'.
  std::string clean;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto cpos = line.find("//");
    clean += line.substr(0, cpos);
    clean += '\n';
  }
  std::string reg;
  std::size_t n = 0;
  std::vector<Gate> gates;
  bool measured = false;
  bool saw_header = false;

  for (const std::string& raw : split(clean, ';')) {
    const std::string stmt = trim(raw);
    if (stmt.empty()) continue;
    if (stmt.rfind("OPENQASM", 0) == 0) {
      if (trim(stmt.substr(8)) != "2.0") {
        throw QasmError("unsupported version: " + stmt);
      }
      saw_header = true;
      continue;
    }
    if (stmt.rfind("include", 0) == 0 || stmt.rfind("creg", 0) == 0 ||
        stmt.rfind("barrier", 0) == 0) {
      continue;
    }
    if (stmt.rfind("qreg", 0) == 0) {
      if (!reg.empty()) throw QasmError("only one qreg is supported");
      const std::string decl = trim(stmt.substr(4));
      const auto open = decl.find('[');
      const auto close = decl.find(']');
      if (open == std::string::npos || close == std::string::npos) {
        throw QasmError("bad qreg declaration");
      }
      reg = trim(decl.substr(0, open));
      n = std::stoul(decl.substr(open + 1, close - open - 1));
      continue;
    }
    if (reg.empty()) throw QasmError("gate before qreg: " + stmt);
    if (stmt.rfind("measure", 0) == 0) {
      measured = true;
      continue;
    }

    // name[(args)] operands
    std::string name;
    std::vector<double> args;
    std::string operands;
    const auto paren = stmt.find('(');
    const auto space = stmt.find_first_of(" \t\n");
    if (paren != std::string::npos && (space == std::string::npos || paren < space)) {
      name = trim(stmt.substr(0, paren));
      const auto close = stmt.find(')', paren);
      if (close == std::string::npos) throw QasmError("unclosed '(' in " + stmt);
      for (const std::string& a : split(stmt.substr(paren + 1, close - paren - 1), ',')) {
        args.push_back(AngleParser(a).parse());
      }
      operands = stmt.substr(close + 1);
    } else {
      if (space == std::string::npos) throw QasmError("missing operands: " + stmt);
      name = stmt.substr(0, space);
      operands = stmt.substr(space);
    }
    std::vector<Qubit> qs;
    for (const std::string& ref : split(trim(operands), ',')) {
      qs.push_back(parse_qubit(ref, reg, n));
    }
    auto expect = [&](std::size_t n_args, std::size_t n_qubits) {
      if (args.size() != n_args || qs.size() != n_qubits) {
        throw QasmError("wrong arity for '" + name + "'");
      }
    };
    if (name == "u3" || name == "U") {
      expect(3, 1);
      gates.push_back(Gate::u3(args[0], args[1], args[2], qs[0]));
    } else if (name == "cu3") {
      expect(3, 2);
      gates.push_back(Gate::u3(args[0], args[1], args[2], qs[1], {qs[0]}));
    } else if (name == "u1") {
      expect(1, 1);
      gates.push_back(Gate::phase(args[0], qs[0]));
    } else if (name == "cu1") {
      expect(1, 2);
      gates.push_back(Gate::phase(args[0], qs[1], {qs[0]}));
    } else if (name == "x") {
      expect(0, 1);
      gates.push_back(Gate::x(qs[0]));
    } else if (name == "cx" || name == "CX") {
      expect(0, 2);
      gates.push_back(Gate::x(qs[1], {qs[0]}));
    } else {
      throw QasmError("unsupported gate '" + name + "'");
    }
  }
  if (!saw_header) throw QasmError("missing OPENQASM header");
  if (reg.empty()) throw QasmError("missing qreg");
  Circuit circuit(n);
  for (Gate& g : gates) circuit.append(std::move(g));
  return {std::move(circuit), measured};
}

}  // namespace numix
