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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "numix/errors.hpp"
#include "numix/oscillation.hpp"
#include "numix/pmns.hpp"
#include "numix/qasm.hpp"
#include "numix/shots.hpp"
#include "numix/subrotation.hpp"

namespace numix::cli {

namespace {

constexpr double kTolerance = 1e-10;
constexpr std::uint64_t kVerifySeed = 20260101;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidConfigError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidConfigError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InvalidConfigError("write failed for '" + path + "'");
}

MixingSpec load_spec(const std::string& path, bool degrees) {
  MixingSpec spec = mixing_spec_from_json(read_file(path));
  return degrees ? spec_from_degrees(std::move(spec)) : spec;
}

double parse_number(const std::string& token) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw InvalidConfigError("not a number: '" + token + "'");
  }
  return v;
}

std::string format(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

std::size_t parse_flavor(const std::string& text, const FlavorBasisMap& labels,
                         std::size_t n_flavors) {
  if (!text.empty() && std::all_of(text.begin(), text.end(), ::isdigit)) {
    return static_cast<std::size_t>(std::stoul(text));
  }
  for (std::size_t k = 1; k <= n_flavors; ++k) {
    if (labels.label(k) == text) return k;
  }
  throw InvalidConfigError("unknown flavor '" + text + "'");
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
  std::string spec_path;
  bool degrees = false;
};

double cp0_suite() {
  std::mt19937_64 rng(kVerifySeed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  double worst = 0.0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int k = 0; k < 50; ++k) {
      const double theta = angle(rng);
      worst = std::max(worst,
                       max_abs_diff(unitary_of(base_subrotation_cp0(theta, n)),
                                    unitary_of(base_subrotation(theta, 0.0, n))));
    }
  }
  return worst;
}

double closed_form_suite() {
  std::mt19937_64 rng(kVerifySeed + 1);
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double theta = angle(rng);
    const double delta = angle(rng);
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = i + 1; j <= 4; ++j) {
        const SubRotation s{i, j, theta, delta, 2};
        worst = std::max(worst,
                         max_abs_diff(unitary_of(subrotation_2q_closed_form(s)),
                                      unitary_of(subrotation(s))));
      }
    }
  }
  return worst;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const MixingSpec spec = load_spec(o.spec_path, o.degrees);
  spec.validate();
  const Circuit circuit = build_circuit(spec);
  UnitaryMatrix expected = UnitaryMatrix::Identity(
      static_cast<Eigen::Index>(circuit.dim()),
      static_cast<Eigen::Index>(circuit.dim()));
  const auto n = static_cast<Eigen::Index>(spec.n_flavors);
  expected.topLeftCorner(n, n) = matrix_of(spec);
  const double mixing = max_abs_diff(unitary_of(circuit), expected);
  const double cp0 = cp0_suite();
  const double closed = closed_form_suite();
  const double worst = std::max({mixing, cp0, closed});

  out << "spec: " << spec.n_flavors << " flavors, " << spec.rotations.size()
      << " rotations, " << circuit.n_qubits() << " qubits, " << circuit.size()
      << " gates\n";
  out << "circuit vs mixing matrix      max deviation " << sci(mixing) << "\n";
  out << "cp-conserving base, n=2..4    max deviation " << sci(cp0) << "\n";
  out << "two-qubit closed forms        max deviation " << sci(closed) << "\n";
  const bool ok = worst <= kTolerance;
  out << "max deviation " << sci(worst) << (ok ? " <= " : " > ") << "1e-10: "
      << (ok ? "OK" : "FAIL") << "\n";
  return ok ? kOk : kVerificationFailed;
}

// --- sweep ------------------------------------------------------------------

struct SweepOptions {
  std::string spec_path;
  std::string masses;
  double baseline_km = 0.0;
  std::string energies;
  std::string mode = "analytic";
  std::uint64_t shots = 8192;
  std::string noise;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string initial = "1";
  bool degrees = false;
  std::string delta_cp;
  std::string calibration_out;
};

// Sets the phase of every (1,3) rotation; the conventional home of the
// CP phase in the standard parameterization.
MixingSpec with_delta_cp(MixingSpec spec, double delta) {
  bool found = false;
  for (Rotation& r : spec.rotations) {
    if (r.i == 1 && r.j == 3) {
      r.delta = delta;
      found = true;
    }
  }
  if (!found) throw InvalidConfigError("--delta-cp needs a (1,3) rotation");
  return spec;
}

int cmd_sweep(const SweepOptions& o, std::ostream& out) {
  OscillationConfig base;
  base.spec = load_spec(o.spec_path, o.degrees);
  base.spec.validate();
  base.mass_squared = parse_list(o.masses);
  base.baseline_km = o.baseline_km;
  base.energies_GeV = parse_grid(o.energies);
  const SweepMode mode = sweep_mode_from_string(o.mode);
  const FlavorBasisMap labels =
      FlavorBasisMap::standard(base.spec.n_flavors, std::size_t{1}
                                                        << base.spec.n_qubits());
  base.initial_flavor = parse_flavor(o.initial, labels, base.spec.n_flavors);

  ShotSettings shots;
  shots.shots = o.shots;
  shots.seed = o.seed;
  if (!o.noise.empty()) {
    if (mode != SweepMode::kShots) {
      throw InvalidConfigError("--noise requires --mode shots");
    }
    shots.noise = NoiseModel(parse_list(o.noise));
  }

  std::vector<std::optional<double>> deltas{std::nullopt};
  if (!o.delta_cp.empty()) {
    deltas.clear();
    for (double d : parse_list(o.delta_cp)) {
      deltas.emplace_back(o.degrees ? d * std::numbers::pi / 180.0 : d);
    }
  }

  std::string csv;
  std::optional<NoiseModel> calibration;
  std::size_t rows = 0;
  for (const auto& delta : deltas) {
    OscillationConfig config = base;
    if (delta) config.spec = with_delta_cp(config.spec, *delta);
    const SweepResult result = probability_sweep(config, mode, shots);
    if (result.calibration) calibration = result.calibration;
    rows += result.rows.size();
    const std::string part = sweep_to_csv(result, mode, labels);
    if (!delta) {
      csv = part;
      continue;
    }
    std::istringstream lines(part);
    std::string line;
    std::getline(lines, line);
    if (csv.empty()) csv = line + ",delta_cp\n";
    const std::string suffix = "," + format(o.degrees ? *delta * 180.0 / std::numbers::pi
                                                       : *delta);
    while (std::getline(lines, line)) csv += line + suffix + "\n";
  }

  if (!o.calibration_out.empty()) {
    if (!calibration) {
      throw InvalidConfigError("--calibration-out requires shots mode with --noise");
    }
    write_file(o.calibration_out,
               calibration_report_json(shots.shots, *calibration, shots.seed) + "\n");
  }
  if (o.out_path.empty()) {
    out << csv;
  } else {
    write_file(o.out_path, csv);
    out << "wrote " << rows << " rows to " << o.out_path << "\n";
  }
  return kOk;
}

// --- export -----------------------------------------------------------------

struct ExportOptions {
  std::string spec_path;
  std::string qasm_out;
  bool with_evolution = false;
  std::string phases;
  bool measure = false;
  bool degrees = false;
};

int cmd_export(const ExportOptions& o, std::ostream& out) {
  const MixingSpec spec = load_spec(o.spec_path, o.degrees);
  spec.validate();
  Circuit circuit = build_circuit(spec);
  if (o.with_evolution) {
    if (o.phases.empty()) {
      throw InvalidConfigError("--with-evolution requires --phases");
    }
    circuit = evolution_circuit(spec, PhaseOperator{parse_list(o.phases)});
  } else if (!o.phases.empty()) {
    throw InvalidConfigError("--phases requires --with-evolution");
  }
  const Circuit lowered = lower(circuit);
  const std::string text = emit_qasm(lowered, {.measure = o.measure});

  out << "qubits: " << lowered.n_qubits() << "\n";
  out << "gates: " << lowered.size() << "\n";
  for (const auto& [name, count] : lowered.gate_counts()) {
    out << "  " << name << ": " << count << "\n";
  }

  const ParsedQasm back = parse_qasm(text);
  const bool exact = back.circuit == lowered;
  double deviation = 0.0;
  if (lowered.n_qubits() <= 10) {
    deviation = max_abs_diff(unitary_of(back.circuit), unitary_of(circuit));
    out << "round-trip unitary deviation: " << sci(deviation) << "\n";
  }
  const bool ok = exact && deviation <= kTolerance;
  out << "round-trip: " << (ok ? "ok" : "FAILED") << "\n";

  if (o.qasm_out.empty() || o.qasm_out == "-") {
    out << text;
  } else {
    write_file(o.qasm_out, text);
  }
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    token.erase(0, token.find_first_not_of(" \t"));
    token.erase(token.find_last_not_of(" \t") + 1);
    if (token.empty()) throw InvalidConfigError("empty entry in '" + text + "'");
    values.push_back(parse_number(token));
  }
  if (values.empty()) throw InvalidConfigError("empty list");
  return values;
}

std::vector<double> parse_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_list(text);
  std::vector<std::string> parts;
  std::istringstream in(text);
  for (std::string p; std::getline(in, p, ':');) parts.push_back(p);
  if (parts.size() != 3) {
    throw InvalidConfigError("grid must be lo:hi:count, got '" + text + "'");
  }
  const double lo = parse_number(parts[0]);
  const double hi = parse_number(parts[1]);
  const double count = parse_number(parts[2]);
  if (count < 1 || count != static_cast<double>(static_cast<long>(count)) ||
      (count == 1 && lo != hi)) {
    throw InvalidConfigError("bad grid count in '" + text + "'");
  }
  const auto m = static_cast<std::size_t>(count);
  std::vector<double> grid(m);
  for (std::size_t k = 0; k < m; ++k) {
    grid[k] = m == 1 ? lo
                     : lo + (hi - lo) * static_cast<double>(k) /
                                static_cast<double>(m - 1);
  }
  if (m > 1) grid.back() = hi;
  return grid;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Circuit synthesis and simulation for neutrino flavor mixing",
               "numix"};
  app.require_subcommand(1);

  VerifyOptions vo;
  auto* verify = app.add_subcommand(
      "verify", "Check the circuit against the mixing matrix and run the "
                "equivalence suites");
  verify->add_option("spec", vo.spec_path, "MixingSpec JSON")->required();
  verify->add_flag("--degrees", vo.degrees, "Angles in the spec are degrees");

  SweepOptions so;
  auto* sweep = app.add_subcommand("sweep", "Oscillation probability sweep");
  sweep->add_option("spec", so.spec_path, "MixingSpec JSON")->required();
  sweep->add_option("--masses", so.masses, "Comma list of m^2 [eV^2]")
      ->required();
  sweep->add_option("--baseline-km", so.baseline_km, "Baseline [km]")
      ->required();
  sweep->add_option("--energies", so.energies,
                    "Comma list or lo:hi:count grid [GeV]")
      ->required();
  sweep->add_option("--mode", so.mode, "analytic | exact-circuit | shots")
      ->capture_default_str();
  sweep->add_option("--shots", so.shots, "Shots per energy")
      ->capture_default_str();
  sweep->add_option("--noise", so.noise, "Comma list of per-qubit flip rates");
  sweep->add_option("--seed", so.seed, "Random seed")->capture_default_str();
  sweep->add_option("--out", so.out_path, "CSV output path (default stdout)");
  sweep->add_option("--initial", so.initial, "Initial flavor, index or label")
      ->capture_default_str();
  sweep->add_flag("--degrees", so.degrees, "Angles are degrees");
  sweep->add_option("--delta-cp", so.delta_cp,
                    "Comma list of CP phases for the (1,3) rotation");
  sweep->add_option("--calibration-out", so.calibration_out,
                    "Write the calibration report JSON here");

  ExportOptions eo;
  auto* exp = app.add_subcommand("export", "Lower and emit OpenQASM 2.0");
  exp->add_option("spec", eo.spec_path, "MixingSpec JSON")->required();
  exp->add_option("--qasm-out", eo.qasm_out, "QASM output path (default stdout)");
  exp->add_flag("--with-evolution", eo.with_evolution,
                "Emit U^dagger D U instead of U");
  exp->add_option("--phases", eo.phases, "Comma list of mass-basis phases");
  exp->add_flag("--measure", eo.measure, "Append measurements");
  exp->add_flag("--degrees", eo.degrees, "Angles are degrees");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(vo, out);
    if (sweep->parsed()) return cmd_sweep(so, out);
    if (exp->parsed()) return cmd_export(eo, out);
  } catch (const NumixError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace numix::cli
