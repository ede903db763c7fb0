// Copyright 2026 The qcbench authors
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

#include "qcbench/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "qcbench/version.hpp"

namespace qcbench {

namespace {

using nlohmann::json;

constexpr const char* kChannelFormat = "qcbench.channel/1";
constexpr const char* kHamiltonianFormat = "qcbench.hamiltonian/1";
constexpr const char* kLindbladFormat = "qcbench.lindblad/1";
constexpr const char* kFluctuationFormat = "qcbench.fluctuation/1";
constexpr const char* kObservablesFormat = "qcbench.observables/1";
constexpr const char* kReportFormat = "qcbench.report/1";

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw ParseError("cannot write " + path);
}

const json& require_field(const json& j, const char* key,
                          const std::string& path) {
  if (!j.is_object()) throw ParseError("expected object at " + path);
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError("missing field '" + std::string(key) + "' at " + path);
  return *it;
}

double require_number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ParseError("expected number at " + path);
  return j.get<double>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError("expected string at " + path);
  return j.get<std::string>();
}

void require_format(const json& j, const char* expected,
                    const std::string& path) {
  const std::string fmt = require_string(require_field(j, "format", path),
                                         path + "/format");
  if (fmt != expected)
    throw ParseError("unsupported format '" + fmt + "' at " + path +
                     " (expected " + expected + ")");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

// Row-major nested arrays, complex entries as [re, im] pairs.
json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Complex complex_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("expected [re, im] pair at " + path);
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty())
    throw ParseError("expected non-empty array of rows at " + path);
  const Index n = static_cast<Index>(j.size());
  ComplexMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string row_path = path + "/" + std::to_string(r);
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("expected square matrix (row of length " +
                       std::to_string(n) + ") at " + row_path);
    for (Index c = 0; c < n; ++c)
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  row_path + "/" + std::to_string(c));
  }
  return m;
}

void report_problems(const std::vector<std::string>& problems,
                     ValidationMode mode, const std::string& path) {
  if (problems.empty()) return;
  if (mode == ValidationMode::Strict) {
    std::ostringstream os;
    os << path << ": validation failed:";
    for (const std::string& p : problems) os << " [" << p << "]";
    throw ValidationError(os.str());
  }
  for (const std::string& p : problems)
    std::cerr << "qcbench: warning: " << path << ": " << p << "\n";
}

void validate_loaded_choi(const ChoiMatrix& c, ValidationMode mode, double tol,
                          const std::string& path) {
  std::vector<std::string> problems;
  const double herm = hermiticity_defect(c.mat);
  if (herm > tol) {
    std::ostringstream os;
    os << "hermiticity check failed: ||C - C^+||_2 = " << herm;
    problems.push_back(os.str());
  } else {
    const CpCheck cp = is_cp(c, tol);
    if (!cp.completely_positive) {
      std::ostringstream os;
      os << "complete-positivity check failed: min eigenvalue = "
         << cp.min_eigenvalue;
      problems.push_back(os.str());
    }
    const ComplexMatrix eye = ComplexMatrix::Identity(c.d, c.d);
    const double trace_defect = (trace_out(c) - eye).norm();
    if (trace_defect > tol) {
      std::ostringstream os;
      os << "double-stochasticity (trace_out) check failed: "
            "||trace_out - 1||_2 = "
         << trace_defect;
      problems.push_back(os.str());
    }
  }
  report_problems(problems, mode, path);
}

void validate_loaded_unitary(const ComplexMatrix& u, ValidationMode mode,
                             double tol, const std::string& path) {
  const double defect =
      (u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols())).norm();
  if (defect > std::max(tol, 1e-10)) {
    std::ostringstream os;
    os << "unitarity check failed: ||u^+ u - 1||_2 = " << defect;
    report_problems({os.str()}, mode, path);
  }
}

HamiltonianSpec hamiltonian_from_json(const json& j, const std::string& path) {
  HamiltonianSpec spec;
  const json& nq = require_field(j, "n_qubits", path);
  if (!nq.is_number_integer())
    throw ParseError("expected integer at " + path + "/n_qubits");
  spec.n_qubits = nq.get<int>();
  const json& terms = require_field(j, "terms", path);
  if (!terms.is_array()) throw ParseError("expected array at " + path + "/terms");
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const std::string tpath = path + "/terms/" + std::to_string(t);
    PauliTerm term;
    term.coefficient =
        require_number(require_field(terms[t], "coefficient", tpath),
                       tpath + "/coefficient");
    const json& factors = require_field(terms[t], "factors", tpath);
    if (!factors.is_array())
      throw ParseError("expected array at " + tpath + "/factors");
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const std::string fpath = tpath + "/factors/" + std::to_string(f);
      PauliFactor factor;
      const json& q = require_field(factors[f], "qubit", fpath);
      if (!q.is_number_integer())
        throw ParseError("expected integer at " + fpath + "/qubit");
      factor.qubit = q.get<int>();
      const std::string axis =
          require_string(require_field(factors[f], "axis", fpath),
                         fpath + "/axis");
      if (axis == "x")
        factor.axis = PauliAxis::X;
      else if (axis == "y")
        factor.axis = PauliAxis::Y;
      else if (axis == "z")
        factor.axis = PauliAxis::Z;
      else
        throw ParseError("expected axis 'x', 'y' or 'z' at " + fpath + "/axis");
      term.factors.push_back(factor);
    }
    spec.terms.push_back(std::move(term));
  }
  spec.validate();
  return spec;
}

}  // namespace

// ---------------------------------------------------------------------------
// Channel files
// ---------------------------------------------------------------------------

void save_channel(const std::string& path, const ChoiMatrix& c) {
  json j;
  j["format"] = kChannelFormat;
  j["kind"] = "choi";
  j["convention"] = "in-out";
  j["d"] = c.d;
  j["entries"] = matrix_to_json(c.mat);
  write_text_file(path, j.dump(1) + "\n");
}

void save_unitary(const std::string& path, const ComplexMatrix& u) {
  int n_qubits = 0;
  while ((Index{1} << n_qubits) < u.rows()) ++n_qubits;
  if ((Index{1} << n_qubits) != u.rows() || u.rows() != u.cols())
    throw ShapeError("save_unitary: matrix dimension is not a power of two");
  json j;
  j["format"] = kChannelFormat;
  j["kind"] = "unitary";
  j["convention"] = "in-out";
  j["n_qubits"] = n_qubits;
  j["entries"] = matrix_to_json(u);
  write_text_file(path, j.dump(1) + "\n");
}

void save_trajectory(const std::string& path, const ChannelTrajectory& traj) {
  traj.validate();
  json j;
  j["format"] = kChannelFormat;
  j["kind"] = "trajectory";
  j["convention"] = "in-out";
  j["d"] = traj.d;
  json samples = json::array();
  for (const TrajectorySample& s : traj.samples) {
    json sample;
    sample["t"] = s.t;
    sample["entries"] = matrix_to_json(s.choi.mat);
    samples.push_back(std::move(sample));
  }
  j["samples"] = std::move(samples);
  write_text_file(path, j.dump(1) + "\n");
}

ChannelFile load_channel(const std::string& path, ValidationMode mode,
                         double tol) {
  const json j = load_json_file(path);
  require_format(j, kChannelFormat, path);
  const std::string convention =
      require_string(require_field(j, "convention", path), path + "/convention");
  if (convention != "in-out")
    throw ValidationError(path + ": unsupported convention tag '" + convention +
                          "' (this tool uses 'in-out')");
  ChannelFile file;
  file.kind = require_string(require_field(j, "kind", path), path + "/kind");

  if (file.kind == "choi") {
    const json& dj = require_field(j, "d", path);
    if (!dj.is_number_integer()) throw ParseError("expected integer at " + path + "/d");
    const Index d = dj.get<Index>();
    ComplexMatrix m = matrix_from_json(require_field(j, "entries", path),
                                       path + "/entries");
    if (m.rows() != d * d)
      throw ParseError("entries size " + std::to_string(m.rows()) +
                       " does not match d^2 at " + path);
    ChoiMatrix c{d, std::move(m)};
    validate_loaded_choi(c, mode, tol, path);
    file.choi = std::move(c);
  } else if (file.kind == "unitary") {
    const json& nq = require_field(j, "n_qubits", path);
    if (!nq.is_number_integer())
      throw ParseError("expected integer at " + path + "/n_qubits");
    ComplexMatrix u = matrix_from_json(require_field(j, "entries", path),
                                       path + "/entries");
    if (u.rows() != (Index{1} << nq.get<int>()))
      throw ParseError("entries size does not match 2^n_qubits at " + path);
    validate_loaded_unitary(u, mode, tol, path);
    file.unitary = std::move(u);
  } else if (file.kind == "trajectory") {
    const json& dj = require_field(j, "d", path);
    if (!dj.is_number_integer()) throw ParseError("expected integer at " + path + "/d");
    ChannelTrajectory traj;
    traj.d = dj.get<Index>();
    const json& samples = require_field(j, "samples", path);
    if (!samples.is_array() || samples.empty())
      throw ParseError("expected non-empty array at " + path + "/samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const std::string spath = path + "/samples/" + std::to_string(i);
      TrajectorySample sample;
      sample.t = require_number(require_field(samples[i], "t", spath),
                                spath + "/t");
      ComplexMatrix m = matrix_from_json(require_field(samples[i], "entries", spath),
                                         spath + "/entries");
      if (m.rows() != traj.d * traj.d)
        throw ParseError("entries size does not match d^2 at " + spath);
      sample.choi = ChoiMatrix{traj.d, std::move(m)};
      traj.samples.push_back(std::move(sample));
    }
    traj.validate();
    for (std::size_t i = 0; i < traj.samples.size(); ++i)
      validate_loaded_choi(traj.samples[i].choi, mode, tol,
                           path + "/samples/" + std::to_string(i));
    file.trajectory = std::move(traj);
  } else {
    throw ParseError("unknown kind '" + file.kind + "' at " + path +
                     "/kind (expected choi, unitary or trajectory)");
  }
  return file;
}

// ---------------------------------------------------------------------------
// Spec files
// ---------------------------------------------------------------------------

HamiltonianSpec load_hamiltonian_spec(const std::string& path) {
  const json j = load_json_file(path);
  require_format(j, kHamiltonianFormat, path);
  return hamiltonian_from_json(j, path);
}

LindbladSpec load_lindblad_spec(const std::string& path) {
  const json j = load_json_file(path);
  require_format(j, kLindbladFormat, path);
  LindbladSpec spec;
  spec.hamiltonian = hamiltonian_from_json(
      require_field(j, "hamiltonian", path), path + "/hamiltonian");
  const json& jumps = require_field(j, "jumps", path);
  if (!jumps.is_array()) throw ParseError("expected array at " + path + "/jumps");
  for (std::size_t i = 0; i < jumps.size(); ++i) {
    const std::string jpath = path + "/jumps/" + std::to_string(i);
    JumpOperator jump;
    jump.rate = require_number(require_field(jumps[i], "rate", jpath),
                               jpath + "/rate");
    jump.op = matrix_from_json(require_field(jumps[i], "operator", jpath),
                               jpath + "/operator");
    spec.jumps.push_back(std::move(jump));
  }
  spec.validate();
  return spec;
}

FluctuationSpec load_fluctuation_spec(const std::string& path) {
  const json j = load_json_file(path);
  require_format(j, kFluctuationFormat, path);
  FluctuationSpec spec;
  spec.base = hamiltonian_from_json(require_field(j, "base", path),
                                    path + "/base");
  const json& fl = require_field(j, "fluctuations", path);
  if (!fl.is_array())
    throw ParseError("expected array at " + path + "/fluctuations");
  for (std::size_t i = 0; i < fl.size(); ++i) {
    const std::string fpath = path + "/fluctuations/" + std::to_string(i);
    TermFluctuation f;
    const json& term = require_field(fl[i], "term", fpath);
    if (!term.is_number_integer() || term.get<long long>() < 0)
      throw ParseError("expected non-negative integer at " + fpath + "/term");
    f.term_index = term.get<std::size_t>();
    f.sigma = require_number(require_field(fl[i], "sigma", fpath),
                             fpath + "/sigma");
    spec.fluctuations.push_back(f);
  }
  const json& samples = require_field(j, "samples", path);
  if (!samples.is_number_integer())
    throw ParseError("expected integer at " + path + "/samples");
  spec.samples = samples.get<int>();
  if (j.contains("seed")) {
    const json& seed = j["seed"];
    if (!seed.is_number_integer())
      throw ParseError("expected integer at " + path + "/seed");
    spec.seed = seed.get<std::uint64_t>();
  }
  spec.validate();
  return spec;
}

std::vector<ComplexMatrix> load_observables(const std::string& path) {
  const json j = load_json_file(path);
  require_format(j, kObservablesFormat, path);
  const json& sites = require_field(j, "sites", path);
  if (!sites.is_array() || sites.empty())
    throw ParseError("expected non-empty array at " + path + "/sites");
  std::vector<ComplexMatrix> out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::string spath = path + "/sites/" + std::to_string(i);
    ComplexMatrix m = matrix_from_json(require_field(sites[i], "matrix", spath),
                                       spath + "/matrix");
    if (m.rows() != 2)
      throw ParseError("expected a 2x2 observable at " + spath + "/matrix");
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reports and CSV
// ---------------------------------------------------------------------------

std::string report_to_json_string(const BenchReport& report,
                                  const std::string& input_path) {
  json j;
  j["format"] = kReportFormat;
  j["tool_version"] = kVersion;
  j["input"] = {{"path", input_path},
                {"kind", report.input_kind},
                {"d", report.d}};
  j["tolerances"] = {{"hermiticity_tol", report.options.hermiticity_tol},
                     {"rank_tol", report.options.rank_tol},
                     {"span_tol", report.options.span_tol},
                     {"ds_threshold", report.options.ds_threshold},
                     {"symmetry_threshold", report.options.symmetry_threshold}};
  j["ds"] = {{"violation_identity", report.ds.violation_identity},
             {"violation_trace", report.ds.violation_trace},
             {"epsilon_lower", report.ds.epsilon_lower},
             {"epsilon_upper", report.ds.epsilon_upper}};
  j["rank"] = {{"eigenvalues", report.rank.eigenvalues},
               {"k", report.rank.k},
               {"span_dim", report.rank.span_dim},
               {"span_dim_centered_adjoint",
                report.rank.span_dim_centered_adjoint},
               {"bound_d", report.rank.bound_d},
               {"bound_k", report.rank.bound_k},
               {"satisfied", report.rank.satisfied},
               {"input_doubly_stochastic",
                report.rank.input_doubly_stochastic},
               {"mu", report.rank.mu},
               {"residue", report.rank.residue}};
  if (report.divisibility) {
    json pairs = json::array();
    for (const DefectSample& s : report.divisibility->defects)
      pairs.push_back({{"t", s.t}, {"t_prime", s.t_prime}, {"defect", s.defect}});
    j["divisibility"] = {{"max_defect", report.divisibility->max_defect},
                         {"pairs", std::move(pairs)}};
  } else {
    j["divisibility"] = nullptr;
  }
  if (report.symmetry) {
    json intervals = json::array();
    for (const SiteInterval& s : report.symmetry->site_intervals)
      intervals.push_back({s.lambda_min, s.lambda_max});
    json states = json::array();
    for (const ComplexVector& v : report.symmetry->maximizing_states) {
      json state = json::array();
      for (Index i = 0; i < v.size(); ++i) state.push_back(complex_to_json(v(i)));
      states.push_back(std::move(state));
    }
    j["symmetry"] = {{"deviation", report.symmetry->deviation},
                     {"site_intervals", std::move(intervals)},
                     {"positive_branch", report.symmetry->positive_branch},
                     {"maximizing_states", std::move(states)}};
  } else {
    j["symmetry"] = nullptr;
  }
  j["attribution"] = report.attribution;
  return j.dump(1) + "\n";
}

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

void write_rank_bound_csv(const std::string& path, Index d) {
  std::ostringstream os;
  os << "k,d2_minus_k_plus_1,k2_minus_k_plus_1\n";
  for (const RankBoundPoint& p : rank_bound_curve(d))
    os << p.k << "," << p.bound_d << "," << p.bound_k << "\n";
  write_text_file(path, os.str());
}

void write_metrics_vs_time_csv(const std::string& path,
                               const ChannelTrajectory& traj) {
  traj.validate();
  const ChoiMatrix id = ChoiMatrix::identity(traj.d);
  std::ostringstream os;
  os << "t,sigma_max_vs_identity,schatten2_vs_identity,schatten2_over_d,"
        "pure_state_max_vs_identity\n";
  for (const TrajectorySample& s : traj.samples) {
    const double sig = sigma_max_diff(s.choi, id);
    const double sch = schatten2_diff(s.choi, id);
    const double pure =
        max_pure_state_discrepancy(s.choi, id, /*restarts=*/8).value;
    os << format_double(s.t) << "," << format_double(sig) << ","
       << format_double(sch) << ","
       << format_double(sch / static_cast<double>(traj.d)) << ","
       << format_double(pure) << "\n";
  }
  write_text_file(path, os.str());
}

}  // namespace qcbench
