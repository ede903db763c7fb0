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

#ifndef QCBENCH_IO_HPP
#define QCBENCH_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "qcbench/benchmarks.hpp"
#include "qcbench/gatelab.hpp"

namespace qcbench {

// Validation behaviour when loading channel files. Warn prints to stderr
// and keeps going; Strict throws ValidationError. Measured Choi matrices
// carry sampling noise, so Warn is the default.
enum class ValidationMode { Warn, Strict };

// In-memory image of a channel file: exactly one payload is engaged.
struct ChannelFile {
  std::string kind;  // "choi" | "unitary" | "trajectory"
  std::optional<ChoiMatrix> choi;
  std::optional<ComplexMatrix> unitary;
  std::optional<ChannelTrajectory> trajectory;
};

// Channel files are JSON with complex entries stored as [re, im] pairs in
// row-major nested arrays and a mandatory "in-out" convention tag. Saving
// then loading reproduces every finite entry bitwise.
void save_channel(const std::string& path, const ChoiMatrix& c);
void save_unitary(const std::string& path, const ComplexMatrix& u);
void save_trajectory(const std::string& path, const ChannelTrajectory& traj);

ChannelFile load_channel(const std::string& path,
                         ValidationMode mode = ValidationMode::Warn,
                         double tol = kHermTol);

HamiltonianSpec load_hamiltonian_spec(const std::string& path);
LindbladSpec load_lindblad_spec(const std::string& path);
FluctuationSpec load_fluctuation_spec(const std::string& path);

// Per-site 2x2 hermitian observables for the symmetry benchmark.
std::vector<ComplexMatrix> load_observables(const std::string& path);

// Serialized report, including tool version and every tolerance used.
std::string report_to_json_string(const BenchReport& report,
                                  const std::string& input_path);

// CSV emission (locale independent, '.' decimal separator).
void write_rank_bound_csv(const std::string& path, Index d);
void write_metrics_vs_time_csv(const std::string& path,
                               const ChannelTrajectory& traj);

}  // namespace qcbench

#endif  // QCBENCH_IO_HPP
