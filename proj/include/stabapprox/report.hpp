// Copyright 2026 The stabapprox developers
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

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "stabapprox/greedy.hpp"

namespace stab {

// Flat, serialization-ready view of an approximation run. Text and JSON
// renderings carry the same numeric values; JSON keys keep a fixed order so
// output is byte-stable across round trips.
struct RunReport {
  std::string input;
  std::string label;
  std::uint32_t num_qubits = 0;
  std::string strategy;  // "term" or "closure"
  std::vector<std::string> generators;
  std::uint32_t free_rank = 0;
  std::uint64_t degeneracy = 1;
  std::vector<std::string> weakly_fixed;
  double electronic_energy = 0.0;
  double nuclear_repulsion = 0.0;
  double total_energy = 0.0;
  struct CompletionView {
    std::vector<std::string> generators;
    std::string ket;  // empty when states were not synthesized
  };
  std::vector<CompletionView> completions;
  std::vector<std::string> kets;
  bool include_trace = false;
  struct TraceView {
    std::string candidate;
    std::string outcome;
    bool has_gain = false;
    double gain = 0.0;
    bool completion = false;
  };
  std::vector<TraceView> trace;
};

RunReport build_run_report(const std::string& input, const QubitHamiltonian& h,
                           const ApproximationResult& result, Strategy strategy,
                           bool include_trace);

nlohmann::ordered_json report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

const char* outcome_name(AddOutcome outcome);

// Fixed 7-decimal rendering used for energies in text reports.
std::string format_energy(double value);

}  // namespace stab
