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

#include "stabapprox/report.hpp"

#include <cstdio>

namespace stab {

const char* outcome_name(AddOutcome outcome) {
  switch (outcome) {
    case AddOutcome::Added:
      return "added";
    case AddOutcome::RejectedAnticommutes:
      return "rejected-anticommutes";
    case AddOutcome::RedundantConsistent:
      return "redundant-consistent";
    case AddOutcome::RejectedContradicts:
      return "rejected-contradicts";
  }
  return "?";
}

std::string format_energy(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.7f", value);
  return buf;
}

RunReport build_run_report(const std::string& input, const QubitHamiltonian& h,
                           const ApproximationResult& result, Strategy strategy,
                           bool include_trace) {
  RunReport r;
  r.input = input;
  r.label = h.label;
  r.num_qubits = h.num_qubits;
  r.strategy = strategy == Strategy::TermOrder ? "term" : "closure";
  for (const auto& g : result.tableau.generators()) {
    r.generators.push_back(format_signed_label(g));
  }
  r.free_rank = result.free_rank;
  r.degeneracy = result.degeneracy;
  for (const auto& g : result.weakly_fixed) {
    r.weakly_fixed.push_back(format_signed_label(g));
  }
  r.electronic_energy = result.electronic_energy;
  r.nuclear_repulsion = h.nuclear_repulsion.value_or(0.0);
  r.total_energy = result.total_energy;
  for (const auto& completion : result.completions) {
    RunReport::CompletionView view;
    for (const auto& g : completion.generators) {
      view.generators.push_back(format_signed_label(g));
    }
    if (completion.state) {
      view.ket = format_ket(*completion.state);
      r.kets.push_back(view.ket);
    }
    r.completions.push_back(std::move(view));
  }
  r.include_trace = include_trace;
  if (include_trace) {
    for (const auto& entry : result.trace) {
      RunReport::TraceView view;
      view.candidate = format_signed_label(entry.candidate);
      view.outcome = outcome_name(entry.outcome);
      view.has_gain = entry.gain.has_value();
      view.gain = entry.gain.value_or(0.0);
      view.completion = entry.completion;
      r.trace.push_back(std::move(view));
    }
  }
  return r;
}

nlohmann::ordered_json report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["input"] = r.input;
  j["label"] = r.label;
  j["num_qubits"] = r.num_qubits;
  j["strategy"] = r.strategy;
  j["generators"] = r.generators;
  j["free_rank"] = r.free_rank;
  j["degeneracy"] = r.degeneracy;
  j["weakly_fixed"] = r.weakly_fixed;
  j["electronic_energy"] = r.electronic_energy;
  j["nuclear_repulsion"] = r.nuclear_repulsion;
  j["total_energy"] = r.total_energy;
  nlohmann::ordered_json completions = nlohmann::ordered_json::array();
  for (const auto& c : r.completions) {
    nlohmann::ordered_json jc;
    jc["generators"] = c.generators;
    jc["ket"] = c.ket;
    completions.push_back(std::move(jc));
  }
  j["completions"] = std::move(completions);
  j["kets"] = r.kets;
  if (r.include_trace) {
    nlohmann::ordered_json trace = nlohmann::ordered_json::array();
    for (const auto& t : r.trace) {
      nlohmann::ordered_json jt;
      jt["candidate"] = t.candidate;
      jt["outcome"] = t.outcome;
      if (t.has_gain) jt["gain"] = t.gain;
      jt["completion"] = t.completion;
      trace.push_back(std::move(jt));
    }
    j["trace"] = std::move(trace);
  }
  return j;
}

std::string report_to_text(const RunReport& r) {
  std::string out;
  out += "input: " + r.input + "\n";
  if (!r.label.empty()) out += "label: " + r.label + "\n";
  out += "qubits: " + std::to_string(r.num_qubits) + "\n";
  out += "strategy: " + r.strategy + "\n";
  out += "generators:\n";
  for (const auto& g : r.generators) out += "  " + g + "\n";
  out += "free rank: " + std::to_string(r.free_rank) + "\n";
  out += "degeneracy: " + std::to_string(r.degeneracy) + "\n";
  if (!r.weakly_fixed.empty()) {
    out += "weakly fixed:\n";
    for (const auto& g : r.weakly_fixed) out += "  " + g + "\n";
  }
  out += "electronic energy: " + format_energy(r.electronic_energy) + "\n";
  out += "nuclear repulsion: " + format_energy(r.nuclear_repulsion) + "\n";
  out += "total energy: " + format_energy(r.total_energy) + "\n";
  if (r.completions.size() == 1 && r.completions.front().generators.empty()) {
    if (!r.completions.front().ket.empty()) {
      out += "state: " + r.completions.front().ket + "\n";
    }
  } else {
    for (const auto& c : r.completions) {
      std::string gens;
      for (const auto& g : c.generators) {
        if (!gens.empty()) gens += " ";
        gens += g;
      }
      out += "completion [" + gens + "]";
      if (!c.ket.empty()) out += ": " + c.ket;
      out += "\n";
    }
  }
  if (r.include_trace) {
    out += "trace:\n";
    for (const auto& t : r.trace) {
      out += "  " + t.candidate + " " + t.outcome;
      if (t.has_gain) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), " gain=%.12g", t.gain);
        out += buf;
      }
      if (t.completion) out += " (completion)";
      out += "\n";
    }
  }
  return out;
}

}  // namespace stab
