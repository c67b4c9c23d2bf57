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

#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stabapprox/greedy.hpp"
#include "stabapprox/oracles.hpp"
#include "stabapprox/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerify = 4;

struct CommonOptions {
  std::string strategy = "closure";
  double gain_epsilon = 1e-10;
  double near_degenerate_threshold = 1e-3;
  unsigned enumeration_cap = 4;
  double nuclear_repulsion = 0.0;
  bool nuclear_repulsion_set = false;
  double coefficient_floor = 0.0;
  bool no_states = false;
  bool json = false;
  bool trace = false;
  unsigned jobs = 1;
};

stab::SearchConfig make_config(const CommonOptions& opts) {
  stab::SearchConfig cfg;
  cfg.strategy = opts.strategy == "term" ? stab::Strategy::TermOrder
                                         : stab::Strategy::ClosureAware;
  cfg.gain_epsilon = opts.gain_epsilon;
  cfg.near_degenerate_threshold = opts.near_degenerate_threshold;
  cfg.enumeration_cap = opts.enumeration_cap;
  cfg.synthesize_states = !opts.no_states;
  return cfg;
}

stab::QubitHamiltonian load_input(const std::string& path, const CommonOptions& opts) {
  stab::QubitHamiltonian h = stab::load_hamiltonian_file(path);
  if (opts.nuclear_repulsion_set) h.nuclear_repulsion = opts.nuclear_repulsion;
  stab::apply_coefficient_floor(h, opts.coefficient_floor);
  return h;
}

struct FileOutput {
  std::string text;
  int exit_code = kExitOk;
};

int classify_exception(const std::exception& e) {
  if (dynamic_cast<const stab::CapacityError*>(&e)) return kExitCapacity;
  return kExitParse;
}

// Runs `work` per file, optionally in parallel, printing outputs in input
// order. The process exit code is the first nonzero per-file code.
template <typename Work>
int for_each_file(const std::vector<std::string>& files, unsigned jobs, Work&& work) {
  std::vector<FileOutput> outputs(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) outputs[i] = work(files[i]);
  } else {
    std::vector<std::future<FileOutput>> futures;
    futures.reserve(files.size());
    for (const auto& f : files) {
      futures.push_back(std::async(std::launch::async, work, f));
    }
    for (std::size_t i = 0; i < files.size(); ++i) outputs[i] = futures[i].get();
  }
  int exit_code = kExitOk;
  for (std::size_t i = 0; i < outputs.size(); ++i) {
    if (i > 0 && !outputs[i].text.empty() && outputs.size() > 1) std::cout << "\n";
    std::cout << outputs[i].text;
    if (exit_code == kExitOk && outputs[i].exit_code != kExitOk) {
      exit_code = outputs[i].exit_code;
    }
  }
  std::cout.flush();
  return exit_code;
}

FileOutput approx_one(const std::string& path, const CommonOptions& opts) {
  FileOutput out;
  try {
    const stab::QubitHamiltonian h = load_input(path, opts);
    const stab::SearchConfig cfg = make_config(opts);
    const stab::ApproximationResult result = stab::run(h, cfg);
    const stab::RunReport report =
        stab::build_run_report(path, h, result, cfg.strategy, opts.trace);
    out.text = opts.json ? stab::report_to_json(report).dump(2) + "\n"
                         : stab::report_to_text(report);
  } catch (const std::exception& e) {
    out.text = std::string("error: ") + e.what() + "\n";
    out.exit_code = classify_exception(e);
  }
  return out;
}

FileOutput exact_one(const std::string& path, const CommonOptions& opts) {
  FileOutput out;
  try {
    const stab::QubitHamiltonian h = load_input(path, opts);
    const stab::GroundResult ground = stab::ground_energy(h);
    const double total = stab::total_energy(h, ground.energy);
    if (opts.json) {
      nlohmann::ordered_json j;
      j["input"] = path;
      j["label"] = h.label;
      j["num_qubits"] = h.num_qubits;
      j["ground_electronic_energy"] = ground.energy;
      j["nuclear_repulsion"] = h.nuclear_repulsion.value_or(0.0);
      j["ground_total_energy"] = total;
      j["residual"] = ground.residual;
      out.text = j.dump(2) + "\n";
    } else {
      out.text += "input: " + path + "\n";
      if (!h.label.empty()) out.text += "label: " + h.label + "\n";
      out.text += "qubits: " + std::to_string(h.num_qubits) + "\n";
      out.text += "ground electronic energy: " + stab::format_energy(ground.energy) + "\n";
      out.text += "nuclear repulsion: " +
                  stab::format_energy(h.nuclear_repulsion.value_or(0.0)) + "\n";
      out.text += "ground total energy: " + stab::format_energy(total) + "\n";
      char buf[48];
      std::snprintf(buf, sizeof(buf), "residual: %.3e\n", ground.residual);
      out.text += buf;
    }
  } catch (const std::exception& e) {
    out.text = std::string("error: ") + e.what() + "\n";
    out.exit_code = classify_exception(e);
  }
  return out;
}

FileOutput verify_one(const std::string& path, const CommonOptions& opts,
                      bool inject_state_error) {
  FileOutput out;
  try {
    const stab::QubitHamiltonian h = load_input(path, opts);
    const stab::SearchConfig cfg = make_config(opts);
    const stab::ApproximationResult result = stab::run(h, cfg);

    out.text += "input: " + path + "\n";
    out.text += "strategy: " + std::string(cfg.strategy == stab::Strategy::TermOrder
                                               ? "term"
                                               : "closure") + "\n";
    out.text += "electronic energy: " + stab::format_energy(result.electronic_energy) + "\n";

    bool ok = true;

    // Cross-check: the synthesized states must reproduce the group energy.
    double max_rayleigh_gap = 0.0;
    std::size_t states_checked = 0;
    for (const auto& completion : result.completions) {
      if (!completion.state) continue;
      stab::StabilizerStateVector state = *completion.state;
      if (inject_state_error && !state.amplitudes.empty()) {
        auto it = state.amplitudes.begin();
        it->second = static_cast<std::uint8_t>((it->second + 2) & 3u);
      }
      stab::StabilizerTableau extended = result.tableau;
      for (const auto& g : completion.generators) extended.try_add(g);
      const double expected = stab::group_energy(h, extended);
      const double actual = stab::rayleigh_quotient(h, state);
      max_rayleigh_gap = std::max(max_rayleigh_gap, std::abs(expected - actual));
      ++states_checked;
    }
    if (states_checked > 0) {
      char buf[80];
      std::snprintf(buf, sizeof(buf), "rayleigh check: %zu state(s), max gap %.3e\n",
                    states_checked, max_rayleigh_gap);
      out.text += buf;
      if (max_rayleigh_gap > 1e-9) ok = false;
    }

    if (h.num_qubits <= stab::kMaxExhaustiveQubits) {
      const stab::ExhaustiveReport exhaustive = stab::exhaustive_stabilizer_min(h);
      const double gap = result.electronic_energy - exhaustive.minimum;
      out.text += "exhaustive minimum: " + stab::format_energy(exhaustive.minimum) +
                  "  gap: " + stab::format_energy(gap) + "\n";
      if (gap < -1e-9) ok = false;  // greedy can never beat the exhaustive oracle
    }
    if (h.num_qubits <= stab::kMaxExactQubits) {
      const stab::GroundResult ground = stab::ground_energy(h);
      const double gap = result.electronic_energy - ground.energy;
      out.text += "exact ground electronic: " + stab::format_energy(ground.energy) +
                  "  gap: " + stab::format_energy(gap) + "\n";
      if (gap < -1e-9) ok = false;
    }

    out.text += ok ? "verdict: ok\n" : "verdict: FAILED\n";
    if (!ok) out.exit_code = kExitVerify;
  } catch (const std::exception& e) {
    out.text = std::string("error: ") + e.what() + "\n";
    out.exit_code = classify_exception(e);
  }
  return out;
}

int ket_main(const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) {
    std::cout << "error: cannot open generator file: " << path << "\n";
    return kExitParse;
  }
  std::vector<stab::SignedPauli> generators;
  std::string line;
  std::size_t line_no = 0;
  try {
    std::optional<stab::StabilizerTableau> tableau;
    while (std::getline(in, line)) {
      ++line_no;
      std::string trimmed;
      for (char c : line) {
        if (!isspace(static_cast<unsigned char>(c))) trimmed += c;
      }
      if (trimmed.empty() || trimmed[0] == '#') continue;
      const stab::SignedPauli g = stab::parse_signed_label(trimmed);
      if (!tableau) tableau.emplace(g.pauli.num_qubits);
      const stab::AddOutcome outcome = tableau->try_add(g);
      if (outcome != stab::AddOutcome::Added) {
        std::cout << "error: line " << line_no << " (" << trimmed
                  << "): " << stab::outcome_name(outcome) << "\n";
        return kExitParse;
      }
      generators.push_back(g);
    }
    if (!tableau || !tableau->complete()) {
      std::cout << "error: generator set is incomplete (rank "
                << (tableau ? tableau->rank() : 0) << " of "
                << (tableau ? tableau->num_qubits() : 0) << ")\n";
      return kExitParse;
    }
    const stab::StabilizerStateVector state = stab::synthesize(*tableau);
    if (json) {
      nlohmann::ordered_json j;
      j["input"] = path;
      j["num_qubits"] = tableau->num_qubits();
      j["ket"] = stab::format_ket(state);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << stab::format_ket(state) << "\n";
    }
  } catch (const stab::CapacityError& e) {
    std::cout << "error: line " << line_no << ": " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cout << "error: line " << line_no << ": " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}

void add_common_flags(CLI::App* cmd, CommonOptions& opts, bool search_flags) {
  if (search_flags) {
    cmd->add_option("--strategy", opts.strategy, "Generator selection strategy")
        ->check(CLI::IsMember({"term", "closure"}))
        ->capture_default_str();
    cmd->add_option("--gain-epsilon", opts.gain_epsilon,
                    "Minimum energy decrease for closure-aware acceptance")
        ->capture_default_str();
    cmd->add_option("--near-degenerate-threshold", opts.near_degenerate_threshold,
                    "Flag generators whose |gain| falls below this")
        ->capture_default_str();
    cmd->add_option("--enumeration-cap", opts.enumeration_cap,
                    "Max free rank for which all completions are enumerated")
        ->capture_default_str();
    cmd->add_flag("--no-states", opts.no_states, "Skip state synthesis");
    cmd->add_flag("--trace", opts.trace, "Include the candidate decision log");
  }
  cmd->add_option("--nuclear-repulsion",
                  [&opts](const std::vector<std::string>& vals) {
                    try {
                      opts.nuclear_repulsion = std::stod(vals.front());
                    } catch (const std::exception&) {
                      return false;
                    }
                    opts.nuclear_repulsion_set = true;
                    return true;
                  },
                  "Override the nuclear repulsion header (hartree)");
  cmd->add_option("--coeff-floor", opts.coefficient_floor,
                  "Drop terms with |coefficient| below this (default: keep all)")
      ->capture_default_str();
  cmd->add_flag("--json", opts.json, "Machine-readable output");
  cmd->add_option("--jobs", opts.jobs, "Process input files in parallel")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heuristic stabilizer ground-state approximation for qubit Hamiltonians"};
  app.require_subcommand(1);

  CommonOptions approx_opts, exact_opts, verify_opts;
  std::vector<std::string> approx_files, exact_files, verify_files;
  std::string ket_file;
  bool ket_json = false;
  bool inject_state_error = false;

  CLI::App* approx = app.add_subcommand(
      "approx", "Approximate the ground state with greedy stabilizer selection");
  approx->add_option("files", approx_files, "Hamiltonian files")->required();
  add_common_flags(approx, approx_opts, true);

  CLI::App* exact = app.add_subcommand("exact", "Exact lowest eigenvalue (desk-scale oracle)");
  exact->add_option("files", exact_files, "Hamiltonian files")->required();
  add_common_flags(exact, exact_opts, false);

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the approximation and cross-check it against the oracles");
  verify->add_option("files", verify_files, "Hamiltonian files")->required();
  add_common_flags(verify, verify_opts, true);
  verify->add_flag("--inject-state-error", inject_state_error, "")->group("");

  CLI::App* ket = app.add_subcommand("ket", "Synthesize the state of a generator list");
  ket->add_option("file", ket_file, "Generator list file")->required();
  ket->add_flag("--json", ket_json, "Machine-readable output");

  CLI11_PARSE(app, argc, argv);

  if (approx->parsed()) {
    return for_each_file(approx_files, approx_opts.jobs,
                         [&](const std::string& f) { return approx_one(f, approx_opts); });
  }
  if (exact->parsed()) {
    return for_each_file(exact_files, exact_opts.jobs,
                         [&](const std::string& f) { return exact_one(f, exact_opts); });
  }
  if (verify->parsed()) {
    return for_each_file(verify_files, verify_opts.jobs, [&](const std::string& f) {
      return verify_one(f, verify_opts, inject_state_error);
    });
  }
  return ket_main(ket_file, ket_json);
}
