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

#include "stabapprox/greedy.hpp"

#include <cmath>

namespace stab {

namespace {

SignedPauli term_candidate(const HamiltonianTerm& term, bool preferred_sign) {
  // Preferred sign drives the term's contribution to -|c|.
  const bool negative = preferred_sign ? term.coefficient > 0 : term.coefficient < 0;
  return SignedPauli(term.pauli, negative ? 2 : 0);
}

struct Candidate {
  SignedPauli generator;
  double gain_value;
};

// Scan candidates (dominance order, preferred sign first) for the most
// negative gain; earlier candidates win ties.
std::optional<Candidate> best_candidate(const QubitHamiltonian& h,
                                        const std::vector<std::size_t>& order,
                                        const StabilizerTableau& t) {
  std::optional<Candidate> best;
  for (std::size_t idx : order) {
    const HamiltonianTerm& term = h.terms[idx];
    for (int pass = 0; pass < 2; ++pass) {
      const SignedPauli g = term_candidate(term, pass == 0);
      if (pass == 1 && g == term_candidate(term, true)) continue;  // c == 0 safety
      if (t.classify(g) != AddOutcome::Added) continue;
      const double value = gain(h, t, g);
      if (!best || value < best->gain_value) {
        best = Candidate{g, value};
      }
    }
  }
  return best;
}

void flag_if_weak(ApproximationResult& result, const SearchConfig& cfg,
                  const SignedPauli& g, double gain_value) {
  if (std::abs(gain_value) < cfg.near_degenerate_threshold) {
    result.weakly_fixed.push_back(g);
  }
}

// Zero-gain completion generators in policy order. At a genuine stall every
// addable candidate has |gain| <= gain_epsilon (a sign flip negates the
// gain), so the filter only guards against misuse.
std::vector<SignedPauli> completion_generators(const QubitHamiltonian& h,
                                               const std::vector<std::size_t>& order,
                                               const StabilizerTableau& fixed,
                                               const SearchConfig& cfg) {
  std::vector<SignedPauli> chosen;
  StabilizerTableau extended = fixed;
  while (!extended.complete()) {
    std::optional<SignedPauli> next;
    if (cfg.completion_policy == CompletionPolicy::HamiltonianTermsFirst) {
      for (std::size_t idx : order) {
        for (int pass = 0; pass < 2 && !next; ++pass) {
          const SignedPauli g = term_candidate(h.terms[idx], pass == 0);
          if (extended.classify(g) != AddOutcome::Added) continue;
          if (std::abs(gain(h, extended, g)) <= cfg.gain_epsilon) next = g;
        }
        if (next) break;
      }
    }
    if (!next) {
      // Fall back to the canonical centralizer representative.
      next = SignedPauli::plus(extended.centralizer_completion().front());
    }
    extended.try_add(*next);
    chosen.push_back(*next);
  }
  return chosen;
}

}  // namespace

double group_energy(const QubitHamiltonian& h, const StabilizerTableau& t) {
  if (h.num_qubits != t.num_qubits()) {
    throw DimensionError("group_energy: qubit count mismatch");
  }
  double energy = h.identity_offset;
  for (const auto& term : h.terms) {
    const std::optional<int> e = t.expectation(term.pauli);
    if (e && *e != 0) energy += term.coefficient * *e;
  }
  return energy;
}

double gain(const QubitHamiltonian& h, const StabilizerTableau& t, const SignedPauli& g) {
  if (t.classify(g) != AddOutcome::Added) {
    throw std::invalid_argument("gain: candidate is not addable");
  }
  StabilizerTableau grown = t;
  grown.try_add(g);
  double delta = 0.0;
  for (const auto& term : h.terms) {
    const int before = t.expectation(term.pauli).value_or(0);
    const int after = grown.expectation(term.pauli).value_or(0);
    if (after != before) delta += term.coefficient * (after - before);
  }
  return delta;
}

ApproximationResult run(const QubitHamiltonian& h, const SearchConfig& cfg) {
  if (h.num_qubits < 1) {
    throw DimensionError("run: Hamiltonian has no qubits");
  }
  if (h.terms.empty() && h.identity_offset == 0.0) {
    throw std::invalid_argument("run: empty Hamiltonian (no terms, no offset)");
  }
  if (cfg.gain_epsilon < 0 || cfg.gain_epsilon > cfg.near_degenerate_threshold) {
    throw std::invalid_argument("run: gain_epsilon must lie in [0, near_degenerate_threshold]");
  }

  const std::vector<std::size_t> order = sorted_terms(h);
  ApproximationResult result(StabilizerTableau(h.num_qubits));

  if (cfg.strategy == Strategy::TermOrder) {
    for (std::size_t idx : order) {
      if (result.tableau.complete()) break;
      const HamiltonianTerm& term = h.terms[idx];
      if (term.coefficient == 0.0) continue;
      const SignedPauli g = term_candidate(term, true);
      const AddOutcome outcome = result.tableau.classify(g);
      if (outcome == AddOutcome::Added) {
        const double value = gain(h, result.tableau, g);
        result.tableau.try_add(g);
        result.trace.push_back(TraceEntry{g, outcome, value, false});
        flag_if_weak(result, cfg, g, value);
      } else {
        result.trace.push_back(TraceEntry{g, outcome, std::nullopt, false});
      }
    }
  } else {
    while (!result.tableau.complete()) {
      const std::optional<Candidate> best = best_candidate(h, order, result.tableau);
      if (!best || best->gain_value >= -cfg.gain_epsilon) break;
      result.tableau.try_add(best->generator);
      result.trace.push_back(
          TraceEntry{best->generator, AddOutcome::Added, best->gain_value, false});
      flag_if_weak(result, cfg, best->generator, best->gain_value);
    }
  }

  result.free_rank = h.num_qubits - result.tableau.rank();
  if (result.free_rank > 62) {
    throw CapacityError("run: degeneracy 2^" + std::to_string(result.free_rank) +
                        " is not representable");
  }
  result.degeneracy = std::uint64_t{1} << result.free_rank;
  result.electronic_energy = group_energy(h, result.tableau);
  result.total_energy = total_energy(h, result.electronic_energy);

  if (result.free_rank <= cfg.enumeration_cap) {
    const std::vector<SignedPauli> base =
        result.free_rank == 0 ? std::vector<SignedPauli>{}
                              : completion_generators(h, order, result.tableau, cfg);
    for (const auto& g : base) {
      result.trace.push_back(TraceEntry{g, AddOutcome::Added, std::nullopt, true});
    }
    for (std::uint64_t pattern = 0; pattern < result.degeneracy; ++pattern) {
      Completion completion;
      StabilizerTableau extended = result.tableau;
      for (std::size_t i = 0; i < base.size(); ++i) {
        SignedPauli g = base[i];
        if ((pattern >> i) & 1u) {
          g.phase_exp = static_cast<std::uint8_t>((g.phase_exp + 2) & 3u);
        }
        extended.try_add(g);
        completion.generators.push_back(g);
      }
      if (cfg.synthesize_states) {
        completion.state = synthesize(extended, cfg.state_support_cap_log2);
      }
      result.completions.push_back(std::move(completion));
    }
  }
  return result;
}

}  // namespace stab
