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

#include <optional>
#include <vector>

#include "stabapprox/hamiltonian.hpp"
#include "stabapprox/state.hpp"
#include "stabapprox/tableau.hpp"

namespace stab {

enum class Strategy {
  TermOrder,     // scan terms by dominance, add -sign(c)*P when it fits
  ClosureAware,  // per step, pick the signed term candidate with the most
                 // negative closure gain; stop when no candidate helps
};

enum class CompletionPolicy {
  HamiltonianTermsFirst,  // zero-gain term candidates before centralizer elements
  CanonicalCentralizer,   // canonical centralizer representatives only
};

struct SearchConfig {
  Strategy strategy = Strategy::ClosureAware;
  double gain_epsilon = 1e-10;
  double near_degenerate_threshold = 1e-3;
  std::uint32_t enumeration_cap = 4;
  CompletionPolicy completion_policy = CompletionPolicy::HamiltonianTermsFirst;
  bool synthesize_states = true;
  std::uint32_t state_support_cap_log2 = 12;
};

struct TraceEntry {
  SignedPauli candidate;
  AddOutcome outcome;
  std::optional<double> gain;  // set for accepted generators
  bool completion = false;     // accepted while completing a degenerate family
};

// One member of the degenerate family: the sign-assigned completion
// generators plus the synthesized state (absent when states are disabled or
// over the support cap).
struct Completion {
  std::vector<SignedPauli> generators;
  std::optional<StabilizerStateVector> state;
};

struct ApproximationResult {
  explicit ApproximationResult(StabilizerTableau t) : tableau(std::move(t)) {}

  StabilizerTableau tableau;    // the fixed part, rank k
  std::uint32_t free_rank = 0;  // n - k
  std::uint64_t degeneracy = 1; // 2^free_rank
  double electronic_energy = 0.0;
  double total_energy = 0.0;
  std::vector<Completion> completions;  // populated when free_rank <= enumeration_cap
  std::vector<SignedPauli> weakly_fixed;
  std::vector<TraceEntry> trace;
};

// identity_offset plus the coefficients of terms with a determined +/-1
// expectation; anticommuting and undetermined terms contribute zero.
double group_energy(const QubitHamiltonian& h, const StabilizerTableau& t);

// Signed sum over the terms newly entering the group closure when g joins t,
// accumulated in term order. Requires try_add(t, g) == Added.
double gain(const QubitHamiltonian& h, const StabilizerTableau& t, const SignedPauli& g);

ApproximationResult run(const QubitHamiltonian& h, const SearchConfig& cfg);

}  // namespace stab
