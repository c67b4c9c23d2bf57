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

#include <complex>
#include <vector>

#include "stabapprox/hamiltonian.hpp"
#include "stabapprox/pauli.hpp"

namespace stab {

inline constexpr std::uint32_t kMaxExactQubits = 16;
inline constexpr std::uint32_t kMaxExhaustiveQubits = 3;

struct DenseState {
  std::uint32_t num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;  // size 2^num_qubits
};

// Exact action of offset*I + sum c_P * P without materializing the matrix.
DenseState pauli_matvec(const QubitHamiltonian& h, const DenseState& v);

struct GroundResult {
  double energy = 0.0;      // minimum eigenvalue of the electronic operator
  DenseState eigenvector;   // normalized
  double residual = 0.0;    // ||H v - E v||
};

// Minimum eigenvalue to 1e-8 absolute, deterministic for a given input.
// Dense Hermitian diagonalization for small registers, Lanczos on
// pauli_matvec above that. Hard CapacityError beyond kMaxExactQubits.
GroundResult ground_energy(const QubitHamiltonian& h);

struct ExhaustiveReport {
  double minimum = 0.0;
  std::vector<std::vector<SignedPauli>> argmin_generator_sets;
  std::uint64_t states_enumerated = 0;  // 6 / 60 / 1080 for n = 1 / 2 / 3
};

// Every pure stabilizer state, via all maximal isotropic groups times all
// sign patterns; the count is cross-checked against 2^n * prod(2^k + 1).
ExhaustiveReport exhaustive_stabilizer_min(const QubitHamiltonian& h);

}  // namespace stab
