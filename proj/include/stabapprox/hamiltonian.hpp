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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabapprox/pauli.hpp"

namespace stab {

struct HamiltonianTerm {
  double coefficient = 0.0;  // hartree
  PauliString pauli;         // never the identity
};

// A qubit-form Hamiltonian: identity offset plus a weighted sum of
// non-identity Pauli strings. The nuclear repulsion is reporting metadata,
// never part of the electronic operator.
struct QubitHamiltonian {
  std::uint32_t num_qubits = 0;
  double identity_offset = 0.0;
  std::vector<HamiltonianTerm> terms;
  std::optional<double> nuclear_repulsion;
  std::string label;
};

// Text format, line oriented:
//   # comment
//   label: H2 d=0.74
//   nuclear_repulsion: 0.7151043
//   num_qubits: 2
//   -1.0534210769165204 * II
//   +0.39484436335590356 * IZ
// Headers must precede term lines. The first label fixes num_qubits unless a
// num_qubits header was given; all labels must match. Duplicate Pauli strings
// merge by coefficient addition; identity terms accumulate into the offset;
// terms that cancel to exactly zero are dropped. A file with no term lines is
// an "empty Hamiltonian" parse error.
QubitHamiltonian parse_hamiltonian(std::istream& in);
QubitHamiltonian parse_hamiltonian(const std::string& text);
QubitHamiltonian load_hamiltonian_file(const std::string& path);

// Round-trips through parse_hamiltonian with equal offset, term list and
// metadata.
std::string serialize_hamiltonian(const QubitHamiltonian& h);

// Term indices sorted by descending |coefficient|, ties kept in file order.
std::vector<std::size_t> sorted_terms(const QubitHamiltonian& h);

// electronic + nuclear_repulsion (0 when absent).
double total_energy(const QubitHamiltonian& h, double electronic);

// Drop terms with |coefficient| < floor. Off by default; exposed as a CLI
// flag because near-zero terms can be semantically meaningful.
void apply_coefficient_floor(QubitHamiltonian& h, double floor);

}  // namespace stab
