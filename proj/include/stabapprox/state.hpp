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

#include <map>
#include <string>

#include "stabapprox/hamiltonian.hpp"
#include "stabapprox/tableau.hpp"

namespace stab {

// Sparse stabilizer state: exactly 2^support_log2 basis strings mapping to
// quarter-phase units (i^k), all sharing the normalization 1/sqrt(2^r).
// Exact by construction; no floating-point amplitudes.
struct StabilizerStateVector {
  std::uint32_t num_qubits = 0;
  std::uint32_t support_log2 = 0;
  std::map<std::uint64_t, std::uint8_t> amplitudes;  // basis -> i exponent mod 4
};

// Expand a complete tableau into its +1 joint eigenstate. The global phase is
// canonical: the lexicographically smallest support string has amplitude
// +1/sqrt(2^r). Throws on incomplete tableaus; throws CapacityError when the
// support would exceed 2^support_cap_log2, naming r.
StabilizerStateVector synthesize(const StabilizerTableau& t,
                                 std::uint32_t support_cap_log2 = 12);

// "(|00> - |11>)/sqrt(2)"; terms in ascending basis order, amplitudes
// rendered as +, -, +i, -i; single-term states render bare.
std::string format_ket(const StabilizerStateVector& s);

// Exact action: X bits permute basis strings, Z bits flip signs, Y both.
StabilizerStateVector apply_pauli(const SignedPauli& p, const StabilizerStateVector& s);

// <s|P|s>, exact; always one of -1, 0, +1 for a stabilizer state.
int pauli_expectation(const StabilizerStateVector& s, const SignedPauli& p);

// offset + sum of c * <s|P|s>, accumulated in term order.
double rayleigh_quotient(const QubitHamiltonian& h, const StabilizerStateVector& s);

bool equal_up_to_global_phase(const StabilizerStateVector& a,
                              const StabilizerStateVector& b);

}  // namespace stab
