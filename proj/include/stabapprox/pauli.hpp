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

#include <cstdint>
#include <string>
#include <string_view>

#include "stabapprox/errors.hpp"

namespace stab {

// Bit masks cap the register width.
inline constexpr std::uint32_t kMaxQubits = 64;

// An n-qubit Pauli string in binary symplectic form, phase-free.
// Bit q of x_bits is set iff qubit q carries X or Y; bit q of z_bits is set
// iff qubit q carries Z or Y. Labels are read right to left: the rightmost
// character of "ZXIX" acts on qubit 0.
struct PauliString {
  std::uint32_t num_qubits = 0;
  std::uint64_t x_bits = 0;
  std::uint64_t z_bits = 0;

  static PauliString identity(std::uint32_t num_qubits);

  bool is_identity() const { return x_bits == 0 && z_bits == 0; }

  // Letter at qubit q as one of 'I', 'X', 'Y', 'Z'.
  char letter(std::uint32_t qubit) const;

  bool operator==(const PauliString&) const = default;
};

// A Pauli string together with a power of i: operator = i^phase_exp * pauli.
// Hermitian operators (the only ones admitted as stabilizer generators or
// Hamiltonian terms) have phase_exp in {0, 2}, i.e. sign +1 or -1.
struct SignedPauli {
  PauliString pauli;
  std::uint8_t phase_exp = 0;  // mod 4

  SignedPauli() = default;
  SignedPauli(PauliString p, int phase)
      : pauli(p), phase_exp(static_cast<std::uint8_t>(((phase % 4) + 4) % 4)) {}

  static SignedPauli plus(PauliString p) { return SignedPauli(p, 0); }
  static SignedPauli minus(PauliString p) { return SignedPauli(p, 2); }

  bool is_hermitian() const { return (phase_exp & 1u) == 0; }

  // +1 or -1; only meaningful for Hermitian operators.
  int sign() const { return phase_exp == 0 ? +1 : -1; }

  bool operator==(const SignedPauli&) const = default;
};

// "IZ" -> Z on qubit 0 of a 2-qubit register. Throws ParseError on an empty
// label or any character outside {I, X, Y, Z}, naming the offender.
PauliString parse_label(std::string_view label);

// Inverse of parse_label.
std::string format_label(const PauliString& p);

// "+ZI" / "-IZ"; the sign prefix is mandatory.
SignedPauli parse_signed_label(std::string_view text);

std::string format_signed_label(const SignedPauli& p);

// Exact Pauli group product with phase tracked as a power of i mod 4.
SignedPauli multiply(const SignedPauli& a, const SignedPauli& b);

// True iff the symplectic form <a.x,b.z> + <a.z,b.x> is even.
bool commutes(const PauliString& a, const PauliString& b);

}  // namespace stab
