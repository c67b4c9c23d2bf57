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

#include "stabapprox/pauli.hpp"

#include <bit>

namespace stab {

namespace {

void check_same_width(std::uint32_t a, std::uint32_t b, const char* op) {
  if (a != b) {
    throw DimensionError(std::string(op) + ": operands differ in qubit count (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

// Phase exponent of i in the single-qubit product a*b, indexed by
// (x + 2z) of each factor. Rows/cols: I, X, Z, Y.
// e.g. X*Z = -iY -> 3, Z*X = iY -> 1, X*Y = iZ -> 1.
constexpr std::uint8_t kPhaseTable[4][4] = {
    // b:  I  X  Z  Y
    {0, 0, 0, 0},  // a = I
    {0, 0, 3, 1},  // a = X
    {0, 1, 0, 3},  // a = Z
    {0, 3, 1, 0},  // a = Y
};

}  // namespace

PauliString PauliString::identity(std::uint32_t num_qubits) {
  return PauliString{num_qubits, 0, 0};
}

char PauliString::letter(std::uint32_t qubit) const {
  const bool x = (x_bits >> qubit) & 1u;
  const bool z = (z_bits >> qubit) & 1u;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

PauliString parse_label(std::string_view label) {
  if (label.empty()) {
    throw ParseError("empty Pauli label");
  }
  if (label.size() > kMaxQubits) {
    throw CapacityError("Pauli label longer than " + std::to_string(kMaxQubits) +
                        " qubits: " + std::to_string(label.size()));
  }
  PauliString p;
  p.num_qubits = static_cast<std::uint32_t>(label.size());
  for (std::size_t i = 0; i < label.size(); ++i) {
    // Leftmost character acts on the highest qubit index.
    const std::uint32_t qubit = p.num_qubits - 1 - static_cast<std::uint32_t>(i);
    switch (label[i]) {
      case 'I':
        break;
      case 'X':
        p.x_bits |= std::uint64_t{1} << qubit;
        break;
      case 'Y':
        p.x_bits |= std::uint64_t{1} << qubit;
        p.z_bits |= std::uint64_t{1} << qubit;
        break;
      case 'Z':
        p.z_bits |= std::uint64_t{1} << qubit;
        break;
      default:
        throw ParseError(std::string("invalid Pauli character '") + label[i] +
                         "' at position " + std::to_string(i));
    }
  }
  return p;
}

std::string format_label(const PauliString& p) {
  std::string label(p.num_qubits, 'I');
  for (std::uint32_t q = 0; q < p.num_qubits; ++q) {
    label[p.num_qubits - 1 - q] = p.letter(q);
  }
  return label;
}

SignedPauli parse_signed_label(std::string_view text) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-')) {
    throw ParseError("signed Pauli label must start with '+' or '-': \"" +
                     std::string(text) + "\"");
  }
  SignedPauli p;
  p.pauli = parse_label(text.substr(1));
  p.phase_exp = text[0] == '-' ? 2 : 0;
  return p;
}

std::string format_signed_label(const SignedPauli& p) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("cannot format non-Hermitian Pauli (phase +/-i)");
  }
  return (p.sign() < 0 ? "-" : "+") + format_label(p.pauli);
}

SignedPauli multiply(const SignedPauli& a, const SignedPauli& b) {
  check_same_width(a.pauli.num_qubits, b.pauli.num_qubits, "multiply");
  std::uint32_t phase = a.phase_exp + b.phase_exp;
  for (std::uint32_t q = 0; q < a.pauli.num_qubits; ++q) {
    const unsigned ai = ((a.pauli.x_bits >> q) & 1u) | (((a.pauli.z_bits >> q) & 1u) << 1);
    const unsigned bi = ((b.pauli.x_bits >> q) & 1u) | (((b.pauli.z_bits >> q) & 1u) << 1);
    phase += kPhaseTable[ai][bi];
  }
  SignedPauli out;
  out.pauli.num_qubits = a.pauli.num_qubits;
  out.pauli.x_bits = a.pauli.x_bits ^ b.pauli.x_bits;
  out.pauli.z_bits = a.pauli.z_bits ^ b.pauli.z_bits;
  out.phase_exp = static_cast<std::uint8_t>(phase & 3u);
  return out;
}

bool commutes(const PauliString& a, const PauliString& b) {
  check_same_width(a.num_qubits, b.num_qubits, "commutes");
  const int parity = (std::popcount(a.x_bits & b.z_bits) +
                      std::popcount(a.z_bits & b.x_bits)) &
                     1;
  return parity == 0;
}

}  // namespace stab
