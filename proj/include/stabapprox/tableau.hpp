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

#include "stabapprox/pauli.hpp"

namespace stab {

// Echelon rows use 2n-bit symplectic vectors in one 64-bit word.
inline constexpr std::uint32_t kMaxTableauQubits = 32;

enum class AddOutcome {
  Added,                 // independent, commuting: tableau grew by one
  RejectedAnticommutes,  // anticommutes with some generator
  RedundantConsistent,   // already in the group with the same sign
  RejectedContradicts,   // in the group with the opposite sign
};

struct MembershipVerdict {
  enum class Kind { InGroup, AnticommutesWithGroup, CommutesNotMember };
  Kind kind;
  int sign = 0;  // +1 or -1 when kind == InGroup
};

// A growing set of signed, mutually commuting, independent Pauli generators
// with a sign-tracked reduced echelon cache over the binary symplectic
// vectors. Value semantics: queries are const, try_add is the only mutation.
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::uint32_t num_qubits);

  std::uint32_t num_qubits() const { return num_qubits_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(generators_.size()); }
  bool complete() const { return rank() == num_qubits_; }
  const std::vector<SignedPauli>& generators() const { return generators_; }

  // What try_add would do, without mutating.
  AddOutcome classify(const SignedPauli& g) const;

  // Throws on identity candidates, +/-i phases and width mismatches.
  AddOutcome try_add(const SignedPauli& g);

  MembershipVerdict membership(const PauliString& p) const;

  // +1/-1 for group members (signed), 0 for anticommuting strings, nullopt
  // when the string commutes but is undetermined (possible only at rank < n).
  std::optional<int> expectation(const PauliString& p) const;

  // Membership with a specific sign.
  bool contains(const SignedPauli& g) const;

  bool same_group(const StabilizerTableau& other) const;

  // num_qubits - rank unsigned Paulis that commute with the group and each
  // other and are jointly independent of it; adding all of them (any signs)
  // completes the tableau. Symplectic Gram-Schmidt over the centralizer,
  // candidates reduced to canonical coset representatives mod the group.
  // Throws when the tableau is already complete.
  std::vector<PauliString> centralizer_completion() const;

  // Echelon rows exposed for state synthesis: each row is the phase-exact
  // product of the generators in its expression mask. Rows are in reduced
  // echelon form with columns ordered x(n-1)..x0, z(n-1)..z0, sorted by
  // descending pivot, so rows with x-bits come first and their x-parts are
  // independent.
  struct EchelonRow {
    std::uint64_t vec = 0;    // (x_bits << n) | z_bits
    std::uint64_t combo = 0;  // expression mask over generators()
    int pivot = -1;           // highest set bit of vec
    SignedPauli value;        // product of generators in combo
  };
  const std::vector<EchelonRow>& echelon() const { return rows_; }

 private:
  std::uint64_t to_vec(const PauliString& p) const;
  PauliString from_vec(std::uint64_t v) const;
  SignedPauli combo_product(std::uint64_t combo) const;

  std::uint32_t num_qubits_;
  std::vector<SignedPauli> generators_;
  std::vector<EchelonRow> rows_;
};

}  // namespace stab
