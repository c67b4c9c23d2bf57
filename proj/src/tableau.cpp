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

#include "stabapprox/tableau.hpp"

#include <algorithm>
#include <bit>

namespace stab {

namespace {

int highest_bit(std::uint64_t v) {
  return static_cast<int>(std::bit_width(v)) - 1;
}

// Symplectic form on (x << n | z) vectors: 1 iff the Paulis anticommute.
int symplectic_form(std::uint64_t a, std::uint64_t b, std::uint32_t n) {
  const std::uint64_t mask = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  const std::uint64_t ax = a >> n, az = a & mask;
  const std::uint64_t bx = b >> n, bz = b & mask;
  return (std::popcount(ax & bz) + std::popcount(az & bx)) & 1;
}

}  // namespace

StabilizerTableau::StabilizerTableau(std::uint32_t num_qubits)
    : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw DimensionError("tableau needs at least one qubit");
  }
  if (num_qubits > kMaxTableauQubits) {
    throw CapacityError("tableau supports at most " +
                        std::to_string(kMaxTableauQubits) + " qubits, got " +
                        std::to_string(num_qubits));
  }
}

std::uint64_t StabilizerTableau::to_vec(const PauliString& p) const {
  return (p.x_bits << num_qubits_) | p.z_bits;
}

PauliString StabilizerTableau::from_vec(std::uint64_t v) const {
  const std::uint64_t mask = (std::uint64_t{1} << num_qubits_) - 1;
  return PauliString{num_qubits_, v >> num_qubits_, v & mask};
}

SignedPauli StabilizerTableau::combo_product(std::uint64_t combo) const {
  SignedPauli acc = SignedPauli::plus(PauliString::identity(num_qubits_));
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if ((combo >> i) & 1u) acc = multiply(acc, generators_[i]);
  }
  return acc;
}

AddOutcome StabilizerTableau::classify(const SignedPauli& g) const {
  if (g.pauli.num_qubits != num_qubits_) {
    throw DimensionError("try_add: generator has " +
                         std::to_string(g.pauli.num_qubits) + " qubits, tableau has " +
                         std::to_string(num_qubits_));
  }
  if (!g.is_hermitian()) {
    throw std::invalid_argument("try_add: generator must carry a +/-1 sign, not +/-i");
  }
  if (g.pauli.is_identity()) {
    throw std::invalid_argument("try_add: identity is not a valid generator");
  }
  for (const auto& gen : generators_) {
    if (!commutes(gen.pauli, g.pauli)) return AddOutcome::RejectedAnticommutes;
  }
  const MembershipVerdict v = membership(g.pauli);
  if (v.kind == MembershipVerdict::Kind::InGroup) {
    return v.sign == g.sign() ? AddOutcome::RedundantConsistent
                              : AddOutcome::RejectedContradicts;
  }
  return AddOutcome::Added;
}

AddOutcome StabilizerTableau::try_add(const SignedPauli& g) {
  const AddOutcome outcome = classify(g);
  if (outcome != AddOutcome::Added) return outcome;

  const std::size_t gen_index = generators_.size();
  generators_.push_back(g);

  EchelonRow row;
  row.vec = to_vec(g.pauli);
  row.combo = std::uint64_t{1} << gen_index;
  for (const auto& r : rows_) {
    if ((row.vec >> r.pivot) & 1u) {
      row.vec ^= r.vec;
      row.combo ^= r.combo;
    }
  }
  row.pivot = highest_bit(row.vec);
  row.value = combo_product(row.combo);

  for (auto& r : rows_) {
    if ((r.vec >> row.pivot) & 1u) {
      r.vec ^= row.vec;
      r.combo ^= row.combo;
      r.value = combo_product(r.combo);
    }
  }
  rows_.push_back(row);
  std::sort(rows_.begin(), rows_.end(),
            [](const EchelonRow& a, const EchelonRow& b) { return a.pivot > b.pivot; });
  return AddOutcome::Added;
}

MembershipVerdict StabilizerTableau::membership(const PauliString& p) const {
  if (p.num_qubits != num_qubits_) {
    throw DimensionError("membership: qubit count mismatch");
  }
  for (const auto& gen : generators_) {
    if (!commutes(gen.pauli, p)) {
      return {MembershipVerdict::Kind::AnticommutesWithGroup, 0};
    }
  }
  std::uint64_t v = to_vec(p);
  std::uint64_t combo = 0;
  for (const auto& r : rows_) {
    if ((v >> r.pivot) & 1u) {
      v ^= r.vec;
      combo ^= r.combo;
    }
  }
  if (v != 0) {
    return {MembershipVerdict::Kind::CommutesNotMember, 0};
  }
  const SignedPauli prod = combo_product(combo);
  return {MembershipVerdict::Kind::InGroup, prod.sign()};
}

std::optional<int> StabilizerTableau::expectation(const PauliString& p) const {
  const MembershipVerdict v = membership(p);
  switch (v.kind) {
    case MembershipVerdict::Kind::InGroup:
      return v.sign;
    case MembershipVerdict::Kind::AnticommutesWithGroup:
      return 0;
    case MembershipVerdict::Kind::CommutesNotMember:
      return std::nullopt;
  }
  return std::nullopt;
}

bool StabilizerTableau::contains(const SignedPauli& g) const {
  const MembershipVerdict v = membership(g.pauli);
  return v.kind == MembershipVerdict::Kind::InGroup && v.sign == g.sign();
}

bool StabilizerTableau::same_group(const StabilizerTableau& other) const {
  if (num_qubits_ != other.num_qubits_ || rank() != other.rank()) return false;
  for (const auto& g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

std::vector<PauliString> StabilizerTableau::centralizer_completion() const {
  if (complete()) {
    throw std::invalid_argument("centralizer_completion: tableau is already complete");
  }
  const std::uint32_t n = num_qubits_;
  const std::uint32_t dims = 2 * n;

  // Null space of the anticommutation constraints: w must satisfy
  // form(w, g) = 0 for every generator, i.e. popcount(w & swapped(g)) even.
  std::vector<std::uint64_t> constraints;
  for (const auto& g : generators_) {
    constraints.push_back((g.pauli.z_bits << n) | g.pauli.x_bits);
  }
  // Row reduce the constraint matrix, tracking pivot columns (highest first).
  std::vector<int> pivot_cols;
  {
    std::vector<std::uint64_t> reduced;
    for (std::uint64_t c : constraints) {
      for (std::size_t i = 0; i < reduced.size(); ++i) {
        if ((c >> pivot_cols[i]) & 1u) c ^= reduced[i];
      }
      if (c != 0) {
        reduced.push_back(c);
        pivot_cols.push_back(highest_bit(c));
      }
    }
    constraints = std::move(reduced);
  }

  // Free columns parameterize the centralizer.
  std::vector<std::uint64_t> basis;
  for (int col = static_cast<int>(dims) - 1; col >= 0; --col) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), col) != pivot_cols.end()) {
      continue;
    }
    std::uint64_t w = std::uint64_t{1} << col;
    // Back-substitute pivot coordinates so every constraint row has even overlap.
    for (std::size_t i = constraints.size(); i-- > 0;) {
      if (std::popcount(w & constraints[i]) & 1) {
        w ^= std::uint64_t{1} << pivot_cols[i];
      }
    }
    basis.push_back(w);
  }

  // Reduce modulo the group and keep an independent set of coset reps.
  auto reduce_mod_group = [&](std::uint64_t v) {
    for (const auto& r : rows_) {
      if ((v >> r.pivot) & 1u) v ^= r.vec;
    }
    return v;
  };
  std::vector<std::uint64_t> reps;
  std::vector<int> rep_pivots;
  for (std::uint64_t w : basis) {
    std::uint64_t v = reduce_mod_group(w);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if ((v >> rep_pivots[i]) & 1u) v ^= reps[i];
    }
    if (v != 0) {
      reps.push_back(v);
      rep_pivots.push_back(highest_bit(v));
    }
  }
  // The quotient centralizer/group is symplectic of dimension 2*(n - rank).

  // Symplectic Gram-Schmidt: pull out hyperbolic pairs, keep one per pair.
  std::vector<PauliString> completion;
  std::vector<std::uint64_t> pool = reps;
  while (!pool.empty()) {
    const std::uint64_t u = pool.front();
    std::size_t partner = 0;
    bool found = false;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (symplectic_form(u, pool[i], n)) {
        partner = i;
        found = true;
        break;
      }
    }
    if (!found) {
      // Cannot happen on a non-degenerate quotient; guards malformed state.
      throw std::logic_error("centralizer quotient is degenerate");
    }
    const std::uint64_t w = pool[partner];
    std::vector<std::uint64_t> next;
    for (std::size_t i = 1; i < pool.size(); ++i) {
      if (i == partner) continue;
      std::uint64_t v = pool[i];
      if (symplectic_form(v, w, n)) v ^= u;
      if (symplectic_form(v, u, n)) v ^= w;
      if (v != 0) next.push_back(v);
    }
    pool = std::move(next);
    completion.push_back(from_vec(reduce_mod_group(u)));
  }
  return completion;
}

}  // namespace stab
