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

#include "stabapprox/state.hpp"

#include <bit>

namespace stab {

namespace {

// Phase exponent picked up when i^e * P hits |t>: each Y contributes i, each
// Z or Y on a set bit contributes -1.
std::uint8_t action_phase(const SignedPauli& p, std::uint64_t t) {
  const unsigned e = p.phase_exp + std::popcount(p.pauli.x_bits & p.pauli.z_bits) +
                     2 * std::popcount(p.pauli.z_bits & t);
  return static_cast<std::uint8_t>(e & 3u);
}

std::string basis_string(std::uint64_t t, std::uint32_t n) {
  std::string s(n, '0');
  for (std::uint32_t q = 0; q < n; ++q) {
    if ((t >> q) & 1u) s[n - 1 - q] = '1';
  }
  return s;
}

}  // namespace

StabilizerStateVector synthesize(const StabilizerTableau& t,
                                 std::uint32_t support_cap_log2) {
  if (!t.complete()) {
    throw std::invalid_argument("synthesize: tableau is incomplete (rank " +
                                std::to_string(t.rank()) + " of " +
                                std::to_string(t.num_qubits()) + ")");
  }
  const std::uint32_t n = t.num_qubits();

  std::uint32_t r = 0;
  for (const auto& row : t.echelon()) {
    if (row.pivot >= static_cast<int>(n)) ++r;  // x-bearing row
  }
  if (r > support_cap_log2) {
    throw CapacityError("synthesize: state support 2^" + std::to_string(r) +
                        " exceeds the cap 2^" + std::to_string(support_cap_log2));
  }

  // Pure Z rows pin seed bits: the pivot bit is 1 exactly for minus signs.
  std::uint64_t seed = 0;
  for (const auto& row : t.echelon()) {
    if (row.pivot < static_cast<int>(n) && row.value.sign() < 0) {
      seed |= std::uint64_t{1} << row.pivot;
    }
  }

  StabilizerStateVector state;
  state.num_qubits = n;
  state.support_log2 = r;
  state.amplitudes[seed] = 0;

  // Projector product over the X-bearing rows doubles the support each time.
  for (const auto& row : t.echelon()) {
    if (row.pivot < static_cast<int>(n)) continue;
    const SignedPauli& g = row.value;
    std::map<std::uint64_t, std::uint8_t> expanded = state.amplitudes;
    for (const auto& [basis, phase] : state.amplitudes) {
      const std::uint64_t image = basis ^ g.pauli.x_bits;
      expanded[image] = static_cast<std::uint8_t>((phase + action_phase(g, basis)) & 3u);
    }
    state.amplitudes = std::move(expanded);
  }

  // Canonical global phase: smallest support string gets +1.
  const std::uint8_t lead = state.amplitudes.begin()->second;
  if (lead != 0) {
    for (auto& [basis, phase] : state.amplitudes) {
      phase = static_cast<std::uint8_t>((phase + 4 - lead) & 3u);
    }
  }
  return state;
}

std::string format_ket(const StabilizerStateVector& s) {
  static const char* kLead[] = {"", "i", "-", "-i"};
  std::string body;
  bool first = true;
  for (const auto& [basis, phase] : s.amplitudes) {
    if (first) {
      body += kLead[phase];
    } else {
      body += phase == 0 ? " + " : phase == 2 ? " - " : phase == 1 ? " + i" : " - i";
    }
    body += "|" + basis_string(basis, s.num_qubits) + ">";
    first = false;
  }
  if (s.support_log2 == 0) {
    return body;
  }
  const std::uint64_t denom = std::uint64_t{1} << s.support_log2;
  return "(" + body + ")/sqrt(" + std::to_string(denom) + ")";
}

StabilizerStateVector apply_pauli(const SignedPauli& p, const StabilizerStateVector& s) {
  if (p.pauli.num_qubits != s.num_qubits) {
    throw DimensionError("apply_pauli: qubit count mismatch");
  }
  StabilizerStateVector out;
  out.num_qubits = s.num_qubits;
  out.support_log2 = s.support_log2;
  for (const auto& [basis, phase] : s.amplitudes) {
    out.amplitudes[basis ^ p.pauli.x_bits] =
        static_cast<std::uint8_t>((phase + action_phase(p, basis)) & 3u);
  }
  return out;
}

int pauli_expectation(const StabilizerStateVector& s, const SignedPauli& p) {
  // <s|P|s> = 2^-r * sum_t i^(phase(Pt) - phase(t)) over surviving strings.
  int counts[4] = {0, 0, 0, 0};
  for (const auto& [basis, phase] : s.amplitudes) {
    const std::uint64_t image = basis ^ p.pauli.x_bits;
    const auto it = s.amplitudes.find(image);
    if (it == s.amplitudes.end()) continue;
    // Contribution to <s|P|s> at position `image`.
    const unsigned d = (action_phase(p, basis) + phase + 4 - it->second) & 3u;
    ++counts[d];
  }
  const int re_units = counts[0] - counts[2];
  const int im_units = counts[1] - counts[3];
  if (im_units != 0) {
    throw std::invalid_argument("pauli_expectation: non-Hermitian operator");
  }
  const std::int64_t support = std::int64_t{1} << s.support_log2;
  if (re_units == 0) return 0;
  if (re_units == support) return +1;
  if (re_units == -support) return -1;
  throw std::logic_error("pauli_expectation: fractional expectation on a stabilizer state");
}

double rayleigh_quotient(const QubitHamiltonian& h, const StabilizerStateVector& s) {
  double energy = h.identity_offset;
  for (const auto& term : h.terms) {
    const int e = pauli_expectation(s, SignedPauli::plus(term.pauli));
    if (e != 0) energy += term.coefficient * e;
  }
  return energy;
}

bool equal_up_to_global_phase(const StabilizerStateVector& a,
                              const StabilizerStateVector& b) {
  if (a.num_qubits != b.num_qubits || a.support_log2 != b.support_log2 ||
      a.amplitudes.size() != b.amplitudes.size()) {
    return false;
  }
  int delta = -1;
  for (auto ia = a.amplitudes.begin(), ib = b.amplitudes.begin();
       ia != a.amplitudes.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    const int d = (ib->second + 4 - ia->second) & 3;
    if (delta < 0) delta = d;
    if (d != delta) return false;
  }
  return true;
}

}  // namespace stab
