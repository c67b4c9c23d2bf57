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

#include "stabapprox/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "stabapprox/greedy.hpp"
#include "stabapprox/tableau.hpp"

namespace stab {

namespace {

using complexd = std::complex<double>;

constexpr complexd kQuarterPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_matvec_dims(const QubitHamiltonian& h, const DenseState& v) {
  if (h.num_qubits != v.num_qubits) {
    throw DimensionError("pauli_matvec: qubit count mismatch");
  }
  if (v.amplitudes.size() != (std::size_t{1} << v.num_qubits)) {
    throw DimensionError("pauli_matvec: state size is not 2^num_qubits");
  }
}

double norm2(const std::vector<complexd>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return std::sqrt(s);
}

// Deterministic start vector; mt19937 output is fixed by the standard.
std::vector<complexd> seeded_vector(std::size_t dim, std::uint32_t seed) {
  std::mt19937_64 rng(0x5a17ab1e00ull + seed);
  std::vector<complexd> v(dim);
  for (auto& a : v) {
    const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
    a = {re, im};
  }
  const double n = norm2(v);
  for (auto& a : v) a /= n;
  return v;
}

std::vector<complexd> matvec(const QubitHamiltonian& h, const std::vector<complexd>& v) {
  const std::size_t dim = v.size();
  std::vector<complexd> w(dim);
  for (std::size_t t = 0; t < dim; ++t) w[t] = h.identity_offset * v[t];
  for (const auto& term : h.terms) {
    const std::uint64_t x = term.pauli.x_bits;
    const std::uint64_t z = term.pauli.z_bits;
    const unsigned base = std::popcount(x & z) & 3u;
    for (std::size_t t = 0; t < dim; ++t) {
      const unsigned phase = (base + 2 * std::popcount(z & t)) & 3u;
      w[t ^ x] += term.coefficient * kQuarterPhases[phase] * v[t];
    }
  }
  return w;
}

// ---- dense path: symmetric Jacobi on the real embedding [[A,-B],[B,A]] ----

struct JacobiResult {
  std::vector<double> eigenvalues;            // ascending
  std::vector<std::vector<double>> vectors;   // column per eigenvalue
};

JacobiResult jacobi_symmetric(std::vector<std::vector<double>> a) {
  const std::size_t m = a.size();
  std::vector<std::vector<double>> v(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) v[i][i] = 1.0;

  double frob = 0.0;
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) frob += a[p][q] * a[p][q];
  const double stop = 1e-28 * std::max(1.0, frob);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p][q] * a[p][q];
    if (off < stop) break;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = p + 1; q < m; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double sign = theta >= 0 ? 1.0 : -1.0;
        const double t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a[i][i] < a[j][j]; });
  JacobiResult out;
  for (std::size_t i : order) {
    out.eigenvalues.push_back(a[i][i]);
    std::vector<double> col(m);
    for (std::size_t k = 0; k < m; ++k) col[k] = v[k][i];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

GroundResult ground_dense(const QubitHamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits;
  // Materialize H column by column through the matvec.
  std::vector<std::vector<complexd>> columns(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<complexd> e(dim, complexd{0, 0});
    e[j] = 1.0;
    columns[j] = matvec(h, e);
  }
  // Real embedding of the Hermitian matrix: [[Re, -Im], [Im, Re]].
  std::vector<std::vector<double>> m(2 * dim, std::vector<double>(2 * dim, 0.0));
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < dim; ++i) {
      const double re = columns[j][i].real();
      const double im = columns[j][i].imag();
      m[i][j] = re;
      m[i + dim][j + dim] = re;
      m[i + dim][j] = im;
      m[i][j + dim] = -im;
    }
  }
  const JacobiResult eig = jacobi_symmetric(std::move(m));

  GroundResult out;
  out.energy = eig.eigenvalues.front();
  out.eigenvector.num_qubits = h.num_qubits;
  out.eigenvector.amplitudes.resize(dim);
  const std::vector<double>& col = eig.vectors.front();
  for (std::size_t i = 0; i < dim; ++i) {
    out.eigenvector.amplitudes[i] = {col[i], col[i + dim]};
  }
  const double n = norm2(out.eigenvector.amplitudes);
  for (auto& a : out.eigenvector.amplitudes) a /= n;

  std::vector<complexd> hv = matvec(h, out.eigenvector.amplitudes);
  for (std::size_t i = 0; i < dim; ++i) hv[i] -= out.energy * out.eigenvector.amplitudes[i];
  out.residual = norm2(hv);
  return out;
}

// ---- iterative path: Lanczos with full reorthogonalization ----

// Eigen decomposition of a symmetric tridiagonal matrix by implicit-shift QL
// with accumulated eigenvectors (classic tql2 recurrence). d holds the
// diagonal, e the m-1 off-diagonals; z rows are transformed in place.
void tridiag_eigen(std::vector<double>& d, std::vector<double>& e,
                   std::vector<std::vector<double>>& z) {
  const std::size_t m = d.size();
  if (m == 0) return;
  e.resize(m, 0.0);  // sentinel
  for (std::size_t l = 0; l < m; ++l) {
    std::size_t iter = 0;
    std::size_t mm;
    do {
      for (mm = l; mm + 1 < m; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= 1e-300 + 2.3e-16 * dd) break;
      }
      if (mm != l) {
        if (iter++ == 60) throw std::runtime_error("tridiagonal QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (std::size_t i = mm; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[mm] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (auto& row : z) {
            f = row[i + 1];
            row[i + 1] = s * row[i] + c * f;
            row[i] = c * row[i] - s * f;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }
  e.resize(m - 1);
}

GroundResult ground_lanczos(const QubitHamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.num_qubits;
  double scale = std::abs(h.identity_offset);
  for (const auto& t : h.terms) scale += std::abs(t.coefficient);
  scale = std::max(scale, 1.0);

  const std::size_t max_basis = std::min<std::size_t>(dim, 200);
  std::vector<complexd> start = seeded_vector(dim, 1);

  GroundResult out;
  out.eigenvector.num_qubits = h.num_qubits;

  for (int restart = 0; restart < 12; ++restart) {
    std::vector<std::vector<complexd>> basis;
    std::vector<double> alpha, beta;
    basis.push_back(start);

    bool exhausted = false;
    for (std::size_t j = 0; j < max_basis; ++j) {
      std::vector<complexd> w = matvec(h, basis[j]);
      if (j > 0) {
        for (std::size_t i = 0; i < dim; ++i) w[i] -= beta[j - 1] * basis[j - 1][i];
      }
      complexd a{0, 0};
      for (std::size_t i = 0; i < dim; ++i) a += std::conj(basis[j][i]) * w[i];
      alpha.push_back(a.real());
      for (std::size_t i = 0; i < dim; ++i) w[i] -= alpha[j] * basis[j][i];
      // Full reorthogonalization, two passes.
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
          complexd c{0, 0};
          for (std::size_t i = 0; i < dim; ++i) c += std::conj(b[i]) * w[i];
          for (std::size_t i = 0; i < dim; ++i) w[i] -= c * b[i];
        }
      }
      const double b = norm2(w);
      if (b < 1e-13 * scale || j + 1 == max_basis) {
        exhausted = b < 1e-13 * scale;
        break;
      }
      beta.push_back(b);
      for (auto& c : w) c /= b;
      basis.push_back(std::move(w));
    }

    // Smallest Ritz pair of the tridiagonal projection.
    const std::size_t m = alpha.size();
    std::vector<double> d = alpha;
    std::vector<double> e = beta;  // always m - 1 entries
    std::vector<std::vector<double>> zrows(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < m; ++i) zrows[i][i] = 1.0;
    tridiag_eigen(d, e, zrows);
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < m; ++i) {
      if (d[i] < d[argmin]) argmin = i;
    }

    std::vector<complexd> ritz(dim, complexd{0, 0});
    for (std::size_t j = 0; j < m; ++j) {
      const double y = zrows[j][argmin];
      for (std::size_t i = 0; i < dim; ++i) ritz[i] += y * basis[j][i];
    }
    const double rn = norm2(ritz);
    for (auto& c : ritz) c /= rn;

    std::vector<complexd> hv = matvec(h, ritz);
    for (std::size_t i = 0; i < dim; ++i) hv[i] -= d[argmin] * ritz[i];
    const double residual = norm2(hv);

    out.energy = d[argmin];
    out.eigenvector.amplitudes = ritz;
    out.residual = residual;
    if (residual <= 1e-9 * scale || exhausted) break;
    start = std::move(ritz);
  }
  return out;
}

// ---- exhaustive stabilizer enumeration ----

std::uint64_t stabilizer_state_count(std::uint32_t n) {
  std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint32_t k = 1; k <= n; ++k) {
    count *= (std::uint64_t{1} << k) + 1;
  }
  return count;
}

}  // namespace

DenseState pauli_matvec(const QubitHamiltonian& h, const DenseState& v) {
  check_matvec_dims(h, v);
  DenseState out;
  out.num_qubits = v.num_qubits;
  out.amplitudes = matvec(h, v.amplitudes);
  return out;
}

GroundResult ground_energy(const QubitHamiltonian& h) {
  if (h.num_qubits > kMaxExactQubits) {
    throw CapacityError("ground_energy: " + std::to_string(h.num_qubits) +
                        " qubits exceeds the cap of " + std::to_string(kMaxExactQubits));
  }
  if (h.num_qubits <= 6) {
    return ground_dense(h);
  }
  return ground_lanczos(h);
}

ExhaustiveReport exhaustive_stabilizer_min(const QubitHamiltonian& h) {
  const std::uint32_t n = h.num_qubits;
  if (n > kMaxExhaustiveQubits) {
    throw CapacityError("exhaustive_stabilizer_min: " + std::to_string(n) +
                        " qubits exceeds the cap of " +
                        std::to_string(kMaxExhaustiveQubits));
  }

  // All non-identity Pauli vectors (x << n | z).
  const std::uint32_t num_paulis = (1u << (2 * n)) - 1;
  auto to_pauli = [n](std::uint32_t vec) {
    return PauliString{n, vec >> n, vec & ((1u << n) - 1)};
  };
  auto vec_commutes = [n, &to_pauli](std::uint32_t a, std::uint32_t b) {
    return commutes(to_pauli(a), to_pauli(b));
  };

  // Enumerate maximal isotropic subgroups, deduplicated by element set
  // (characteristic mask over the <= 63 non-identity vectors).
  std::unordered_set<std::uint64_t> seen;
  std::vector<std::vector<std::uint32_t>> groups;  // canonical generators

  std::vector<std::uint32_t> gens;
  auto emit = [&]() {
    // Span the group, build the membership mask.
    std::vector<std::uint32_t> elements{0};
    for (std::uint32_t g : gens) {
      const std::size_t sz = elements.size();
      for (std::size_t i = 0; i < sz; ++i) elements.push_back(elements[i] ^ g);
    }
    std::uint64_t mask = 0;
    for (std::uint32_t e : elements) {
      if (e != 0) mask |= std::uint64_t{1} << (e - 1);
    }
    if (seen.insert(mask).second) {
      groups.push_back(gens);
    }
  };

  // Depth-first over increasing vector ids keeps the search canonical-ish;
  // duplicates are removed by the mask set anyway.
  auto independent = [&](std::uint32_t candidate) {
    // XOR-span check over current gens (tiny sets).
    std::vector<std::uint32_t> span{0};
    for (std::uint32_t g : gens) {
      const std::size_t sz = span.size();
      for (std::size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ g);
    }
    return std::find(span.begin(), span.end(), candidate) == span.end();
  };
  auto search = [&](auto&& self, std::uint32_t next) -> void {
    if (gens.size() == n) {
      emit();
      return;
    }
    for (std::uint32_t v = next; v <= num_paulis; ++v) {
      bool ok = true;
      for (std::uint32_t g : gens) {
        if (!vec_commutes(g, v)) {
          ok = false;
          break;
        }
      }
      if (!ok || !independent(v)) continue;
      gens.push_back(v);
      self(self, v + 1);
      gens.pop_back();
    }
  };
  search(search, 1);

  ExhaustiveReport report;
  report.minimum = std::numeric_limits<double>::infinity();
  const std::uint64_t signs_per_group = std::uint64_t{1} << n;
  for (const auto& group : groups) {
    for (std::uint64_t pattern = 0; pattern < signs_per_group; ++pattern) {
      StabilizerTableau t(n);
      std::vector<SignedPauli> signed_gens;
      for (std::size_t i = 0; i < group.size(); ++i) {
        const int phase = ((pattern >> i) & 1u) ? 2 : 0;
        const SignedPauli g(to_pauli(group[i]), phase);
        signed_gens.push_back(g);
        t.try_add(g);
      }
      const double energy = group_energy(h, t);
      if (energy < report.minimum - 1e-15) {
        report.minimum = energy;
        report.argmin_generator_sets.clear();
        report.argmin_generator_sets.push_back(signed_gens);
      } else if (std::abs(energy - report.minimum) <= 1e-15) {
        report.argmin_generator_sets.push_back(signed_gens);
      }
      ++report.states_enumerated;
    }
  }

  if (report.states_enumerated != stabilizer_state_count(n)) {
    throw std::logic_error("exhaustive enumeration count mismatch: got " +
                           std::to_string(report.states_enumerated) + ", expected " +
                           std::to_string(stabilizer_state_count(n)));
  }
  return report;
}

}  // namespace stab
