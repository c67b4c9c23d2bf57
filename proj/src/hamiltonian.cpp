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

#include "stabapprox/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace stab {

namespace {

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto begin = s.find_first_not_of(ws);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(ws);
  return s.substr(begin, end - begin + 1);
}

double parse_real(std::string_view text, std::size_t line_no) {
  // from_chars accepts "-" but not the explicit "+" common in listings.
  std::string_view body = text;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const char* first = body.data();
  const char* last = body.data() + body.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (body.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": malformed real \"" +
                     std::string(text) + "\"");
  }
  if (!std::isfinite(value)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-finite coefficient");
  }
  return value;
}

std::string format_real(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

struct PauliKey {
  std::uint64_t x, z;
  bool operator==(const PauliKey&) const = default;
};

struct PauliKeyHash {
  std::size_t operator()(const PauliKey& k) const {
    return std::hash<std::uint64_t>{}(k.x * 0x9e3779b97f4a7c15ull ^ k.z);
  }
};

}  // namespace

QubitHamiltonian parse_hamiltonian(std::istream& in) {
  QubitHamiltonian h;
  std::optional<std::uint32_t> declared_qubits;
  bool saw_term_line = false;
  bool saw_identity = false;

  // Terms kept in first-appearance order while merging duplicates.
  std::vector<HamiltonianTerm> terms;
  std::unordered_map<PauliKey, std::size_t, PauliKeyHash> index;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto star = line.find('*');
    if (star == std::string_view::npos) {
      // Header line `key: value`.
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected `coefficient * label` or `key: value`");
      }
      if (saw_term_line) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": header after first term line");
      }
      const std::string key{trim(line.substr(0, colon))};
      const std::string_view value = trim(line.substr(colon + 1));
      if (key == "nuclear_repulsion") {
        h.nuclear_repulsion = parse_real(value, line_no);
      } else if (key == "label") {
        h.label = std::string(value);
      } else if (key == "num_qubits") {
        const double v = parse_real(value, line_no);
        if (v < 1 || v != std::floor(v) || v > kMaxQubits) {
          throw ParseError("line " + std::to_string(line_no) +
                           ": num_qubits must be a positive integer");
        }
        declared_qubits = static_cast<std::uint32_t>(v);
      } else {
        throw ParseError("line " + std::to_string(line_no) + ": unknown header key \"" +
                         key + "\"");
      }
      continue;
    }

    // Term line.
    saw_term_line = true;
    const std::string_view coeff_text = trim(line.substr(0, star));
    const std::string_view label_text = trim(line.substr(star + 1));
    const double coeff = parse_real(coeff_text, line_no);
    PauliString pauli;
    try {
      pauli = parse_label(label_text);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!declared_qubits) {
      declared_qubits = pauli.num_qubits;
    } else if (pauli.num_qubits != *declared_qubits) {
      throw ParseError("line " + std::to_string(line_no) + ": label \"" +
                       std::string(label_text) + "\" has " +
                       std::to_string(pauli.num_qubits) + " qubits, expected " +
                       std::to_string(*declared_qubits));
    }
    if (pauli.is_identity()) {
      h.identity_offset += coeff;
      saw_identity = true;
      continue;
    }
    const PauliKey key{pauli.x_bits, pauli.z_bits};
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, terms.size());
      terms.push_back(HamiltonianTerm{coeff, pauli});
    } else {
      terms[it->second].coefficient += coeff;
    }
  }

  if (!saw_term_line && !saw_identity) {
    throw ParseError("empty Hamiltonian: no term lines");
  }

  h.num_qubits = *declared_qubits;
  for (const auto& t : terms) {
    if (t.coefficient != 0.0) h.terms.push_back(t);
  }
  return h;
}

QubitHamiltonian parse_hamiltonian(const std::string& text) {
  std::istringstream in(text);
  return parse_hamiltonian(in);
}

QubitHamiltonian load_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open Hamiltonian file: " + path);
  }
  return parse_hamiltonian(in);
}

std::string serialize_hamiltonian(const QubitHamiltonian& h) {
  std::string out;
  if (!h.label.empty()) {
    out += "label: " + h.label + "\n";
  }
  if (h.nuclear_repulsion) {
    out += "nuclear_repulsion: " + format_real(*h.nuclear_repulsion) + "\n";
  }
  out += "num_qubits: " + std::to_string(h.num_qubits) + "\n";
  if (h.identity_offset != 0.0 || h.terms.empty()) {
    out += format_real(h.identity_offset) + " * " +
           format_label(PauliString::identity(h.num_qubits)) + "\n";
  }
  for (const auto& t : h.terms) {
    out += format_real(t.coefficient) + " * " + format_label(t.pauli) + "\n";
  }
  return out;
}

std::vector<std::size_t> sorted_terms(const QubitHamiltonian& h) {
  std::vector<std::size_t> order(h.terms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(h.terms[a].coefficient) > std::abs(h.terms[b].coefficient);
  });
  return order;
}

double total_energy(const QubitHamiltonian& h, double electronic) {
  return electronic + h.nuclear_repulsion.value_or(0.0);
}

void apply_coefficient_floor(QubitHamiltonian& h, double floor) {
  if (floor <= 0.0) return;
  std::erase_if(h.terms, [floor](const HamiltonianTerm& t) {
    return std::abs(t.coefficient) < floor;
  });
}

}  // namespace stab
