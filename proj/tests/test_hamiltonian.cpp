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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stabapprox/hamiltonian.hpp"

using namespace stab;

namespace {

const std::string kDataDir = STABAPPROX_DATA_DIR;

const char* kH2Equilibrium = R"(
-1.0534210769165204 * II
+0.39484436335590356 * IZ
-0.39484436335590367 * ZI
+0.1812104620151969 * XX
-0.011246157150821112 * ZZ
)";

}  // namespace

TEST_CASE("parsing the 2-qubit equilibrium listing") {
  const QubitHamiltonian h = parse_hamiltonian(std::string(kH2Equilibrium));
  CHECK(h.num_qubits == 2);
  CHECK(h.identity_offset == -1.0534210769165204);
  CHECK(h.terms.size() == 4);
  CHECK(h.terms[0].pauli == parse_label("IZ"));
  CHECK(h.terms[0].coefficient == 0.39484436335590356);
  CHECK_FALSE(h.nuclear_repulsion.has_value());
}

TEST_CASE("terms cancelling to zero are dropped") {
  const QubitHamiltonian h = parse_hamiltonian(std::string("1.0 * XX\n-1.0 * XX\n"));
  CHECK(h.terms.empty());
  CHECK(h.identity_offset == 0.0);
  CHECK(h.num_qubits == 2);
}

TEST_CASE("duplicate paulis merge by coefficient addition") {
  const QubitHamiltonian twice = parse_hamiltonian(std::string("0.25 * XZ\n0.5 * XZ\n"));
  const QubitHamiltonian once = parse_hamiltonian(std::string("0.75 * XZ\n"));
  REQUIRE(twice.terms.size() == 1);
  CHECK(twice.terms[0].coefficient == once.terms[0].coefficient);
}

TEST_CASE("4-qubit stretched fixture parses from disk") {
  const QubitHamiltonian h = load_hamiltonian_file(kDataDir + "/h2_d2.8_4q.ham");
  CHECK(h.num_qubits == 4);
  CHECK(h.identity_offset == -0.7340910665455848);
  CHECK(h.terms.size() == 14);
  CHECK(h.label == "H2 d=2.8 (4 qubits)");
  REQUIRE(h.nuclear_repulsion.has_value());
  CHECK(*h.nuclear_repulsion == 0.1889919);
}

TEST_CASE("headers, comments and whitespace") {
  const QubitHamiltonian h = parse_hamiltonian(std::string(
      "# a comment\n"
      "label: toy\n"
      "nuclear_repulsion: 0.25\n"
      "num_qubits: 2\n"
      "\n"
      "  1.5 * ZI \n"
      "\t-0.5*IZ\n"));
  CHECK(h.label == "toy");
  CHECK(h.nuclear_repulsion == 0.25);
  CHECK(h.num_qubits == 2);
  CHECK(h.terms.size() == 2);
}

TEST_CASE("parse errors name the offending line") {
  CHECK_THROWS_WITH_AS(parse_hamiltonian(std::string("1.0 * XX\n0.5 * XXX\n")),
                       doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hamiltonian(std::string("oops * XX\n")),
                       doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hamiltonian(std::string("1.0 * XQ\n")),
                       doctest::Contains("'Q'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hamiltonian(std::string("1.0 * XX\nlabel: late\n")),
                       doctest::Contains("header after first term"), ParseError);
  CHECK_THROWS_WITH_AS(parse_hamiltonian(std::string("# nothing\n")),
                       doctest::Contains("empty Hamiltonian"), ParseError);
  CHECK_THROWS_AS(parse_hamiltonian(std::string("num_qubits: 3\n1.0 * XX\n")), ParseError);
}

TEST_CASE("serialize then parse is the identity") {
  for (const char* name :
       {"/h2_d0.74_2q.ham", "/h2_d2.8_2q.ham", "/h2_d2.8_4q.ham", "/lih_d1.5_trunc.ham",
        "/lih_d5.0_trunc.ham"}) {
    const QubitHamiltonian h = load_hamiltonian_file(kDataDir + name);
    const QubitHamiltonian again = parse_hamiltonian(serialize_hamiltonian(h));
    CHECK(again.num_qubits == h.num_qubits);
    CHECK(again.identity_offset == h.identity_offset);
    CHECK(again.label == h.label);
    CHECK(again.nuclear_repulsion == h.nuclear_repulsion);
    REQUIRE(again.terms.size() == h.terms.size());
    for (std::size_t i = 0; i < h.terms.size(); ++i) {
      CHECK(again.terms[i].pauli == h.terms[i].pauli);
      CHECK(again.terms[i].coefficient == h.terms[i].coefficient);
    }
  }
}

TEST_CASE("sorted_terms: stretched 2-qubit order is XX, IZ, ZI, ZZ") {
  const QubitHamiltonian h = load_hamiltonian_file(kDataDir + "/h2_d2.8_2q.ham");
  const auto order = sorted_terms(h);
  REQUIRE(order.size() == 4);
  CHECK(format_label(h.terms[order[0]].pauli) == "XX");
  CHECK(format_label(h.terms[order[1]].pauli) == "IZ");
  CHECK(format_label(h.terms[order[2]].pauli) == "ZI");
  CHECK(format_label(h.terms[order[3]].pauli) == "ZZ");
}

TEST_CASE("sorted_terms: ties keep file order") {
  const QubitHamiltonian h =
      parse_hamiltonian(std::string("0.5 * XI\n-0.5 * IX\n0.5 * ZI\n"));
  const auto order = sorted_terms(h);
  CHECK(order == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("sorted_terms: 4-qubit dominance starts ZZZZ, ZZIZ, IZIZ, IZZZ") {
  const QubitHamiltonian h = load_hamiltonian_file(kDataDir + "/h2_d2.8_4q.ham");
  const auto order = sorted_terms(h);
  CHECK(format_label(h.terms[order[0]].pauli) == "ZZZZ");
  CHECK(format_label(h.terms[order[1]].pauli) == "ZZIZ");
  CHECK(format_label(h.terms[order[2]].pauli) == "IZIZ");
  CHECK(format_label(h.terms[order[3]].pauli) == "IZZZ");
  // Non-increasing magnitudes over the whole permutation.
  for (std::size_t i = 1; i < order.size(); ++i) {
    CHECK(std::abs(h.terms[order[i - 1]].coefficient) >=
          std::abs(h.terms[order[i]].coefficient));
  }
}

TEST_CASE("total_energy adds the reporting offset") {
  QubitHamiltonian h;
  h.num_qubits = 2;
  h.nuclear_repulsion = 0.7151043;
  CHECK(total_energy(h, -1.8318636) == doctest::Approx(-1.1167593).epsilon(1e-9));
  h.nuclear_repulsion.reset();
  CHECK(total_energy(h, -1.8318636) == -1.8318636);
  h.nuclear_repulsion = 0.1889919;
  CHECK(total_energy(h, -1.1216577) == doctest::Approx(-0.9326658).epsilon(1e-9));
}

TEST_CASE("coefficient floor drops small terms when asked") {
  QubitHamiltonian h = load_hamiltonian_file(kDataDir + "/h2_d2.8_2q.ham");
  REQUIRE(h.terms.size() == 4);
  apply_coefficient_floor(h, 0.0);
  CHECK(h.terms.size() == 4);  // default keeps near-zero terms
  apply_coefficient_floor(h, 1e-3);
  CHECK(h.terms.size() == 3);  // the ZZ term goes
}
