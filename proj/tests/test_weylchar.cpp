#include <doctest.h>

#include <functional>

#include "superdirac/weylchar.hpp"

using namespace superdirac;

namespace {

Weight W(std::vector<int> doubled) {
  return Weight(std::vector<Int>(doubled.begin(), doubled.end()));
}

// All valid highest weights with p_i <= pmax and p_n even.
std::vector<HighestWeight> grid(std::size_t n, int pmax) {
  std::vector<HighestWeight> out;
  std::vector<Int> p(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      out.push_back(HighestWeight::from_coefficients(p));
      return;
    }
    int step = (i + 1 == n) ? 2 : 1;
    for (int v = 0; v <= pmax; v += step) {
      p[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("highest-weight construction") {
  HighestWeight hw(W({4, 2}));  // (2,1) = omega_1 + 2 omega_2
  CHECK(hw.coefficients()[0] == 1);
  CHECK(hw.coefficients()[1] == 2);
  CHECK(HighestWeight::from_coefficients({Int(1), Int(2)}).lambda() ==
        W({4, 2}));
  CHECK_THROWS_AS(HighestWeight(W({1, 1})), SpinorialWeightError);
}

TEST_CASE("rank-one characters") {
  HighestWeight v(W({2}));  // Lambda = e1
  auto rec = character_B(v);
  CHECK(rec.dimension == 3);
  CHECK(rec.character.coefficient(W({2})) == 1);
  CHECK(rec.character.coefficient(W({0})) == 1);
  CHECK(rec.character.coefficient(W({-2})) == 1);

  HighestWeight v2(W({4}));  // Lambda = 2 e1
  auto rec2 = character_B(v2);
  CHECK(rec2.dimension == 5);
  for (int d : {-4, -2, 0, 2, 4}) CHECK(rec2.character.coefficient(W({d})) == 1);

  HighestWeight triv(W({0}));
  CHECK(character_B(triv).character == FormalCharacter::one(1));
  CHECK(character_B(triv).dimension == 1);
  CHECK(character_osp(triv).character == FormalCharacter::one(1));

  auto osp2 = character_osp(v2);
  CHECK(osp2.character == rec2.character);
  CHECK(osp2.dimension == 5);
}

TEST_CASE("rank-two sanity: Lambda = omega_1") {
  HighestWeight hw(W({2, 0}));
  auto b = character_B(hw);
  auto o = character_osp(hw);
  CHECK(b.dimension == 5);
  CHECK(o.character == b.character);
  CHECK(weyl_dimension(hw, RootKind::B) == 5);
}

TEST_CASE("character records satisfy their invariants") {
  for (std::size_t n : {1u, 2u}) {
    for (const auto& hw : grid(n, 2)) {
      auto rec = character_B(hw);
      // highest term is Lambda with coefficient one
      CHECK(rec.character.coefficient(hw.lambda()) == 1);
      CHECK(rec.character.leading().first == hw.lambda());
      CHECK(rec.dimension == rec.character.coefficient_sum());
      // W-invariance
      for_each_weyl(n, [&](const WeylElement& w, int) {
        for (const auto& [mu, c] : rec.character.terms())
          CHECK(rec.character.coefficient(w.apply(mu)) == c);
      });
    }
  }
}

TEST_CASE("Freudenthal oracle") {
  HighestWeight v2(W({4}));
  auto mult = freudenthal_multiplicities(v2);
  CHECK(mult.size() == 5);
  CHECK(mult.at(W({0})) == 1);
  CHECK(mult.at(W({4})) == 1);

  HighestWeight triv(W({0, 0}));
  auto m0 = freudenthal_multiplicities(triv);
  CHECK(m0.size() == 1);
  CHECK(m0.at(W({0, 0})) == 1);

  // multiplicity of the highest weight itself is always 1
  for (const auto& hw : grid(2, 3)) {
    auto m = freudenthal_multiplicities(hw);
    CHECK(m.at(hw.lambda()) == 1);
  }

  // B_2 adjoint-type check: Lambda = (1,1) = omega_2 doubled... use (2,2)
  // dim o(5) = 10: Lambda = e1+e2 is the adjoint highest weight
  HighestWeight adj(W({2, 2}));
  auto madj = freudenthal_multiplicities(adj);
  Int total = 0;
  for (const auto& [mu, m] : madj) total += m;
  CHECK(total == 10);
  CHECK(madj.at(W({0, 0})) == 2);  // Cartan multiplicity
}

TEST_CASE("three-way agreement across the acceptance grid (n <= 2 here)") {
  for (std::size_t n : {1u, 2u}) {
    for (const auto& hw : grid(n, 3)) {
      auto b = character_B(hw);
      auto o = character_osp(hw);
      auto f = freudenthal_multiplicities(hw);
      CHECK(b.character == o.character);
      CHECK(b.character.terms().size() == f.size());
      for (const auto& [mu, m] : f) CHECK(b.character.coefficient(mu) == m);
      CHECK(b.dimension == weyl_dimension(hw, RootKind::B));
    }
  }
}

TEST_CASE("weyl_dimension") {
  CHECK(weyl_dimension(HighestWeight(W({0, 0})), RootKind::B) == 1);
  CHECK(weyl_dimension(HighestWeight(W({4})), RootKind::B) == 5);
  CHECK(weyl_dimension(HighestWeight(W({2, 0})), RootKind::B) == 5);
  // C_2: Lambda = omega_1 is the defining 4-dimensional module
  CHECK(weyl_dimension(HighestWeight(W({2, 0})), RootKind::C) == 4);
}

TEST_CASE("infinitesimal characters agree between B and OSP") {
  HighestWeight hw(W({2, 0}));
  auto a = infinitesimal_character(hw, RootKind::OSP);
  auto b = infinitesimal_character(hw, RootKind::B);
  CHECK(a == W({5, 1}));  // (1,0) + (3/2,1/2) = (5/2,1/2)
  CHECK(a == b);
  for (const auto& h : grid(3, 2)) {
    CHECK(infinitesimal_character(h, RootKind::OSP) ==
          infinitesimal_character(h, RootKind::B));
  }
}

TEST_CASE("rank-one strings have multiplicity one throughout") {
  for (int m : {0, 2, 4, 6}) {
    HighestWeight hw(W({2 * m}));
    auto rec = character_B(hw);
    for (const auto& [mu, c] : rec.character.terms()) CHECK(c == 1);
    CHECK(rec.dimension == 2 * m + 1);
  }
}
