#include <doctest.h>

#include <random>

#include "superdirac/charring.hpp"

using namespace superdirac;

namespace {

Weight W(std::vector<int> doubled) {
  return Weight(std::vector<Int>(doubled.begin(), doubled.end()));
}

FormalCharacter random_sparse(std::mt19937& rng, std::size_t rank,
                              int nterms) {
  std::uniform_int_distribution<int> coord(-6, 6), coef(-5, 5);
  FormalCharacter f(rank);
  for (int t = 0; t < nterms; ++t) {
    std::vector<Int> d(rank);
    for (auto& v : d) v = coord(rng);
    f.add_term(Weight(std::move(d)), coef(rng));
  }
  return f;
}

}  // namespace

TEST_CASE("ring operations") {
  // (e^{e1} + e^{-e1}) + (-e^{-e1}) = e^{e1}
  auto f = FormalCharacter::monomial(W({2})) + FormalCharacter::monomial(W({-2}));
  auto g = FormalCharacter::monomial(W({-2}), -1);
  CHECK(f + g == FormalCharacter::monomial(W({2})));

  // (e^{e1/2} - e^{-e1/2}) (e^{e1/2} + e^{-e1/2}) = e^{e1} - e^{-e1}
  auto a = FormalCharacter::monomial(W({1})) - FormalCharacter::monomial(W({-1}));
  auto b = FormalCharacter::monomial(W({1})) + FormalCharacter::monomial(W({-1}));
  auto expect = FormalCharacter::monomial(W({2})) - FormalCharacter::monomial(W({-2}));
  CHECK(a * b == expect);

  std::mt19937 rng(7);
  auto h = random_sparse(rng, 2, 5);
  CHECK(h * FormalCharacter::one(2) == h);

  CHECK_THROWS_AS(FormalCharacter::one(1) + FormalCharacter::one(2),
                  RankMismatchError);
}

TEST_CASE("ring axioms on random sparse elements") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = random_sparse(rng, 2, 4);
    auto g = random_sparse(rng, 2, 4);
    auto h = random_sparse(rng, 2, 3);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == FormalCharacter::zero(2));
  }
}

TEST_CASE("weyl_numerator basics") {
  // n=1, lambda = 1/2
  auto n1 = weyl_numerator(W({1}));
  CHECK(n1 == FormalCharacter::monomial(W({1})) -
                  FormalCharacter::monomial(W({-1})));
  // singular weight: the alternating sum vanishes
  CHECK(weyl_numerator(W({0})).is_zero());
  CHECK(weyl_numerator(W({2, 2})).is_zero());

  // n=2, lambda=(3/2,1/2): 8 unit-coefficient terms, frozen by hand
  auto n2 = weyl_numerator(W({3, 1}));
  CHECK(n2.size() == 8);
  CHECK(n2.coefficient(W({3, 1})) == 1);
  CHECK(n2.coefficient(W({3, -1})) == -1);
  CHECK(n2.coefficient(W({-3, 1})) == -1);
  CHECK(n2.coefficient(W({-3, -1})) == 1);
  CHECK(n2.coefficient(W({1, 3})) == -1);
  CHECK(n2.coefficient(W({1, -3})) == 1);
  CHECK(n2.coefficient(W({-1, 3})) == 1);
  CHECK(n2.coefficient(W({-1, -3})) == -1);
}

TEST_CASE("weyl_numerator antisymmetry") {
  Weight lam = W({5, 3, 1});
  auto base = weyl_numerator(lam);
  for_each_weyl(3, [&](const WeylElement& w, int s) {
    auto moved = weyl_numerator(w.apply(lam));
    CHECK(moved == (s == 1 ? base : -base));
  });
}

TEST_CASE("denominators") {
  CHECK(weyl_denominator(RootKind::B, 1) ==
        FormalCharacter::monomial(W({1})) - FormalCharacter::monomial(W({-1})));
  CHECK(weyl_denominator(RootKind::C, 1) ==
        FormalCharacter::monomial(W({2})) - FormalCharacter::monomial(W({-2})));
  CHECK(odd_denominator(1) == FormalCharacter::monomial(W({1})) +
                                  FormalCharacter::monomial(W({-1})));
}

TEST_CASE("Weyl denominator identity: N(rho) = D for B and C, n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto kind : {RootKind::B, RootKind::C}) {
      CHECK(weyl_numerator(rho(kind, n)) == weyl_denominator(kind, n));
    }
  }
}

TEST_CASE("factorization D_C = D_B * D_1 for n <= 4") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(weyl_denominator(RootKind::C, n) ==
          weyl_denominator(RootKind::B, n) * odd_denominator(n));
  }
}

TEST_CASE("exact division") {
  // (e^{e1} - e^{-e1}) / (e^{e1/2} - e^{-e1/2}) = e^{e1/2} + e^{-e1/2}
  auto num = FormalCharacter::monomial(W({2})) - FormalCharacter::monomial(W({-2}));
  auto den = FormalCharacter::monomial(W({1})) - FormalCharacter::monomial(W({-1}));
  auto q = exact_div(num, den);
  CHECK(q == FormalCharacter::monomial(W({1})) + FormalCharacter::monomial(W({-1})));

  auto f = weyl_denominator(RootKind::C, 2);
  CHECK(exact_div(f, f) == FormalCharacter::one(2));

  // (e^{e1} + 1) / (e^{e1} - 1) has no Laurent quotient
  auto bad_num = FormalCharacter::monomial(W({2})) + FormalCharacter::one(1);
  auto bad_den = FormalCharacter::monomial(W({2})) - FormalCharacter::one(1);
  CHECK_THROWS_AS(exact_div(bad_num, bad_den), DivisionError);
  try {
    exact_div(bad_num, bad_den);
  } catch (const DivisionError& e) {
    CHECK(!e.remainder.is_zero());
  }
}

TEST_CASE("division round-trip on random sparse factors") {
  std::mt19937 rng(2718);
  int done = 0;
  while (done < 40) {
    auto f = random_sparse(rng, 2, 4);
    auto g = random_sparse(rng, 2, 3);
    if (f.is_zero() || g.is_zero()) continue;
    ++done;
    CHECK(exact_div(f * g, g) == f);
  }
  // and in rank 3
  done = 0;
  while (done < 10) {
    auto f = random_sparse(rng, 3, 3);
    auto g = random_sparse(rng, 3, 3);
    if (f.is_zero() || g.is_zero()) continue;
    ++done;
    CHECK(exact_div(f * g, g) == f);
  }
}

TEST_CASE("rational characters compare by cross-multiplication") {
  auto db = weyl_denominator(RootKind::B, 2);
  auto dc = weyl_denominator(RootKind::C, 2);
  auto d1 = odd_denominator(2);
  RationalCharacter phi(db, dc);                       // D_B / D_C
  RationalCharacter inv_d1(FormalCharacter::one(2), d1);  // 1 / D_1
  CHECK(phi == inv_d1);
  RationalCharacter other(db, db);
  CHECK(!(phi == other));
}
