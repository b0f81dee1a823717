#include <doctest.h>

#include <random>

#include "superdirac/series.hpp"

using namespace superdirac;

namespace {

Weight W(std::vector<int> doubled) {
  return Weight(std::vector<Int>(doubled.begin(), doubled.end()));
}

}  // namespace

TEST_CASE("geometric expansions in rank one") {
  // 1/(e^{e1/2} + e^{-e1/2}) at order 6 = q - q^3 + q^5
  auto den = FormalCharacter::monomial(W({1})) + FormalCharacter::monomial(W({-1}));
  auto s = expand(FormalCharacter::one(1), den, W({0}), 6);
  CHECK(s.terms().size() == 3);
  CHECK(s.coefficient(W({-1})) == 1);   // q
  CHECK(s.coefficient(W({-3})) == -1);  // -q^3
  CHECK(s.coefficient(W({-5})) == 1);   // q^5
  CHECK(s.coefficient(W({-7})) == 0);   // beyond the cutoff

  // 1/(e^{e1} - e^{-e1}) at order 5 = q^2 (next term q^6 is cut)
  auto den2 = FormalCharacter::monomial(W({2})) - FormalCharacter::monomial(W({-2}));
  auto s2 = expand(FormalCharacter::one(1), den2, W({0}), 5);
  CHECK(s2.terms().size() == 1);
  CHECK(s2.coefficient(W({-2})) == 1);
}

TEST_CASE("expansion of a polynomial is its truncation") {
  auto f = FormalCharacter::monomial(W({2}), 3) - FormalCharacter::monomial(W({-4}), 7);
  auto s = expand(f, FormalCharacter::one(1), W({2}), 10);
  CHECK(s == TruncatedSeries::from_character(f, W({2}), 10));
  CHECK(s.coefficient(W({2})) == 3);
  CHECK(s.coefficient(W({-4})) == -7);
}

TEST_CASE("series multiplication against independent expansion") {
  // expand(r1 * r2) == expand(r1) * expand(r2) on the common window
  auto db = weyl_denominator(RootKind::B, 2);
  auto dc = weyl_denominator(RootKind::C, 2);
  auto d1 = odd_denominator(2);
  long N = 12;
  auto zero2 = W({0, 0});
  auto a = expand(FormalCharacter::one(2), d1, zero2, N);
  auto b = expand(db, dc, zero2, N);  // same value: D_B/D_C = 1/D_1
  CHECK(a.agrees_with(b));

  // product route: (1/D_1) * (1/D_1) vs direct expansion of 1/D_1^2
  auto prod = a * a;
  auto direct = expand(FormalCharacter::one(2), d1 * d1, zero2, N);
  CHECK(prod.agrees_with(direct));
}

TEST_CASE("expansion times denominator reproduces the numerator") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(-3, 3), coef(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    FormalCharacter num(2);
    for (int t = 0; t < 3; ++t)
      num.add_term(W({coord(rng), coord(rng)}), coef(rng));
    auto d1 = odd_denominator(2);
    long N = 10;
    if (num.is_zero()) continue;
    Weight off = cmax(num.support_max(), W({0, 0}));
    auto s = expand(num, d1, off, N);
    // s * D_1 must agree with num on the common window
    auto d1s = TruncatedSeries::from_character(d1, W({1, 1}), N);
    auto back = s * d1s;
    auto num_s = TruncatedSeries::from_character(num, off + W({1, 1}), N);
    CHECK(back.agrees_with(num_s));
  }
}

TEST_CASE("windows shrink honestly under addition with unequal offsets") {
  auto f = FormalCharacter::monomial(W({0})) + FormalCharacter::monomial(W({-2}));
  auto s1 = TruncatedSeries::from_character(f, W({0}), 4);
  auto s2 = TruncatedSeries::from_character(f, W({2}), 4);  // shifted window
  auto sum = s1 + s2;
  CHECK(sum.offset() == W({2}));
  CHECK(sum.order() == 2);  // lost two q-degrees moving s1 under offset 1
  CHECK(sum.coefficient(W({0})) == 2);
  CHECK(sum.coefficient(W({-2})) == 0);  // q-degree 4 > 2: outside window
}

TEST_CASE("from_character rejects terms above the offset cone") {
  auto f = FormalCharacter::monomial(W({2, 0}));
  CHECK_THROWS_AS(TruncatedSeries::from_character(f, W({0, 0}), 8),
                  ExpansionError);
}

TEST_CASE("non-invertible leading coefficient is rejected") {
  auto den = FormalCharacter::monomial(W({0}), 2) + FormalCharacter::monomial(W({-2}));
  CHECK_THROWS_AS(expand(FormalCharacter::one(1), den, W({0}), 4),
                  ExpansionError);
}

TEST_CASE("expansion handles numerators with support above the quotient cone") {
  // N(rho_C)/D_C = 1: the numerator support is the full Weyl orbit but the
  // quotient is the constant series.
  for (std::size_t n = 1; n <= 3; ++n) {
    auto num = weyl_numerator(rho(RootKind::C, n));
    auto den = weyl_denominator(RootKind::C, n);
    Weight off = num.support_max();
    // the constant term sits at q-degree 2*sum(offset); keep it inside
    long order = static_cast<long>(off.doubled_sum().get_si()) + 2;
    auto s = expand(num, den, off, order);
    auto one =
        TruncatedSeries::from_character(FormalCharacter::one(n), off, order);
    CHECK(s.agrees_with(one));
    CHECK(s.coefficient(Weight::zero(n)) == 1);
    CHECK(s.terms().size() == 1);
  }
}
