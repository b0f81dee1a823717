#include <doctest.h>

#include "superdirac/oscillator.hpp"

using namespace superdirac;

namespace {

Weight W(std::vector<int> doubled) {
  return Weight(std::vector<Int>(doubled.begin(), doubled.end()));
}

}  // namespace

TEST_CASE("weil characters in rank one") {
  auto even = weil_character(1, WeilParity::Even, 6);
  CHECK(even.terms().size() == 2);
  CHECK(even.coefficient(W({-1})) == 1);  // q
  CHECK(even.coefficient(W({-5})) == 1);  // q^5

  auto odd = weil_character(1, WeilParity::Odd, 4);
  CHECK(odd.terms().size() == 1);
  CHECK(odd.coefficient(W({-3})) == 1);  // q^3

  auto diff = weil_character(1, WeilParity::Difference, 8);
  CHECK(diff.coefficient(W({-1})) == 1);
  CHECK(diff.coefficient(W({-3})) == -1);
  CHECK(diff.coefficient(W({-5})) == 1);
  CHECK(diff.coefficient(W({-7})) == -1);
  CHECK(diff.terms().size() == 4);

  CHECK_THROWS_AS(weil_character(1, WeilParity::Even, 0),
                  std::invalid_argument);
}

TEST_CASE("weil coefficients are signs with multiplicity-one spectrum") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto diff = weil_character(n, WeilParity::Difference, 11);
    for (const auto& [mu, c] : diff.terms()) {
      CHECK((c == 1 || c == -1));
      // the monomial with exponents a_i = (-2mu_i - 1)/2 has parity
      // matching the sign
      Int total = 0;
      for (std::size_t i = 0; i < n; ++i) total += (-mu.doubled(i) - 1) / 2;
      CHECK(c == (mpz_even_p(total.get_mpz_t()) ? 1 : -1));
    }
  }
}

TEST_CASE("dirac index of the trivial module") {
  auto c1 = dirac_index_trivial(1, 8);
  CHECK(c1.verdict);
  CHECK(c1.lhs.coefficient(W({-1})) == 1);

  auto c2 = dirac_index_trivial(2, 6);
  CHECK(c2.verdict);
  // q1 q2 (1 - q1^2 - q2^2 + ...)
  CHECK(c2.lhs.coefficient(W({-1, -1})) == 1);
  CHECK(c2.lhs.coefficient(W({-3, -1})) == -1);
  CHECK(c2.lhs.coefficient(W({-1, -3})) == -1);
  CHECK(c2.lhs.coefficient(W({-3, -3})) == 1);

  auto c3 = dirac_index_trivial(1, 1);
  CHECK(c3.verdict);
  CHECK(c3.lhs.terms().size() == 1);
}

TEST_CASE("transfer factor identities") {
  for (std::size_t n : {1u, 2u, 3u}) {
    auto cert = transfer_factor_identity(n, n == 1 ? 12 : 10);
    CHECK(cert.product_is_one);
    CHECK(cert.matches_ratio);
    CHECK(cert.passed());
  }
}

TEST_CASE("transfer factor to high order") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto cert = transfer_factor_identity(n, 20);
    CHECK(cert.passed());
  }
}

TEST_CASE("dirac index for irreducible characters") {
  // Lambda = 0 reduces to the transfer identity
  auto triv = dirac_index_character(HighestWeight(Weight::zero(1)), 8);
  CHECK(triv.verdict);

  auto c1 = dirac_index_character(HighestWeight(W({4})), 10);  // m = 2
  CHECK(c1.verdict);

  auto c2 = dirac_index_character(HighestWeight(W({2, 0})), 8);
  CHECK(c2.verdict);

  auto c3 = dirac_index_character(HighestWeight(W({4, 2})), 8);
  CHECK(c3.verdict);
}
