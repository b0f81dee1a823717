#include "superdirac/oscillator.hpp"

#include <functional>

namespace superdirac {

namespace {

void enumerate_monomials(std::size_t n, long budget, std::vector<Int>& a,
                         std::size_t coord,
                         const std::function<void(const std::vector<Int>&)>& fn) {
  if (coord == n) {
    fn(a);
    return;
  }
  for (long v = 0; 2 * v <= budget; ++v) {
    a[coord] = v;
    enumerate_monomials(n, budget - 2 * v, a, coord + 1, fn);
  }
}

}  // namespace

TruncatedSeries weil_character(std::size_t n, WeilParity parity, long order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  TruncatedSeries s(n, Weight::zero(n), order);
  // x^a has q-exponents 2a_i + 1; total degree 2|a| + n <= order
  long budget = order - static_cast<long>(n);
  if (budget < 0) return s;
  std::vector<Int> a(n, 0);
  enumerate_monomials(n, budget, a, 0, [&](const std::vector<Int>& mono) {
    Int total = 0;
    for (const auto& v : mono) total += v;
    bool even = mpz_even_p(total.get_mpz_t());
    Int coef = 0;
    switch (parity) {
      case WeilParity::Even:
        coef = even ? 1 : 0;
        break;
      case WeilParity::Odd:
        coef = even ? 0 : 1;
        break;
      case WeilParity::Difference:
        coef = even ? 1 : -1;
        break;
    }
    if (sgn(coef) == 0) return;
    std::vector<Int> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = -(2 * mono[i] + 1);
    s.add_term(Weight(std::move(d)), coef);
  });
  return s;
}

DiracIndexCertificate dirac_index_trivial(std::size_t n, long order) {
  // D acts by zero on 1 (x) M, so H_D^+- = M^+- and the right side is the
  // parity-split module character itself.
  TruncatedSeries lhs = weil_character(n, WeilParity::Difference, order);
  TruncatedSeries rhs = weil_character(n, WeilParity::Even, order) -
                        weil_character(n, WeilParity::Odd, order);
  return DiracIndexCertificate{std::nullopt, order, lhs, rhs,
                               lhs.agrees_with(rhs)};
}

TransferFactorCertificate transfer_factor_identity(std::size_t n, long order) {
  auto phi = weil_character(n, WeilParity::Difference, order);

  auto d1 = odd_denominator(n);
  auto d1_series = TruncatedSeries::from_character(d1, rho1(n), order);
  auto product = phi * d1_series;  // offset rho1, window order
  auto one =
      TruncatedSeries::from_character(FormalCharacter::one(n), rho1(n), order);
  bool product_is_one = product.agrees_with(one) &&
                        product.coefficient(Weight::zero(n)) == 1;

  auto ratio = expand(weyl_denominator(RootKind::B, n),
                      weyl_denominator(RootKind::C, n), Weight::zero(n), order);
  bool matches_ratio = ratio.agrees_with(phi) && !phi.is_zero();

  return TransferFactorCertificate{n, order, product_is_one, matches_ratio};
}

DiracIndexCertificate dirac_index_character(const HighestWeight& hw,
                                            long order) {
  std::size_t n = hw.rank();
  auto rec = character_osp(hw);
  Weight voff = rec.character.support_max();

  auto v_series = TruncatedSeries::from_character(rec.character, voff, order);
  auto lhs = v_series * weil_character(n, WeilParity::Difference, order);

  auto num = weyl_numerator(hw.lambda() + rho(RootKind::OSP, n));
  auto rhs = expand(num, weyl_denominator(RootKind::C, n), lhs.offset(), order);

  bool verdict = lhs.agrees_with(rhs) && lhs.order() == rhs.order() &&
                 lhs.offset() == rhs.offset();
  return DiracIndexCertificate{hw, order, lhs, rhs, verdict};
}

}  // namespace superdirac
