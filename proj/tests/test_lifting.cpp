#include <doctest.h>

#include <random>

#include "superdirac/lifting.hpp"

using namespace superdirac;

namespace {

Weight W(std::vector<int> doubled) {
  return Weight(std::vector<Int>(doubled.begin(), doubled.end()));
}

}  // namespace

TEST_CASE("classification") {
  auto p = classify(W({4, 2}));
  CHECK(p.parity == ParameterParity::Integral);
  auto q = classify(W({3, 1}));
  CHECK(q.parity == ParameterParity::Genuine);
  CHECK_THROWS_AS(classify(W({2, 1})), ParityError);       // (1, 1/2)
  CHECK_THROWS_AS(classify(W({2, 2})), RegularityError);   // equal coords
  CHECK_THROWS_AS(classify(W({2, 0})), RegularityError);   // zero coord
  CHECK_THROWS_AS(classify(W({2, -2})), RegularityError);  // same abs value
}

TEST_CASE("lifting of virtual characters") {
  VirtualCharacter theta{classify(W({4, 2})),
                         {{WeylElement::identity(2), Rat(1)}}};
  auto lifted = lift_gamma(theta, LiftDirection::Forward);
  CHECK(lifted.lambda_dom.lambda == W({3, 1}));  // (2,1) -> (3/2,1/2)
  CHECK(lifted.lambda_dom.parity == ParameterParity::Genuine);
  CHECK(lifted.coeffs == theta.coeffs);

  auto back = lift_gamma(lifted, LiftDirection::Inverse);
  CHECK(back.lambda_dom.lambda == theta.lambda_dom.lambda);
  CHECK(back.coeffs == theta.coeffs);

  // smallest case: (1) -> (1/2)
  VirtualCharacter t1{classify(W({2})), {{WeylElement::identity(1), Rat(1)}}};
  CHECK(lift_gamma(t1, LiftDirection::Forward).lambda_dom.lambda == W({1}));

  CHECK_THROWS_AS(lift_gamma(lifted, LiftDirection::Forward), ParityError);
  CHECK_THROWS_AS(lift_gamma(theta, LiftDirection::Inverse), ParityError);
}

TEST_CASE("round trip on random integral dominant parameters") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> step(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Int> d(3);
    int v = 0;
    for (int i = 2; i >= 0; --i) {
      v += step(rng);
      d[i] = 2 * v;
    }
    VirtualCharacter theta{classify(Weight(d)), {}};
    theta.coeffs.emplace(WeylElement::identity(3), Rat(step(rng)));
    auto roundtrip =
        lift_gamma(lift_gamma(theta, LiftDirection::Forward),
                   LiftDirection::Inverse);
    CHECK(roundtrip == theta);
  }
}

TEST_CASE("virtual character normal form transports signs") {
  // sum over the orbit of (2,1) of sgn(w) e^{w lambda}: every term indexes
  // back to the dominant parameter with the transported coefficient
  std::vector<std::pair<Weight, Rat>> terms;
  Weight dom = W({4, 2});
  for_each_weyl(2, [&](const WeylElement& w, int s) {
    terms.emplace_back(w.apply(dom), Rat(s));
  });
  auto vc = make_virtual_character(terms);
  CHECK(vc.lambda_dom.lambda == dom);
  CHECK(vc.coeffs.size() == 8);
  for (const auto& [w, a] : vc.coeffs) CHECK(a == Rat(w.sign()));
}

TEST_CASE("discrete series parameter lift") {
  auto holo = lift_ds_parameter(classify(W({4, 2})));
  CHECK(holo.lambda == W({3, 1}));  // (2,1) -> (3/2,1/2)

  auto gen = lift_ds_parameter(classify(W({6, 2, -4})));
  CHECK(gen.lambda == W({5, 1, -3}));  // (3,1,-2) -> (5/2,1/2,-3/2)

  // (-2,3): w = (x1,x2) -> (x2,-x1), w^{-1} omega_n = (-1/2,1/2)
  auto neg = lift_ds_parameter(classify(W({-4, 6})));
  CHECK(neg.lambda == W({-3, 5}));  // (-3/2, 5/2)
  // dominant-chamber roundtrip: w(lambda') = w(lambda) - omega_n
  auto [w, domw] = make_dominant(W({-4, 6}));
  CHECK(w.apply(neg.lambda) == domw - rho1(2));

  CHECK_THROWS_AS(lift_ds_parameter(classify(W({3, 1}))), ParityError);
}

TEST_CASE("stable numerators") {
  auto p = classify(W({1}));
  CHECK(stable_numerator(p) ==
        FormalCharacter::monomial(W({1})) - FormalCharacter::monomial(W({-1})));
  // antisymmetry through the orbit
  auto q = classify(W({3, 1}));
  auto base = stable_numerator(q);
  for_each_weyl(2, [&](const WeylElement& w, int s) {
    auto moved = stable_numerator(classify(w.apply(q.lambda)));
    CHECK(moved == (s == 1 ? base : -base));
  });
  CHECK(base == weyl_numerator(W({3, 1})));
}

TEST_CASE("Adams transfer certificates") {
  // n=1, lambda = (1/2), all in the a-list
  auto c1 = verify_adams_transfer(W({1}), 1, 12);
  CHECK(c1.pass);
  CHECK(c1.orbit_sign == 1);
  CHECK(c1.lambda_prime == W({1}));

  // n=2, k=2, l=0: lambda' = lambda
  auto c2 = verify_adams_transfer(W({3, 1}), 2, 12);
  CHECK(c2.pass);
  CHECK(c2.orbit_sign == 1);
  CHECK(c2.lambda_prime == W({3, 1}));

  // n=2, a=(3/2), b=(1/2): lambda' = (3/2,-1/2), one sign flip
  auto c3 = verify_adams_transfer(W({3, 1}), 1, 12);
  CHECK(c3.pass);
  CHECK(c3.orbit_sign == -1);
  CHECK(c3.lambda_prime == W({3, -1}));

  // b-list reversal: a=(), b=(5/2,3/2) -> lambda' = (-3/2,-5/2)
  auto c4 = verify_adams_transfer(W({5, 3}), 0, 12);
  CHECK(c4.pass);
  CHECK(c4.lambda_prime == W({-3, -5}));

  CHECK_THROWS_AS(verify_adams_transfer(W({4, 2}), 1, 8), ParityError);
  CHECK_THROWS_AS(verify_adams_transfer(W({1, 3}), 2, 8),
                  std::invalid_argument);
}

TEST_CASE("exhaustive transfer over small genuine parameters") {
  // every genuine regular lambda with coordinates <= 7/2 at n <= 2
  for (int a = 1; a <= 7; a += 2) {
    auto c = verify_adams_transfer(W({a}), 1, 12);
    CHECK(c.pass);
  }
  int checked = 0;
  for (int a = 1; a <= 7; a += 2)
    for (int b = 1; b <= 7; b += 2) {
      if (a == b) continue;
      for (std::size_t k : {0u, 1u, 2u}) {
        // within-list entries must decrease; k=1 splits them apart
        if (k != 1 && a < b) continue;
        auto c = verify_adams_transfer(W({a, b}), k, 12);
        CHECK(c.pass);
        ++checked;
      }
    }
  CHECK(checked == 24);  // 12 ordered pairs at k=1, 6 descending pairs at k=0,2
}

TEST_CASE("bijection suite") {
  auto r1 = bijection_suite(1, 3);
  CHECK(r1.pass());
  CHECK(r1.parameters_checked == 6);  // +-1, +-2, +-3
  CHECK(r1.dominant_parameters == 3);

  auto r2 = bijection_suite(2, 3);
  CHECK(r2.pass());
  CHECK(r2.parameters_checked == 3 * 2 * 4);  // C(3,2) pairs, orders, signs

  auto r3 = bijection_suite(3, 4);
  CHECK(r3.pass());
}
