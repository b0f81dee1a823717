#include "superdirac/lifting.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superdirac {

HarishChandraParameter classify(const Weight& lambda) {
  if (!is_regular(lambda)) {
    std::ostringstream os;
    os << "parameter " << lambda.str() << " is not regular";
    throw RegularityError(os.str());
  }
  if (lambda.is_integral())
    return {lambda, ParameterParity::Integral};
  if (lambda.is_half_integral())
    return {lambda, ParameterParity::Genuine};
  throw ParityError("parameter " + lambda.str() +
                    " mixes integral and half-integral coordinates");
}

VirtualCharacter make_virtual_character(
    const std::vector<std::pair<Weight, Rat>>& numerator_terms) {
  if (numerator_terms.empty())
    throw std::invalid_argument("empty virtual character");
  auto [w0, dom] = make_dominant(numerator_terms.front().first);
  VirtualCharacter vc{classify(dom), {}};
  for (const auto& [mu, a] : numerator_terms) {
    auto [w, d] = make_dominant(mu);
    if (!(d == dom))
      throw std::invalid_argument(
          "virtual character terms lie in different Weyl orbits: " +
          d.str() + " vs " + dom.str());
    // e^{mu} = e^{w^{-1} dom}: index the coefficient by the chamber element
    WeylElement chamber = w.inverse();
    auto [it, inserted] = vc.coeffs.emplace(chamber, a);
    if (!inserted) it->second += a;
  }
  for (auto it = vc.coeffs.begin(); it != vc.coeffs.end();) {
    if (sgn(it->second) == 0)
      it = vc.coeffs.erase(it);
    else
      ++it;
  }
  return vc;
}

VirtualCharacter lift_gamma(const VirtualCharacter& theta, LiftDirection dir) {
  std::size_t n = theta.lambda_dom.rank();
  Weight omega_n = rho1(n);  // omega_n = (1/2,...,1/2)
  Weight shifted;
  if (dir == LiftDirection::Forward) {
    if (theta.lambda_dom.parity != ParameterParity::Integral)
      throw ParityError("forward lifting expects an integral parameter");
    shifted = theta.lambda_dom.lambda - omega_n;
  } else {
    if (theta.lambda_dom.parity != ParameterParity::Genuine)
      throw ParityError("inverse lifting expects a genuine parameter");
    shifted = theta.lambda_dom.lambda + omega_n;
  }
  if (!is_strictly_dominant(shifted))
    throw RegularityError("lifted parameter " + shifted.str() +
                          " left the dominant chamber");
  return VirtualCharacter{classify(shifted), theta.coeffs};
}

HarishChandraParameter lift_ds_parameter(
    const HarishChandraParameter& lambda) {
  if (lambda.parity != ParameterParity::Integral)
    throw ParityError("discrete-series lift expects an integral parameter");
  auto [w, dom] = make_dominant(lambda.lambda);
  Weight omega_n = rho1(lambda.rank());
  return classify(lambda.lambda - w.inverse().apply(omega_n));
}

HarishChandraParameter lift_ds_inverse(const HarishChandraParameter& lambda) {
  if (lambda.parity != ParameterParity::Genuine)
    throw ParityError("inverse discrete-series lift expects a genuine parameter");
  auto [w, dom] = make_dominant(lambda.lambda);
  Weight omega_n = rho1(lambda.rank());
  return classify(lambda.lambda + w.inverse().apply(omega_n));
}

FormalCharacter stable_numerator(const HarishChandraParameter& lambda,
                                 std::size_t rank_limit) {
  return weyl_numerator(lambda.lambda, rank_limit);
}

LiftCertificate verify_adams_transfer(const Weight& lambda_so, std::size_t k,
                                      long order) {
  std::size_t n = lambda_so.rank();
  if (k > n) throw std::invalid_argument("a-list longer than the rank");
  auto param = classify(lambda_so);
  if (param.parity != ParameterParity::Genuine)
    throw ParityError("transfer input must be genuine (half-integral)");
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(lambda_so.doubled(i)) <= 0)
      throw std::invalid_argument("transfer input entries must be positive");
    bool in_a = i + 1 < k, splits = (i + 1 == k);
    (void)in_a;
    (void)splits;
    if (i + 1 < n && i + 1 != k && lambda_so.doubled(i) <= lambda_so.doubled(i + 1))
      throw std::invalid_argument(
          "a-list and b-list must each be strictly decreasing");
  }

  // lambda' = (a_1..a_k, -b_l..-b_1)
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < k; ++i) d[i] = lambda_so.doubled(i);
  for (std::size_t i = k; i < n; ++i)
    d[i] = -lambda_so.doubled(n - 1 + k - i);
  Weight lambda_prime(std::move(d));

  // orbit witness: w lambda = lambda'
  auto [w1, dom1] = make_dominant(lambda_so);
  auto [w2, dom2] = make_dominant(lambda_prime);
  if (!(dom1 == dom2))
    throw std::logic_error("transfer parameters left the Weyl orbit");
  int orbit_sign = w1.sign() * w2.sign();

  auto num_so = weyl_numerator(lambda_so);
  auto num_sp = weyl_numerator(lambda_prime);
  bool numerators_match = (num_sp == num_so.scaled(orbit_sign));

  // series identity at the common offset: Theta_SO * Phi vs Theta_Sp
  Weight off = num_so.support_max();  // bounds both quotient supports
  auto theta_so = expand(num_so, weyl_denominator(RootKind::B, n), off, order);
  auto lhs = theta_so * weil_character(n, WeilParity::Difference, order);
  auto rhs = expand(num_sp.scaled(orbit_sign),
                    weyl_denominator(RootKind::C, n), off, order);
  bool series_match = lhs.agrees_with(rhs);

  return LiftCertificate{lambda_so,        lambda_prime, orbit_sign, order,
                         numerators_match, series_match,
                         numerators_match && series_match};
}

BijectionReport bijection_suite(std::size_t n, long bound) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  BijectionReport rep{n,    bound, 0,    0,    true,
                      true, true,  true, true};
  Weight omega_n = rho1(n);

  // enumerate all integral regular parameters with |lambda_i| <= bound:
  // choose n distinct absolute values, then all orders and sign patterns
  std::vector<int> values;
  std::set<std::string> images;
  std::vector<int> choice;
  std::function<void(int)> choose = [&](int next) {
    if (choice.size() == n) {
      std::vector<int> perm(choice);
      std::sort(perm.begin(), perm.end());
      do {
        for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
          std::vector<Int> d(n);
          for (std::size_t i = 0; i < n; ++i)
            d[i] = ((mask >> i) & 1ul) ? -2 * perm[i] : 2 * perm[i];
          Weight lam(std::move(d));
          ++rep.parameters_checked;
          auto param = classify(lam);
          auto lifted = lift_ds_parameter(param);
          if (lifted.parity != ParameterParity::Genuine ||
              !is_regular(lifted.lambda))
            rep.all_genuine_regular = false;
          if (!images.insert(lifted.lambda.str()).second)
            rep.injective = false;
          auto back = lift_ds_inverse(lifted);
          if (!(back.lambda == lam)) rep.all_roundtrip = false;

          auto [w, dom] = make_dominant(lam);
          if (!(w.apply(lifted.lambda) == w.apply(lam) - omega_n))
            rep.chamber_compatible = false;
          if (is_strictly_dominant(lam)) {
            ++rep.dominant_parameters;
            if (!is_strictly_dominant(lifted.lambda))
              rep.dominance_preserved = false;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int v = next; v <= bound; ++v) {
      choice.push_back(v);
      choose(v + 1);
      choice.pop_back();
    }
  };
  choose(1);
  return rep;
}

}  // namespace superdirac
