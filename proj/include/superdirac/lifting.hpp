#pragma once

#include <map>

#include "superdirac/oscillator.hpp"

namespace superdirac {

class ParityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParameterParity { Integral, Genuine };

/// A regular Harish-Chandra parameter.  Integral (all coordinates in Z)
/// indexes discrete series of Sp(2n,R); genuine (all in Z + 1/2) indexes
/// genuine discrete series of Mp(2n,R).
struct HarishChandraParameter {
  Weight lambda;
  ParameterParity parity;

  std::size_t rank() const { return lambda.rank(); }
};

/// Classifies a weight; rejects singular or mixed-parity input.
HarishChandraParameter classify(const Weight& lambda);

/// An invariant-eigendistribution numerator in normal form: a strictly
/// dominant parameter plus rational coefficients indexed by the Weyl
/// group, representing sum_w a_w e^{w lambda_dom} / D.
struct VirtualCharacter {
  HarishChandraParameter lambda_dom;
  std::map<WeylElement, Rat, WeylElementLess> coeffs;

  bool operator==(const VirtualCharacter& o) const {
    return lambda_dom.lambda == o.lambda_dom.lambda && coeffs == o.coeffs;
  }
};

/// Builds the normal form of sum over the given (weight, coefficient)
/// pairs: each weight is moved to the common dominant chamber and its
/// sign transported into the coefficient.
VirtualCharacter make_virtual_character(
    const std::vector<std::pair<Weight, Rat>>& numerator_terms);

enum class LiftDirection { Forward, Inverse };

/// The lifting between eigendistributions on Sp(2n,R) and genuine ones
/// on Mp(2n,R): coefficients are kept, the dominant parameter is shifted
/// by -omega_n (forward) or +omega_n (inverse).
VirtualCharacter lift_gamma(const VirtualCharacter& theta, LiftDirection dir);

/// Discrete-series parameter lift: for integral regular lambda with
/// dominantizing witness w, returns lambda - w^{-1} omega_n (genuine
/// regular, same chamber).
HarishChandraParameter lift_ds_parameter(const HarishChandraParameter& lambda);

/// Inverse of lift_ds_parameter on genuine regular parameters.
HarishChandraParameter lift_ds_inverse(const HarishChandraParameter& lambda);

/// Stable discrete-series numerator sum_w sgn(w) e^{w lambda}.
FormalCharacter stable_numerator(const HarishChandraParameter& lambda,
                                 std::size_t rank_limit = kWeylRankLimit);

struct LiftCertificate {
  Weight lambda;        // SO-side genuine parameter (a_1..a_k, b_1..b_l)
  Weight lambda_prime;  // Mp-side parameter (a_1..a_k, -b_l..-b_1)
  int orbit_sign;       // sgn of the Weyl element with w lambda = lambda'
  long order;
  bool numerators_match;  // N(lambda') == orbit_sign * N(lambda)
  bool series_match;      // expand(N_l/D_B)*Phi == sign * expand(N_l'/D_C)
  bool pass;
};

/// Checks the transfer identity Theta_Sp(lambda') = Theta_SO(lambda) Phi
/// at the stable-numerator and truncated-series levels.  The input is
/// the SO-side genuine parameter lambda = (a_1..a_k, b_1..b_l): the
/// first k coordinates form the a-list, the rest the b-list, each
/// strictly decreasing, positive, with all n entries distinct.  The
/// Mp-side parameter is (a_1..a_k, -b_l..-b_1).
LiftCertificate verify_adams_transfer(const Weight& lambda_so, std::size_t k,
                                      long order);

struct BijectionReport {
  std::size_t n;
  long bound;
  unsigned long parameters_checked;
  unsigned long dominant_parameters;
  bool injective;
  bool all_genuine_regular;
  bool all_roundtrip;
  bool dominance_preserved;  // dominant inputs map to dominant outputs
  bool chamber_compatible;   // w(lambda') == w(lambda) - omega_n
  bool pass() const {
    return injective && all_genuine_regular && all_roundtrip &&
           dominance_preserved && chamber_compatible;
  }
};

/// Exhaustively checks that the parameter lift is a bijection onto
/// genuine regular parameters over all integral regular lambda with
/// |lambda_i| <= bound.
BijectionReport bijection_suite(std::size_t n, long bound);

}  // namespace superdirac
