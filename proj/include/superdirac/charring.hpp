#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "superdirac/rootdata.hpp"
#include "superdirac/weight.hpp"

namespace superdirac {

class RankMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of the formal character ring: a sparse Laurent polynomial in
/// the exponentials e^{e_i/2} with arbitrary-precision integer
/// coefficients, stored as a weight -> coefficient map with no zero
/// entries.  Iteration runs in canonical order (greatest weight first).
class FormalCharacter {
 public:
  using TermMap = std::map<Weight, Int, WeightLexGreater>;

  explicit FormalCharacter(std::size_t rank) : rank_(rank) {}

  static FormalCharacter zero(std::size_t rank) {
    return FormalCharacter(rank);
  }
  static FormalCharacter one(std::size_t rank);
  /// c * e^{mu}
  static FormalCharacter monomial(const Weight& mu, Int c = 1);

  std::size_t rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Int coefficient(const Weight& mu) const;

  /// Adds c * e^{mu}, erasing the entry if the total cancels.
  void add_term(const Weight& mu, const Int& c);

  FormalCharacter operator+(const FormalCharacter& o) const;
  FormalCharacter operator-(const FormalCharacter& o) const;
  FormalCharacter operator-() const;
  FormalCharacter operator*(const FormalCharacter& o) const;
  FormalCharacter scaled(const Int& c) const;
  bool operator==(const FormalCharacter& o) const {
    return rank_ == o.rank_ && terms_ == o.terms_;
  }

  /// Canonically greatest term; throws on zero.
  const std::pair<const Weight, Int>& leading() const;

  /// Sum of all coefficients (the dimension, for a character).
  Int coefficient_sum() const;

  /// Componentwise minimum / maximum of the support; throws on zero.
  Weight support_min() const;
  Weight support_max() const;

  std::string str() const;

 private:
  void check_rank(const FormalCharacter& o) const;

  std::size_t rank_;
  TermMap terms_;
};

/// Inexact division; carries the nonzero remainder at the failure point.
class DivisionError : public std::runtime_error {
 public:
  DivisionError(const std::string& msg, FormalCharacter rem)
      : std::runtime_error(msg), remainder(std::move(rem)) {}
  FormalCharacter remainder;
};

/// Quotient f / g when it exists as a Laurent polynomial, by
/// leading-term elimination in the canonical ordering.  Termination is
/// guaranteed by the coordinate box bound on the quotient support;
/// failures throw DivisionError carrying the remainder.
FormalCharacter exact_div(const FormalCharacter& f, const FormalCharacter& g);

/// sum_{w in W(B_n)} sgn(w) e^{w lambda}.  Zero iff lambda is singular.
FormalCharacter weyl_numerator(const Weight& lambda,
                               std::size_t rank_limit = kWeylRankLimit);

/// prod_{alpha > 0} (e^{alpha/2} - e^{-alpha/2}) over the positive roots
/// of the kind (B or C).
FormalCharacter weyl_denominator(RootKind kind, std::size_t n);

/// prod_i (e^{e_i/2} + e^{-e_i/2}), the odd-root factor with
/// D_C = D_B * D_1.
FormalCharacter odd_denominator(std::size_t n);

/// Formal quotient of two characters; equality by cross-multiplication.
struct RationalCharacter {
  FormalCharacter numerator;
  FormalCharacter denominator;

  RationalCharacter(FormalCharacter num, FormalCharacter den);
  bool operator==(const RationalCharacter& o) const {
    return numerator * o.denominator == o.numerator * denominator;
  }
  RationalCharacter operator*(const RationalCharacter& o) const {
    return RationalCharacter(numerator * o.numerator,
                             denominator * o.denominator);
  }
};

}  // namespace superdirac
