#pragma once

#include <map>
#include <optional>

#include "superdirac/charring.hpp"

namespace superdirac {

class ExpansionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A formal power series in the antidominant variables q_i = e^{-e_i/2},
/// truncated at total q-degree `order`, with a base offset: the series
/// represents  sum_a c_a e^{offset} q^a  over a in N^n, |a| <= order.
/// Terms are stored by their absolute weight mu = offset - (sum a_i e_i)/2,
/// so two series with different offsets are still comparable weight by
/// weight on the window both of them guarantee.
class TruncatedSeries {
 public:
  using TermMap = std::map<Weight, Int, WeightLexGreater>;

  TruncatedSeries(std::size_t rank, Weight offset, long order);

  /// Truncates a character termwise.  Every term must lie under the
  /// offset cone (mu <= offset componentwise); terms of q-degree above
  /// `order` are dropped.
  static TruncatedSeries from_character(const FormalCharacter& f,
                                        const Weight& offset, long order);

  std::size_t rank() const { return rank_; }
  const Weight& offset() const { return offset_; }
  long order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  Int coefficient(const Weight& mu) const;
  bool is_zero() const { return terms_.empty(); }

  /// q-degree of a weight relative to this offset (sum of the exponent
  /// vector), in units of e_i/2.
  long q_degree(const Weight& mu) const;

  /// Adds c e^{mu} if mu lies in the window; silently drops otherwise.
  void add_term(const Weight& mu, const Int& c);

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  TruncatedSeries scaled(const Int& c) const;

  /// True when the two series agree coefficient-by-coefficient on every
  /// weight of the common window (the intersection of the two offset
  /// cones cut at the minimum of the two orders, measured per series).
  bool agrees_with(const TruncatedSeries& o) const;

  /// Structural equality: same offset, order and terms.
  bool operator==(const TruncatedSeries& o) const {
    return rank_ == o.rank_ && offset_ == o.offset_ && order_ == o.order_ &&
           terms_ == o.terms_;
  }

  bool in_window(const Weight& mu) const;

  std::string str() const;

 private:
  std::size_t rank_;
  Weight offset_;
  long order_;
  TermMap terms_;
};

/// Expands num/den as a power series under the given offset cone, to the
/// given total q-degree.  Division is graded by the strictly dominant
/// functional phi(mu) = sum_i (n+1-i) mu_i refined lexicographically;
/// this makes the leading term of every Weyl-orbit numerator and
/// denominator unique.  The leading coefficient of den must be +-1
/// (otherwise ExpansionError).  When the true quotient is supported in a
/// finitely generated antidominant cone -- which holds for every ratio
/// this library forms -- the division provably reaches the cutoff; a
/// step cap guards the remaining cases with a diagnostic error.
TruncatedSeries expand(const FormalCharacter& num, const FormalCharacter& den,
                       const Weight& offset, long order);

/// Same, with the default offset max(supp_max(num), 0) componentwise.
TruncatedSeries expand(const RationalCharacter& r, long order);

}  // namespace superdirac
