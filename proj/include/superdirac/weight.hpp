#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace superdirac {

using Int = mpz_class;
using Rat = mpq_class;

/// A point of the rank-n weight lattice (1/2)Z^n.  Coordinate i stores
/// 2*lambda_i, so all roots, weights and Harish-Chandra parameters are
/// exact integers internally.  Immutable after construction.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Int> doubled) : d_(std::move(doubled)) {}

  static Weight zero(std::size_t rank) {
    return Weight(std::vector<Int>(rank, 0));
  }
  /// The basis vector e_{i} (0-based index), doubled coordinate 2.
  static Weight basis(std::size_t rank, std::size_t i, const Int& twice = 2);

  std::size_t rank() const { return d_.size(); }
  const Int& doubled(std::size_t i) const { return d_[i]; }
  const std::vector<Int>& doubled() const { return d_; }

  bool is_zero() const;
  /// All doubled coordinates even (lambda integral).
  bool is_integral() const;
  /// All doubled coordinates odd (lambda strictly half-integral).
  bool is_half_integral() const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator-() const;
  Weight scaled(const Int& c) const;
  bool operator==(const Weight& o) const { return d_ == o.d_; }
  bool operator!=(const Weight& o) const { return d_ != o.d_; }

  /// Sum of doubled coordinates (= 2 * sum lambda_i).
  Int doubled_sum() const;

  /// Renders half-integer coordinates, e.g. "3/2,-1,1/2".
  std::string str() const;

  friend int lex_compare(const Weight& a, const Weight& b);

 private:
  std::vector<Int> d_;
};

/// Lexicographic comparison on doubled coordinates; <0, 0, >0.
int lex_compare(const Weight& a, const Weight& b);

/// Orders weights canonically greatest-first (lexicographically
/// descending on doubled coordinates).  Used as the map comparator for
/// every character-type container, so iteration order is canonical.
struct WeightLexGreater {
  bool operator()(const Weight& a, const Weight& b) const {
    return lex_compare(a, b) > 0;
  }
};

struct WeightLexLess {
  bool operator()(const Weight& a, const Weight& b) const {
    return lex_compare(a, b) < 0;
  }
};

/// 4 * <a, b> in the coordinate inner product <e_i, e_j> = delta_ij.
Int dot4(const Weight& a, const Weight& b);

/// Componentwise maximum.
Weight cmax(const Weight& a, const Weight& b);

/// a <= b componentwise on doubled coordinates.
bool cw_leq(const Weight& a, const Weight& b);

/// Parses "3/2,-1,1/2" into a Weight; denominators other than 1 and 2
/// are rejected.  Throws std::invalid_argument on malformed input.
Weight parse_weight(const std::string& text);

}  // namespace superdirac
