#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "superdirac/weight.hpp"

namespace superdirac {

/// Root system families handled by the library: B_n = o(2n+1),
/// C_n = sp(2n), and the orthosymplectic superalgebra osp(1|2n)
/// (even roots of type C, odd roots +-e_i).
enum class RootKind { B, C, OSP };

const char* kind_name(RootKind k);

struct RootSystemData {
  RootKind kind;
  std::size_t rank;
  std::vector<Weight> even_positive_roots;  // for B and C: all positive roots
  std::vector<Weight> odd_positive_roots;   // nonempty only for OSP
};

class RankError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RegularityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Highest-weight coefficient failures: negative or non-integral p_i.
class DominanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// p_n odd: a spin representation of o(2n+1), outside the osp range.
class SpinorialWeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Positive roots of the requested kind, duplicate-free and sorted
/// canonically (lexicographically descending on doubled coordinates).
RootSystemData positive_roots(RootKind kind, std::size_t n);

/// Half-sum of positive roots.  For OSP this is rho0 - rho1.
Weight rho(RootKind kind, std::size_t n);
Weight rho0(std::size_t n);  // half-sum of even positive roots of osp(1|2n)
Weight rho1(std::size_t n);  // half-sum of odd positive roots

/// omega_i = e_1+...+e_i for i < n, omega_n = (e_1+...+e_n)/2.
std::vector<Weight> fundamental_weights(std::size_t n);

/// A signed permutation: (w lambda)_i = signs[i] * lambda_{perm[i]}.
/// perm and signs are 0-based; signs entries are +1 or -1.
struct WeylElement {
  std::vector<int> perm;
  std::vector<int> signs;

  static WeylElement identity(std::size_t n);
  std::size_t rank() const { return perm.size(); }
  Weight apply(const Weight& lambda) const;
  /// Composition acting first with `o`, then with *this.
  WeylElement compose(const WeylElement& o) const;
  WeylElement inverse() const;
  /// Determinant of the signed permutation matrix.
  int sign() const;
  bool operator==(const WeylElement& o) const {
    return perm == o.perm && signs == o.signs;
  }
  std::string str() const;
};

struct WeylElementLess {
  bool operator()(const WeylElement& a, const WeylElement& b) const {
    if (a.perm != b.perm) return a.perm < b.perm;
    return a.signs < b.signs;
  }
};

inline std::size_t kWeylRankLimit = 8;

/// Number of elements of W(B_n) = 2^n n!.
unsigned long weyl_order(std::size_t n);

/// Visits all 2^n n! signed permutations exactly once, in a fixed order:
/// permutations lexicographically ascending, and within each permutation
/// the 2^n sign vectors counted in binary with coordinate n as the least
/// significant digit (+ encoded as 0).  Throws ResourceError above the
/// rank limit.
void for_each_weyl(std::size_t n,
                   const std::function<void(const WeylElement&, int)>& fn,
                   std::size_t rank_limit = kWeylRankLimit);

/// For regular lambda (nonzero coordinates, pairwise distinct absolute
/// values) returns the unique (w, lambda_dom) with w(lambda) = lambda_dom
/// and lambda_dom strictly dominant.  Throws RegularityError otherwise,
/// naming the offending coordinates.
std::pair<WeylElement, Weight> make_dominant(const Weight& lambda);

/// lambda regular: nonzero coordinates with pairwise distinct |.|.
bool is_regular(const Weight& lambda);

/// Strictly dominant: lambda_1 > ... > lambda_n > 0.
bool is_strictly_dominant(const Weight& lambda);

/// Expresses Lambda = sum p_i omega_i and validates p_i >= 0 integral
/// with p_n even.  Throws SpinorialWeightError / DominanceError.
std::vector<Int> validate_highest_weight(const Weight& Lambda);

}  // namespace superdirac
