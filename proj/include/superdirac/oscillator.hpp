#pragma once

#include <optional>

#include "superdirac/series.hpp"
#include "superdirac/weylchar.hpp"

namespace superdirac {

enum class WeilParity { Even, Odd, Difference };

/// Character of the Weil module C[x_1..x_n] restricted to the given
/// degree parity, as a series at offset zero: the monomial x^a carries
/// weight -sum (a_i + 1/2) e_i, so its q-exponent vector is 2a + 1.
/// "Difference" returns ch M+ - ch M- (leading term +q_1...q_n).
TruncatedSeries weil_character(std::size_t n, WeilParity parity, long order);

/// Certificate that two series routes to a Dirac index agree.
struct DiracIndexCertificate {
  std::optional<HighestWeight> highest_weight;  // empty: trivial module
  long order;
  TruncatedSeries lhs;
  TruncatedSeries rhs;
  bool verdict;
};

/// Index identity for the trivial module: the Dirac operator vanishes on
/// 1 (x) M, so both sides are the parity difference of M itself.
DiracIndexCertificate dirac_index_trivial(std::size_t n, long order);

struct TransferFactorCertificate {
  std::size_t n;
  long order;
  bool product_is_one;      // (ch M+ - ch M-) * D_1 == 1
  bool matches_ratio;       // expand(D_B / D_C) == ch M+ - ch M-
  bool passed() const { return product_is_one && matches_ratio; }
};

/// Verifies the two series identities pinning the transfer factor
/// Phi = ch M+ - ch M- (sign convention: leading coefficient +1).
TransferFactorCertificate transfer_factor_identity(std::size_t n, long order);

/// Index identity for the irreducible module V_Lambda:
///   ch V * (ch M+ - ch M-) == expand(N(Lambda+rho) / D_C)
/// both sides truncated at the same offset and order.
DiracIndexCertificate dirac_index_character(const HighestWeight& hw,
                                            long order);

}  // namespace superdirac
