#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "superdirac/charring.hpp"

namespace superdirac {

/// A dominant integral weight Lambda = sum p_i omega_i with p_i >= 0 and
/// p_n even; the common highest-weight range of osp(1|2n), the
/// non-spinorial representations of o(2n+1), and sp(2n).
class HighestWeight {
 public:
  /// Validates on construction; throws SpinorialWeightError or
  /// DominanceError like validate_highest_weight.
  explicit HighestWeight(Weight lambda);
  /// From fundamental-weight coefficients.
  static HighestWeight from_coefficients(const std::vector<Int>& p);

  const Weight& lambda() const { return lambda_; }
  const std::vector<Int>& coefficients() const { return p_; }
  std::size_t rank() const { return lambda_.rank(); }

  bool operator==(const HighestWeight& o) const {
    return lambda_ == o.lambda_;
  }

 private:
  Weight lambda_;
  std::vector<Int> p_;
};

struct IrreducibleCharacterRecord {
  HighestWeight highest_weight;
  FormalCharacter character;
  Int dimension;
  Weight infinitesimal_character;
};

using MultiplicityMap = std::map<Weight, Int, WeightLexGreater>;

/// Weyl character formula for B_n: N(Lambda+rho_B) / D_B.
IrreducibleCharacterRecord character_B(const HighestWeight& hw);

/// Super character formula for osp(1|2n), kept polynomial throughout:
/// (N(Lambda+rho) * D_1) / D_C with rho = rho0 - rho1.  Agrees with
/// character_B term for term.
IrreducibleCharacterRecord character_osp(const HighestWeight& hw);

/// Weight multiplicities of the B_n module by the Freudenthal recursion,
/// extended W-invariantly over the full orbit.  Independent oracle for
/// the two character formulas.
MultiplicityMap freudenthal_multiplicities(const HighestWeight& hw);

/// prod_{alpha>0} <Lambda+rho, alpha> / <rho, alpha> over positive roots
/// of the kind, exact; the result is integral.
Int weyl_dimension(const HighestWeight& hw, RootKind kind);

/// Lambda + rho(kind).  B and OSP share rho = (n-1/2, ..., 1/2).
Weight infinitesimal_character(const HighestWeight& hw, RootKind kind);

/// Clears the in-memory character memo (used by cache tests).
void clear_character_memo();

}  // namespace superdirac
