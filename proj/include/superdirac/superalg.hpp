#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superdirac/series.hpp"
#include "superdirac/weylchar.hpp"

namespace superdirac {

class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear combination of basis generators, by index.
using GenCombo = std::vector<std::pair<int, Rat>>;

/// osp(1|2n) realized by supermatrices on C^{1|2n}: index 0 carries the
/// even line, 1..n the "derivative" side and n+1..2n the "coordinate"
/// side of the odd space.  The even part is sp(2n) in the block basis
/// A_ij = E_ij - E_{n+j,n+i}, B_ij = E_{i,n+j} + E_{j,n+i} (i <= j),
/// C_ij = E_{n+i,j} + E_{n+j,i} (i <= j); the odd part is spanned by
/// d_1..d_n, x_1..x_n.  The invariant form is the supertrace form scaled
/// so that B(d_i, x_j) = delta_ij / 2.  Jacobi and invariance are
/// verified exactly on every basis triple at construction.
class SuperAlgebraStructure {
 public:
  explicit SuperAlgebraStructure(std::size_t n, std::size_t rank_limit = 3);

  std::size_t rank() const { return n_; }
  std::size_t num_generators() const { return names_.size(); }
  std::size_t num_even() const { return even_count_; }
  bool is_odd(int g) const { return g >= static_cast<int>(even_count_); }
  const std::string& name(int g) const { return names_[g]; }
  int generator_index(const std::string& name) const;

  /// index of d_i / x_i among the generators (i is 0-based)
  int d_index(std::size_t i) const { return static_cast<int>(even_count_ + i); }
  int x_index(std::size_t i) const {
    return static_cast<int>(even_count_ + n_ + i);
  }

  /// [g_a, g_b] as a combination of basis generators (the super bracket:
  /// anticommutator when both arguments are odd).
  const GenCombo& bracket(int a, int b) const { return table_[a][b]; }

  /// Invariant form on basis generators.
  const Rat& bform(int a, int b) const { return gram_[a][b]; }

  /// Dual basis of the even part: dual(k) pairs to 1 with even generator
  /// k and to 0 with the others.
  const GenCombo& even_dual(int k) const { return even_dual_[k]; }

  /// Matrix of ad(g) on the odd space in the ordered basis
  /// (d_1..d_n, x_1..x_n); g must be even.
  std::vector<std::vector<Rat>> nu(int g) const;

  /// 2n+1 square supermatrix realizing generator g.
  const std::vector<std::vector<Rat>>& matrix(int g) const {
    return mats_[g];
  }

 private:
  void build_generators();
  void build_table_and_form();
  void verify() const;
  GenCombo decompose(const std::vector<std::vector<Rat>>& m) const;

  std::size_t n_;
  std::size_t even_count_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::vector<Rat>>> mats_;
  std::vector<std::vector<GenCombo>> table_;
  std::vector<std::vector<Rat>> gram_;
  std::vector<GenCombo> even_dual_;
};

/// Monomial of the Weyl algebra in normal order: d^a x^b.
struct WeylMono {
  std::vector<unsigned> d;
  std::vector<unsigned> x;
  bool operator<(const WeylMono& o) const {
    if (d != o.d) return d < o.d;
    return x < o.x;
  }
  bool operator==(const WeylMono& o) const { return d == o.d && x == o.x; }
  unsigned degree() const;
  bool odd_degree() const { return degree() % 2 == 1; }
  static WeylMono one(std::size_t n) { return {std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0)}; }
};

/// Element of the Weyl algebra W(g_1), kept in normal order.
class WeylElementAlg {
 public:
  explicit WeylElementAlg(std::size_t n) : n_(n) {}
  static WeylElementAlg one(std::size_t n);

  std::size_t rank() const { return n_; }
  const std::map<WeylMono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const WeylMono& m, const Rat& c);
  WeylElementAlg operator+(const WeylElementAlg& o) const;
  WeylElementAlg operator-(const WeylElementAlg& o) const;
  WeylElementAlg operator*(const WeylElementAlg& o) const;
  WeylElementAlg scaled(const Rat& c) const;
  bool operator==(const WeylElementAlg& o) const { return terms_ == o.terms_; }
  /// The coefficient of the identity monomial if the element is scalar;
  /// nullopt otherwise.
  std::optional<Rat> as_scalar() const;
  /// Defined parity of the element (all terms share it); throws if mixed.
  bool odd() const;
  std::string str(const SuperAlgebraStructure& g) const;

 private:
  std::size_t n_;
  std::map<WeylMono, Rat> terms_;
};

/// The image of an even generator under the morphism g_0 -> W(g_1)
/// through the ad action on g_1 and the symmetrized-quadratic
/// correspondence.
WeylElementAlg alpha(const SuperAlgebraStructure& g, int even_gen);

/// Words over generator indices; normal form is nondecreasing in the
/// chosen generator order with odd letters pairwise distinct.
using UWord = std::vector<int>;

struct TensorTerm {
  UWord u;
  WeylMono w;
  bool operator<(const TensorTerm& o) const {
    if (!(u == o.u)) return u < o.u;
    return w < o.w;
  }
  bool operator==(const TensorTerm& o) const { return u == o.u && w == o.w; }
};

enum class TensorSignConvention { Ungraded, Koszul };

/// Working context for U(g) (x) W(g_1): holds the structure, the sign
/// convention of the tensor product, and the generator order used for
/// PBW normal forms.
class TensorAlgebra {
 public:
  TensorAlgebra(const SuperAlgebraStructure& g,
                TensorSignConvention convention = TensorSignConvention::Ungraded,
                std::vector<int> generator_order = {});

  const SuperAlgebraStructure& structure() const { return g_; }
  TensorSignConvention convention() const { return conv_; }

  /// Normal form of a single U(g) word with coefficient.
  std::map<UWord, Rat> normalize_word(const UWord& word, const Rat& coef) const;

  bool word_odd(const UWord& w) const;

 private:
  const SuperAlgebraStructure& g_;
  TensorSignConvention conv_;
  std::vector<int> position_;  // generator index -> order position
  friend class TensorElement;
};

/// Element of U(g) (x) W(g_1) in normal form.
class TensorElement {
 public:
  explicit TensorElement(const TensorAlgebra& alg) : alg_(&alg) {}
  static TensorElement zero(const TensorAlgebra& alg) { return TensorElement(alg); }
  static TensorElement one(const TensorAlgebra& alg);
  /// c * (g_a in the U factor)
  static TensorElement u_generator(const TensorAlgebra& alg, int gen, Rat c = 1);
  /// c * (1 (x) w)
  static TensorElement w_element(const TensorAlgebra& alg, const WeylElementAlg& w,
                                 Rat c = 1);

  const TensorAlgebra& algebra() const { return *alg_; }
  const std::map<TensorTerm, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  void add_term(const TensorTerm& t, const Rat& c);

  TensorElement operator+(const TensorElement& o) const;
  TensorElement operator-(const TensorElement& o) const;
  TensorElement operator*(const TensorElement& o) const;
  TensorElement scaled(const Rat& c) const;
  bool operator==(const TensorElement& o) const { return terms_ == o.terms_; }
  /// Commutator a b - b a (a graded commutator only through the product
  /// convention of the algebra).
  TensorElement commutator(const TensorElement& o) const;

  std::string str() const;

 private:
  const TensorAlgebra* alg_;
  std::map<TensorTerm, Rat> terms_;
};

/// Casimir element Omega_g = sum_k f_k e_k + 2 sum_i (x_i d_i - d_i x_i)
/// as a pure-U tensor element; centrality is verified.
TensorElement casimir(const TensorAlgebra& alg, bool verify_central = true);

/// Even Casimir Omega_{g_0} = sum over even dual pairs, pure U factor.
TensorElement casimir_even(const TensorAlgebra& alg);

/// Image of Omega_{g_0} under the diagonal embedding
/// X -> X (x) 1 + 1 (x) alpha(X).
TensorElement casimir_even_diagonal(const TensorAlgebra& alg);

struct KostantCertificate {
  std::size_t n;
  bool scalar;
  Rat constant;            // C = sum_k alpha(f_k) alpha(e_k)
  Rat trace_on_odd;        // plain trace of Omega_{g_0} acting on g_1
  bool eighth_supertrace;  // C == -trace/8, i.e. 1/8 supertrace on g_1
};

/// Computes C = alpha(Omega_{g_0}) and checks it is scalar, comparing
/// against one eighth of the (super)trace of Omega_{g_0} on the odd
/// space.  The plain-trace value is reported alongside.
KostantCertificate kostant_constant(const TensorAlgebra& alg);

/// D = 2 sum_i (d_i (x) x_i - x_i (x) d_i).
TensorElement dirac_operator(const TensorAlgebra& alg);

struct DiracSquareCertificate {
  std::size_t n;
  TensorSignConvention convention;
  std::size_t residual_terms;        // of D^2 + Omega_g - Omega_delta + C
  std::size_t invariance_residuals;  // sum over even generators
  bool basis_independent;            // D from a rescaled dual pair agrees
  Rat constant;                      // the C used
  bool pass() const {
    return residual_terms == 0 && invariance_residuals == 0 &&
           basis_independent;
  }
};

/// Verifies D^2 = -Omega_g (x) 1 + Omega_{g_0,Delta} - C exactly, plus
/// the g_0-invariance of D, under the convention of the algebra.
DiracSquareCertificate verify_dirac_square(const TensorAlgebra& alg);

/// Harish-Chandra image at n = 1: straightens a central pure-U element
/// into the (negative, Cartan, positive) PBW order, keeps the Cartan
/// polynomial and applies the rho shift.  Returns the coefficients of
/// gamma(z) as a polynomial in the coordinate of h_0^*.
std::vector<Rat> hc_image(const TensorAlgebra& alg, const TensorElement& z);

Rat eval_poly(const std::vector<Rat>& poly, const Rat& t);

/// Finite-dimensional graded osp(1|2)-module of highest weight m e_1,
/// built on the chain v_0, x v_0, x^2 v_0, ...; dimension 2m+1.  All
/// bracket relations are verified exactly.
struct ExplicitModule {
  long m;
  std::size_t dim;
  std::vector<Int> weights2;  // doubled weights of the basis, descending
  std::vector<int> parity;    // parity of each basis vector (v_0 even)
  // action[g] is the dim x dim matrix of generator g, columns = images
  std::vector<std::vector<std::vector<Rat>>> action;
};

ExplicitModule build_module(const TensorAlgebra& alg, long m);

struct DiracCohomologyResult {
  long m;
  long order;
  MultiplicityMap hplus;   // reliable weights only
  MultiplicityMap hminus;
  bool euler_matches;      // ch H+ - ch H- == ch V * (ch M+ - ch M-)
  bool casimir_scalar_ok;  // Omega_delta acts on Ker D by chi + C
  Rat casimir_scalar;      // the verified scalar chi_{Lambda+rho} + C
};

/// Exact Dirac cohomology of V_m (x) M at n = 1: assembles D weight
/// space by weight space, computes kernels over Q, and reports H_D^+-
/// on every weight unaffected by the truncation at the given order.
DiracCohomologyResult dirac_cohomology(const TensorAlgebra& alg,
                                       const ExplicitModule& module,
                                       long order);

}  // namespace superdirac
