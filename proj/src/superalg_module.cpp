#include <algorithm>
#include <sstream>

#include "superdirac/oscillator.hpp"
#include "superdirac/superalg.hpp"

namespace superdirac {

namespace {

using Mat = std::vector<std::vector<Rat>>;

Mat zero_mat(std::size_t r, std::size_t c) {
  return Mat(r, std::vector<Rat>(c, Rat(0)));
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t r = a.size(), k = b.size(), c = b[0].size();
  Mat m = zero_mat(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][l] * b[l][j];
    }
  return m;
}

std::size_t mat_rank(Mat m) {
  if (m.empty() || m[0].empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rat inv = 1 / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    ++rank;
  }
  return rank;
}

/// Columns spanning the kernel of m.
std::vector<std::vector<Rat>> kernel_basis(Mat m, std::size_t cols) {
  std::size_t rows = m.size();
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    Rat inv = 1 / m[rank][col];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(m[r][col]) == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c2 = col; c2 < cols; ++c2) m[r][c2] -= f * m[rank][c2];
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t col = 0; col < cols; ++col) {
    if (pivot_of_col[col] >= 0) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[col] = 1;
    for (std::size_t c2 = 0; c2 < cols; ++c2)
      if (pivot_of_col[c2] >= 0) v[c2] = -m[pivot_of_col[c2]][col];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

ExplicitModule build_module(const TensorAlgebra& alg, long m) {
  const auto& g = alg.structure();
  if (g.rank() != 1)
    throw ResourceError("explicit modules implemented at rank 1");
  if (m < 0) throw std::invalid_argument("highest weight must be >= 0");
  std::size_t dim = static_cast<std::size_t>(2 * m + 1);
  ExplicitModule mod;
  mod.m = m;
  mod.dim = dim;
  for (std::size_t k = 0; k < dim; ++k) {
    mod.weights2.push_back(Int(2 * (m - static_cast<long>(k))));
    mod.parity.push_back(static_cast<int>(k % 2));
  }

  int D = g.d_index(0), X = g.x_index(0);
  // [d, x] must be a multiple of a single Cartan-acting even generator
  const GenCombo& dx = g.bracket(D, X);
  if (dx.size() != 1) throw StructureError("[d,x] is not a Cartan multiple");
  int H = dx[0].first;
  Rat kappa = dx[0].second;
  // e_1(H) from [H, d] = e_1(H) d
  Rat root_h = 0;
  for (const auto& [k, c] : g.bracket(H, D))
    if (k == D) root_h = c;
  if (sgn(root_h) == 0) throw StructureError("d is not a root vector for H");

  std::size_t G = g.num_generators();
  std::vector<Mat> action(G, zero_mat(dim, dim));
  // the lowering chain x v_k = v_{k+1}; the free scale is set to one
  for (std::size_t k = 0; k + 1 < dim; ++k) action[X][k + 1][k] = 1;
  // d v_k = d_k v_{k-1} solved from the anticommutator d x + x d = kappa H
  std::vector<Rat> d_coef(dim + 1, Rat(0));
  for (std::size_t k = 0; k + 1 <= dim; ++k) {
    // on v_k: d_{k+1} c_k + c_{k-1} d_k = kappa * (m - k) * root_h
    Rat rhs = kappa * root_h * Rat(m - static_cast<long>(k));
    d_coef[k + 1] = rhs - d_coef[k];
  }
  if (sgn(d_coef[dim]) != 0)
    throw StructureError("lowering chain fails to terminate");
  for (std::size_t k = 1; k < dim; ++k) action[D][k - 1][k] = d_coef[k];

  // even actions from odd anticommutators: solve g_even = sum of brackets
  std::vector<std::pair<int, int>> pairs;
  for (int a : {D, X})
    for (int b : {D, X})
      if (a <= b) pairs.emplace_back(a, b);
  std::size_t E = g.num_even(), P = pairs.size();
  for (std::size_t target = 0; target < E; ++target) {
    // solve sum_p coef_p [pair_p] = e_target over the even basis
    Mat sys = zero_mat(E, P + 1);
    for (std::size_t p = 0; p < P; ++p)
      for (const auto& [k, c] : g.bracket(pairs[p].first, pairs[p].second))
        sys[k][p] = c;
    sys[target][P] = 1;
    // gaussian solve
    std::vector<long> piv_col(E, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < P && rank < E; ++col) {
      std::size_t piv = rank;
      while (piv < E && sgn(sys[piv][col]) == 0) ++piv;
      if (piv == E) continue;
      std::swap(sys[piv], sys[rank]);
      Rat inv = 1 / sys[rank][col];
      for (auto& v : sys[rank]) v *= inv;
      for (std::size_t r = 0; r < E; ++r) {
        if (r == rank || sgn(sys[r][col]) == 0) continue;
        Rat f = sys[r][col];
        for (std::size_t c2 = 0; c2 <= P; ++c2) sys[r][c2] -= f * sys[rank][c2];
      }
      piv_col[rank] = static_cast<long>(col);
      ++rank;
    }
    std::vector<Rat> coef(P, Rat(0));
    for (std::size_t r = 0; r < rank; ++r)
      coef[piv_col[r]] = sys[r][P];
    // residual check: the system must be consistent
    for (std::size_t r = rank; r < E; ++r)
      if (sgn(sys[r][P]) != 0)
        throw StructureError("even generator outside the odd bracket span");
    Mat me = zero_mat(dim, dim);
    for (std::size_t p = 0; p < P; ++p) {
      if (sgn(coef[p]) == 0) continue;
      auto ab = mat_mul(action[pairs[p].first], action[pairs[p].second]);
      auto ba = mat_mul(action[pairs[p].second], action[pairs[p].first]);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
          me[r][c] += coef[p] * (ab[r][c] + ba[r][c]);
    }
    action[target] = std::move(me);
  }
  mod.action = std::move(action);

  // verify every bracket relation pi([a,b]) = [pi(a), pi(b)]_super
  for (std::size_t a = 0; a < G; ++a) {
    for (std::size_t b = 0; b < G; ++b) {
      auto ab = mat_mul(mod.action[a], mod.action[b]);
      auto ba = mat_mul(mod.action[b], mod.action[a]);
      int sign =
          (g.is_odd(static_cast<int>(a)) && g.is_odd(static_cast<int>(b)))
              ? 1
              : -1;
      Mat lhs = ab;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) lhs[r][c] += sign * ba[r][c];
      Mat rhs = zero_mat(dim, dim);
      for (const auto& [k, v] : g.bracket(static_cast<int>(a),
                                          static_cast<int>(b)))
        for (std::size_t r = 0; r < dim; ++r)
          for (std::size_t c = 0; c < dim; ++c)
            rhs[r][c] += v * mod.action[k][r][c];
      if (lhs != rhs) {
        std::ostringstream os;
        os << "module relation failed on (" << g.name(static_cast<int>(a))
           << "," << g.name(static_cast<int>(b)) << ") at m=" << m;
        throw StructureError(os.str());
      }
    }
  }
  // highest weight vector is annihilated by the raising odd generator
  for (std::size_t r = 0; r < dim; ++r)
    if (sgn(mod.action[D][r][0]) != 0)
      throw StructureError("highest weight vector is not d-invariant");
  return mod;
}

namespace {

/// We basis of the mu weight space of V (x) M: pairs (k, a) with
/// weight (m - k) - (a + 1/2) = mu, materialized for every k.
struct WeightSpace {
  std::vector<std::pair<std::size_t, long>> basis;  // (k, a)
  std::map<std::pair<std::size_t, long>, std::size_t> index;
};

WeightSpace weight_space(const ExplicitModule& mod, const Int& mu2) {
  WeightSpace ws;
  for (std::size_t k = 0; k < mod.dim; ++k) {
    // 2a = 2(m-k) - 1 - 2mu
    Int a2 = mod.weights2[k] - 1 - mu2;
    if (sgn(a2) < 0 || mpz_odd_p(a2.get_mpz_t())) continue;
    long a = static_cast<long>(Int(a2 / 2).get_si());
    ws.index[{k, a}] = ws.basis.size();
    ws.basis.emplace_back(k, a);
  }
  return ws;
}

/// Matrix of a tensor element on a weight space (weight-preserving
/// terms only; anything leaving the space is an error).
Mat tensor_matrix(const TensorAlgebra& alg, const TensorElement& T,
                  const ExplicitModule& mod, const WeightSpace& ws) {
  std::size_t dim = ws.basis.size();
  Mat out = zero_mat(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    auto [k0, a0] = ws.basis[col];
    for (const auto& [term, coef] : T.terms()) {
      // W factor acts first: d^p x^q on x^a
      long p = term.w.d[0], q = term.w.x[0];
      long a1 = a0 + q;
      Rat c = coef;
      for (long f = 0; f < p; ++f) c *= Rat(a1 - f);
      if (sgn(c) == 0) continue;
      long a2 = a1 - p;
      if (alg.convention() == TensorSignConvention::Koszul &&
          term.w.odd_degree() && mod.parity[k0] == 1)
        c = -c;
      // U factor on v_{k0}: apply letters right to left
      std::vector<Rat> vec(mod.dim, Rat(0));
      vec[k0] = c;
      for (auto it = term.u.rbegin(); it != term.u.rend(); ++it) {
        std::vector<Rat> next(mod.dim, Rat(0));
        const Mat& mat = mod.action[*it];
        for (std::size_t r = 0; r < mod.dim; ++r) {
          if (sgn(vec[r]) == 0) continue;
          for (std::size_t s = 0; s < mod.dim; ++s)
            if (sgn(mat[s][r]) != 0) next[s] += mat[s][r] * vec[r];
        }
        vec = std::move(next);
      }
      for (std::size_t k1 = 0; k1 < mod.dim; ++k1) {
        if (sgn(vec[k1]) == 0) continue;
        auto it = ws.index.find({k1, a2});
        if (it == ws.index.end())
          throw StructureError("operator left the weight space");
        out[it->second][col] += vec[k1];
      }
    }
  }
  return out;
}

}  // namespace

DiracCohomologyResult dirac_cohomology(const TensorAlgebra& alg,
                                       const ExplicitModule& mod,
                                       long order) {
  const auto& g = alg.structure();
  if (g.rank() != 1)
    throw ResourceError("Dirac cohomology implemented at rank 1");
  if (order < 1)
    throw std::invalid_argument(
        "order too small: no weight space survives the truncation intact");
  long a_max = (order - 1) / 2;  // x^a has q-degree 2a+1

  DiracCohomologyResult res;
  res.m = mod.m;
  res.order = order;

  TensorElement D = dirac_operator(alg);
  TensorElement omega_delta = casimir_even_diagonal(alg);
  auto kost = kostant_constant(alg);
  auto gamma = hc_image(alg, casimir(alg));
  // chi_{Lambda+rho}(Omega_g) + C on Ker D
  Rat chi = eval_poly(gamma, Rat(2 * mod.m + 1, 2));
  res.casimir_scalar = chi + kost.constant;
  res.casimir_scalar_ok = true;
  res.euler_matches = true;

  // reference index series ch V * (ch M+ - ch M-)
  FormalCharacter chv(1);
  for (std::size_t k = 0; k < mod.dim; ++k)
    chv.add_term(Weight(std::vector<Int>{mod.weights2[k]}), 1);
  auto index_series =
      TruncatedSeries::from_character(chv, Weight(std::vector<Int>{Int(2 * mod.m)}), order) *
      weil_character(1, WeilParity::Difference, order);

  // reliable weights: mu >= m - 1/2 - a_max
  Int mu2 = 2 * mod.m - 1;
  Int mu2_min = 2 * mod.m - 1 - 2 * a_max;
  for (; mu2 >= mu2_min; mu2 -= 2) {
    auto ws = weight_space(mod, mu2);
    if (ws.basis.empty()) continue;
    std::size_t dim = ws.basis.size();
    Mat dm = tensor_matrix(alg, D, mod, ws);
    // split by the M parity: columns/rows with a even form the + side
    std::vector<std::size_t> plus, minus;
    for (std::size_t i = 0; i < dim; ++i)
      (ws.basis[i].second % 2 == 0 ? plus : minus).push_back(i);
    auto submatrix = [&](const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) {
      Mat m = zero_mat(rows.size(), cols.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c)
          m[r][c] = dm[rows[r]][cols[c]];
      return m;
    };
    Mat A = submatrix(minus, plus);   // D: M+ part -> M- part
    Mat B = submatrix(plus, minus);   // D: M- part -> M+ part
    std::size_t rank_a = mat_rank(A), rank_b = mat_rank(B);
    std::size_t rank_ab = plus.empty() || minus.empty()
                              ? 0
                              : mat_rank(mat_mul(A, B));
    std::size_t rank_ba = plus.empty() || minus.empty()
                              ? 0
                              : mat_rank(mat_mul(B, A));
    // H+ = Ker A / (Ker A  intersect  Im B), and symmetrically
    Int hplus = Int(plus.size()) - Int(rank_a) - (Int(rank_b) - Int(rank_ab));
    Int hminus = Int(minus.size()) - Int(rank_b) - (Int(rank_a) - Int(rank_ba));
    Weight mu(std::vector<Int>{mu2});
    if (sgn(hplus) < 0 || sgn(hminus) < 0)
      throw StructureError("negative cohomology dimension");
    if (sgn(hplus) != 0) res.hplus.emplace(mu, hplus);
    if (sgn(hminus) != 0) res.hminus.emplace(mu, hminus);

    if (index_series.coefficient(mu) != hplus - hminus)
      res.euler_matches = false;

    // Omega_{g0,Delta} acts on Ker D by chi + C
    auto kernel = kernel_basis(dm, dim);
    if (!kernel.empty()) {
      Mat om = tensor_matrix(alg, omega_delta, mod, ws);
      for (const auto& v : kernel) {
        for (std::size_t r = 0; r < dim; ++r) {
          Rat acc = 0;
          for (std::size_t c = 0; c < dim; ++c) acc += om[r][c] * v[c];
          if (acc != res.casimir_scalar * v[r]) res.casimir_scalar_ok = false;
        }
      }
    }
  }
  return res;
}

}  // namespace superdirac
