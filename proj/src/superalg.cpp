#include "superdirac/superalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

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

Rat supertrace(const Mat& m) {
  Rat s = m[0][0];
  for (std::size_t k = 1; k < m.size(); ++k) s -= m[k][k];
  return s;
}

bool mat_zero(const Mat& m) {
  for (const auto& row : m)
    for (const auto& v : row)
      if (sgn(v) != 0) return false;
  return true;
}

}  // namespace

SuperAlgebraStructure::SuperAlgebraStructure(std::size_t n,
                                             std::size_t rank_limit)
    : n_(n) {
  if (n == 0) throw RankError("rank must be positive");
  if (n > rank_limit)
    throw ResourceError("symbolic engine limited to rank " +
                        std::to_string(rank_limit));
  build_generators();
  build_table_and_form();
  verify();
}

void SuperAlgebraStructure::build_generators() {
  std::size_t dim = 2 * n_ + 1;
  auto add = [&](const std::string& name, Mat m) {
    names_.push_back(name);
    mats_.push_back(std::move(m));
  };
  auto tag = [&](std::size_t i, std::size_t j) {
    return std::to_string(i + 1) + std::to_string(j + 1);
  };
  // even block basis of sp(2n); supermatrix indices: odd coordinates sit
  // at 1..2n, the even line at 0
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Mat m = zero_mat(dim, dim);
      m[1 + i][1 + j] += 1;
      m[1 + n_ + j][1 + n_ + i] -= 1;
      add("A" + tag(i, j), std::move(m));
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      Mat m = zero_mat(dim, dim);
      m[1 + i][1 + n_ + j] += 1;
      m[1 + j][1 + n_ + i] += 1;
      add("B" + tag(i, j), std::move(m));
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j) {
      Mat m = zero_mat(dim, dim);
      m[1 + n_ + i][1 + j] += 1;
      m[1 + n_ + j][1 + i] += 1;
      add("C" + tag(i, j), std::move(m));
    }
  even_count_ = names_.size();
  for (std::size_t i = 0; i < n_; ++i) {
    Mat m = zero_mat(dim, dim);
    m[1 + i][0] = 1;
    m[0][1 + n_ + i] = -1;  // row part is (J u)^t for the column u
    add("d" + std::to_string(i + 1), std::move(m));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    Mat m = zero_mat(dim, dim);
    m[1 + n_ + i][0] = 1;
    m[0][1 + i] = 1;
    add("x" + std::to_string(i + 1), std::move(m));
  }
}

int SuperAlgebraStructure::generator_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("unknown generator " + name);
  return static_cast<int>(it - names_.begin());
}

GenCombo SuperAlgebraStructure::decompose(const Mat& m) const {
  GenCombo combo;
  std::size_t g = 0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j, ++g)
      if (sgn(m[1 + i][1 + j]) != 0)
        combo.emplace_back(static_cast<int>(g), m[1 + i][1 + j]);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j, ++g) {
      Rat c = m[1 + i][1 + n_ + j];
      if (i == j) c /= 2;
      if (sgn(c) != 0) combo.emplace_back(static_cast<int>(g), c);
    }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j, ++g) {
      Rat c = m[1 + n_ + i][1 + j];
      if (i == j) c /= 2;
      if (sgn(c) != 0) combo.emplace_back(static_cast<int>(g), c);
    }
  for (std::size_t i = 0; i < n_; ++i, ++g)
    if (sgn(m[1 + i][0]) != 0)
      combo.emplace_back(static_cast<int>(g), m[1 + i][0]);
  for (std::size_t i = 0; i < n_; ++i, ++g)
    if (sgn(m[1 + n_ + i][0]) != 0)
      combo.emplace_back(static_cast<int>(g), m[1 + n_ + i][0]);

  // reconstruct to certify the matrix lies in the span
  Mat rec = zero_mat(m.size(), m.size());
  for (const auto& [k, c] : combo)
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t s = 0; s < m.size(); ++s)
        rec[r][s] += c * mats_[k][r][s];
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t s = 0; s < m.size(); ++s)
      if (rec[r][s] != m[r][s])
        throw StructureError("matrix is not in the osp(1|2n) span");
  return combo;
}

void SuperAlgebraStructure::build_table_and_form() {
  std::size_t G = names_.size();
  table_.assign(G, std::vector<GenCombo>(G));
  gram_.assign(G, std::vector<Rat>(G, Rat(0)));
  for (std::size_t a = 0; a < G; ++a) {
    for (std::size_t b = 0; b < G; ++b) {
      Mat ab = mat_mul(mats_[a], mats_[b]);
      Mat ba = mat_mul(mats_[b], mats_[a]);
      int sign = (is_odd(static_cast<int>(a)) && is_odd(static_cast<int>(b)))
                     ? 1
                     : -1;
      Mat br = ab;
      for (std::size_t r = 0; r < br.size(); ++r)
        for (std::size_t s = 0; s < br.size(); ++s)
          br[r][s] += sign * ba[r][s];
      table_[a][b] = decompose(br);
      // B = -1/4 str(XY): pinned by B(d_i, x_j) = delta_ij / 2
      gram_[a][b] = supertrace(ab) / Rat(-4);
    }
  }

  // dual basis of the even part: invert the even Gram block
  std::size_t E = even_count_;
  Mat aug(E, std::vector<Rat>(2 * E, Rat(0)));
  for (std::size_t i = 0; i < E; ++i) {
    for (std::size_t j = 0; j < E; ++j) aug[i][j] = gram_[i][j];
    aug[i][E + i] = 1;
  }
  for (std::size_t col = 0; col < E; ++col) {
    std::size_t piv = col;
    while (piv < E && sgn(aug[piv][col]) == 0) ++piv;
    if (piv == E)
      throw StructureError("degenerate form on the even part");
    std::swap(aug[piv], aug[col]);
    Rat inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t r = 0; r < E; ++r) {
      if (r == col || sgn(aug[r][col]) == 0) continue;
      Rat f = aug[r][col];
      for (std::size_t c = 0; c < 2 * E; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  even_dual_.assign(E, {});
  for (std::size_t j = 0; j < E; ++j)
    for (std::size_t l = 0; l < E; ++l)
      if (sgn(aug[l][E + j]) != 0)
        even_dual_[j].emplace_back(static_cast<int>(l), aug[l][E + j]);
}

void SuperAlgebraStructure::verify() const {
  std::size_t G = names_.size();
  // odd pairing and block orthogonality
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Rat expected = i == j ? Rat(1, 2) : Rat(0);
      if (bform(d_index(i), x_index(j)) != expected ||
          bform(x_index(j), d_index(i)) != -expected)
        throw StructureError("odd pairing is not delta/2");
    }
  for (std::size_t a = 0; a < even_count_; ++a)
    for (std::size_t b = even_count_; b < G; ++b)
      if (sgn(gram_[a][b]) != 0 || sgn(gram_[b][a]) != 0)
        throw StructureError("even and odd parts are not orthogonal");

  // dual pairs
  for (std::size_t k = 0; k < even_count_; ++k)
    for (std::size_t l = 0; l < even_count_; ++l) {
      Rat pair = 0;
      for (const auto& [g, c] : even_dual_[l]) pair += gram_[k][g] * c;
      if (pair != (k == l ? Rat(1) : Rat(0)))
        throw StructureError("even dual basis failed to pair");
    }

  auto bracket_combo = [&](int a, const GenCombo& combo) {
    std::vector<Rat> out(G, Rat(0));
    for (const auto& [g, c] : combo)
      for (const auto& [k, d] : table_[a][g]) out[k] += c * d;
    return out;
  };

  for (std::size_t a = 0; a < G; ++a) {
    for (std::size_t b = 0; b < G; ++b) {
      // invariance B([a,b],c) = B(a,[b,c])
      for (std::size_t c = 0; c < G; ++c) {
        Rat lhs = 0, rhs = 0;
        for (const auto& [k, v] : table_[a][b]) lhs += v * gram_[k][c];
        for (const auto& [k, v] : table_[b][c]) rhs += gram_[a][k] * v;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "form not invariant on (" << names_[a] << "," << names_[b]
             << "," << names_[c] << ")";
          throw StructureError(os.str());
        }
      }
      // super Jacobi [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
      bool oa = is_odd(static_cast<int>(a)), ob = is_odd(static_cast<int>(b));
      for (std::size_t c = 0; c < G; ++c) {
        auto lhs = bracket_combo(static_cast<int>(a), table_[b][c]);
        std::vector<Rat> rhs(G, Rat(0));
        for (const auto& [k, v] : table_[a][b])
          for (const auto& [l, w] : table_[k][c]) rhs[l] += v * w;
        auto second = bracket_combo(static_cast<int>(b), table_[a][c]);
        int sign = (oa && ob) ? -1 : 1;
        for (std::size_t l = 0; l < G; ++l) rhs[l] += sign * second[l];
        if (lhs != rhs) {
          std::ostringstream os;
          os << "super Jacobi fails on (" << names_[a] << "," << names_[b]
             << "," << names_[c] << ")";
          throw StructureError(os.str());
        }
      }
    }
  }
}

std::vector<std::vector<Rat>> SuperAlgebraStructure::nu(int g) const {
  if (is_odd(g)) throw std::invalid_argument("nu expects an even generator");
  Mat m = zero_mat(2 * n_, 2 * n_);
  for (std::size_t j = 0; j < 2 * n_; ++j) {
    int odd_j = static_cast<int>(even_count_ + j);
    for (const auto& [k, c] : table_[g][odd_j]) {
      if (!is_odd(k))
        throw StructureError("even-odd bracket left the odd part");
      m[k - even_count_][j] = c;
    }
  }
  return m;
}

unsigned WeylMono::degree() const {
  unsigned s = 0;
  for (unsigned v : d) s += v;
  for (unsigned v : x) s += v;
  return s;
}

WeylElementAlg WeylElementAlg::one(std::size_t n) {
  WeylElementAlg w(n);
  w.add_term(WeylMono::one(n), 1);
  return w;
}

void WeylElementAlg::add_term(const WeylMono& m, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

WeylElementAlg WeylElementAlg::operator+(const WeylElementAlg& o) const {
  WeylElementAlg r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

WeylElementAlg WeylElementAlg::operator-(const WeylElementAlg& o) const {
  WeylElementAlg r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

WeylElementAlg WeylElementAlg::scaled(const Rat& c) const {
  WeylElementAlg r(n_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

namespace {

Rat binom(unsigned n, unsigned k) {
  Rat r = 1;
  for (unsigned i = 0; i < k; ++i) r *= Rat(n - i, i + 1);
  return r;
}

// d^a x^b * d^c x^e, normal ordered: commute x^b past d^c coordinatewise
// with x^b d^c = sum_k (-1)^|k| k! C(b,k) C(c,k) d^{c-k} x^{b-k}.
void mono_mul(const WeylMono& lhs, const WeylMono& rhs, const Rat& coef,
              WeylElementAlg& out) {
  std::size_t n = lhs.d.size();
  std::vector<unsigned> kmax(n);
  for (std::size_t i = 0; i < n; ++i)
    kmax[i] = std::min(lhs.x[i], rhs.d[i]);
  std::vector<unsigned> k(n, 0);
  while (true) {
    Rat c = coef;
    unsigned total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      total += k[i];
      Rat fact = 1;
      for (unsigned f = 2; f <= k[i]; ++f) fact *= f;
      c *= fact * binom(lhs.x[i], k[i]) * binom(rhs.d[i], k[i]);
    }
    if (total % 2 == 1) c = -c;
    WeylMono m;
    m.d.resize(n);
    m.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      m.d[i] = lhs.d[i] + rhs.d[i] - k[i];
      m.x[i] = lhs.x[i] + rhs.x[i] - k[i];
    }
    out.add_term(m, c);
    std::size_t pos = 0;
    while (pos < n && k[pos] == kmax[pos]) k[pos++] = 0;
    if (pos == n) break;
    ++k[pos];
  }
}

}  // namespace

WeylElementAlg WeylElementAlg::operator*(const WeylElementAlg& o) const {
  WeylElementAlg r(n_);
  for (const auto& [m, c] : terms_)
    for (const auto& [m2, c2] : o.terms_) mono_mul(m, m2, c * c2, r);
  return r;
}

std::optional<Rat> WeylElementAlg::as_scalar() const {
  if (terms_.empty()) return Rat(0);
  if (terms_.size() == 1 && terms_.begin()->first.degree() == 0)
    return terms_.begin()->second;
  return std::nullopt;
}

bool WeylElementAlg::odd() const {
  if (terms_.empty()) return false;
  bool first = terms_.begin()->first.odd_degree();
  for (const auto& [m, c] : terms_)
    if (m.odd_degree() != first)
      throw StructureError("Weyl element of mixed parity");
  return first;
}

std::string WeylElementAlg::str(const SuperAlgebraStructure& g) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool outer = true;
  for (const auto& [m, c] : terms_) {
    if (!outer) os << " + ";
    outer = false;
    os << c.get_str();
    for (std::size_t i = 0; i < m.d.size(); ++i)
      for (unsigned r = 0; r < m.d[i]; ++r)
        os << "*" << g.name(g.d_index(i));
    for (std::size_t i = 0; i < m.x.size(); ++i)
      for (unsigned r = 0; r < m.x[i]; ++r)
        os << "*" << g.name(g.x_index(i));
  }
  return os.str();
}

WeylElementAlg alpha(const SuperAlgebraStructure& g, int even_gen) {
  std::size_t n = g.rank();
  auto m = g.nu(even_gen);
  WeylElementAlg out(n);
  // A block: nu = [[A, B], [C, -A^t]] with sigma(d_i x_j) acting as
  // -E_ij + E_{n+j,n+i}; sigma(d_i x_j) = d_i x_j - delta_ij / 2.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& a = m[i][j];
      if (sgn(a) == 0) continue;
      WeylMono w = WeylMono::one(n);
      w.d[i] += 1;
      w.x[j] += 1;
      out.add_term(w, -a);
      if (i == j) out.add_term(WeylMono::one(n), a / 2);
    }
  // B block (symmetric): sigma(d_i d_j) = d_i d_j acting as
  // E_{i,n+j} + E_{j,n+i}; the diagonal matrix unit is half of sigma(d_i^2).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rat& b = m[i][n + j];
      if (sgn(b) == 0) continue;
      WeylMono w = WeylMono::one(n);
      w.d[i] += 1;
      w.d[j] += 1;
      out.add_term(w, i == j ? Rat(b / 2) : b);
    }
  // C block (symmetric): sigma(x_i x_j) = x_i x_j acting as
  // -E_{n+i,j} - E_{n+j,i}.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Rat& c = m[n + i][j];
      if (sgn(c) == 0) continue;
      WeylMono w = WeylMono::one(n);
      w.x[i] += 1;
      w.x[j] += 1;
      out.add_term(w, i == j ? Rat(-c / 2) : Rat(-c));
    }
  return out;
}

TensorAlgebra::TensorAlgebra(const SuperAlgebraStructure& g,
                             TensorSignConvention convention,
                             std::vector<int> generator_order)
    : g_(g), conv_(convention) {
  std::size_t G = g.num_generators();
  position_.assign(G, 0);
  if (generator_order.empty()) {
    std::iota(position_.begin(), position_.end(), 0);
  } else {
    if (generator_order.size() != G)
      throw std::invalid_argument("generator order must list every generator");
    for (std::size_t p = 0; p < G; ++p) position_[generator_order[p]] = static_cast<int>(p);
  }
}

bool TensorAlgebra::word_odd(const UWord& w) const {
  int odd = 0;
  for (int g : w) odd ^= g_.is_odd(g) ? 1 : 0;
  return odd != 0;
}

std::map<UWord, Rat> TensorAlgebra::normalize_word(const UWord& word,
                                                   const Rat& coef) const {
  std::map<UWord, Rat> result;
  std::vector<std::pair<UWord, Rat>> pending{{word, coef}};
  auto emit = [&](const UWord& w, const Rat& c) {
    auto [it, inserted] = result.emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) result.erase(it);
    }
  };
  while (!pending.empty()) {
    auto [w, c] = std::move(pending.back());
    pending.pop_back();
    if (sgn(c) == 0) continue;
    std::size_t p = 0;
    bool normal = true;
    for (; p + 1 < w.size(); ++p) {
      int a = w[p], b = w[p + 1];
      if (position_[a] > position_[b] ||
          (a == b && g_.is_odd(a))) {
        normal = false;
        break;
      }
    }
    if (normal) {
      emit(w, c);
      continue;
    }
    int a = w[p], b = w[p + 1];
    if (a == b) {
      // odd square: a a = [a,a]/2
      for (const auto& [k, v] : g_.bracket(a, b)) {
        UWord nw(w.begin(), w.begin() + p);
        nw.push_back(k);
        nw.insert(nw.end(), w.begin() + p + 2, w.end());
        pending.emplace_back(std::move(nw), c * v / 2);
      }
    } else {
      // a b = (-1)^{|a||b|} b a + [a,b]
      int sign = (g_.is_odd(a) && g_.is_odd(b)) ? -1 : 1;
      UWord sw(w);
      std::swap(sw[p], sw[p + 1]);
      pending.emplace_back(std::move(sw), c * sign);
      for (const auto& [k, v] : g_.bracket(a, b)) {
        UWord nw(w.begin(), w.begin() + p);
        nw.push_back(k);
        nw.insert(nw.end(), w.begin() + p + 2, w.end());
        pending.emplace_back(std::move(nw), c * v);
      }
    }
  }
  return result;
}

TensorElement TensorElement::one(const TensorAlgebra& alg) {
  TensorElement t(alg);
  t.add_term({{}, WeylMono::one(alg.structure().rank())}, 1);
  return t;
}

TensorElement TensorElement::u_generator(const TensorAlgebra& alg, int gen,
                                         Rat c) {
  TensorElement t(alg);
  t.add_term({{gen}, WeylMono::one(alg.structure().rank())}, c);
  return t;
}

TensorElement TensorElement::w_element(const TensorAlgebra& alg,
                                       const WeylElementAlg& w, Rat c) {
  TensorElement t(alg);
  for (const auto& [m, v] : w.terms()) t.add_term({{}, m}, c * v);
  return t;
}

void TensorElement::add_term(const TensorTerm& t, const Rat& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r(*this);
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  TensorElement r(*this);
  for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
  return r;
}

TensorElement TensorElement::scaled(const Rat& c) const {
  TensorElement r(*alg_);
  if (sgn(c) == 0) return r;
  for (const auto& [t, v] : terms_) r.terms_.emplace(t, v * c);
  return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
  std::size_t n = alg_->structure().rank();
  TensorElement r(*alg_);
  for (const auto& [t1, c1] : terms_) {
    for (const auto& [t2, c2] : o.terms_) {
      Rat c = c1 * c2;
      if (alg_->convention() == TensorSignConvention::Koszul &&
          t1.w.odd_degree() && alg_->word_odd(t2.u))
        c = -c;
      UWord concat(t1.u);
      concat.insert(concat.end(), t2.u.begin(), t2.u.end());
      auto uparts = alg_->normalize_word(concat, c);
      WeylElementAlg wprod(n);
      mono_mul(t1.w, t2.w, Rat(1), wprod);
      for (const auto& [uw, uc] : uparts)
        for (const auto& [wm, wc] : wprod.terms()) r.add_term({uw, wm}, uc * wc);
    }
  }
  return r;
}

TensorElement TensorElement::commutator(const TensorElement& o) const {
  return *this * o - o * *this;
}

std::string TensorElement::str() const {
  if (terms_.empty()) return "0";
  const auto& g = alg_->structure();
  std::ostringstream os;
  bool outer = true;
  for (const auto& [t, c] : terms_) {
    if (!outer) os << " + ";
    outer = false;
    os << c.get_str() << "*(";
    if (t.u.empty()) os << "1";
    for (std::size_t i = 0; i < t.u.size(); ++i)
      os << (i ? "." : "") << g.name(t.u[i]);
    os << " (x) ";
    WeylElementAlg w(g.rank());
    w.add_term(t.w, 1);
    os << w.str(g) << ")";
  }
  return os.str();
}

TensorElement casimir(const TensorAlgebra& alg, bool verify_central) {
  const auto& g = alg.structure();
  std::size_t n = g.rank();
  TensorElement omega(alg);
  WeylMono unit = WeylMono::one(n);
  // even part: sum_k f_k e_k over the dual pairs
  for (std::size_t k = 0; k < g.num_even(); ++k)
    for (const auto& [l, c] : g.even_dual(k))
      for (const auto& [uw, uc] :
           alg.normalize_word({l, static_cast<int>(k)}, c))
        omega.add_term({uw, unit}, uc);
  // odd part: 2 sum_i (x_i d_i - d_i x_i)
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [uw, uc] :
         alg.normalize_word({g.x_index(i), g.d_index(i)}, Rat(2)))
      omega.add_term({uw, unit}, uc);
    for (const auto& [uw, uc] :
         alg.normalize_word({g.d_index(i), g.x_index(i)}, Rat(-2)))
      omega.add_term({uw, unit}, uc);
  }
  if (verify_central) {
    for (std::size_t a = 0; a < g.num_generators(); ++a) {
      auto ga = TensorElement::u_generator(alg, static_cast<int>(a));
      if (!omega.commutator(ga).is_zero())
        throw StructureError("Casimir is not central against " +
                             g.name(static_cast<int>(a)));
    }
  }
  return omega;
}

TensorElement casimir_even(const TensorAlgebra& alg) {
  const auto& g = alg.structure();
  TensorElement omega(alg);
  WeylMono unit = WeylMono::one(g.rank());
  for (std::size_t k = 0; k < g.num_even(); ++k)
    for (const auto& [l, c] : g.even_dual(k))
      for (const auto& [uw, uc] :
           alg.normalize_word({l, static_cast<int>(k)}, c))
        omega.add_term({uw, unit}, uc);
  return omega;
}

namespace {

TensorElement diagonal_embed(const TensorAlgebra& alg, int gen) {
  TensorElement t = TensorElement::u_generator(alg, gen);
  return t + TensorElement::w_element(alg, alpha(alg.structure(), gen));
}

}  // namespace

TensorElement casimir_even_diagonal(const TensorAlgebra& alg) {
  const auto& g = alg.structure();
  TensorElement omega(alg);
  for (std::size_t k = 0; k < g.num_even(); ++k) {
    TensorElement fk(alg);
    for (const auto& [l, c] : g.even_dual(k))
      fk = fk + diagonal_embed(alg, l).scaled(c);
    omega = omega + fk * diagonal_embed(alg, static_cast<int>(k));
  }
  return omega;
}

KostantCertificate kostant_constant(const TensorAlgebra& alg) {
  const auto& g = alg.structure();
  std::size_t n = g.rank();
  WeylElementAlg sum(n);
  Mat op = zero_mat(2 * n, 2 * n);
  for (std::size_t k = 0; k < g.num_even(); ++k) {
    WeylElementAlg fk(n);
    Mat nu_fk = zero_mat(2 * n, 2 * n);
    for (const auto& [l, c] : g.even_dual(k)) {
      fk = fk + alpha(g, l).scaled(c);
      auto nl = g.nu(l);
      for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t s = 0; s < 2 * n; ++s) nu_fk[r][s] += c * nl[r][s];
    }
    sum = sum + fk * alpha(g, static_cast<int>(k));
    Mat prod = mat_mul(nu_fk, g.nu(static_cast<int>(k)));
    for (std::size_t r = 0; r < 2 * n; ++r)
      for (std::size_t s = 0; s < 2 * n; ++s) op[r][s] += prod[r][s];
  }
  Rat trace = 0;
  for (std::size_t r = 0; r < 2 * n; ++r) trace += op[r][r];
  auto scalar = sum.as_scalar();
  KostantCertificate cert{n, scalar.has_value(),
                          scalar.value_or(Rat(0)), trace, false};
  if (!scalar)
    throw StructureError("alpha image of the even Casimir is not scalar");
  // the odd space contributes with the super sign: C = (1/8) str = -tr/8
  cert.eighth_supertrace = (cert.constant == -trace / 8);
  return cert;
}

TensorElement dirac_operator(const TensorAlgebra& alg) {
  const auto& g = alg.structure();
  std::size_t n = g.rank();
  TensorElement d(alg);
  for (std::size_t i = 0; i < n; ++i) {
    WeylMono xi = WeylMono::one(n);
    xi.x[i] = 1;
    WeylMono di = WeylMono::one(n);
    di.d[i] = 1;
    d.add_term({{g.d_index(i)}, xi}, 2);
    d.add_term({{g.x_index(i)}, di}, -2);
  }
  return d;
}

DiracSquareCertificate verify_dirac_square(const TensorAlgebra& alg) {
  const auto& g = alg.structure();
  auto kost = kostant_constant(alg);
  TensorElement d = dirac_operator(alg);
  TensorElement lhs = d * d + casimir(alg, false) -
                      casimir_even_diagonal(alg) +
                      TensorElement::one(alg).scaled(kost.constant);
  std::size_t invariance = 0;
  for (std::size_t k = 0; k < g.num_even(); ++k) {
    auto delta = diagonal_embed(alg, static_cast<int>(k));
    invariance += delta.commutator(d).size();
  }
  // D is basis independent: rebuild it from the mixed odd basis
  // u_i = d_i + x_i, v_i = d_i - x_i, whose B-dual basis is
  // (x_i - d_i, d_i + x_i) since B(d_i, x_i) = 1/2.  The cross terms
  // d (x) d and x (x) x must cancel inside the engine.
  TensorElement d2(alg);
  std::size_t n = g.rank();
  for (std::size_t i = 0; i < n; ++i) {
    WeylMono xi = WeylMono::one(n);
    xi.x[i] = 1;
    WeylMono di = WeylMono::one(n);
    di.d[i] = 1;
    WeylElementAlg wu(n), wv(n);
    wu.add_term(xi, 1);
    wu.add_term(di, -1);  // f_u = x_i - d_i
    wv.add_term(di, 1);
    wv.add_term(xi, 1);  // f_v = d_i + x_i
    for (const auto& [wm, wc] : wu.terms()) {
      d2.add_term({{g.d_index(i)}, wm}, wc);
      d2.add_term({{g.x_index(i)}, wm}, wc);
    }
    for (const auto& [wm, wc] : wv.terms()) {
      d2.add_term({{g.d_index(i)}, wm}, wc);
      d2.add_term({{g.x_index(i)}, wm}, -wc);
    }
  }
  bool basis_independent = (d2 == d);
  return DiracSquareCertificate{g.rank(), alg.convention(), lhs.size(),
                                invariance, basis_independent, kost.constant};
}

std::vector<Rat> hc_image(const TensorAlgebra& alg, const TensorElement& z) {
  const auto& g = alg.structure();
  if (g.rank() != 1)
    throw ResourceError("Harish-Chandra image implemented at rank 1");
  for (const auto& [t, c] : z.terms())
    if (t.w.degree() != 0)
      throw std::invalid_argument("hc_image expects a pure U(g) element");
  // centrality pre-check
  for (std::size_t a = 0; a < g.num_generators(); ++a) {
    auto ga = TensorElement::u_generator(alg, static_cast<int>(a));
    if (!z.commutator(ga).is_zero())
      throw std::invalid_argument("hc_image expects a central element");
  }
  int A = g.generator_index("A11"), B = g.generator_index("B11"),
      C = g.generator_index("C11"), D = g.generator_index("d1"),
      X = g.generator_index("x1");
  // negative root vectors, Cartan, positive root vectors
  TensorAlgebra hc_alg(g, alg.convention(), {C, X, A, D, B});
  std::map<UWord, Rat> beta;
  for (const auto& [t, c] : z.terms())
    for (const auto& [w, v] : hc_alg.normalize_word(t.u, c)) {
      auto [it, inserted] = beta.emplace(w, v);
      if (!inserted) {
        it->second += v;
        if (sgn(it->second) == 0) beta.erase(it);
      }
    }
  std::vector<Rat> poly;
  for (const auto& [w, c] : beta) {
    bool pure = std::all_of(w.begin(), w.end(), [&](int l) { return l == A; });
    if (!pure) continue;  // lies in n^- U(g) + U(g) n^+
    if (poly.size() <= w.size()) poly.resize(w.size() + 1, Rat(0));
    poly[w.size()] += c;
  }
  // rho shift: gamma(t) = beta(t - 1/2)
  std::vector<Rat> gamma(poly.size(), Rat(0));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    // expand (t - 1/2)^k
    std::vector<Rat> pow(k + 1, Rat(0));
    pow[0] = 1;
    for (std::size_t step = 0; step < k; ++step) {
      std::vector<Rat> next(k + 1, Rat(0));
      for (std::size_t j = 0; j <= step; ++j) {
        next[j + 1] += pow[j];
        next[j] -= pow[j] / 2;
      }
      pow = next;
    }
    for (std::size_t j = 0; j <= k; ++j) gamma[j] += poly[k] * pow[j];
  }
  while (!gamma.empty() && sgn(gamma.back()) == 0) gamma.pop_back();
  return gamma;
}

Rat eval_poly(const std::vector<Rat>& poly, const Rat& t) {
  Rat v = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = v * t + *it;
  return v;
}

}  // namespace superdirac
