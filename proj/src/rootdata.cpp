#include "superdirac/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace superdirac {

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::B:
      return "B";
    case RootKind::C:
      return "C";
    case RootKind::OSP:
      return "osp";
  }
  return "?";
}

namespace {

void check_rank(std::size_t n) {
  if (n == 0) throw RankError("rank must be positive");
}

void sort_canonical(std::vector<Weight>& roots) {
  std::sort(roots.begin(), roots.end(), WeightLexGreater{});
}

}  // namespace

RootSystemData positive_roots(RootKind kind, std::size_t n) {
  check_rank(n);
  RootSystemData data{kind, n, {}, {}};
  auto e = [n](std::size_t i, const Int& c) { return Weight::basis(n, i, c); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      data.even_positive_roots.push_back(e(i, 2) + e(j, 2));
      data.even_positive_roots.push_back(e(i, 2) - e(j, 2));
    }
  }
  switch (kind) {
    case RootKind::B:
      for (std::size_t i = 0; i < n; ++i)
        data.even_positive_roots.push_back(e(i, 2));
      break;
    case RootKind::C:
      for (std::size_t i = 0; i < n; ++i)
        data.even_positive_roots.push_back(e(i, 4));
      break;
    case RootKind::OSP:
      for (std::size_t i = 0; i < n; ++i) {
        data.even_positive_roots.push_back(e(i, 4));
        data.odd_positive_roots.push_back(e(i, 2));
      }
      break;
  }
  sort_canonical(data.even_positive_roots);
  sort_canonical(data.odd_positive_roots);
  return data;
}

Weight rho(RootKind kind, std::size_t n) {
  check_rank(n);
  if (kind == RootKind::OSP) return rho0(n) - rho1(n);
  auto data = positive_roots(kind, n);
  std::vector<Int> d(n, 0);
  for (const auto& a : data.even_positive_roots)
    for (std::size_t i = 0; i < n; ++i) d[i] += a.doubled(i);
  for (auto& v : d) {
    // half of a doubled sum: the half-sum stays in (1/2)Z automatically
    if (mpz_odd_p(v.get_mpz_t()))
      throw std::logic_error("rho coordinates left the lattice");
    v /= 2;
  }
  return Weight(std::move(d));
}

Weight rho0(std::size_t n) {
  check_rank(n);
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = 2 * Int(n - i);
  return Weight(std::move(d));
}

Weight rho1(std::size_t n) {
  check_rank(n);
  return Weight(std::vector<Int>(n, 1));
}

std::vector<Weight> fundamental_weights(std::size_t n) {
  check_rank(n);
  std::vector<Weight> omega;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Int> d(n, 0);
    for (std::size_t j = 0; j <= i; ++j) d[j] = 2;
    omega.emplace_back(std::move(d));
  }
  omega.emplace_back(std::vector<Int>(n, 1));
  return omega;
}

WeylElement WeylElement::identity(std::size_t n) {
  WeylElement w;
  w.perm.resize(n);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  w.signs.assign(n, 1);
  return w;
}

Weight WeylElement::apply(const Weight& lambda) const {
  std::vector<Int> d(rank());
  for (std::size_t i = 0; i < rank(); ++i)
    d[i] = signs[i] * lambda.doubled(perm[i]);
  return Weight(std::move(d));
}

WeylElement WeylElement::compose(const WeylElement& o) const {
  // apply(compose(o), l) == apply(*this, apply(o, l))
  WeylElement r;
  r.perm.resize(rank());
  r.signs.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    r.perm[i] = o.perm[perm[i]];
    r.signs[i] = signs[i] * o.signs[perm[i]];
  }
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.perm.resize(rank());
  r.signs.resize(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    r.perm[perm[i]] = static_cast<int>(i);
    r.signs[perm[i]] = signs[i];
  }
  return r;
}

int WeylElement::sign() const {
  int s = 1;
  for (int v : signs) s *= v;
  // parity of the permutation by counting inversions
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

std::string WeylElement::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rank(); ++i) {
    if (i) os << ',';
    os << (signs[i] > 0 ? '+' : '-') << (perm[i] + 1);
  }
  os << "]";
  return os.str();
}

unsigned long weyl_order(std::size_t n) {
  unsigned long r = 1;
  for (std::size_t i = 1; i <= n; ++i) r *= 2 * i;
  return r;
}

void for_each_weyl(std::size_t n,
                   const std::function<void(const WeylElement&, int)>& fn,
                   std::size_t rank_limit) {
  check_rank(n);
  if (n > rank_limit) {
    std::ostringstream os;
    os << "Weyl group of rank " << n << " exceeds the iteration limit "
       << rank_limit << " (2^n n! elements)";
    throw ResourceError(os.str());
  }
  WeylElement w = WeylElement::identity(n);
  do {
    int perm_sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (w.perm[i] > w.perm[j]) perm_sign = -perm_sign;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      int s = perm_sign;
      for (std::size_t i = 0; i < n; ++i) {
        // coordinate n is the least significant binary digit
        bool neg = (mask >> (n - 1 - i)) & 1ul;
        w.signs[i] = neg ? -1 : 1;
        if (neg) s = -s;
      }
      fn(w, s);
    }
  } while (std::next_permutation(w.perm.begin(), w.perm.end()));
}

bool is_regular(const Weight& lambda) {
  std::vector<Int> abs;
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (sgn(lambda.doubled(i)) == 0) return false;
    abs.push_back(::abs(lambda.doubled(i)));
  }
  std::sort(abs.begin(), abs.end());
  return std::adjacent_find(abs.begin(), abs.end()) == abs.end();
}

bool is_strictly_dominant(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.rank(); ++i) {
    if (sgn(lambda.doubled(i)) <= 0) return false;
    if (i + 1 < lambda.rank() && lambda.doubled(i) <= lambda.doubled(i + 1))
      return false;
  }
  return true;
}

std::pair<WeylElement, Weight> make_dominant(const Weight& lambda) {
  std::size_t n = lambda.rank();
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(lambda.doubled(i)) == 0) {
      std::ostringstream os;
      os << "weight " << lambda.str() << " is singular: coordinate "
         << (i + 1) << " vanishes";
      throw RegularityError(os.str());
    }
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ::abs(lambda.doubled(a)) > ::abs(lambda.doubled(b));
  });
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (::abs(lambda.doubled(idx[i])) == ::abs(lambda.doubled(idx[i + 1]))) {
      std::ostringstream os;
      os << "weight " << lambda.str() << " is singular: coordinates "
         << (idx[i] + 1) << " and " << (idx[i + 1] + 1)
         << " share an absolute value";
      throw RegularityError(os.str());
    }
  WeylElement w;
  w.perm.resize(n);
  w.signs.resize(n);
  std::vector<Int> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.perm[i] = static_cast<int>(idx[i]);
    w.signs[i] = sgn(lambda.doubled(idx[i]));
    d[i] = ::abs(lambda.doubled(idx[i]));
  }
  return {w, Weight(std::move(d))};
}

std::vector<Int> validate_highest_weight(const Weight& Lambda) {
  std::size_t n = Lambda.rank();
  check_rank(n);
  // Lambda_j = p_j + ... + p_{n-1} + p_n/2, so p_j = Lambda_j - Lambda_{j+1}
  // for j < n and p_n = 2 Lambda_n.
  std::vector<Int> p(n);
  p[n - 1] = Lambda.doubled(n - 1);
  if (mpz_odd_p(p[n - 1].get_mpz_t())) {
    throw SpinorialWeightError(
        "spinorial weight: p_n = " + p[n - 1].get_str() +
        " is odd (valid for o(2n+1) spin representations only)");
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Int diff = Lambda.doubled(j) - Lambda.doubled(j + 1);
    if (mpz_odd_p(diff.get_mpz_t())) {
      std::ostringstream os;
      os << "weight " << Lambda.str() << ": coefficient p_" << (j + 1)
         << " is not integral";
      throw DominanceError(os.str());
    }
    p[j] = diff / 2;
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(p[j]) < 0) {
      std::ostringstream os;
      os << "weight " << Lambda.str() << " is not dominant: p_" << (j + 1)
         << " = " << p[j].get_str() << " < 0";
      throw DominanceError(os.str());
    }
  }
  return p;
}

}  // namespace superdirac
