#include "superdirac/weylchar.hpp"

#include <algorithm>
#include <tuple>

namespace superdirac {

HighestWeight::HighestWeight(Weight lambda) : lambda_(std::move(lambda)) {
  p_ = validate_highest_weight(lambda_);
}

HighestWeight HighestWeight::from_coefficients(const std::vector<Int>& p) {
  std::size_t n = p.size();
  auto omega = fundamental_weights(n);
  Weight lambda = Weight::zero(n);
  for (std::size_t i = 0; i < n; ++i) lambda = lambda + omega[i].scaled(p[i]);
  return HighestWeight(lambda);
}

namespace {

std::mutex memo_mutex;

struct MemoKeyLess {
  bool operator()(const std::pair<int, Weight>& a,
                  const std::pair<int, Weight>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return lex_compare(a.second, b.second) < 0;
  }
};

std::map<std::pair<int, Weight>, IrreducibleCharacterRecord, MemoKeyLess>
    memo;

IrreducibleCharacterRecord make_record(const HighestWeight& hw,
                                       FormalCharacter ch) {
  Int dim = ch.coefficient_sum();
  Weight inf = hw.lambda() + rho(RootKind::B, hw.rank());
  return IrreducibleCharacterRecord{hw, std::move(ch), std::move(dim), inf};
}

IrreducibleCharacterRecord memoized(int tag, const HighestWeight& hw,
                                    FormalCharacter (*compute)(
                                        const HighestWeight&)) {
  std::pair<int, Weight> key{tag, hw.lambda()};
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  auto rec = make_record(hw, compute(hw));
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto [it, inserted] = memo.emplace(key, rec);
  return it->second;  // last writer wins on identical values
}

FormalCharacter compute_character_B(const HighestWeight& hw) {
  std::size_t n = hw.rank();
  Weight top = hw.lambda() + rho(RootKind::B, n);
  return exact_div(weyl_numerator(top), weyl_denominator(RootKind::B, n));
}

FormalCharacter compute_character_osp(const HighestWeight& hw) {
  std::size_t n = hw.rank();
  Weight top = hw.lambda() + rho(RootKind::OSP, n);
  FormalCharacter num = weyl_numerator(top) * odd_denominator(n);
  return exact_div(num, weyl_denominator(RootKind::C, n));
}

}  // namespace

IrreducibleCharacterRecord character_B(const HighestWeight& hw) {
  return memoized(0, hw, &compute_character_B);
}

IrreducibleCharacterRecord character_osp(const HighestWeight& hw) {
  return memoized(1, hw, &compute_character_osp);
}

void clear_character_memo() {
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.clear();
}

namespace {

// Dominant representative under the signed-permutation group: sort the
// absolute values descending.
Weight dominant_rep(const Weight& mu) {
  std::vector<Int> d(mu.rank());
  for (std::size_t i = 0; i < mu.rank(); ++i) d[i] = ::abs(mu.doubled(i));
  std::sort(d.begin(), d.end(), [](const Int& a, const Int& b) { return a > b; });
  return Weight(std::move(d));
}

// mu precedes Lambda in the root order iff all partial sums of
// Lambda - mu are nonnegative (the positive B_n roots e_i generate the
// full lattice downward, e_i - e_j redistribute to the right).
bool below_in_root_order(const Weight& mu, const Weight& Lambda) {
  Int s = 0;
  for (std::size_t i = 0; i < mu.rank(); ++i) {
    s += Lambda.doubled(i) - mu.doubled(i);
    if (sgn(s) < 0) return false;
  }
  return true;
}

void enumerate_dominant_below(const Weight& Lambda, std::size_t coord,
                              std::vector<Int>& cur,
                              std::vector<Weight>& out) {
  std::size_t n = Lambda.rank();
  if (coord == n) {
    Weight mu(cur);
    if (below_in_root_order(mu, Lambda)) out.push_back(mu);
    return;
  }
  // dominant integral: 2mu_i even, descending, >= 0, partial sums bounded
  Int budget = 0;
  for (std::size_t i = 0; i <= coord; ++i) budget += Lambda.doubled(i);
  for (std::size_t i = 0; i < coord; ++i) budget -= cur[i];
  Int hi = coord == 0 ? Lambda.doubled(0) : cur[coord - 1];
  hi = std::min(hi, budget);
  for (Int v = hi - (mpz_odd_p(hi.get_mpz_t()) ? 1 : 0); sgn(v) >= 0; v -= 2) {
    cur[coord] = v;
    enumerate_dominant_below(Lambda, coord + 1, cur, out);
  }
}

}  // namespace

MultiplicityMap freudenthal_multiplicities(const HighestWeight& hw) {
  std::size_t n = hw.rank();
  const Weight& Lambda = hw.lambda();
  Weight rho_b = rho(RootKind::B, n);
  auto roots = positive_roots(RootKind::B, n).even_positive_roots;

  std::vector<Weight> dominants;
  std::vector<Int> cur(n, 0);
  enumerate_dominant_below(Lambda, 0, cur, dominants);
  // process from the top: descending total height, lex descending inside
  std::sort(dominants.begin(), dominants.end(),
            [](const Weight& a, const Weight& b) {
              Int sa = a.doubled_sum(), sb = b.doubled_sum();
              int c = cmp(sa, sb);
              if (c != 0) return c > 0;
              return lex_compare(a, b) > 0;
            });

  MultiplicityMap dominant_mult;
  Weight top_shift = Lambda + rho_b;
  Int top_norm4 = dot4(top_shift, top_shift);
  for (const auto& mu : dominants) {
    if (mu == Lambda) {
      dominant_mult.emplace(mu, 1);
      continue;
    }
    // (|Lambda+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0, k>=1}
    //   m(mu + k alpha) <mu + k alpha, alpha>
    Weight mu_shift = mu + rho_b;
    Int denom4 = top_norm4 - dot4(mu_shift, mu_shift);
    Int rhs4 = 0;
    for (const auto& alpha : roots) {
      for (Int k = 1;; ++k) {
        Weight nu = mu + alpha.scaled(k);
        if (!below_in_root_order(nu, Lambda)) break;
        auto it = dominant_mult.find(dominant_rep(nu));
        if (it == dominant_mult.end()) continue;
        rhs4 += 2 * it->second * dot4(nu, alpha);
      }
    }
    if (sgn(rhs4) == 0) continue;  // multiplicity zero
    if (sgn(denom4) <= 0 || !mpz_divisible_p(rhs4.get_mpz_t(), denom4.get_mpz_t()))
      throw std::logic_error("Freudenthal recursion left the integers");
    Int m;
    mpz_divexact(m.get_mpz_t(), rhs4.get_mpz_t(), denom4.get_mpz_t());
    dominant_mult.emplace(mu, std::move(m));
  }

  // extend W-invariantly over the full signed-permutation orbits
  MultiplicityMap all;
  for (const auto& [mu, m] : dominant_mult) {
    for_each_weyl(n, [&](const WeylElement& w, int) {
      all.insert_or_assign(w.apply(mu), m);
    });
  }
  return all;
}

Int weyl_dimension(const HighestWeight& hw, RootKind kind) {
  std::size_t n = hw.rank();
  Weight top = hw.lambda() + rho(kind, n);
  Weight rho_k = rho(kind, n);
  Rat dim = 1;
  for (const auto& alpha :
       positive_roots(kind, n).even_positive_roots) {
    dim *= Rat(dot4(top, alpha)) / Rat(dot4(rho_k, alpha));
  }
  dim.canonicalize();
  if (dim.get_den() != 1)
    throw std::logic_error("Weyl dimension was not integral");
  return dim.get_num();
}

Weight infinitesimal_character(const HighestWeight& hw, RootKind kind) {
  return hw.lambda() + rho(kind, hw.rank());
}

}  // namespace superdirac
