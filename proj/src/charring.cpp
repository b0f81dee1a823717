#include "superdirac/charring.hpp"

#include <sstream>

namespace superdirac {

FormalCharacter FormalCharacter::one(std::size_t rank) {
  return monomial(Weight::zero(rank), 1);
}

FormalCharacter FormalCharacter::monomial(const Weight& mu, Int c) {
  FormalCharacter f(mu.rank());
  f.add_term(mu, c);
  return f;
}

Int FormalCharacter::coefficient(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Int(0) : it->second;
}

void FormalCharacter::add_term(const Weight& mu, const Int& c) {
  if (sgn(c) == 0) return;
  if (mu.rank() != rank_)
    throw RankMismatchError("term rank does not match character rank");
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void FormalCharacter::check_rank(const FormalCharacter& o) const {
  if (rank_ != o.rank_)
    throw RankMismatchError("character ranks differ: " +
                            std::to_string(rank_) + " vs " +
                            std::to_string(o.rank_));
}

FormalCharacter FormalCharacter::operator+(const FormalCharacter& o) const {
  check_rank(o);
  FormalCharacter r(*this);
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
  return r;
}

FormalCharacter FormalCharacter::operator-(const FormalCharacter& o) const {
  check_rank(o);
  FormalCharacter r(*this);
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, -c);
  return r;
}

FormalCharacter FormalCharacter::operator-() const {
  FormalCharacter r(rank_);
  for (const auto& [mu, c] : terms_) r.terms_.emplace(mu, -c);
  return r;
}

FormalCharacter FormalCharacter::operator*(const FormalCharacter& o) const {
  check_rank(o);
  FormalCharacter r(rank_);
  for (const auto& [mu, c] : terms_)
    for (const auto& [nu, d] : o.terms_) r.add_term(mu + nu, c * d);
  return r;
}

FormalCharacter FormalCharacter::scaled(const Int& c) const {
  FormalCharacter r(rank_);
  if (sgn(c) == 0) return r;
  for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v * c);
  return r;
}

const std::pair<const Weight, Int>& FormalCharacter::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return *terms_.begin();
}

Int FormalCharacter::coefficient_sum() const {
  Int s = 0;
  for (const auto& [mu, c] : terms_) s += c;
  return s;
}

Weight FormalCharacter::support_min() const {
  if (terms_.empty()) throw std::logic_error("support of zero");
  std::vector<Int> d(terms_.begin()->first.doubled());
  for (const auto& [mu, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i)
      d[i] = std::min(d[i], mu.doubled(i));
  return Weight(std::move(d));
}

Weight FormalCharacter::support_max() const {
  if (terms_.empty()) throw std::logic_error("support of zero");
  std::vector<Int> d(terms_.begin()->first.doubled());
  for (const auto& [mu, c] : terms_)
    for (std::size_t i = 0; i < rank_; ++i)
      d[i] = std::max(d[i], mu.doubled(i));
  return Weight(std::move(d));
}

std::string FormalCharacter::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    if (first && sgn(c) < 0) os << "-";
    first = false;
    Int a = ::abs(c);
    if (mu.is_zero()) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "e(" << mu.str() << ")";
    }
  }
  return os.str();
}

FormalCharacter exact_div(const FormalCharacter& f, const FormalCharacter& g) {
  if (f.rank() != g.rank())
    throw RankMismatchError("division ranks differ");
  if (g.is_zero()) throw std::invalid_argument("division by zero character");
  FormalCharacter q(f.rank());
  if (f.is_zero()) return q;

  // For an exact quotient q the extreme coordinates multiply out with no
  // cancellation, so supp(q) sits in the coordinate box
  //   [min_i(f) - min_i(g), max_i(f) - max_i(g)].
  // Leading exponents decrease strictly, hence the loop visits at most
  // one term per box point before a violation certifies inexactness.
  Weight box_lo = f.support_min() - g.support_min();
  Weight box_hi = f.support_max() - g.support_max();

  const auto& glead = g.leading();
  FormalCharacter rem(f);
  while (!rem.is_zero()) {
    const auto& rlead = rem.leading();
    Weight delta = rlead.first - glead.first;
    if (!cw_leq(box_lo, delta) || !cw_leq(delta, box_hi))
      throw DivisionError("inexact division: quotient support bound violated",
                          rem);
    if (!mpz_divisible_p(rlead.second.get_mpz_t(), glead.second.get_mpz_t()))
      throw DivisionError("inexact division: leading coefficient " +
                              rlead.second.get_str() + " not divisible by " +
                              glead.second.get_str(),
                          rem);
    Int coef;
    mpz_divexact(coef.get_mpz_t(), rlead.second.get_mpz_t(),
                 glead.second.get_mpz_t());
    q.add_term(delta, coef);
    rem = rem - g * FormalCharacter::monomial(delta, coef);
  }
  return q;
}

FormalCharacter weyl_numerator(const Weight& lambda, std::size_t rank_limit) {
  FormalCharacter num(lambda.rank());
  for_each_weyl(
      lambda.rank(),
      [&](const WeylElement& w, int s) { num.add_term(w.apply(lambda), s); },
      rank_limit);
  return num;
}

FormalCharacter weyl_denominator(RootKind kind, std::size_t n) {
  if (kind == RootKind::OSP)
    throw std::invalid_argument(
        "denominator of osp is the quotient D_C / D_1; request B or C");
  auto data = positive_roots(kind, n);
  FormalCharacter d = FormalCharacter::one(n);
  for (const auto& alpha : data.even_positive_roots) {
    std::vector<Int> half(alpha.doubled());
    for (auto& v : half) v /= 2;  // alpha/2 is exact in doubled coordinates
    Weight h(std::move(half));
    FormalCharacter factor = FormalCharacter::monomial(h, 1);
    factor.add_term(-h, -1);
    d = d * factor;
  }
  return d;
}

FormalCharacter odd_denominator(std::size_t n) {
  FormalCharacter d = FormalCharacter::one(n);
  for (std::size_t i = 0; i < n; ++i) {
    Weight h = Weight::basis(n, i, 1);
    FormalCharacter factor = FormalCharacter::monomial(h, 1);
    factor.add_term(-h, 1);
    d = d * factor;
  }
  return d;
}

RationalCharacter::RationalCharacter(FormalCharacter num, FormalCharacter den)
    : numerator(std::move(num)), denominator(std::move(den)) {
  if (denominator.is_zero())
    throw std::invalid_argument("zero denominator character");
  if (numerator.rank() != denominator.rank())
    throw RankMismatchError("rational character ranks differ");
}

}  // namespace superdirac
