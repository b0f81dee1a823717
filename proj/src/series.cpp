#include "superdirac/series.hpp"

#include <sstream>

namespace superdirac {

namespace {

// phi(mu) in doubled units: sum_i d_i * (n - i), with the head coordinate
// weighted heaviest.  Strictly positive on every positive root, so the
// phi-maximum of a regular Weyl orbit is attained only at the dominant
// member.
Int phi2(const Weight& mu) {
  Int s = 0;
  std::size_t n = mu.rank();
  for (std::size_t i = 0; i < n; ++i) s += mu.doubled(i) * Int(n - i);
  return s;
}

// Total order refining phi by the canonical lexicographic order; returns
// true when a precedes b (a is "larger").
bool phi_lex_greater(const Weight& a, const Weight& b) {
  Int pa = phi2(a), pb = phi2(b);
  int c = cmp(pa, pb);
  if (c != 0) return c > 0;
  return lex_compare(a, b) > 0;
}

struct PhiLexGreater {
  bool operator()(const Weight& a, const Weight& b) const {
    return phi_lex_greater(a, b);
  }
};

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t rank, Weight offset, long order)
    : rank_(rank), offset_(std::move(offset)), order_(order) {
  if (offset_.rank() != rank_)
    throw RankMismatchError("series offset rank mismatch");
  if (order_ < 0) throw std::invalid_argument("series order must be >= 0");
}

TruncatedSeries TruncatedSeries::from_character(const FormalCharacter& f,
                                                const Weight& offset,
                                                long order) {
  TruncatedSeries s(f.rank(), offset, order);
  for (const auto& [mu, c] : f.terms()) {
    if (!cw_leq(mu, offset))
      throw ExpansionError("character term e(" + mu.str() +
                           ") lies above the series offset " + offset.str());
    s.add_term(mu, c);
  }
  return s;
}

long TruncatedSeries::q_degree(const Weight& mu) const {
  Int d = offset_.doubled_sum() - mu.doubled_sum();
  return static_cast<long>(d.get_si());
}

bool TruncatedSeries::in_window(const Weight& mu) const {
  return cw_leq(mu, offset_) && q_degree(mu) <= order_;
}

void TruncatedSeries::add_term(const Weight& mu, const Int& c) {
  if (sgn(c) == 0 || !in_window(mu)) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Int TruncatedSeries::coefficient(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? Int(0) : it->second;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  if (rank_ != o.rank_) throw RankMismatchError("series ranks differ");
  // The sum is guaranteed only where both windows are: shift to the
  // componentwise-max offset and shrink the order accordingly.
  Weight off = cmax(offset_, o.offset_);
  Int slack_a = off.doubled_sum() - offset_.doubled_sum();
  Int slack_b = off.doubled_sum() - o.offset_.doubled_sum();
  long ord = std::min(order_ - static_cast<long>(slack_a.get_si()),
                      o.order_ - static_cast<long>(slack_b.get_si()));
  if (ord < 0) ord = 0;
  TruncatedSeries r(rank_, off, ord);
  for (const auto& [mu, c] : terms_) r.add_term(mu, c);
  for (const auto& [mu, c] : o.terms_) r.add_term(mu, c);
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  return *this + o.scaled(-1);
}

TruncatedSeries TruncatedSeries::scaled(const Int& c) const {
  TruncatedSeries r(rank_, offset_, order_);
  if (sgn(c) == 0) return r;
  for (const auto& [mu, v] : terms_) r.terms_.emplace(mu, v * c);
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  if (rank_ != o.rank_) throw RankMismatchError("series ranks differ");
  TruncatedSeries r(rank_, offset_ + o.offset_, std::min(order_, o.order_));
  for (const auto& [mu, c] : terms_)
    for (const auto& [nu, d] : o.terms_) r.add_term(mu + nu, c * d);
  return r;
}

bool TruncatedSeries::agrees_with(const TruncatedSeries& o) const {
  if (rank_ != o.rank_) return false;
  auto both = [&](const Weight& mu) {
    return in_window(mu) && o.in_window(mu);
  };
  for (const auto& [mu, c] : terms_)
    if (both(mu) && c != o.coefficient(mu)) return false;
  for (const auto& [mu, c] : o.terms_)
    if (both(mu) && c != coefficient(mu)) return false;
  return true;
}

std::string TruncatedSeries::str() const {
  std::ostringstream os;
  os << "O(q^" << (order_ + 1) << ") + ";
  if (terms_.empty()) {
    os << "0";
    return os.str();
  }
  bool first = true;
  for (const auto& [mu, c] : terms_) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    if (first && sgn(c) < 0) os << "-";
    first = false;
    Int a = ::abs(c);
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      Int e = offset_.doubled(i) - mu.doubled(i);
      if (sgn(e) != 0) {
        if (any) mono << "*";
        any = true;
        mono << "q" << (rank_ > 1 ? std::to_string(i + 1) : "");
        if (e != 1) mono << "^" << e.get_str();
      }
    }
    if (!any) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << mono.str();
    }
  }
  return os.str();
}

TruncatedSeries expand(const FormalCharacter& num, const FormalCharacter& den,
                       const Weight& offset, long order) {
  if (num.rank() != den.rank()) throw RankMismatchError("expand ranks differ");
  if (den.is_zero()) throw std::invalid_argument("expansion by zero");
  std::size_t n = num.rank();
  TruncatedSeries out(n, offset, order);
  if (num.is_zero()) return out;

  using Poly = std::map<Weight, Int, PhiLexGreater>;
  Poly rem, divisor;
  for (const auto& [mu, c] : num.terms()) rem.emplace(mu, c);
  for (const auto& [mu, c] : den.terms()) divisor.emplace(mu, c);

  const Weight& lead_mu = divisor.begin()->first;
  const Int& lead_c = divisor.begin()->second;
  if (lead_c != 1 && lead_c != -1)
    throw ExpansionError(
        "denominator leading coefficient is not invertible: " +
        lead_c.get_str());

  // A window term has exponent vector a in N^n with |a| <= order and
  // phi(offset) - phi(mu) = sum a_i (n-i) <= order * n, so quotient terms
  // with phi below this bound can no longer land in the window.  Terms
  // are produced in strictly decreasing phi-lex order, hence the loop
  // stops at the first one under the bound.
  Int phi_min = phi2(offset) - Int(order) * Int(n);

  const unsigned long step_cap = 4u * 1000u * 1000u;
  unsigned long steps = 0;
  while (!rem.empty()) {
    const Weight& rmu = rem.begin()->first;
    Weight qmu = rmu - lead_mu;
    if (cmp(phi2(qmu), phi_min) < 0) break;  // everything below the window
    if (++steps > step_cap)
      throw ExpansionError(
          "expansion did not stabilize; the quotient is not supported in "
          "an antidominant cone");
    Int qc = rem.begin()->second;
    if (lead_c == -1) qc = -qc;
    out.add_term(qmu, qc);
    // rem -= qc * e^{qmu} * den
    for (const auto& [mu, c] : divisor) {
      Weight t = qmu + mu;
      Int v = qc * c;
      auto [it, inserted] = rem.emplace(t, -v);
      if (!inserted) {
        it->second -= v;
        if (sgn(it->second) == 0) rem.erase(it);
      }
    }
  }
  return out;
}

TruncatedSeries expand(const RationalCharacter& r, long order) {
  Weight off = r.numerator.is_zero()
                   ? Weight::zero(r.numerator.rank())
                   : cmax(r.numerator.support_max(),
                          Weight::zero(r.numerator.rank()));
  return expand(r.numerator, r.denominator, off, order);
}

}  // namespace superdirac
