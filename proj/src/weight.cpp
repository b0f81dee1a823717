#include "superdirac/weight.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superdirac {

Weight Weight::basis(std::size_t rank, std::size_t i, const Int& twice) {
  std::vector<Int> d(rank, 0);
  d.at(i) = twice;
  return Weight(std::move(d));
}

bool Weight::is_zero() const {
  return std::all_of(d_.begin(), d_.end(),
                     [](const Int& v) { return sgn(v) == 0; });
}

bool Weight::is_integral() const {
  return std::all_of(d_.begin(), d_.end(),
                     [](const Int& v) { return mpz_even_p(v.get_mpz_t()); });
}

bool Weight::is_half_integral() const {
  return std::all_of(d_.begin(), d_.end(),
                     [](const Int& v) { return mpz_odd_p(v.get_mpz_t()); });
}

Weight Weight::operator+(const Weight& o) const {
  std::vector<Int> d(d_);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] += o.d_[i];
  return Weight(std::move(d));
}

Weight Weight::operator-(const Weight& o) const {
  std::vector<Int> d(d_);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= o.d_[i];
  return Weight(std::move(d));
}

Weight Weight::operator-() const {
  std::vector<Int> d(d_);
  for (auto& v : d) v = -v;
  return Weight(std::move(d));
}

Weight Weight::scaled(const Int& c) const {
  std::vector<Int> d(d_);
  for (auto& v : d) v *= c;
  return Weight(std::move(d));
}

Int Weight::doubled_sum() const {
  Int s = 0;
  for (const auto& v : d_) s += v;
  return s;
}

std::string Weight::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) os << ',';
    if (mpz_even_p(d_[i].get_mpz_t())) {
      os << Int(d_[i] / 2).get_str();
    } else {
      os << d_[i].get_str() << "/2";
    }
  }
  return os.str();
}

int lex_compare(const Weight& a, const Weight& b) {
  std::size_t n = std::min(a.d_.size(), b.d_.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.d_[i], b.d_[i]);
    if (c != 0) return c;
  }
  if (a.d_.size() != b.d_.size()) return a.d_.size() < b.d_.size() ? -1 : 1;
  return 0;
}

Int dot4(const Weight& a, const Weight& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a.doubled(i) * b.doubled(i);
  return s;
}

Weight cmax(const Weight& a, const Weight& b) {
  std::vector<Int> d(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i)
    d[i] = std::max(a.doubled(i), b.doubled(i));
  return Weight(std::move(d));
}

bool cw_leq(const Weight& a, const Weight& b) {
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (a.doubled(i) > b.doubled(i)) return false;
  return true;
}

Weight parse_weight(const std::string& text) {
  std::vector<Int> d;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t slash = tok.find('/');
    try {
      if (slash == std::string::npos) {
        d.emplace_back(Int(tok) * 2);
      } else {
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den == 2) {
          d.emplace_back(num);
        } else if (den == 1) {
          d.emplace_back(num * 2);
        } else {
          throw std::invalid_argument("weight coordinate denominator must be 1 or 2: " + tok);
        }
      }
    } catch (const std::invalid_argument&) {
      throw;
    } catch (...) {
      throw std::invalid_argument("malformed weight coordinate: '" + tok + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (d.empty()) throw std::invalid_argument("empty weight");
  return Weight(std::move(d));
}

}  // namespace superdirac
