#include "nk/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace nk {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(int low, std::vector<Integer> coeffs) : low_(low), coeffs_(std::move(coeffs)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(Integer c, int degree) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = degree;
    p.coeffs_.push_back(std::move(c));
  }
  return p;
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last), coeffs_.end());
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
    low_ += static_cast<int>(first);
  }
}

int LaurentPoly::low_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return low_;
}

int LaurentPoly::high_degree() const {
  if (is_zero()) throw std::domain_error("degree of the zero polynomial");
  return low_ + static_cast<int>(coeffs_.size()) - 1;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::coeff(int degree) const {
  if (is_zero() || degree < low_ || degree > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

const Integer& LaurentPoly::lowest_coeff() const {
  if (is_zero()) throw std::domain_error("lowest coefficient of the zero polynomial");
  return coeffs_.front();
}

const Integer& LaurentPoly::highest_coeff() const {
  if (is_zero()) throw std::domain_error("highest coefficient of the zero polynomial");
  return coeffs_.back();
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::reciprocal() const {
  if (is_zero()) return {};
  LaurentPoly p;
  p.low_ = -high_degree();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  if (is_zero()) return 0;
  if (low_ < 0) throw std::domain_error("evaluate: negative powers of t");
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  if (low_ > 0) {
    Integer xp;
    mpz_pow_ui(xp.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(low_));
    acc *= xp;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(o.low_ - lo);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[off + i] += o.coeffs_[i];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(a.low_ + b.low_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    const int d = low_ + static_cast<int>(i);
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag << '*';
      os << 't';
      if (d != 1) os << '^' << d;
    }
  }
  return os.str();
}

namespace {

[[noreturn]] void bad_poly(std::string_view text, std::string_view why) {
  throw std::invalid_argument("cannot parse polynomial '" + std::string(text) + "': " + std::string(why));
}

// One term without its leading sign: "5", "t", "3*t^-2", "t^4".
LaurentPoly parse_term(std::string_view full, std::string term, bool negative) {
  term.erase(std::remove_if(term.begin(), term.end(), [](unsigned char ch) { return std::isspace(ch); }), term.end());
  if (term.empty()) bad_poly(full, "empty term");
  Integer c = 1;
  int degree = 0;
  const auto tpos = term.find('t');
  std::string coeff_part = tpos == std::string::npos ? term : term.substr(0, tpos);
  if (!coeff_part.empty() && coeff_part.back() == '*') coeff_part.pop_back();
  if (!coeff_part.empty()) {
    if (c.set_str(coeff_part, 10) != 0) bad_poly(full, "bad coefficient '" + coeff_part + "'");
  }
  if (tpos != std::string::npos) {
    degree = 1;
    std::string rest = term.substr(tpos + 1);
    if (!rest.empty()) {
      if (rest.front() != '^') bad_poly(full, "expected '^' after t");
      try {
        std::size_t used = 0;
        degree = std::stoi(rest.substr(1), &used);
        if (used != rest.size() - 1) bad_poly(full, "bad exponent");
      } catch (const std::logic_error&) {
        bad_poly(full, "bad exponent");
      }
    }
  }
  if (negative) c = -c;
  return LaurentPoly::monomial(c, degree);
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) bad_poly(text, "empty input");
  LaurentPoly out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      bad_poly(text, "expected '+' or '-'");
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
    if (end == pos) bad_poly(text, "dangling sign");
    out += parse_term(text, s.substr(pos, end - pos), negative);
    pos = end;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (a.is_zero()) return {};
  if (a.span() < b.span()) throw std::domain_error("divide_exact: not divisible");
  // Long division from the top, in Z[t] after aligning both to degree 0.
  std::vector<Integer> rem = a.coeffs();
  const auto& den = b.coeffs();
  const std::size_t qlen = rem.size() - den.size() + 1;
  std::vector<Integer> q(qlen);
  const Integer& lead = den.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = rem[k + den.size() - 1];
    if (top != 0) {
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) throw std::domain_error("divide_exact: not divisible");
      mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
      for (std::size_t j = 0; j < den.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), den[j].get_mpz_t());
    }
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("divide_exact: not divisible");
  }
  return LaurentPoly(a.low_degree() - b.low_degree(), std::move(q));
}

bool is_novikov_unit(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  return abs(p.lowest_coeff()) == 1;
}

bool is_monic(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_monic: zero polynomial");
  return is_novikov_unit(p);
}

LaurentPoly normalized(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = p.shifted(-p.low_degree());
  if (q.lowest_coeff() < 0) q = -q;
  return q;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) { return normalized(a) == normalized(b); }

}  // namespace nk
