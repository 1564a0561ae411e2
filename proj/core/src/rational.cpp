#include "lenscontact/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <stdexcept>
#include <utility>

namespace lenscontact {
namespace {

Integer abs_int(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

ExtRat::ExtRat(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    if (num_ == 0) throw std::domain_error("0/0 is not an extended rational");
    num_ = 1;
    return;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const Integer g = boost::multiprecision::gcd(abs_int(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

ExtRat ExtRat::from_rational(const Rational& r) {
  return ExtRat(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
}

Rational ExtRat::to_rational() const {
  if (is_infinite()) throw std::domain_error("infinity has no finite value");
  return Rational(num_, den_);
}

std::string ExtRat::str() const {
  if (is_infinite()) return "inf";
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ExtRat ExtRat::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "+inf" || text == "-inf" || text == "infinity") {
    return infinity();
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExtRat(parse_integer(text), 1);
  return ExtRat(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

ExtRat operator-(const ExtRat& x) {
  if (x.is_infinite()) return x;
  return ExtRat(-x.num(), x.den());
}

int compare_linear(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) - static_cast<int>(b.is_infinite());
  }
  const Integer lhs = a.num() * b.den();
  const Integer rhs = b.num() * a.den();
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

ExtRat farey_sum(const ExtRat& a, const ExtRat& b) {
  Integer num = a.num() + b.num();
  Integer den = a.den() + b.den();
  if (num == 0 && den == 0) throw std::domain_error("Farey sum is undefined (0/0)");
  return ExtRat(std::move(num), std::move(den));
}

Integer farey_mul(const ExtRat& a, const ExtRat& b) {
  return a.num() * b.den() - a.den() * b.num();
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& x, Integer& y) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    const Integer quotient = old_r / r;
    Integer tmp = old_r - quotient * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - quotient * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - quotient * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = std::move(old_s);
  y = std::move(old_t);
  return old_r;
}

NegCF neg_cf(const ExtRat& x, CfForm form) {
  if (x.is_infinite()) throw std::domain_error("cannot expand infinity as a continued fraction");
  const int cmp = compare_linear(x, ExtRat(-1));
  if (form == CfForm::kLens && cmp >= 0) {
    throw std::domain_error("lens-form expansion needs a value below -1, got " + x.str());
  }
  if (form == CfForm::kSolid && cmp > 0) {
    throw std::domain_error("solid-form expansion needs a value at most -1, got " + x.str());
  }
  NegCF cf;
  Integer n = x.num();
  Integer d = x.den();
  // Every tail after the first term is strictly below -1, so each floor is
  // at most -2 and the last (integer) term is too unless x itself is -1.
  while (d != 1) {
    Integer r = floor_div(n, d);
    Integer rem = n - r * d;  // in (0, d)
    cf.coeffs.push_back(std::move(r));
    n = -d;
    d = std::move(rem);
  }
  cf.coeffs.push_back(std::move(n));
  return cf;
}

Rational evaluate(const NegCF& cf) {
  if (cf.coeffs.empty()) throw std::domain_error("empty continued fraction");
  Rational value = cf.coeffs.back();
  for (auto it = cf.coeffs.rbegin() + 1; it != cf.coeffs.rend(); ++it) {
    if (value == 0) throw std::domain_error("continued fraction tail vanishes");
    value = Rational(*it) - 1 / value;
  }
  return value;
}

CfMatrix cf_matrix_identity(const NegCF& cf) {
  // Running product [[a, b], [c, d]].
  Integer a = 1, b = 0, c = 0, d = 1;
  for (const Integer& r : cf.coeffs) {
    // [[a, b], [c, d]] * [[-r, 1], [-1, 0]]
    Integer na = -a * r - b;
    Integer nc = -c * r - d;
    b = std::move(a);
    d = std::move(c);
    a = std::move(na);
    c = std::move(nc);
  }
  CfMatrix m{a, b, Integer(-c), Integer(-d)};
  if (m.p * m.q_prime - m.p_prime * m.q != -1) {
    throw std::logic_error("continued fraction matrix lost unimodularity");
  }
  return m;
}

ExtRat dual_fraction(const Integer& p, const Integer& q) {
  if (!(p > q && q > 0) || boost::multiprecision::gcd(p, q) != 1) {
    throw std::domain_error("dual_fraction needs coprime p > q > 0");
  }
  if (q == 1) return ExtRat::infinity();
  // p*q' = -1 (mod q) with the smallest positive q' maximizes p'/q'.
  Integer inv, unused;
  extended_gcd(p % q, q, inv, unused);
  inv %= q;
  if (inv < 0) inv += q;
  const Integer q_prime = (q - inv) % q;
  const Integer p_prime = (p * q_prime + 1) / q;
  return ExtRat(p_prime, q_prime);
}

std::string to_string(const Rational& r) {
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const ExtRat x = ExtRat::parse(text);
  return x.to_rational();
}

}  // namespace lenscontact
