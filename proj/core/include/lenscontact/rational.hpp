#pragma once

// Exact extended rationals (slopes on a torus), Farey operations and
// negative continued fractions.
//
// Conventions:
// - Slopes are meridian/longitude; infinity is the single point 1/0.
// - Every ExtRat is stored in lowest terms with a non-negative denominator,
//   so equality is structural.
// - Integers are arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace lenscontact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Extended rational p/q with q >= 0 in lowest terms; infinity is 1/0.
class ExtRat {
 public:
  ExtRat() : num_(0), den_(1) {}
  // Canonicalizes; -1/0 becomes 1/0. Throws std::domain_error on 0/0.
  ExtRat(Integer num, Integer den = 1);

  static ExtRat infinity() { return ExtRat(1, 0); }
  static ExtRat from_rational(const Rational& r);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Throws std::domain_error for infinity.
  Rational to_rational() const;

  // "inf", "a" when the denominator is 1, otherwise "a/b".
  std::string str() const;

  // Accepts "a/b", "a", "inf", "-inf", "1/0", "-1/0". Throws
  // std::invalid_argument on malformed text and std::domain_error on 0/0.
  static ExtRat parse(std::string_view text);

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Integer num_;
  Integer den_;
};

ExtRat operator-(const ExtRat& x);

// Real order on the finite part with infinity above everything. Returns
// -1, 0 or 1.
int compare_linear(const ExtRat& a, const ExtRat& b);

/// Mediant (a+c)/(b+d) of the canonical representatives, always reduced.
ExtRat farey_sum(const ExtRat& a, const ExtRat& b);

/// a*d - b*c; its absolute value is 1 exactly on Farey edges.
Integer farey_mul(const ExtRat& a, const ExtRat& b);

// Integer floor division with a positive divisor.
Integer floor_div(const Integer& n, const Integer& d);

// Returns g = gcd(a, b) >= 0 and Bezout coefficients with a*x + b*y = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& x,
                     Integer& y);

/// Coefficient bounds for a negative continued fraction
/// r_0 - 1/(r_1 - 1/(... - 1/r_n)).
///   kLens:  r_i <= -2 for every i (value < -1).
///   kSolid: r_i <= -2 for i < n and r_n <= -1 (value <= -1).
enum class CfForm { kLens, kSolid };

struct NegCF {
  std::vector<Integer> coeffs;
};

/// Expands x into a negative continued fraction of the requested form.
/// Throws std::domain_error when x is infinite or outside the form's range.
NegCF neg_cf(const ExtRat& x, CfForm form = CfForm::kLens);

/// Evaluates r_0 - 1/(r_1 - ...) exactly. Throws std::domain_error on an
/// empty list or a vanishing tail.
Rational evaluate(const NegCF& cf);

/// Entries of prod_i [[-r_i, 1], [-1, 0]] = [[p, p'], [-q, -q']].
struct CfMatrix {
  Integer p;
  Integer p_prime;
  Integer q;
  Integer q_prime;
};

/// Multiplies out the continued fraction matrices. The product always has
/// determinant one, i.e. p*q' - p'*q = -1.
CfMatrix cf_matrix_identity(const NegCF& cf);

/// The largest extended rational p'/q' with p*q' - p'*q = -1, for coprime
/// p > q > 0. Equals 1/0 when q = 1.
ExtRat dual_fraction(const Integer& p, const Integer& q);

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace lenscontact
