#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and reduced
// rationals, plus comparison of a rational against the square root of a
// rational done purely by integer cross-multiplication.  Nothing in here
// (or anywhere downstream of here) touches floating point; decimal
// strings are produced by long division at output time.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seshadri {

// et_off: plain value semantics (operators return Int, not expression
// templates), so Int composes with std::min, ternaries and auto.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

// Largest s with s*s <= x.  x must be nonnegative.
Int isqrt_floor(const Int& x);

// Rational number kept in canonical form: denominator > 0 and
// gcd(|num|, den) == 1 after every operation.  Canonical form makes
// equality, ordering and string output well defined, which the ratio
// sets rely on for deduplication.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(Int v) : num_(std::move(v)), den_(1) {}
  Rational(Int num, Int den);

  // Parses "p/q" or "p".  Throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view s);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }
  bool is_integer() const { return den_ == 1; }

  Int floor() const;
  Int ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational reciprocal() const;
  Rational squared() const { return Rational(num_ * num_, den_ * den_); }

  // "p/q", with "/q" omitted when the value is an integer.
  std::string str() const;

  // Decimal rendering with `digits` significant digits, correctly rounded
  // (ties to even).  Output only; the rational stays normative.
  std::string decimal(int digits = 12) const;

 private:
  void reduce();
  Int num_;
  Int den_;
};

// Decimal rendering of sqrt(r) with `digits` significant digits,
// correctly rounded (ties to even), computed by integer arithmetic only.
// r must be >= 0.
std::string sqrt_decimal(const Rational& r, int digits = 12);

// Ordering of a versus sqrt(r), computed exactly.  r must be >= 0.
// If a < 0 the answer is "less" unless r == 0 and a == 0; otherwise a^2 is
// compared against r by integer cross-multiplication.  Every threshold in
// this project has the shape sqrt(L^2/(l^2+delta)), so all square-root
// comparisons route through here and no irrational value is ever formed.
std::strong_ordering cmp_sq(const Rational& a, const Rational& r);

}  // namespace seshadri
