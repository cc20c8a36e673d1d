#include "seshadri/rational.hpp"

#include <utility>

namespace seshadri {

Int isqrt_floor(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt_floor: negative argument");
  return sqrt(x);
}

Rational::Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  reduce();
}

void Rational::reduce() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw std::invalid_argument("Rational::parse: empty integer");
    std::size_t i = 0;
    if (t[0] == '+' || t[0] == '-') i = 1;
    if (i == t.size()) throw std::invalid_argument("Rational::parse: sign only");
    for (std::size_t j = i; j < t.size(); ++j) {
      if (t[j] < '0' || t[j] > '9')
        throw std::invalid_argument("Rational::parse: bad digit in \"" + std::string(t) + "\"");
    }
    return Int(std::string(t));
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("Rational::parse: zero denominator");
  return Rational(std::move(p), std::move(q));
}

Int Rational::floor() const {
  Int q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) --q;
  return q;
}

Int Rational::ceil() const {
  Int q = num_ / den_;
  if (num_ > 0 && q * den_ != num_) ++q;
  return q;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::domain_error("Rational: reciprocal of zero");
  return Rational(den_, num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

namespace {

Int pow10(long long k) {
  Int r = 1;
  for (long long i = 0; i < k; ++i) r *= 10;
  return r;
}

std::string zeros(int digits) {
  std::string s = "0.";
  s.append(static_cast<std::size_t>(digits - 1), '0');
  return s;
}

// Lays out a `digits`-long digit string with decimal exponent e
// (value = 0.digs * 10^(e+1)), positional when readable, scientific
// otherwise.
std::string format_digits(bool neg, std::string digs, long long e, int digits) {
  if (digs.size() == static_cast<std::size_t>(digits) + 1) {
    // Rounding carried across a power of ten (e.g. 0.9999... -> 1.000...).
    digs.pop_back();
    ++e;
  }
  std::string out = neg ? "-" : "";
  if (e >= -4 && e < digits) {
    if (e >= 0) {
      out += digs.substr(0, static_cast<std::size_t>(e) + 1);
      if (static_cast<std::size_t>(e) + 1 < digs.size()) {
        out += '.';
        out += digs.substr(static_cast<std::size_t>(e) + 1);
      }
    } else {
      out += "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      out += digs;
    }
  } else {
    out += digs.substr(0, 1);
    out += '.';
    out += digs.substr(1);
    out += 'e';
    out += (e < 0 ? '-' : '+');
    std::string ee = std::to_string(e < 0 ? -e : e);
    if (ee.size() < 2) ee.insert(ee.begin(), '0');
    out += ee;
  }
  return out;
}

}  // namespace

std::string Rational::decimal(int digits) const {
  if (digits < 1) throw std::invalid_argument("Rational::decimal: digits < 1");
  if (num_ == 0) return zeros(digits);
  bool neg = num_ < 0;
  Int p = neg ? Int(-num_) : num_;
  Int q = den_;

  // Decimal exponent e with 10^e <= p/q < 10^(e+1).
  long long e = static_cast<long long>(p.str().size()) -
                static_cast<long long>(q.str().size());
  auto at_least = [&](long long k) {
    return k >= 0 ? p >= q * pow10(k) : p * pow10(-k) >= q;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // digits-long mantissa of p/q * 10^(digits-1-e), rounded half to even.
  long long shift = digits - 1 - e;
  Int scaled_num = shift >= 0 ? p * pow10(shift) : p;
  Int scaled_den = shift >= 0 ? q : q * pow10(-shift);
  Int mant = scaled_num / scaled_den;
  Int rem = scaled_num - mant * scaled_den;
  Int twice = rem * 2;
  if (twice > scaled_den || (twice == scaled_den && (mant % 2) != 0)) ++mant;
  return format_digits(neg, mant.str(), e, digits);
}

std::string sqrt_decimal(const Rational& r, int digits) {
  if (digits < 1) throw std::invalid_argument("sqrt_decimal: digits < 1");
  if (r.is_negative()) throw std::domain_error("sqrt_decimal: negative radicand");
  if (r.is_zero()) return zeros(digits);
  const Int& p = r.num();
  const Int& q = r.den();

  // Exponent e with 10^e <= sqrt(p/q) < 10^(e+1), i.e. 10^(2e) <= p/q.
  long long e = (static_cast<long long>(p.str().size()) -
                 static_cast<long long>(q.str().size())) /
                2;
  auto at_least = [&](long long k) {  // sqrt(p/q) >= 10^k
    return k >= 0 ? p >= q * pow10(2 * k) : p * pow10(-2 * k) >= q;
  };
  while (!at_least(e)) --e;
  while (at_least(e + 1)) ++e;

  // Mantissa D = round(sqrt(p/q) * 10^(digits-1-e)), exact integer work:
  // D_floor = floor(sqrt(N/M)) with N/M = p/q * 10^(2 shift); round up
  // when (2D+1)^2 M <= 4N (ties, which need exact equality, go to even).
  long long shift = digits - 1 - e;
  Int n_scaled = shift >= 0 ? p * pow10(2 * shift) : p;
  Int m_scaled = shift >= 0 ? q : q * pow10(-2 * shift);
  Int d = isqrt_floor(n_scaled / m_scaled);
  Int mid = (2 * d + 1) * (2 * d + 1) * m_scaled;
  Int four_n = 4 * n_scaled;
  if (mid < four_n || (mid == four_n && (d % 2) != 0)) ++d;
  return format_digits(false, d.str(), e, digits);
}

std::strong_ordering cmp_sq(const Rational& a, const Rational& r) {
  if (r.is_negative()) throw std::domain_error("cmp_sq: negative radicand");
  if (a.is_negative()) return std::strong_ordering::less;
  // a >= 0: compare a^2 with r by cross-multiplication.
  Int lhs = a.num() * a.num() * r.den();
  Int rhs = r.num() * a.den() * a.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace seshadri
