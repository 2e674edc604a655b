#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tailmatch {

using BigInt = mpz_class;

/// Exact signed rational, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Text form is "p/q", or "p" when
/// the denominator is 1; that encoding is used by every file and CLI format.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  Rational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)

  /// Throws PreconditionError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p/q" or "p" (optional leading '-'). Accepts non-reduced input
  /// and canonicalizes it. Throws ParseError on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigInt floor() const;
  BigInt ceil() const;

  Rational pow(unsigned exponent) const;
  Rational abs() const;

  /// Canonical "p/q" encoding.
  std::string str() const;

  /// Decimal rendering rounded half away from zero to `places` digits.
  std::string decimal(int places = 12) const;

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws PreconditionError on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.q_, b.q_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}

  mpq_class q_;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace tailmatch
