#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dckpell {

/// Arbitrary-precision rational number, always kept in canonical form
/// (reduced, positive denominator), so structural equality is value equality.
///
/// Text format: an optionally signed decimal integer ("-3") or "p/q" with
/// q > 0 ("5/6"). Non-reduced input such as "4/6" is accepted and reduced.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  ExactRational(long numerator, long denominator);
  explicit ExactRational(mpq_class value);

  static ExactRational parse(std::string_view text);

  std::string to_string() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }

  /// Integer power; negative exponents require a nonzero base.
  ExactRational pow(long exponent) const;

  /// Exact square root when this value is the square of a rational.
  bool is_perfect_square() const;
  ExactRational exact_sqrt() const;

  const mpq_class& raw() const { return value_; }

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }

  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend ExactRational operator-(ExactRational lhs, const ExactRational& rhs) { return lhs -= rhs; }
  friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend ExactRational operator/(ExactRational lhs, const ExactRational& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpq_class value_;
};

inline bool is_zero(const ExactRational& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const ExactRational& x);

/// (-1)^n as a rational, for any integer n.
ExactRational sign_power(long n);

}  // namespace dckpell
