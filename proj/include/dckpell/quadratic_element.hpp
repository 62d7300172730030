#pragma once

#include <iosfwd>
#include <string>
#include <utility>

#include "dckpell/exact_rational.hpp"

namespace dckpell {

/// An element a + b*sqrt(D) of the quadratic field Q(sqrt(D)), D > 0 rational.
///
/// Operands combined arithmetically must share the same radicand. When D is
/// the square of a rational the radical part is folded into the rational
/// part, so equality of (a, b, D) is always value equality.
class QuadraticElement {
 public:
  QuadraticElement(ExactRational rational_part, ExactRational radical_part, ExactRational radicand);

  /// The rational value a embedded in Q(sqrt(D)).
  static QuadraticElement embed(ExactRational value, ExactRational radicand);

  const ExactRational& rational_part() const { return rational_; }
  const ExactRational& radical_part() const { return radical_; }
  const ExactRational& radicand() const { return radicand_; }

  bool is_zero() const { return rational_.is_zero() && radical_.is_zero(); }

  /// a - b*sqrt(D).
  QuadraticElement conj() const;
  /// x * conj(x) = a^2 - b^2 D, always rational.
  ExactRational norm() const;
  QuadraticElement pow(unsigned long exponent) const;

  std::string to_string() const;

  QuadraticElement operator-() const;
  friend QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y);
  friend QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y);

  friend bool operator==(const QuadraticElement&, const QuadraticElement&) = default;

 private:
  void normalize();

  ExactRational rational_;
  ExactRational radical_;
  ExactRational radicand_;
};

inline bool is_zero(const QuadraticElement& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const QuadraticElement& x);

/// The characteristic roots of x^2 = 2x + k: alpha = 1 + sqrt(1+k) and
/// beta = 1 - sqrt(1+k), over the radicand D = 1 + k. Requires k > 0.
std::pair<QuadraticElement, QuadraticElement> make_alpha_beta(const ExactRational& k);

/// The rational value of x; throws DomainError if x has a radical part.
ExactRational rationalize(const QuadraticElement& x);

}  // namespace dckpell
