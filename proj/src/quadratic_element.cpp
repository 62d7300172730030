#include "dckpell/quadratic_element.hpp"

#include <ostream>

#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

void require_same_radicand(const QuadraticElement& x, const QuadraticElement& y) {
  if (x.radicand() != y.radicand()) {
    throw DomainError("mismatched radicands: " + x.radicand().to_string() + " vs " + y.radicand().to_string());
  }
}

}  // namespace

QuadraticElement::QuadraticElement(ExactRational rational_part, ExactRational radical_part, ExactRational radicand)
    : rational_(std::move(rational_part)), radical_(std::move(radical_part)), radicand_(std::move(radicand)) {
  if (radicand_.sign() <= 0) throw DomainError("radicand must be positive, got " + radicand_.to_string());
  normalize();
}

QuadraticElement QuadraticElement::embed(ExactRational value, ExactRational radicand) {
  return QuadraticElement(std::move(value), ExactRational(0), std::move(radicand));
}

void QuadraticElement::normalize() {
  if (radical_.is_zero() || !radicand_.is_perfect_square()) return;
  rational_ += radical_ * radicand_.exact_sqrt();
  radical_ = ExactRational(0);
}

QuadraticElement QuadraticElement::conj() const { return QuadraticElement(rational_, -radical_, radicand_); }

ExactRational QuadraticElement::norm() const { return rational_ * rational_ - radical_ * radical_ * radicand_; }

QuadraticElement QuadraticElement::pow(unsigned long exponent) const {
  QuadraticElement result = embed(ExactRational(1), radicand_);
  QuadraticElement base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent != 0) base = base * base;
  }
  return result;
}

std::string QuadraticElement::to_string() const {
  return rational_.to_string() + " + " + radical_.to_string() + "*sqrt(" + radicand_.to_string() + ")";
}

QuadraticElement QuadraticElement::operator-() const { return QuadraticElement(-rational_, -radical_, radicand_); }

QuadraticElement operator+(const QuadraticElement& x, const QuadraticElement& y) {
  require_same_radicand(x, y);
  return QuadraticElement(x.rational_ + y.rational_, x.radical_ + y.radical_, x.radicand_);
}

QuadraticElement operator-(const QuadraticElement& x, const QuadraticElement& y) {
  require_same_radicand(x, y);
  return QuadraticElement(x.rational_ - y.rational_, x.radical_ - y.radical_, x.radicand_);
}

QuadraticElement operator*(const QuadraticElement& x, const QuadraticElement& y) {
  require_same_radicand(x, y);
  // (a + b r)(c + d r) = (ac + bd D) + (ad + bc) r
  return QuadraticElement(x.rational_ * y.rational_ + x.radical_ * y.radical_ * x.radicand_,
                          x.rational_ * y.radical_ + x.radical_ * y.rational_, x.radicand_);
}

QuadraticElement operator/(const QuadraticElement& x, const QuadraticElement& y) {
  require_same_radicand(x, y);
  if (y.is_zero()) throw ArithmeticError("quadratic division by zero");
  // y != 0 and D not a square (or b = 0) make the norm nonzero.
  const ExactRational n = y.norm();
  const QuadraticElement numerator = x * y.conj();
  return QuadraticElement(numerator.rational_ / n, numerator.radical_ / n, x.radicand_);
}

std::ostream& operator<<(std::ostream& os, const QuadraticElement& x) { return os << x.to_string(); }

std::pair<QuadraticElement, QuadraticElement> make_alpha_beta(const ExactRational& k) {
  if (k.sign() <= 0) throw DomainError("k must be positive, got " + k.to_string());
  const ExactRational radicand = ExactRational(1) + k;
  return {QuadraticElement(ExactRational(1), ExactRational(1), radicand),
          QuadraticElement(ExactRational(1), ExactRational(-1), radicand)};
}

ExactRational rationalize(const QuadraticElement& x) {
  if (!x.radical_part().is_zero()) throw DomainError("not rational: " + x.to_string());
  return x.rational_part();
}

}  // namespace dckpell
