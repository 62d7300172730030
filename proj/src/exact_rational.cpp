#include "dckpell/exact_rational.hpp"

#include <cctype>
#include <ostream>

#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ExactRational::ExactRational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational::ExactRational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

ExactRational ExactRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) {
    throw ParseError("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("rational with zero denominator: '" + std::string(text) + "'");
  if (negative) n = -n;
  return ExactRational(mpq_class(n, d));
}

std::string ExactRational::to_string() const { return value_.get_str(10); }

ExactRational ExactRational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw ArithmeticError("zero raised to a negative power");
    return ExactRational(1) / pow(-exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return ExactRational(mpq_class(num, den));
}

bool ExactRational::is_perfect_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(value_.get_num_mpz_t()) != 0 &&
         mpz_perfect_square_p(value_.get_den_mpz_t()) != 0;
}

ExactRational ExactRational::exact_sqrt() const {
  if (!is_perfect_square()) throw DomainError("not the square of a rational: " + to_string());
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), value_.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), value_.get_den_mpz_t());
  return ExactRational(mpq_class(num, den));
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw ArithmeticError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.to_string(); }

ExactRational sign_power(long n) { return (n % 2 == 0) ? ExactRational(1) : ExactRational(-1); }

}  // namespace dckpell
