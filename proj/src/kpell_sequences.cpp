#include "dckpell/kpell_sequences.hpp"

#include <array>

#include "dckpell/errors.hpp"
#include "dckpell/quadratic_element.hpp"

namespace dckpell {
namespace {

// P(n) by direct stepping.
ExactRational pell_term(const ExactRational& k, long n) {
  ExactRational lower(0);  // P(j)
  ExactRational upper(1);  // P(j+1)
  if (n >= 0) {
    for (long j = 0; j < n; ++j) {
      ExactRational next = ExactRational(2) * upper + k * lower;
      lower = std::move(upper);
      upper = std::move(next);
    }
    return lower;
  }
  for (long j = 0; j > n; --j) {
    ExactRational prev = (upper - ExactRational(2) * lower) / k;
    upper = std::move(lower);
    lower = std::move(prev);
  }
  return lower;
}

ExactRational derive(SequenceFamily family, const ExactRational& p_n, const ExactRational& p_next) {
  switch (family) {
    case SequenceFamily::kPell: return p_n;
    case SequenceFamily::kPellLucas: return ExactRational(2) * (p_next - p_n);
    case SequenceFamily::kModifiedPell: return p_next - p_n;
  }
  throw InternalError("unknown sequence family");
}

using Matrix = std::array<ExactRational, 4>;  // row-major 2x2

Matrix multiply(const Matrix& a, const Matrix& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],  //
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

std::string_view family_name(SequenceFamily family) {
  switch (family) {
    case SequenceFamily::kPell: return "pell";
    case SequenceFamily::kPellLucas: return "pell-lucas";
    case SequenceFamily::kModifiedPell: return "modified-pell";
  }
  return "?";
}

SequenceFamily parse_family(std::string_view name) {
  if (name == "pell") return SequenceFamily::kPell;
  if (name == "pell-lucas") return SequenceFamily::kPellLucas;
  if (name == "modified-pell") return SequenceFamily::kModifiedPell;
  throw ParseError("unknown sequence family '" + std::string(name) + "'");
}

void require_positive_k(const ExactRational& k) {
  if (k.sign() <= 0) throw DomainError("k must be positive, got " + k.to_string());
}

SequenceSpec::SequenceSpec(SequenceFamily family, ExactRational k) : family_(family), k_(std::move(k)) {
  require_positive_k(k_);
}

ExactRational seq_term(const SequenceSpec& spec, long n) {
  if (spec.family() == SequenceFamily::kPell) return pell_term(spec.k(), n);
  return derive(spec.family(), pell_term(spec.k(), n), pell_term(spec.k(), n + 1));
}

ExactRational seq_term_fast(const SequenceSpec& spec, std::uint64_t n) {
  // M^n = [[P(n+1), k P(n)], [P(n), k P(n-1)]]
  Matrix result = {ExactRational(1), ExactRational(0), ExactRational(0), ExactRational(1)};
  Matrix base = {ExactRational(2), spec.k(), ExactRational(1), ExactRational(0)};
  for (std::uint64_t e = n; e != 0; e >>= 1) {
    if (e & 1U) result = multiply(result, base);
    if (e > 1) base = multiply(base, base);
  }
  return derive(spec.family(), result[2], result[0]);
}

ExactRational seq_binet(const ExactRational& k, std::uint64_t n) {
  const auto [alpha, beta] = make_alpha_beta(k);
  const QuadraticElement value = (alpha.pow(n) - beta.pow(n)) / (alpha - beta);
  if (!value.radical_part().is_zero()) {
    throw InternalError("Binet evaluation left a radical part: " + value.to_string());
  }
  return rationalize(value);
}

ExactRational seq_prefix_sum(const ExactRational& k, std::uint64_t n) {
  require_positive_k(k);
  const SequenceSpec spec(SequenceFamily::kPell, k);
  const ExactRational p_n = seq_term_fast(spec, n);
  const ExactRational p_next = seq_term_fast(spec, n + 1);
  return (ExactRational(-1) + p_next + k * p_n) / (k + ExactRational(1));
}

DCRational dc_number(SequenceFamily family, const ExactRational& k, long n) {
  require_positive_k(k);
  const KPellTable table(k, n, n + 4);
  return table.number(family, n);
}

KPellTable::KPellTable(ExactRational k, long lo, long hi) : k_(std::move(k)), lo_(lo), hi_(hi) {
  require_positive_k(k_);
  if (hi_ < lo_) throw std::invalid_argument("empty k-Pell table window");
  values_.reserve(static_cast<std::size_t>(hi_ - lo_ + 1));
  // Seed at the window start, then step forwards.
  ExactRational lower = pell_term(k_, lo_);
  ExactRational upper = pell_term(k_, lo_ + 1);
  for (long j = lo_; j <= hi_; ++j) {
    values_.push_back(lower);
    ExactRational next = ExactRational(2) * upper + k_ * lower;
    lower = std::move(upper);
    upper = std::move(next);
  }
}

const ExactRational& KPellTable::p(long n) const {
  if (n < lo_ || n > hi_) {
    throw std::out_of_range("k-Pell index " + std::to_string(n) + " outside table window [" +
                            std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  }
  return values_[static_cast<std::size_t>(n - lo_)];
}

ExactRational KPellTable::term(SequenceFamily family, long n) const {
  if (family == SequenceFamily::kPell) return p(n);
  return derive(family, p(n), p(n + 1));
}

DCRational KPellTable::number(SequenceFamily family, long n) const {
  return {term(family, n), term(family, n + 1), term(family, n + 2), term(family, n + 3)};
}

}  // namespace dckpell
