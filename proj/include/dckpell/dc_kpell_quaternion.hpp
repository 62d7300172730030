#pragma once

#include <cstdint>

#include "dckpell/dual_complex.hpp"
#include "dckpell/kpell_sequences.hpp"

namespace dckpell {

struct Provenance {
  SequenceFamily family;
  ExactRational k;
  long n;

  bool operator==(const Provenance&) const = default;
};

/// Q(n) = S(n) + i S(n+1) + eps S(n+2) + i eps S(n+3) for one of the three
/// k-Pell families. Sums and products of quaternions are ordinary
/// dual-complex values and are returned as such.
class DCKPellQuaternion {
 public:
  DCKPellQuaternion(SequenceFamily family, ExactRational k, long n);

  const DCRational& value() const { return value_; }
  const Provenance& provenance() const { return provenance_; }

 private:
  Provenance provenance_;
  DCRational value_;
};

DCKPellQuaternion build_quaternion(SequenceFamily family, const ExactRational& k, long n);

/// S(n).
ExactRational scalar_part(const DCKPellQuaternion& q);
/// i S(n+1) + eps S(n+2) + i eps S(n+3).
DCRational vector_part(const DCKPellQuaternion& q);

inline DCRational operator+(const DCKPellQuaternion& a, const DCKPellQuaternion& b) { return a.value() + b.value(); }
inline DCRational operator-(const DCKPellQuaternion& a, const DCKPellQuaternion& b) { return a.value() - b.value(); }
inline DCRational operator*(const DCKPellQuaternion& a, const DCKPellQuaternion& b) { return a.value() * b.value(); }

/// hat_alpha = 1 + i alpha + eps alpha^2 + i eps alpha^3, likewise for beta.
struct HatPair {
  DCQuadratic hat_alpha;
  DCQuadratic hat_beta;
};

HatPair make_hat_pair(const ExactRational& k);

/// Q(n) for the k-Pell family as (hat_alpha alpha^n - hat_beta beta^n) / (alpha - beta),
/// computed over Q(sqrt(1+k)) and rationalized coefficient-wise.
DCRational binet_quaternion(const ExactRational& k, std::uint64_t n);

/// The product hat_alpha * hat_beta, which must equal
/// (1+k) + 2i + (2k^2+6k+4) eps + (4k+8) i eps.
class GammaCoefficient {
 public:
  const ExactRational& k() const { return k_; }
  const DCRational& value() const { return value_; }

 private:
  friend GammaCoefficient gamma_coefficient(const ExactRational& k);
  GammaCoefficient(ExactRational k, DCRational value) : k_(std::move(k)), value_(std::move(value)) {}

  ExactRational k_;
  DCRational value_;
};

/// Multiplies hat_alpha by hat_beta in the quadratic-scalar algebra and
/// checks the result against gamma_closed_form; throws InternalError on a
/// mismatch.
GammaCoefficient gamma_coefficient(const ExactRational& k);

/// (1+k) + 2i + (2k^2+6k+4) eps + (4k+8) i eps, straight from the polynomial.
DCRational gamma_closed_form(const ExactRational& k);

/// Coefficient-wise rationalize; throws InternalError if any radical part remains.
DCRational rationalize(const DCQuadratic& w);

}  // namespace dckpell
