#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dckpell/dual_complex.hpp"
#include "dckpell/exact_rational.hpp"

namespace dckpell {

/// The k-Pell family. P is fixed by P0 = 0, P1 = 1 and
/// P(n+1) = 2 P(n) + k P(n-1); the other two are derived from it:
///   k-Pell-Lucas     PL(n) = 2 (P(n+1) - P(n))
///   modified k-Pell  MP(n) = P(n+1) - P(n)
/// All three satisfy the same recurrence. Negative indices extend backwards
/// through P(n-1) = (P(n+1) - 2 P(n)) / k.
enum class SequenceFamily { kPell, kPellLucas, kModifiedPell };

std::string_view family_name(SequenceFamily family);
/// Accepts "pell", "pell-lucas", "modified-pell".
SequenceFamily parse_family(std::string_view name);

class SequenceSpec {
 public:
  /// Throws DomainError unless k > 0.
  SequenceSpec(SequenceFamily family, ExactRational k);

  SequenceFamily family() const { return family_; }
  const ExactRational& k() const { return k_; }

 private:
  SequenceFamily family_;
  ExactRational k_;
};

void require_positive_k(const ExactRational& k);

/// Reference evaluation by stepping the recurrence from (P0, P1), forwards
/// or backwards. O(|n|) rational operations.
ExactRational seq_term(const SequenceSpec& spec, long n);

/// O(log n) evaluation through powers of the companion matrix [[2, k], [1, 0]].
ExactRational seq_term_fast(const SequenceSpec& spec, std::uint64_t n);

/// P(n) from (alpha^n - beta^n) / (alpha - beta) evaluated in Q(sqrt(1+k)).
ExactRational seq_binet(const ExactRational& k, std::uint64_t n);

/// Closed form of P0 + ... + P(n): (P(n+1) + k P(n) - 1) / (k + 1).
ExactRational seq_prefix_sum(const ExactRational& k, std::uint64_t n);

/// S(n) + i S(n+1) + eps S(n+2) + i eps S(n+3) for the chosen family.
DCRational dc_number(SequenceFamily family, const ExactRational& k, long n);

/// k-Pell terms precomputed over the closed index window [lo, hi], with the
/// derived families read off the same table. Immutable once built.
class KPellTable {
 public:
  KPellTable(ExactRational k, long lo, long hi);

  const ExactRational& k() const { return k_; }
  long lo() const { return lo_; }
  long hi() const { return hi_; }
  bool covers(long lo, long hi) const { return lo >= lo_ && hi <= hi_; }

  /// P(n); throws std::out_of_range outside the window.
  const ExactRational& p(long n) const;
  /// Family term; PL and MP read index n + 1 as well.
  ExactRational term(SequenceFamily family, long n) const;
  DCRational number(SequenceFamily family, long n) const;

 private:
  ExactRational k_;
  long lo_;
  long hi_;
  std::vector<ExactRational> values_;
};

}  // namespace dckpell
