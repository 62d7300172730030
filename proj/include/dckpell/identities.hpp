#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "dckpell/dual_complex.hpp"
#include "dckpell/exact_rational.hpp"
#include "dckpell/kpell_sequences.hpp"

namespace dckpell {

/// Every checked identity. Tags ending in "s" are the final simplified
/// right-hand sides; "raw" tags keep the unsimplified product form.
enum class IdentityId {
  kF12Simplified,
  kF12Raw,
  kF13,
  kF14,
  kF14Kernel,
  kF15,
  kF16,
  kF17,
  kF18,
  kF19,
  kF19Simplified,
  kF20,
  kF21,
  kF22Simplified,
  kF23,
  kF24,
  kF25,
  kF26,
  kF27,
  kF28,
  kF29,
  kF30,
  kF31,
  kG9,
  kG10,
  kG11,
  kG12,
  kG13,
  kG14,
  kG17,
  kG18,
  kG19Stated,
  kG19Proof,
  kHelperHonsberger,
  kHelperDOcagne,
  kHelperCassini,
  kRingAxioms,
  kDivRoundtrip,
  kBinetNumber,
  kBinetQuaternion,
  kPrefixSum,
};

// Parameter bits. Every identity binds k.
inline constexpr unsigned kParamK = 1U << 0;
inline constexpr unsigned kParamN = 1U << 1;
inline constexpr unsigned kParamM = 1U << 2;
inline constexpr unsigned kParamR = 1U << 3;

struct IdentityInfo {
  IdentityId id;
  std::string_view tag;  // lowercase, used on the command line and in reports
  unsigned params;
  std::string_view statement;
};

std::span<const IdentityInfo> identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
std::string_view identity_tag(IdentityId id);
/// Throws BindingError for an unknown tag.
IdentityId parse_identity(std::string_view tag);

struct Bindings {
  std::optional<ExactRational> k;
  std::optional<long> n;
  std::optional<long> m;
  std::optional<long> r;

  bool operator==(const Bindings&) const = default;
};

std::string describe(const Bindings& b);

struct IndexWindow {
  long lo;
  long hi;
};

/// Throws BindingError when bindings are missing or extra for the identity.
void check_bindings(IdentityId id, const Bindings& b);
/// Throws RangeError when the bound indices violate the identity's range.
void check_range(IdentityId id, const Bindings& b);
/// k-Pell index window wide enough to evaluate any identity at these bindings.
IndexWindow required_window(const Bindings& b);

struct IdentitySides {
  DCRational lhs;
  DCRational rhs;
};

/// Both sides of one identity, evaluated by independent code paths: the left
/// side from raw sequence and algebra operations, the right side from the
/// closed form. Scalar identities are embedded with zero non-scalar parts.
IdentitySides identity_sides(IdentityId id, const Bindings& b);
/// Same, reading k-Pell terms from a precomputed table for b.k.
IdentitySides identity_sides(IdentityId id, const Bindings& b, const KPellTable& table);

}  // namespace dckpell
