#include "dckpell/identities.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>

#include "dckpell/dc_kpell_quaternion.hpp"
#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

constexpr unsigned kKN = kParamK | kParamN;
constexpr unsigned kKNM = kParamK | kParamN | kParamM;
constexpr unsigned kKNR = kParamK | kParamN | kParamR;

constexpr std::array<IdentityInfo, 41> kCatalog = {{
    {IdentityId::kF12Simplified, "f12s", kKN, "w w*1 = P(n)^2 + P(n+1)^2 + 2 eps P(2n+3)"},
    {IdentityId::kF12Raw, "f12raw", kKN, "w w*1 = P(n)^2 + P(n+1)^2 + 2 eps (P(n)P(n+2) + P(n+1)P(n+3))"},
    {IdentityId::kF13, "f13", kKN, "w w*2 = P(n)^2 - P(n+1)^2 + 2i P(n)P(n+1)"},
    {IdentityId::kF14, "f14", kKN, "w w*3 = P(n)^2 + P(n+1)^2 - 4 i eps (-1)^n k^n"},
    {IdentityId::kF14Kernel, "f14kernel", kKN, "P(n)P(n+3) - P(n+1)P(n+2) = -2 (-1)^n k^n"},
    {IdentityId::kF15, "f15", kKN, "w w*4 = P(n)^2 + P(n+1)^2"},
    {IdentityId::kF16, "f16", kKN, "w + w*1 = 2 (P(n) + eps P(n+2))"},
    {IdentityId::kF17, "f17", kKN, "w + w*2 = 2 (P(n) + i P(n+1))"},
    {IdentityId::kF18, "f18", kKN, "w + w*3 = 2 (P(n) + i eps P(n+3))"},
    {IdentityId::kF19, "f19", kKN, "(P(n) + i P(n+1)) w*4 = (P(n) - i P(n+1)) w*2"},
    {IdentityId::kF19Simplified, "f19s", kKN,
     "(P(n) - i P(n+1)) w*2 = P(n)^2 + P(n+1)^2 - eps P(2n+3) + 2 i eps (-1)^n k^n"},
    {IdentityId::kF20, "f20", kKN, "eps w + w*5 = P(n+2) + i P(n+3)"},
    {IdentityId::kF21, "f21", kKN, "w - eps w*5 = P(n) + i P(n+1)"},
    {IdentityId::kF22Simplified, "f22s", kKN, "N*1 = P(n)^2 + P(n+1)^2 + 2 eps P(2n+3)"},
    {IdentityId::kF23, "f23", kKN, "N*2 = P(n)^2 - P(n+1)^2 + 2i P(n)P(n+1)"},
    {IdentityId::kF24, "f24", kKN, "N*3 = P(n)^2 + P(n+1)^2 - 4 i eps (-1)^n k^n"},
    {IdentityId::kF25, "f25", kKN, "N*4 = P(n)^2 + P(n+1)^2"},
    {IdentityId::kF26, "f26", kKN, "DCP(n+2) = 2 DCP(n+1) + k DCP(n)"},
    {IdentityId::kF27, "f27", kKN, "DCPL(n+2) = 2 DCPL(n+1) + k DCPL(n)"},
    {IdentityId::kF28, "f28", kKN, "DCMP(n) = DCP(n) + k DCP(n-1)"},
    {IdentityId::kF29, "f29", kKN, "DCMP(n) = DCP(n+1) - DCP(n)"},
    {IdentityId::kF30, "f30", kKN, "DCPL(n) = 2 (DCP(n+1) - DCP(n))"},
    {IdentityId::kF31, "f31", kKN, "DCPL(n+1) = 2 (DCP(n+1) + DCP(n))"},
    {IdentityId::kG9, "g9", kKN, "2 Q(n+1) + k Q(n) = Q(n+2)"},
    {IdentityId::kG10, "g10", kKN,
     "Q(n+1)^2 + k Q(n)^2 = Q(2n+1) - P(2n+3) + i P(2n+2) + eps (P(2n+3) - 2 P(2n+5)) + 3 i eps P(2n+4)"},
    {IdentityId::kG11, "g11", kKN,
     "Q(n+1)^2 - k^2 Q(n-1)^2 = 2 Q(2n) - 2 (P(2n+2) - i P(2n+1) + eps P(2n+4) - 3 i eps P(2n+3))"},
    {IdentityId::kG12, "g12", kKN,
     "Q(n) - i Q(n+1)*3 - eps Q(n+2) - i eps Q(n+3) = P(n) - P(n+2) + 2 eps P(n+4)"},
    {IdentityId::kG13, "g13", kKNM,
     "k Q(n-1) Q(m) + Q(n) Q(m+1) = Q(n+m) - P(n+m+2) + i P(n+m+1) + eps (P(n+m+2) - 2 P(n+m+4)) + 3 i eps "
     "P(n+m+3)"},
    {IdentityId::kG14, "g14", kKN, "sum_{s=0..n} Q(s) = (Q(n+1) + k Q(n) - Q(1) + Q(0)) / (k+1)"},
    {IdentityId::kG17, "g17", kKNM, "Q(m) Q(n+1) - Q(m+1) Q(n) = (-1)^n k^n P(m-n) Gamma(k)"},
    {IdentityId::kG18, "g18", kKN, "Q(n-1) Q(n+1) - Q(n)^2 = (-1)^n k^(n-1) Gamma(k)"},
    {IdentityId::kG19Stated, "g19stated", kKNR, "Q(n)^2 - Q(n+r) Q(n-r) = (-k)^(n-r+1) P(r)^2 Gamma(k)"},
    {IdentityId::kG19Proof, "g19proof", kKNR, "Q(n-r) Q(n+r) - Q(n)^2 = (-1)^(n-r+1) k^(n-r) P(r)^2 Gamma(k)"},
    {IdentityId::kHelperHonsberger, "helperhonsberger", kKNM, "k P(n-1) P(m) + P(n) P(m+1) = P(n+m)"},
    {IdentityId::kHelperDOcagne, "helperdocagne", kKNM, "P(m) P(n+1) - P(m+1) P(n) = (-1)^n k^n P(m-n)"},
    {IdentityId::kHelperCassini, "helpercassini", kKN, "P(n-1) P(n+1) - P(n)^2 = (-1)^n k^(n-1)"},
    {IdentityId::kRingAxioms, "ringaxioms", kKN, "a (b c) + a (b + c) = (c a) b + (b a + c a) on seeded random a, b, c"},
    {IdentityId::kDivRoundtrip, "divroundtrip", kKNM, "(Q(n) / Q(m)) Q(m) = Q(n)"},
    {IdentityId::kBinetNumber, "binetnumber", kKN, "(alpha^n - beta^n) / (alpha - beta) = P(n)"},
    {IdentityId::kBinetQuaternion, "binetquaternion", kKN,
     "(hat_alpha alpha^n - hat_beta beta^n) / (alpha - beta) = Q(n)"},
    {IdentityId::kPrefixSum, "prefixsum", kKN, "P(0) + ... + P(n) = (P(n+1) + k P(n) - 1) / (k+1)"},
}};

using SF = SequenceFamily;
using R = ExactRational;

const DCRational kI{R(0), R(1), R(0), R(0)};
const DCRational kEps{R(0), R(0), R(1), R(0)};
const DCRational kIEps{R(0), R(0), R(0), R(1)};

DCRational dc(R a, R b, R c, R d) { return {std::move(a), std::move(b), std::move(c), std::move(d)}; }
DCRational embed(R a) { return dc(std::move(a), R(0), R(0), R(0)); }

struct Context {
  const KPellTable& table;
  const R& k;
  long n;
  long m;
  long r;

  const R& p(long j) const { return table.p(j); }
  DCRational q(long j) const { return table.number(SF::kPell, j); }
  DCRational number(SF family, long j) const { return table.number(family, j); }
  R sign_k_power(long e) const { return sign_power(e) * k.pow(e); }
};

// Deterministic 64-bit seed from (k, n) via FNV-1a over the text of k.
std::uint64_t seed_for(const R& k, long n) {
  std::uint64_t h = 1469598103934665603ULL;
  for (char c : k.to_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  h ^= static_cast<std::uint64_t>(n) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

DCRational random_dc(std::mt19937_64& gen) {
  auto coefficient = [&gen] {
    const long num = static_cast<long>(gen() % 2000001ULL) - 1000000L;
    const long den = static_cast<long>(gen() % 1000ULL) + 1L;
    return R(num, den);
  };
  R a = coefficient();
  R b = coefficient();
  R c = coefficient();
  R d = coefficient();
  return dc(a, b, c, d);
}

IdentitySides evaluate(IdentityId id, const Context& c) {
  const long n = c.n;
  const long m = c.m;
  const long r = c.r;
  const R& k = c.k;
  auto p = [&c](long j) -> const R& { return c.p(j); };
  auto q = [&c](long j) { return c.q(j); };
  const DCRational w = q(n);
  const R modulus = p(n) * p(n) + p(n + 1) * p(n + 1);

  switch (id) {
    case IdentityId::kF12Simplified:
      return {w * conjugate(Conjugation::kComplex, w), dc(modulus, R(0), R(2) * p(2 * n + 3), R(0))};
    case IdentityId::kF12Raw:
      return {w * conjugate(Conjugation::kComplex, w),
              dc(modulus, R(0), R(2) * (p(n) * p(n + 2) + p(n + 1) * p(n + 3)), R(0))};
    case IdentityId::kF13:
      return {w * conjugate(Conjugation::kDual, w),
              dc(p(n) * p(n) - p(n + 1) * p(n + 1), R(2) * p(n) * p(n + 1), R(0), R(0))};
    case IdentityId::kF14:
      return {w * conjugate(Conjugation::kCoupled, w), dc(modulus, R(0), R(0), R(-4) * c.sign_k_power(n))};
    case IdentityId::kF14Kernel:
      return {embed(p(n) * p(n + 3) - p(n + 1) * p(n + 2)), embed(R(-2) * c.sign_k_power(n))};
    case IdentityId::kF15:
      return {w * conjugate(Conjugation::kDualComplex, w), embed(modulus)};
    case IdentityId::kF16:
      return {w + conjugate(Conjugation::kComplex, w), dc(R(2) * p(n), R(0), R(2) * p(n + 2), R(0))};
    case IdentityId::kF17:
      return {w + conjugate(Conjugation::kDual, w), dc(R(2) * p(n), R(2) * p(n + 1), R(0), R(0))};
    case IdentityId::kF18:
      return {w + conjugate(Conjugation::kCoupled, w), dc(R(2) * p(n), R(0), R(0), R(2) * p(n + 3))};
    case IdentityId::kF19:
      return {dc(p(n), p(n + 1), R(0), R(0)) * conjugate(Conjugation::kDualComplex, w),
              dc(p(n), -p(n + 1), R(0), R(0)) * conjugate(Conjugation::kDual, w)};
    case IdentityId::kF19Simplified:
      return {dc(p(n), -p(n + 1), R(0), R(0)) * conjugate(Conjugation::kDual, w),
              dc(modulus, R(0), -p(2 * n + 3), R(2) * c.sign_k_power(n))};
    case IdentityId::kF20:
      return {kEps * w + conjugate(Conjugation::kAntiDual, w), dc(p(n + 2), p(n + 3), R(0), R(0))};
    case IdentityId::kF21:
      return {w - kEps * conjugate(Conjugation::kAntiDual, w), dc(p(n), p(n + 1), R(0), R(0))};
    case IdentityId::kF22Simplified:
      return {norm_product(Conjugation::kComplex, w), dc(modulus, R(0), R(2) * p(2 * n + 3), R(0))};
    case IdentityId::kF23:
      return {norm_product(Conjugation::kDual, w),
              dc(p(n) * p(n) - p(n + 1) * p(n + 1), R(2) * p(n) * p(n + 1), R(0), R(0))};
    case IdentityId::kF24:
      return {norm_product(Conjugation::kCoupled, w), dc(modulus, R(0), R(0), R(-4) * c.sign_k_power(n))};
    case IdentityId::kF25:
      return {norm_product(Conjugation::kDualComplex, w), embed(modulus)};
    case IdentityId::kF26:
      return {c.number(SF::kPell, n + 2),
              scale(R(2), c.number(SF::kPell, n + 1)) + scale(k, c.number(SF::kPell, n))};
    case IdentityId::kF27:
      return {c.number(SF::kPellLucas, n + 2),
              scale(R(2), c.number(SF::kPellLucas, n + 1)) + scale(k, c.number(SF::kPellLucas, n))};
    case IdentityId::kF28:
      return {c.number(SF::kModifiedPell, n), c.number(SF::kPell, n) + scale(k, c.number(SF::kPell, n - 1))};
    case IdentityId::kF29:
      return {c.number(SF::kModifiedPell, n), c.number(SF::kPell, n + 1) - c.number(SF::kPell, n)};
    case IdentityId::kF30:
      return {c.number(SF::kPellLucas, n), scale(R(2), c.number(SF::kPell, n + 1) - c.number(SF::kPell, n))};
    case IdentityId::kF31:
      return {c.number(SF::kPellLucas, n + 1), scale(R(2), c.number(SF::kPell, n + 1) + c.number(SF::kPell, n))};
    case IdentityId::kG9:
      return {scale(R(2), q(n + 1)) + scale(k, q(n)), q(n + 2)};
    case IdentityId::kG10:
      return {q(n + 1) * q(n + 1) + scale(k, q(n) * q(n)),
              q(2 * n + 1) +
                  dc(-p(2 * n + 3), p(2 * n + 2), p(2 * n + 3) - R(2) * p(2 * n + 5), R(3) * p(2 * n + 4))};
    case IdentityId::kG11:
      return {q(n + 1) * q(n + 1) - scale(k * k, q(n - 1) * q(n - 1)),
              scale(R(2), q(2 * n)) -
                  scale(R(2), dc(p(2 * n + 2), -p(2 * n + 1), p(2 * n + 4), R(-3) * p(2 * n + 3)))};
    case IdentityId::kG12:
      return {q(n) - kI * conjugate(Conjugation::kCoupled, q(n + 1)) - kEps * q(n + 2) - kIEps * q(n + 3),
              dc(p(n) - p(n + 2), R(0), R(2) * p(n + 4), R(0))};
    case IdentityId::kG13:
      return {scale(k, q(n - 1) * q(m)) + q(n) * q(m + 1),
              q(n + m) + dc(-p(n + m + 2), p(n + m + 1), p(n + m + 2) - R(2) * p(n + m + 4), R(3) * p(n + m + 3))};
    case IdentityId::kG14: {
      DCRational sum = dc(R(0), R(0), R(0), R(0));
      for (long s = 0; s <= n; ++s) sum += q(s);
      return {sum, scale(R(1) / (k + R(1)), q(n + 1) + scale(k, q(n)) - q(1) + q(0))};
    }
    case IdentityId::kG17:
      return {q(m) * q(n + 1) - q(m + 1) * q(n), scale(c.sign_k_power(n) * p(m - n), gamma_closed_form(k))};
    case IdentityId::kG18:
      return {q(n - 1) * q(n + 1) - q(n) * q(n),
              scale(sign_power(n) * k.pow(n - 1), gamma_closed_form(k))};
    case IdentityId::kG19Stated:
      return {q(n) * q(n) - q(n + r) * q(n - r), scale((-k).pow(n - r + 1) * p(r) * p(r), gamma_closed_form(k))};
    case IdentityId::kG19Proof:
      return {q(n - r) * q(n + r) - q(n) * q(n),
              scale(sign_power(n - r + 1) * k.pow(n - r) * p(r) * p(r), gamma_closed_form(k))};
    case IdentityId::kHelperHonsberger:
      return {embed(k * p(n - 1) * p(m) + p(n) * p(m + 1)), embed(p(n + m))};
    case IdentityId::kHelperDOcagne:
      return {embed(p(m) * p(n + 1) - p(m + 1) * p(n)), embed(c.sign_k_power(n) * p(m - n))};
    case IdentityId::kHelperCassini:
      return {embed(p(n - 1) * p(n + 1) - p(n) * p(n)), embed(sign_power(n) * k.pow(n - 1))};
    case IdentityId::kRingAxioms: {
      std::mt19937_64 gen(seed_for(k, n));
      const DCRational a = random_dc(gen);
      const DCRational b = random_dc(gen);
      const DCRational d = random_dc(gen);
      return {a * (b * d) + a * (b + d), (d * a) * b + (b * a + d * a)};
    }
    case IdentityId::kDivRoundtrip:
      return {(q(n) / q(m)) * q(m), q(n)};
    case IdentityId::kBinetNumber:
      return {embed(seq_binet(k, static_cast<std::uint64_t>(n))), embed(p(n))};
    case IdentityId::kBinetQuaternion:
      return {binet_quaternion(k, static_cast<std::uint64_t>(n)), q(n)};
    case IdentityId::kPrefixSum: {
      R sum(0);
      for (long s = 0; s <= n; ++s) sum += p(s);
      return {embed(sum), embed(seq_prefix_sum(k, static_cast<std::uint64_t>(n)))};
    }
  }
  throw InternalError("unhandled identity");
}

}  // namespace

std::span<const IdentityInfo> identity_catalog() { return kCatalog; }

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : kCatalog) {
    if (info.id == id) return info;
  }
  throw InternalError("identity missing from catalog");
}

std::string_view identity_tag(IdentityId id) { return identity_info(id).tag; }

IdentityId parse_identity(std::string_view tag) {
  for (const auto& info : kCatalog) {
    if (info.tag == tag) return info.id;
  }
  throw BindingError("unknown identity '" + std::string(tag) + "'");
}

std::string describe(const Bindings& b) {
  std::string out;
  auto append = [&out](std::string_view name, const std::string& value) {
    if (!out.empty()) out += ", ";
    out += name;
    out += '=';
    out += value;
  };
  if (b.k) append("k", b.k->to_string());
  if (b.n) append("n", std::to_string(*b.n));
  if (b.m) append("m", std::to_string(*b.m));
  if (b.r) append("r", std::to_string(*b.r));
  return out;
}

void check_bindings(IdentityId id, const Bindings& b) {
  const auto& info = identity_info(id);
  auto check = [&](unsigned bit, bool present, const char* name) {
    const bool wanted = (info.params & bit) != 0;
    if (wanted && !present) throw BindingError(std::string(info.tag) + " needs parameter " + name);
    if (!wanted && present) throw BindingError(std::string(info.tag) + " does not take parameter " + name);
  };
  check(kParamK, b.k.has_value(), "k");
  check(kParamN, b.n.has_value(), "n");
  check(kParamM, b.m.has_value(), "m");
  check(kParamR, b.r.has_value(), "r");
}

void check_range(IdentityId id, const Bindings& b) {
  auto fail = [id](const std::string& why) { throw RangeError(std::string(identity_tag(id)) + ": " + why); };
  const long n = b.n.value_or(0);
  switch (id) {
    case IdentityId::kG13:
    case IdentityId::kG17:
      if (n < 0 || b.m.value_or(0) < 0) fail("needs n, m >= 0");
      break;
    case IdentityId::kG14:
    case IdentityId::kBinetNumber:
    case IdentityId::kBinetQuaternion:
    case IdentityId::kPrefixSum:
      if (n < 0) fail("needs n >= 0");
      break;
    case IdentityId::kG18:
      if (n < 1) fail("needs n >= 1");
      break;
    case IdentityId::kG19Stated:
    case IdentityId::kG19Proof: {
      const long r = b.r.value_or(0);
      if (r < 1 || r > n) fail("needs 1 <= r <= n");
      break;
    }
    default:
      break;
  }
}

IndexWindow required_window(const Bindings& b) {
  const long n = b.n.value_or(0);
  const long m = b.m.value_or(0);
  const long r = b.r.value_or(0);
  const long lo = std::min({0L, n - 1, m - 1, n - r, m - n - 2}) - 1;
  const long hi = std::max({2 * n, n + m, n + r, m, n, 0L}) + 8;
  return {lo, hi};
}

IdentitySides identity_sides(IdentityId id, const Bindings& b) {
  check_bindings(id, b);
  check_range(id, b);
  const IndexWindow window = required_window(b);
  const KPellTable table(*b.k, window.lo, window.hi);
  return identity_sides(id, b, table);
}

IdentitySides identity_sides(IdentityId id, const Bindings& b, const KPellTable& table) {
  check_bindings(id, b);
  check_range(id, b);
  if (table.k() != *b.k) throw InternalError("k-Pell table built for a different k");
  const IndexWindow window = required_window(b);
  if (!table.covers(window.lo, window.hi)) throw InternalError("k-Pell table window too small");
  const Context context{table, *b.k, b.n.value_or(0), b.m.value_or(0), b.r.value_or(0)};
  return evaluate(id, context);
}

}  // namespace dckpell
