#pragma once

#include <array>
#include <string_view>

#include "dckpell/errors.hpp"
#include "dckpell/exact_rational.hpp"
#include "dckpell/quadratic_element.hpp"

namespace dckpell {

/// A dual-complex number w = x1 + i x2 + eps y1 + i eps y2 over a commutative
/// scalar ring S, with i^2 = -1, eps^2 = 0, (i eps)^2 = 0.
///
/// Equivalently w = z1 + eps z2 with the complex part z1 = x1 + i x2 and the
/// dual part z2 = y1 + i y2. The ring is commutative but not a division ring:
/// w is invertible exactly when z1 != 0.
///
/// S must provide + - * unary-, == and a free is_zero(); division and the
/// conjugation C4 additionally need S division.
template <class S>
struct DualComplex {
  S one;   // x1
  S i;     // x2
  S eps;   // y1
  S ieps;  // y2

  bool operator==(const DualComplex&) const = default;

  bool has_invertible_complex_part() const { return !(is_zero(one) && is_zero(i)); }

  DualComplex operator-() const { return {-one, -i, -eps, -ieps}; }

  friend DualComplex operator+(const DualComplex& a, const DualComplex& b) {
    return {a.one + b.one, a.i + b.i, a.eps + b.eps, a.ieps + b.ieps};
  }
  friend DualComplex operator-(const DualComplex& a, const DualComplex& b) {
    return {a.one - b.one, a.i - b.i, a.eps - b.eps, a.ieps - b.ieps};
  }
  friend DualComplex operator*(const DualComplex& a, const DualComplex& b) {
    return {a.one * b.one - a.i * b.i,                                 //
            a.one * b.i + a.i * b.one,                                 //
            a.one * b.eps + a.eps * b.one - a.i * b.ieps - a.ieps * b.i,  //
            a.one * b.ieps + a.ieps * b.one + a.i * b.eps + a.eps * b.i};
  }
  friend DualComplex operator/(const DualComplex& a, const DualComplex& b) { return divide(a, b); }

  DualComplex& operator+=(const DualComplex& b) { return *this = *this + b; }
  DualComplex& operator-=(const DualComplex& b) { return *this = *this - b; }
  DualComplex& operator*=(const DualComplex& b) { return *this = *this * b; }
};

using DCRational = DualComplex<ExactRational>;
using DCQuadratic = DualComplex<QuadraticElement>;

/// The five conjugations. With w = z1 + eps z2:
///   kComplex     (*1)  z1* + eps z2*
///   kDual        (*2)  z1 - eps z2
///   kCoupled     (*3)  z1* - eps z2*
///   kDualComplex (*4)  z1* (1 - eps z2 / z1), needs z1 != 0
///   kAntiDual    (*5)  z2 - eps z1
enum class Conjugation { kComplex, kDual, kCoupled, kDualComplex, kAntiDual };

inline constexpr std::array<Conjugation, 5> kAllConjugations = {
    Conjugation::kComplex, Conjugation::kDual, Conjugation::kCoupled, Conjugation::kDualComplex,
    Conjugation::kAntiDual};

namespace detail {

template <class S>
struct Complex {
  S re;
  S im;
};

template <class S>
Complex<S> mul(const Complex<S>& a, const Complex<S>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class S>
Complex<S> sub(const Complex<S>& a, const Complex<S>& b) {
  return {a.re - b.re, a.im - b.im};
}

template <class S>
Complex<S> div(const Complex<S>& a, const Complex<S>& b) {
  const S den = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

template <class S>
Complex<S> complex_part(const DualComplex<S>& w) {
  return {w.one, w.i};
}

template <class S>
Complex<S> dual_part(const DualComplex<S>& w) {
  return {w.eps, w.ieps};
}

template <class S>
DualComplex<S> assemble(const Complex<S>& z1, const Complex<S>& z2) {
  return {z1.re, z1.im, z2.re, z2.im};
}

}  // namespace detail

/// w1 / w2 = z1/z3 + eps (z2 z3 - z1 z4) / z3^2, defined when z3 != 0.
template <class S>
DualComplex<S> divide(const DualComplex<S>& a, const DualComplex<S>& b) {
  if (!b.has_invertible_complex_part()) {
    throw ArithmeticError("non-invertible divisor: complex part is zero");
  }
  const auto z1 = detail::complex_part(a);
  const auto z2 = detail::dual_part(a);
  const auto z3 = detail::complex_part(b);
  const auto z4 = detail::dual_part(b);
  const auto dual = detail::div(detail::sub(detail::mul(z2, z3), detail::mul(z1, z4)), detail::mul(z3, z3));
  return detail::assemble(detail::div(z1, z3), dual);
}

template <class S>
DualComplex<S> scale(const S& lambda, const DualComplex<S>& w) {
  return {lambda * w.one, lambda * w.i, lambda * w.eps, lambda * w.ieps};
}

template <class S>
DualComplex<S> conjugate(Conjugation kind, const DualComplex<S>& w) {
  switch (kind) {
    case Conjugation::kComplex:
      return {w.one, -w.i, w.eps, -w.ieps};
    case Conjugation::kDual:
      return {w.one, w.i, -w.eps, -w.ieps};
    case Conjugation::kCoupled:
      return {w.one, -w.i, -w.eps, w.ieps};
    case Conjugation::kDualComplex: {
      if (!w.has_invertible_complex_part()) {
        throw ArithmeticError("dual-complex conjugation needs a nonzero complex part");
      }
      const auto z1 = detail::complex_part(w);
      const detail::Complex<S> z1_conj{z1.re, -z1.im};
      const auto ratio = detail::div(detail::dual_part(w), z1);
      // z1* (1 - eps ratio): the eps part is -z1* ratio.
      const auto eps_part = detail::mul(z1_conj, ratio);
      return {z1_conj.re, z1_conj.im, -eps_part.re, -eps_part.im};
    }
    case Conjugation::kAntiDual:
      return {w.eps, w.ieps, -w.one, -w.i};
  }
  throw InternalError("unknown conjugation");
}

/// The exact product w * w^{*kind}; the norm is its square root, which is
/// not defined for non-scalar values, so the product itself is exposed.
template <class S>
DualComplex<S> norm_product(Conjugation kind, const DualComplex<S>& w) {
  return w * conjugate(kind, w);
}

std::string_view conjugation_name(Conjugation kind);

}  // namespace dckpell
