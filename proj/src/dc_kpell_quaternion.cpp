#include "dckpell/dc_kpell_quaternion.hpp"

#include "dckpell/dual_complex_io.hpp"
#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

DCQuadratic hat(const QuadraticElement& root) {
  const QuadraticElement one = QuadraticElement::embed(ExactRational(1), root.radicand());
  const QuadraticElement square = root * root;
  return {one, root, square, square * root};
}

}  // namespace

DCKPellQuaternion::DCKPellQuaternion(SequenceFamily family, ExactRational k, long n)
    : provenance_{family, std::move(k), n}, value_(dc_number(family, provenance_.k, n)) {}

DCKPellQuaternion build_quaternion(SequenceFamily family, const ExactRational& k, long n) {
  return DCKPellQuaternion(family, k, n);
}

ExactRational scalar_part(const DCKPellQuaternion& q) { return q.value().one; }

DCRational vector_part(const DCKPellQuaternion& q) {
  const DCRational& v = q.value();
  return {ExactRational(0), v.i, v.eps, v.ieps};
}

HatPair make_hat_pair(const ExactRational& k) {
  const auto [alpha, beta] = make_alpha_beta(k);
  return {hat(alpha), hat(beta)};
}

DCRational rationalize(const DCQuadratic& w) {
  for (const QuadraticElement* c : {&w.one, &w.i, &w.eps, &w.ieps}) {
    if (!c->radical_part().is_zero()) {
      throw InternalError("dual-complex coefficient is not rational: " + c->to_string());
    }
  }
  return {w.one.rational_part(), w.i.rational_part(), w.eps.rational_part(), w.ieps.rational_part()};
}

DCRational binet_quaternion(const ExactRational& k, std::uint64_t n) {
  const auto [alpha, beta] = make_alpha_beta(k);
  const HatPair hats = make_hat_pair(k);
  const QuadraticElement inv_gap =
      QuadraticElement::embed(ExactRational(1), alpha.radicand()) / (alpha - beta);
  const DCQuadratic numerator = scale(alpha.pow(n), hats.hat_alpha) - scale(beta.pow(n), hats.hat_beta);
  return rationalize(scale(inv_gap, numerator));
}

DCRational gamma_closed_form(const ExactRational& k) {
  return {ExactRational(1) + k, ExactRational(2), ExactRational(2) * k * k + ExactRational(6) * k + ExactRational(4),
          ExactRational(4) * k + ExactRational(8)};
}

GammaCoefficient gamma_coefficient(const ExactRational& k) {
  const HatPair hats = make_hat_pair(k);
  DCRational product = rationalize(hats.hat_alpha * hats.hat_beta);
  const DCRational expected = gamma_closed_form(k);
  if (product != expected) {
    throw InternalError("hat_alpha * hat_beta = " + render_plain(product) + " but the closed form gives " +
                        render_plain(expected));
  }
  return GammaCoefficient(k, std::move(product));
}

}  // namespace dckpell
