#include "dckpell/dual_complex_io.hpp"

#include <array>

#include "dckpell/errors.hpp"

namespace dckpell {
namespace {

constexpr std::string_view kSeparator = " + ";
constexpr std::array<std::string_view, 4> kSuffixes = {"", "·i", "·eps", "·i·eps"};

ExactRational coefficient(const nlohmann::json& object, const char* key) {
  if (!object.contains(key) || !object[key].is_string()) {
    throw ParseError(std::string("dual-complex JSON is missing string field '") + key + "'");
  }
  return ExactRational::parse(object[key].get<std::string>());
}

}  // namespace

std::string_view conjugation_name(Conjugation kind) {
  switch (kind) {
    case Conjugation::kComplex: return "complex";
    case Conjugation::kDual: return "dual";
    case Conjugation::kCoupled: return "coupled";
    case Conjugation::kDualComplex: return "dual-complex";
    case Conjugation::kAntiDual: return "anti-dual";
  }
  return "?";
}

std::string render_plain(const DCRational& w) {
  const std::array<const ExactRational*, 4> parts = {&w.one, &w.i, &w.eps, &w.ieps};
  std::string out;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    if (idx != 0) out += kSeparator;
    out += parts[idx]->to_string();
    out += kSuffixes[idx];
  }
  return out;
}

DCRational parse_plain(std::string_view text) {
  std::array<ExactRational, 4> parts;
  std::string_view rest = text;
  for (std::size_t idx = 0; idx < parts.size(); ++idx) {
    std::string_view term = rest;
    if (idx + 1 < parts.size()) {
      const auto pos = rest.find(kSeparator);
      if (pos == std::string_view::npos) throw ParseError("malformed dual-complex: '" + std::string(text) + "'");
      term = rest.substr(0, pos);
      rest.remove_prefix(pos + kSeparator.size());
    }
    const auto suffix = kSuffixes[idx];
    if (term.size() < suffix.size() || term.substr(term.size() - suffix.size()) != suffix) {
      throw ParseError("malformed dual-complex term: '" + std::string(term) + "'");
    }
    term.remove_suffix(suffix.size());
    parts[idx] = ExactRational::parse(term);
  }
  return {parts[0], parts[1], parts[2], parts[3]};
}

nlohmann::ordered_json to_json(const DCRational& w) {
  nlohmann::ordered_json out;
  out["one"] = w.one.to_string();
  out["i"] = w.i.to_string();
  out["eps"] = w.eps.to_string();
  out["ieps"] = w.ieps.to_string();
  return out;
}

DCRational dc_from_json(const nlohmann::json& object) {
  if (!object.is_object()) throw ParseError("dual-complex JSON must be an object");
  return {coefficient(object, "one"), coefficient(object, "i"), coefficient(object, "eps"),
          coefficient(object, "ieps")};
}

}  // namespace dckpell
