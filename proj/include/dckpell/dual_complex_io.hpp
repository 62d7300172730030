#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dckpell/dual_complex.hpp"

namespace dckpell {

/// "a + b·i + c·eps + d·i·eps" with coefficients in rational text format.
std::string render_plain(const DCRational& w);
DCRational parse_plain(std::string_view text);

/// {"one": "...", "i": "...", "eps": "...", "ieps": "..."}
nlohmann::ordered_json to_json(const DCRational& w);
DCRational dc_from_json(const nlohmann::json& object);

}  // namespace dckpell
