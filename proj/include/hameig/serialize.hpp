#pragma once

#include <string>

#include <json.hpp>

#include "hameig/function.hpp"

namespace hameig {

/// Function document:
///   {"n": int, "q": int, "entries": [["<digit string>", "<num>/<den>"], ...]}
/// Omitted words are zero; entries are emitted in rank order. The digit-string
/// form restricts the text format to q <= 10.
nlohmann::ordered_json function_to_json(const HammingFunction& f);
HammingFunction function_from_json(const nlohmann::json& doc);

std::string serialize(const HammingFunction& f);
HammingFunction deserialize(const std::string& text);

}  // namespace hameig
