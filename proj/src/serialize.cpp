#include "hameig/serialize.hpp"

#include <set>
#include <stdexcept>

namespace hameig {

nlohmann::ordered_json function_to_json(const HammingFunction& f) {
    if (f.q() > 10) throw std::invalid_argument("text format requires q <= 10");
    nlohmann::ordered_json doc;
    doc["n"] = f.n();
    doc["q"] = f.q();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& [rank, value] : f.nonzero_entries()) {
        entries.push_back({word_to_string(unrank(rank, f.n(), f.q())),
                           rational_to_string(value)});
    }
    doc["entries"] = std::move(entries);
    return doc;
}

HammingFunction function_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("q") ||
        !doc.contains("entries")) {
        throw std::invalid_argument("function document needs n, q and entries");
    }
    if (!doc["n"].is_number_integer() || !doc["q"].is_number_integer()) {
        throw std::invalid_argument("n and q must be integers");
    }
    const int n = doc["n"].get<int>();
    const int q = doc["q"].get<int>();
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (q < 2 || q > 10) throw std::invalid_argument("text format requires 2 <= q <= 10");

    HammingFunction zero(n, q);
    std::vector<Rat> values(zero.values());
    if (!doc["entries"].is_array()) throw std::invalid_argument("entries must be an array");
    std::set<Rank> seen;
    for (const auto& entry : doc["entries"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
            !entry[1].is_string()) {
            throw std::invalid_argument("each entry must be [word, value]");
        }
        const std::string word_text = entry[0].get<std::string>();
        if (static_cast<int>(word_text.size()) != n) {
            throw std::invalid_argument("word '" + word_text + "' has length != n");
        }
        const Rank r = rank_of(word_from_string(word_text, q), q);
        if (!seen.insert(r).second) {
            throw std::invalid_argument("duplicate word '" + word_text + "'");
        }
        values[r] = parse_rational(entry[1].get<std::string>());
    }
    return HammingFunction(n, q, std::move(values));
}

std::string serialize(const HammingFunction& f) { return function_to_json(f).dump(); }

HammingFunction deserialize(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed document: ") + e.what());
    }
    return function_from_json(doc);
}

}  // namespace hameig
