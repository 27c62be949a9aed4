#include "hameig/rational.hpp"

#include <cctype>

namespace hameig {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    if (pos == s.size()) return false;
    for (; pos < s.size(); ++pos) {
        if (!std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    }
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num_str = text.substr(0, slash);
    if (!is_integer_literal(num_str)) {
        throw std::invalid_argument("not a rational literal: '" + text + "'");
    }
    Int num(num_str, 10);
    Int den(1);
    if (slash != std::string::npos) {
        const std::string den_str = text.substr(slash + 1);
        if (!is_integer_literal(den_str)) {
            throw std::invalid_argument("not a rational literal: '" + text + "'");
        }
        den = Int(den_str, 10);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + text + "'");
        }
    }
    Rat value(num, den);
    value.canonicalize();
    return value;
}

std::string rational_to_string(const Rat& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace hameig
