#include "hameig/word.hpp"

#include <limits>
#include <stdexcept>

namespace hameig {

std::uint64_t vertex_count(int n, int q) {
    if (n < 1) throw std::invalid_argument("dimension n must be >= 1");
    if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
    std::uint64_t count = 1;
    const std::uint64_t limit = std::uint64_t{1} << 63;
    for (int r = 0; r < n; ++r) {
        if (count > limit / static_cast<std::uint64_t>(q)) {
            throw std::overflow_error("q^n exceeds 2^63");
        }
        count *= static_cast<std::uint64_t>(q);
    }
    return count;
}

void validate_word(const Word& w, int q) {
    if (w.symbols.empty()) throw std::invalid_argument("empty word");
    for (int s : w.symbols) {
        if (s < 0 || s >= q) {
            throw std::invalid_argument("symbol " + std::to_string(s) +
                                        " out of range for q=" + std::to_string(q));
        }
    }
}

Rank rank_of(const Word& w, int q) {
    validate_word(w, q);
    Rank r = 0;
    for (int s : w.symbols) r = r * static_cast<Rank>(q) + static_cast<Rank>(s);
    return r;
}

Word unrank(Rank r, int n, int q) {
    if (r >= vertex_count(n, q)) {
        throw std::invalid_argument("rank out of range");
    }
    Word w;
    w.symbols.assign(static_cast<std::size_t>(n), 0);
    for (int pos = n - 1; pos >= 0; --pos) {
        w.symbols[static_cast<std::size_t>(pos)] = static_cast<int>(r % static_cast<Rank>(q));
        r /= static_cast<Rank>(q);
    }
    return w;
}

std::string word_to_string(const Word& w) {
    std::string out;
    out.reserve(w.symbols.size());
    for (int s : w.symbols) {
        if (s < 0 || s > 9) throw std::invalid_argument("digit-string form requires q <= 10");
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

Word word_from_string(const std::string& text, int q) {
    if (q > 10) throw std::invalid_argument("digit-string form requires q <= 10");
    Word w;
    w.symbols.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("bad symbol '" + std::string(1, c) + "' in word");
        }
        w.symbols.push_back(c - '0');
    }
    validate_word(w, q);
    return w;
}

}  // namespace hameig
