#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hameig {

/// Dense vertex index in [0, q^n). rank(x) = sum_r x_r * q^(n-r), i.e. the
/// first coordinate is the most significant digit.
using Rank = std::uint64_t;

/// A vertex of H(n,q): a word of length n over {0,...,q-1}. Coordinates are
/// 1-indexed in every public interface; q is carried by the surrounding
/// function or passed alongside.
struct Word {
    std::vector<int> symbols;

    int n() const { return static_cast<int>(symbols.size()); }
};

/// q^n as a 64-bit count; throws std::overflow_error past 2^63.
std::uint64_t vertex_count(int n, int q);

void validate_word(const Word& w, int q);

Rank rank_of(const Word& w, int q);
Word unrank(Rank r, int n, int q);

/// Digit-string form ("0121"); only defined for q <= 10.
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& text, int q);

}  // namespace hameig
