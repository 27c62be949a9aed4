#pragma once

#include <optional>
#include <vector>

#include "hameig/spectra.hpp"

namespace hameig {

/// A coordinate/symbol pair naming the slice f_k^r (1-indexed r).
struct RestrictionIndex {
    int r;
    int k;
};

/// f_k^r on H(n-1,q): fix coordinate r to symbol k,
/// f_k^r(y_1..y_{n-1}) = f(y_1..y_{r-1}, k, y_r..y_{n-1}). Requires n >= 2.
HammingFunction restrict(const HammingFunction& f, int r, int k);

struct UniformityReport {
    bool uniform = false;
    // Smallest valid l(r) per coordinate, or nullopt where none exists.
    std::vector<std::optional<int>> l;
};

/// f is uniform iff for every coordinate r some symbol l(r) can be excluded
/// so that all remaining slices f_k^r coincide. For n = 1 the slices are
/// 0-ary and compared as constants. For q = 2 the condition is vacuous at
/// every coordinate (one slice remains), so l(r) = 0 always works.
UniformityReport is_uniform(const HammingFunction& f);

struct ReductionReport {
    bool differences_ok = false;  // f_k^r - f_m^r in U_{[i-1,j-1]}(n-1,q)
    bool sum_ok = false;          // sum_k f_k^r in U_{[i,j]}(n-1,q)
    bool slices_ok = false;       // f_k^r in U_{[i-1,j]}(n-1,q)
    bool all() const { return differences_ok && sum_ok && slices_ok; }
};

/// The three restriction memberships for a verified member of
/// U_{[i,j]}(n,q), checked for all k, m at coordinate r. Interval bounds are
/// clipped to [0, n-1]; an empty clipped interval means the function must be
/// identically zero. Throws if f is not a member of the stated space.
ReductionReport lemma2_checks(const HammingFunction& f, const SpectrumInterval& interval,
                              int r);

/// Zero-slice reduction: if f in U_{[i,j]}(n,q) and every slice at r other
/// than m vanishes, then f_m^r lies in U_{[i,j-1]}(n-1,q). Throws if the
/// preconditions fail.
bool lemma3_check(const HammingFunction& f, const SpectrumInterval& interval, int r, int m);

}  // namespace hameig
