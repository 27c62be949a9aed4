#pragma once

#include <optional>
#include <string>

#include "hameig/spectra.hpp"

namespace hameig {

/// A minimum-support bound together with the catalog entry it comes from.
/// value is absent exactly when the parameters fall outside every covered
/// regime (q >= 4 with i+j > n).
struct BoundResult {
    std::optional<Int> value;
    std::string source;
    std::string regime;

    bool known() const { return value.has_value(); }
};

/// Minimum support of a nonzero member of U_{[i,j]}(n,q):
///   q = 2, i+j <= n:            2^(n-j)                 (Theorem 3)
///   q = 2, i+j > n:             2^i                     (Theorem 4)
///   q = 3, i+j <= n:            4^i 3^(n-i-j)           (prior product bound)
///   q = 3, i+j > n, i/2+j <= n: 2^(3(n-j)-i) 3^(i+j-n)  (Theorem 5)
///   q = 3, i/2+j > n:           2^(i+j-n) 3^(n-j)       (Theorem 6)
///   q >= 4, i+j <= n:           2^i (q-1)^i q^(n-i-j)   (prior product bound)
///   q >= 4, i+j > n:            unknown
BoundResult minsupp(int n, int q, int i, int j);

/// Support floor for uniform members of U_{[i,j]}(n,q) when i+j >= n, q >= 3:
/// 2^(n-j) (q-1)^(n-j) q^(i+j-n).
Int uniform_bound(int n, int q, int i, int j);

struct BoundCheck {
    Int support;
    BoundResult bound;
    bool satisfied = false;  // support >= bound (or bound unknown)
    bool equality = false;   // support == bound: a minimum-support certificate
};

/// Requires a nonzero verified member of the interval space.
BoundCheck check_bound(const HammingFunction& f, const SpectrumInterval& interval);

}  // namespace hameig
