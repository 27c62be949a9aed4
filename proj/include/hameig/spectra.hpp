#pragma once

#include <cstdint>
#include <vector>

#include "hameig/function.hpp"

namespace hameig {

/// Direct sum U_i(n,q) + U_{i+1}(n,q) + ... + U_j(n,q) of adjacency
/// eigenspaces of H(n,q), named by its level interval [lo, hi].
struct SpectrumInterval {
    int n;
    int q;
    int lo;
    int hi;
};

void validate(const SpectrumInterval& interval);

/// lambda_i(n,q) = n(q-1) - q*i, the i-th adjacency eigenvalue of H(n,q).
long long eigenvalue(int n, int q, int i);

/// (Af)(x) = sum of f over the n(q-1) neighbors of x. The adjacency matrix is
/// never materialized; each coordinate contributes its fiber sums.
HammingFunction apply_adjacency(const HammingFunction& f);

/// (A - lambda I) f in one pass.
HammingFunction adjacency_shift(const HammingFunction& f, long long lambda);

/// True iff f is nonzero and Af = lambda_i(n,q) f exactly.
bool is_eigenfunction(const HammingFunction& f, int i);

/// Annihilator test: f is in U_{[lo,hi]}(n,q) iff the product of
/// (A - lambda_k I) over the levels k in [lo,hi] sends f to zero (each factor
/// kills its own level and is invertible on the rest). The zero function
/// belongs to every interval space.
bool is_member(const HammingFunction& f, const SpectrumInterval& interval);

/// Spectral components (P_0 f, ..., P_n f) via the Lagrange projectors
/// P_i = prod_{k != i} (A - lambda_k I) / (lambda_i - lambda_k).
/// The components sum to f and component i lies in U_i or is zero.
std::vector<HammingFunction> decompose(const HammingFunction& f);

/// Exact rational basis of U_{[lo,hi]}(n,q), computed as the kernel of the
/// annihilator operator by Gaussian elimination. Deterministic; no dimension
/// formula is assumed anywhere in the computation.
std::vector<HammingFunction> eigenspace_basis(const SpectrumInterval& interval,
                                              std::uint64_t max_vertices = 4096);

}  // namespace hameig
