#pragma once

#include <cstdint>
#include <optional>

#include "hameig/spectra.hpp"

namespace hameig {

/// Hard limits for the exhaustive search. The search refuses inputs beyond
/// max_vertices outright and stops (with a verified partial answer) rather
/// than exceed max_subsets.
struct SearchBudget {
    std::uint64_t max_support = UINT64_MAX;
    std::uint64_t max_vertices = 4096;
    std::uint64_t max_subsets = 5'000'000;
};

enum class SearchStatus {
    Found,             // minimum support located, witness attached
    SupportCapReached, // every size <= max_support ruled out
    SubsetCapReached,  // stopped before enumerating size last_completed+1
};

struct SearchResult {
    SearchStatus status = SearchStatus::SupportCapReached;
    std::uint64_t size = 0;
    std::optional<HammingFunction> witness;
    std::uint64_t last_completed = 0;  // all supports of size <= this are ruled out
    std::uint64_t subsets_examined = 0;
};

/// Brute-force minimum support over U_{[i,j]}(n,q): for s = 1, 2, ... the
/// vertex subsets S of size s are enumerated in lexicographic order and S
/// carries a nonzero member iff the basis matrix restricted to the columns
/// outside S loses rank. Rank tests are exact (fraction-free integer
/// elimination with an arbitrary-precision fallback). The first hit is the
/// lexicographically smallest witness support; the witness itself is the
/// deterministic kernel solution on that support. Results are independent of
/// the number of worker threads. symmetry_prune restricts enumeration to
/// subsets containing vertex 0 (sound by vertex-transitivity); it is off by
/// default and never affects the reported size.
SearchResult min_support_search(const SpectrumInterval& interval,
                                const SearchBudget& budget = SearchBudget{}, int jobs = 1,
                                bool symmetry_prune = false);

enum class MinimalityVerdict { Minimal, NotMinimal, ConsistentLowerBound, Inconclusive };

struct MinimalityReport {
    MinimalityVerdict verdict = MinimalityVerdict::Inconclusive;
    std::uint64_t lower_bound = 1;  // verified: no nonzero member has support below this
    std::optional<HammingFunction> smaller_witness;
};

/// Compares support_size(f) against the search. "Minimal" when the search
/// confirms the size; "ConsistentLowerBound" when the budget ran out after
/// ruling out everything below support_size(f).
MinimalityReport verify_minimality(const HammingFunction& f, const SpectrumInterval& interval,
                                   const SearchBudget& budget = SearchBudget{}, int jobs = 1);

}  // namespace hameig
