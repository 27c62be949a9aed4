#include "hameig/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hameig/linalg.hpp"

namespace hameig {

namespace {

// Basis rows scaled to primitive integer vectors (shared, read-only).
struct IntBasis {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Int>> entries;
    bool fits_i64 = true;
    std::vector<std::vector<std::int64_t>> entries_i64;
};

IntBasis integerize(const std::vector<HammingFunction>& basis) {
    IntBasis out;
    out.rows = basis.size();
    out.cols = basis.empty() ? 0 : basis[0].values().size();
    out.entries.reserve(out.rows);
    for (const auto& f : basis) {
        Int lcm(1);
        for (const Rat& v : f.values()) {
            Int den = v.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Int> row;
        row.reserve(out.cols);
        Int content(0);
        for (const Rat& v : f.values()) {
            Rat scaled = v * Rat(lcm);
            row.push_back(scaled.get_num());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), row.back().get_mpz_t());
        }
        if (content > 1) {
            for (Int& e : row) e /= content;
        }
        out.entries.push_back(std::move(row));
    }
    out.entries_i64.resize(out.rows);
    for (std::size_t r = 0; r < out.rows && out.fits_i64; ++r) {
        out.entries_i64[r].reserve(out.cols);
        for (const Int& e : out.entries[r]) {
            if (!e.fits_slong_p()) {
                out.fits_i64 = false;
                break;
            }
            out.entries_i64[r].push_back(e.get_si());
        }
    }
    if (!out.fits_i64) out.entries_i64.clear();
    return out;
}

constexpr std::int64_t kBareissLimit = std::int64_t{1} << 62;

// Fraction-free (Bareiss) rank over the columns NOT in the sorted subset.
// Returns nullopt when an intermediate value leaves the safe int64 range.
std::optional<std::size_t> rank_outside_i64(const IntBasis& basis,
                                            const std::vector<std::uint32_t>& subset,
                                            std::vector<std::int64_t>& work,
                                            std::vector<std::uint32_t>& keep) {
    keep.clear();
    {
        std::size_t s = 0;
        for (std::uint32_t c = 0; c < basis.cols; ++c) {
            if (s < subset.size() && subset[s] == c) {
                ++s;
                continue;
            }
            keep.push_back(c);
        }
    }
    const std::size_t rows = basis.rows;
    const std::size_t cols = keep.size();
    work.resize(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& src = basis.entries_i64[r];
        for (std::size_t c = 0; c < cols; ++c) work[r * cols + c] = src[keep[c]];
    }

    std::int64_t prev = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && work[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(work[rank * cols + c], work[pivot * cols + c]);
            }
        }
        const std::int64_t p = work[rank * cols + col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::int64_t head = work[r * cols + col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                const __int128 t = static_cast<__int128>(work[r * cols + c]) * p -
                                   static_cast<__int128>(head) * work[rank * cols + c];
                const __int128 v = t / prev;
                // Bareiss quotients are exact minors; anything else means the
                // values left the safe range somewhere.
                if (v * prev != t || v > kBareissLimit || v < -kBareissLimit) {
                    return std::nullopt;
                }
                work[r * cols + c] = static_cast<std::int64_t>(v);
            }
            work[r * cols + col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

std::size_t rank_outside_mpz(const IntBasis& basis, const std::vector<std::uint32_t>& subset) {
    std::vector<std::uint32_t> keep;
    {
        std::size_t s = 0;
        for (std::uint32_t c = 0; c < basis.cols; ++c) {
            if (s < subset.size() && subset[s] == c) {
                ++s;
                continue;
            }
            keep.push_back(c);
        }
    }
    const std::size_t rows = basis.rows;
    const std::size_t cols = keep.size();
    std::vector<Int> work(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) work[r * cols + c] = basis.entries[r][keep[c]];
    }
    Int prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && work[pivot * cols + col] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t c = col; c < cols; ++c) {
                std::swap(work[rank * cols + c], work[pivot * cols + c]);
            }
        }
        const Int p = work[rank * cols + col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const Int head = work[r * cols + col];
            for (std::size_t c = col + 1; c < cols; ++c) {
                work[r * cols + c] = (work[r * cols + c] * p - head * work[rank * cols + c]) / prev;
            }
            work[r * cols + col] = 0;
        }
        prev = p;
        ++rank;
    }
    return rank;
}

bool subset_has_witness(const IntBasis& basis, const std::vector<std::uint32_t>& subset,
                        std::vector<std::int64_t>& work, std::vector<std::uint32_t>& keep) {
    if (basis.fits_i64) {
        if (auto r = rank_outside_i64(basis, subset, work, keep)) return *r < basis.rows;
    }
    return rank_outside_mpz(basis, subset) < basis.rows;
}

// Deterministic witness supported inside the subset: the first kernel basis
// vector of the transposed outside-columns matrix, combined with the basis
// rows and normalized to a primitive integer vector with positive leading
// entry.
HammingFunction extract_witness(const SpectrumInterval& interval,
                                const std::vector<HammingFunction>& basis,
                                const std::vector<std::uint32_t>& subset) {
    const std::size_t rows = basis.size();
    const std::uint64_t cols = basis[0].num_vertices();
    RatMatrix outside_t;
    {
        std::size_t s = 0;
        for (std::uint32_t c = 0; c < cols; ++c) {
            if (s < subset.size() && subset[s] == c) {
                ++s;
                continue;
            }
            std::vector<Rat> row;
            row.reserve(rows);
            for (std::size_t r = 0; r < rows; ++r) row.push_back(basis[r].values()[c]);
            outside_t.push_back(std::move(row));
        }
    }
    std::vector<Rat> coeff;
    if (outside_t.empty()) {
        // The subset covers every vertex; any basis element is a witness.
        coeff.assign(rows, Rat(0));
        coeff[0] = 1;
    } else {
        RatMatrix kernel = kernel_basis(std::move(outside_t));
        if (kernel.empty()) throw std::logic_error("witness extraction on a full-rank subset");
        coeff = std::move(kernel.front());
    }

    std::vector<Rat> values(cols, Rat(0));
    for (std::size_t r = 0; r < rows; ++r) {
        if (coeff[r] == 0) continue;
        for (std::uint64_t c = 0; c < cols; ++c) values[c] += coeff[r] * basis[r].values()[c];
    }

    Int lcm(1);
    for (const Rat& v : values) {
        Int den = v.get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Int content(0);
    std::vector<Rat> scaled;
    scaled.reserve(values.size());
    for (const Rat& v : values) {
        Rat s = v * Rat(lcm);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num().get_mpz_t());
        scaled.push_back(std::move(s));
    }
    if (content == 0) throw std::logic_error("zero witness extracted");
    int sign = 0;
    for (const Rat& v : scaled) {
        if (v != 0) {
            sign = sgn(v) > 0 ? 1 : -1;
            break;
        }
    }
    const Rat norm = Rat(Int(sign) * content);
    for (Rat& v : scaled) v /= norm;
    return HammingFunction(interval.n, interval.q, std::move(scaled));
}

Int binomial(std::uint64_t v, std::uint64_t s) {
    Int count;
    mpz_bin_uiui(count.get_mpz_t(), static_cast<unsigned long>(v), static_cast<unsigned long>(s));
    return count;
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t v) {
    const std::size_t s = c.size();
    std::size_t idx = s;
    while (idx > 0) {
        --idx;
        if (c[idx] != v - static_cast<std::uint32_t>(s - idx)) {
            ++c[idx];
            for (std::size_t t = idx + 1; t < s; ++t) c[t] = c[t - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SizeScanResult {
    bool found = false;
    std::uint64_t winning_index = 0;
    std::vector<std::uint32_t> winning_subset;
};

// Scans every subset of the given size; workers stride over the lex order so
// the earliest (= lexicographically smallest) hit wins regardless of jobs.
SizeScanResult scan_size(const IntBasis& basis, std::uint32_t num_vertices, std::uint64_t size,
                         int jobs, bool symmetry_prune) {
    const std::uint64_t stride = static_cast<std::uint64_t>(jobs);
    std::atomic<std::uint64_t> best_index{std::numeric_limits<std::uint64_t>::max()};
    std::vector<SizeScanResult> per_worker(static_cast<std::size_t>(jobs));

    auto run = [&](int worker) {
        std::vector<std::uint32_t> subset(static_cast<std::size_t>(size));
        // With pruning, vertex 0 is pinned and the tail enumerates the rest.
        const std::uint32_t fixed = symmetry_prune ? 1 : 0;
        for (std::uint32_t t = 0; t < size; ++t) subset[t] = t;
        std::vector<std::uint32_t> tail(subset.begin() + fixed, subset.end());

        bool alive = true;
        for (int skip = 0; skip < worker && alive; ++skip) alive = next_combination(tail, num_vertices);
        std::uint64_t index = static_cast<std::uint64_t>(worker);
        std::vector<std::int64_t> work;
        std::vector<std::uint32_t> keep;
        std::uint64_t since_check = 0;
        while (alive) {
            if (++since_check >= 64) {
                since_check = 0;
                if (best_index.load(std::memory_order_relaxed) < index) break;
            }
            std::copy(tail.begin(), tail.end(), subset.begin() + fixed);
            if (subset_has_witness(basis, subset, work, keep)) {
                auto& mine = per_worker[static_cast<std::size_t>(worker)];
                mine.found = true;
                mine.winning_index = index;
                mine.winning_subset = subset;
                std::uint64_t cur = best_index.load(std::memory_order_relaxed);
                while (cur > index && !best_index.compare_exchange_weak(cur, index)) {
                }
                break;
            }
            for (std::uint64_t step = 0; step < stride && alive; ++step) {
                alive = next_combination(tail, num_vertices);
            }
            index += stride;
        }
    };

    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int w = 0; w < jobs; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    SizeScanResult best;
    for (const auto& r : per_worker) {
        if (r.found && (!best.found || r.winning_index < best.winning_index)) best = r;
    }
    return best;
}

}  // namespace

SearchResult min_support_search(const SpectrumInterval& interval, const SearchBudget& budget,
                                int jobs, bool symmetry_prune) {
    validate(interval);
    if (budget.max_support == 0 || budget.max_vertices == 0 || budget.max_subsets == 0) {
        throw std::invalid_argument("search budget entries must be positive");
    }
    const std::uint64_t num_vertices = vertex_count(interval.n, interval.q);
    if (num_vertices > budget.max_vertices) {
        throw std::invalid_argument("q^n exceeds the search vertex cap");
    }
    if (jobs < 1) jobs = 1;

    const std::vector<HammingFunction> basis = eigenspace_basis(interval, budget.max_vertices);
    const IntBasis int_basis = integerize(basis);

    SearchResult result;
    const std::uint64_t max_size = std::min<std::uint64_t>(budget.max_support, num_vertices);
    for (std::uint64_t s = 1; s <= max_size; ++s) {
        const Int this_size = symmetry_prune ? binomial(num_vertices - 1, s - 1)
                                             : binomial(num_vertices, s);
        const Int remaining = Int(static_cast<unsigned long>(budget.max_subsets)) -
                              Int(static_cast<unsigned long>(result.subsets_examined));
        if (this_size > remaining) {
            result.status = SearchStatus::SubsetCapReached;
            result.last_completed = s - 1;
            return result;
        }

        SizeScanResult scan = scan_size(int_basis, static_cast<std::uint32_t>(num_vertices), s,
                                        jobs, symmetry_prune);
        if (scan.found) {
            result.status = SearchStatus::Found;
            result.size = s;
            result.subsets_examined += scan.winning_index + 1;
            result.last_completed = s - 1;
            HammingFunction witness = extract_witness(interval, basis, scan.winning_subset);
            if (witness.support_size() != s || !is_member(witness, interval)) {
                throw std::logic_error("extracted witness failed self-check");
            }
            result.witness = std::move(witness);
            return result;
        }
        result.subsets_examined += this_size.get_ui();
        result.last_completed = s;
    }
    result.status = SearchStatus::SupportCapReached;
    result.last_completed = max_size;
    return result;
}

MinimalityReport verify_minimality(const HammingFunction& f, const SpectrumInterval& interval,
                                   const SearchBudget& budget, int jobs) {
    if (f.is_zero() || !is_member(f, interval)) {
        throw std::invalid_argument("verify_minimality requires a nonzero verified member");
    }
    const std::uint64_t support = f.support_size();
    SearchBudget capped = budget;
    capped.max_support = std::min<std::uint64_t>(budget.max_support, support);

    MinimalityReport report;
    SearchResult search = min_support_search(interval, capped, jobs);
    switch (search.status) {
        case SearchStatus::Found:
            report.lower_bound = search.size;
            if (search.size == support) {
                report.verdict = MinimalityVerdict::Minimal;
            } else {
                report.verdict = MinimalityVerdict::NotMinimal;
                report.smaller_witness = std::move(search.witness);
            }
            break;
        case SearchStatus::SupportCapReached:
            // max_support = support and no witness found: impossible for a
            // genuine member, but report honestly.
            report.verdict = MinimalityVerdict::Inconclusive;
            report.lower_bound = search.last_completed + 1;
            break;
        case SearchStatus::SubsetCapReached:
            report.lower_bound = search.last_completed + 1;
            report.verdict = (search.last_completed + 1 >= support)
                                 ? MinimalityVerdict::ConsistentLowerBound
                                 : MinimalityVerdict::Inconclusive;
            break;
    }
    return report;
}

}  // namespace hameig
