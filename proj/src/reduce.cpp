#include "hameig/reduce.hpp"

#include <stdexcept>

namespace hameig {

HammingFunction restrict(const HammingFunction& f, int r, int k) {
    const int n = f.n();
    const int q = f.q();
    if (n < 2) throw std::invalid_argument("restriction requires n >= 2");
    if (r < 1 || r > n) throw std::invalid_argument("coordinate r out of [1, n]");
    if (k < 0 || k >= q) throw std::invalid_argument("symbol k out of the alphabet");

    // With big-endian ranks, fixing coordinate r splits a rank into a prefix
    // (coordinates before r) and a suffix (after r).
    std::uint64_t suffix = 1;
    for (int t = r; t < n; ++t) suffix *= static_cast<std::uint64_t>(q);
    const std::uint64_t count = f.num_vertices() / static_cast<std::uint64_t>(q);

    std::vector<Rat> values;
    values.reserve(count);
    for (std::uint64_t y = 0; y < count; ++y) {
        const std::uint64_t prefix = y / suffix;
        const std::uint64_t rest = y % suffix;
        const std::uint64_t x =
            (prefix * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(k)) * suffix + rest;
        values.push_back(f.values()[x]);
    }
    return HammingFunction(n - 1, q, std::move(values));
}

namespace {

// Slice comparison that also covers n = 1, where slices are 0-ary constants.
bool slices_equal(const HammingFunction& f, int r, int k, int m) {
    if (f.n() == 1) return f.value(static_cast<Rank>(k)) == f.value(static_cast<Rank>(m));
    return restrict(f, r, k) == restrict(f, r, m);
}

// Membership in the clipped interval [lo, hi] over H(n', q); an empty
// interval is the zero space.
bool member_clipped(const HammingFunction& f, int lo, int hi) {
    const int n = f.n();
    if (lo < 0) lo = 0;
    if (hi > n) hi = n;
    if (lo > hi) return f.is_zero();
    return is_member(f, SpectrumInterval{n, f.q(), lo, hi});
}

}  // namespace

UniformityReport is_uniform(const HammingFunction& f) {
    const int n = f.n();
    const int q = f.q();
    UniformityReport report;
    report.uniform = true;
    report.l.assign(static_cast<std::size_t>(n), std::nullopt);
    for (int r = 1; r <= n; ++r) {
        for (int excluded = 0; excluded < q; ++excluded) {
            bool ok = true;
            int first = (excluded == 0) ? 1 : 0;
            for (int k = first + 1; k < q && ok; ++k) {
                if (k == excluded) continue;
                ok = slices_equal(f, r, first, k);
            }
            if (ok) {
                report.l[static_cast<std::size_t>(r - 1)] = excluded;
                break;
            }
        }
        if (!report.l[static_cast<std::size_t>(r - 1)].has_value()) report.uniform = false;
    }
    return report;
}

ReductionReport lemma2_checks(const HammingFunction& f, const SpectrumInterval& interval,
                              int r) {
    validate(interval);
    if (!is_member(f, interval)) {
        throw std::invalid_argument("f is not a member of the stated interval space");
    }
    if (f.n() < 2) throw std::invalid_argument("restriction requires n >= 2");
    const int q = f.q();
    const int i = interval.lo;
    const int j = interval.hi;

    ReductionReport report;
    report.differences_ok = true;
    report.slices_ok = true;

    std::vector<HammingFunction> slices;
    slices.reserve(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) slices.push_back(restrict(f, r, k));

    for (int k = 0; k < q && report.differences_ok; ++k) {
        for (int m = k + 1; m < q && report.differences_ok; ++m) {
            report.differences_ok =
                member_clipped(sub(slices[static_cast<std::size_t>(k)],
                                   slices[static_cast<std::size_t>(m)]),
                               i - 1, j - 1);
        }
    }

    HammingFunction total = slices[0];
    for (int k = 1; k < q; ++k) total = add(total, slices[static_cast<std::size_t>(k)]);
    report.sum_ok = member_clipped(total, i, j);

    for (int k = 0; k < q && report.slices_ok; ++k) {
        report.slices_ok = member_clipped(slices[static_cast<std::size_t>(k)], i - 1, j);
    }
    return report;
}

bool lemma3_check(const HammingFunction& f, const SpectrumInterval& interval, int r, int m) {
    validate(interval);
    if (!is_member(f, interval)) {
        throw std::invalid_argument("f is not a member of the stated interval space");
    }
    if (f.n() < 2) throw std::invalid_argument("restriction requires n >= 2");
    if (m < 0 || m >= f.q()) throw std::invalid_argument("symbol m out of the alphabet");
    for (int k = 0; k < f.q(); ++k) {
        if (k == m) continue;
        if (!restrict(f, r, k).is_zero()) {
            throw std::invalid_argument("slice at symbol " + std::to_string(k) +
                                        " is not identically zero");
        }
    }
    return member_clipped(restrict(f, r, m), interval.lo, interval.hi - 1);
}

}  // namespace hameig
