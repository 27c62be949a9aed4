#include "hameig/spectra.hpp"

#include <stdexcept>

#include "hameig/linalg.hpp"

namespace hameig {

void validate(const SpectrumInterval& interval) {
    if (interval.q < 2) throw std::invalid_argument("q must be >= 2");
    if (interval.n < 1) throw std::invalid_argument("n must be >= 1");
    if (interval.lo < 0 || interval.lo > interval.hi || interval.hi > interval.n) {
        throw std::invalid_argument("interval must satisfy 0 <= lo <= hi <= n");
    }
}

long long eigenvalue(int n, int q, int i) {
    if (n < 1 || q < 2) throw std::invalid_argument("need n >= 1 and q >= 2");
    if (i < 0 || i > n) throw std::invalid_argument("level i out of [0, n]");
    return static_cast<long long>(n) * (q - 1) - static_cast<long long>(q) * i;
}

namespace {

// out[x] += sum over all symbols s of f(x with coordinate d0 set to s),
// for the 0-based coordinate d0.
void accumulate_fiber_sums(const std::vector<Rat>& f, std::vector<Rat>& out,
                           int d0, int n, int q) {
    std::uint64_t stride = 1;
    for (int t = d0 + 1; t < n; ++t) stride *= static_cast<std::uint64_t>(q);
    const std::uint64_t block = stride * static_cast<std::uint64_t>(q);
    const std::uint64_t total = f.size();
    Rat sum;
    for (std::uint64_t base = 0; base < total; base += block) {
        for (std::uint64_t off = 0; off < stride; ++off) {
            sum = 0;
            for (int s = 0; s < q; ++s) sum += f[base + static_cast<std::uint64_t>(s) * stride + off];
            for (int s = 0; s < q; ++s) out[base + static_cast<std::uint64_t>(s) * stride + off] += sum;
        }
    }
}

}  // namespace

HammingFunction adjacency_shift(const HammingFunction& f, long long lambda) {
    const int n = f.n();
    const int q = f.q();
    std::vector<Rat> out(f.num_vertices(), Rat(0));
    for (int d0 = 0; d0 < n; ++d0) accumulate_fiber_sums(f.values(), out, d0, n, q);
    // Each fiber sum includes f(x) itself once per coordinate, so subtract
    // n*f(x) for the neighbor sum and lambda*f(x) for the shift.
    const Rat diag(static_cast<long>(n + lambda));
    for (std::uint64_t r = 0; r < out.size(); ++r) out[r] -= diag * f.values()[r];
    return HammingFunction(n, q, std::move(out));
}

HammingFunction apply_adjacency(const HammingFunction& f) { return adjacency_shift(f, 0); }

bool is_eigenfunction(const HammingFunction& f, int i) {
    const long long lambda = eigenvalue(f.n(), f.q(), i);
    if (f.is_zero()) return false;
    return adjacency_shift(f, lambda).is_zero();
}

bool is_member(const HammingFunction& f, const SpectrumInterval& interval) {
    validate(interval);
    if (f.n() != interval.n || f.q() != interval.q) {
        throw std::invalid_argument("function domain does not match the interval");
    }
    if (interval.lo == 0 && interval.hi == interval.n) return true;  // whole space
    // (A - lambda_k I) kills U_k and acts invertibly on every other level, so
    // the product over k in [lo, hi] vanishes exactly on U_{[lo,hi]}.
    HammingFunction g = f;
    for (int k = interval.lo; k <= interval.hi; ++k) {
        if (g.is_zero()) return true;
        g = adjacency_shift(g, eigenvalue(interval.n, interval.q, k));
    }
    return g.is_zero();
}

std::vector<HammingFunction> decompose(const HammingFunction& f) {
    const int n = f.n();
    const int q = f.q();
    std::vector<HammingFunction> components;
    components.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        HammingFunction u = f;
        // prod_{k != i} (lambda_i - lambda_k) = q^n * (-1)^i * i! * (n-i)!
        Int denom = 1;
        for (int k = 0; k <= n; ++k) {
            if (k == i) continue;
            u = adjacency_shift(u, eigenvalue(n, q, k));
            denom *= Int(static_cast<long>(eigenvalue(n, q, i) - eigenvalue(n, q, k)));
        }
        components.push_back(scale(u, make_rat(Int(1), denom)));
    }
    return components;
}

std::vector<HammingFunction> eigenspace_basis(const SpectrumInterval& interval,
                                              std::uint64_t max_vertices) {
    validate(interval);
    const std::uint64_t count = vertex_count(interval.n, interval.q);
    if (count > max_vertices) {
        throw std::invalid_argument("q^n exceeds the eigenspace_basis vertex cap");
    }

    // Columns of the annihilator of U_{[lo,hi]}, one per delta function; the
    // kernel of this operator is exactly the interval space.
    RatMatrix matrix(count, std::vector<Rat>(count, Rat(0)));
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<Rat> delta(count, Rat(0));
        delta[v] = 1;
        HammingFunction g(interval.n, interval.q, std::move(delta));
        for (int k = interval.lo; k <= interval.hi; ++k) {
            g = adjacency_shift(g, eigenvalue(interval.n, interval.q, k));
        }
        for (std::uint64_t r = 0; r < count; ++r) matrix[r][v] = g.values()[r];
    }

    RatMatrix kernel = kernel_basis(std::move(matrix));
    std::vector<HammingFunction> basis;
    basis.reserve(kernel.size());
    for (auto& vec : kernel) {
        basis.emplace_back(interval.n, interval.q, std::move(vec));
    }
    return basis;
}

}  // namespace hameig
