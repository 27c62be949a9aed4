#include "hameig/blocks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hameig {

int block_arity(BlockKind kind) {
    switch (kind) {
        case BlockKind::A:
        case BlockKind::Phi1:
            return 2;
        case BlockKind::B:
            return 3;
        case BlockKind::C:
        case BlockKind::D:
        case BlockKind::E:
            return 1;
    }
    throw std::logic_error("unreachable");
}

HammingFunction make_a(int q, int k, int m) {
    if (q < 2) throw std::invalid_argument("a block needs q >= 2");
    if (k < 0 || k >= q || m < 0 || m >= q) {
        throw std::invalid_argument("a block parameters must lie in the alphabet");
    }
    std::vector<Rat> values(static_cast<std::size_t>(q) * q, Rat(0));
    for (int x = 0; x < q; ++x) {
        for (int y = 0; y < q; ++y) {
            Rat& v = values[static_cast<std::size_t>(x) * q + y];
            if (x == k && y != m) v = 1;
            else if (y == m && x != k) v = -1;
        }
    }
    return HammingFunction(2, q, std::move(values));
}

HammingFunction make_phi1() {
    std::vector<Rat> values(9, Rat(0));
    values[0 * 3 + 0] = 1;
    values[1 * 3 + 2] = -1;
    return HammingFunction(2, 3, std::move(values));
}

HammingFunction make_phi() {
    const HammingFunction phi1 = make_phi1();
    std::vector<Rat> values(27, Rat(0));
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            for (int z = 0; z < 3; ++z) {
                const int xs = (x + z) % 3;
                const int ys = (y + z) % 3;
                values[static_cast<std::size_t>(x) * 9 + static_cast<std::size_t>(y) * 3 + z] =
                    phi1.values()[static_cast<std::size_t>(xs) * 3 + ys];
            }
        }
    }
    return HammingFunction(3, 3, std::move(values));
}

HammingFunction make_c(int q, int k, int m) {
    if (q < 2) throw std::invalid_argument("c block needs q >= 2");
    if (k < 0 || k >= q || m < 0 || m >= q) {
        throw std::invalid_argument("c block parameters must lie in the alphabet");
    }
    if (k == m) throw std::invalid_argument("c block requires k != m");
    std::vector<Rat> values(static_cast<std::size_t>(q), Rat(0));
    values[static_cast<std::size_t>(k)] = 1;
    values[static_cast<std::size_t>(m)] = -1;
    return HammingFunction(1, q, std::move(values));
}

HammingFunction make_d(int q, int k) {
    if (q < 2) throw std::invalid_argument("d block needs q >= 2");
    if (k < 0 || k >= q) throw std::invalid_argument("d block parameter must lie in the alphabet");
    std::vector<Rat> values(static_cast<std::size_t>(q), Rat(0));
    values[static_cast<std::size_t>(k)] = 1;
    return HammingFunction(1, q, std::move(values));
}

HammingFunction make_e(int q) {
    if (q < 2) throw std::invalid_argument("e block needs q >= 2");
    return HammingFunction(1, q, std::vector<Rat>(static_cast<std::size_t>(q), Rat(1)));
}

namespace {

std::vector<int> identity_pi(int n) {
    std::vector<int> pi(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) pi[static_cast<std::size_t>(t - 1)] = t;
    return pi;
}

std::vector<std::vector<int>> identity_sigmas(int n, int q) {
    std::vector<int> id(static_cast<std::size_t>(q));
    for (int s = 0; s < q; ++s) id[static_cast<std::size_t>(s)] = s;
    return std::vector<std::vector<int>>(static_cast<std::size_t>(n), id);
}

void validate_perm_1indexed(const std::vector<int>& pi, int n) {
    if (static_cast<int>(pi.size()) != n) throw std::invalid_argument("permutation size != n");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : pi) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation of 1..n");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

void validate_symbol_perm(const std::vector<int>& sigma, int q) {
    if (static_cast<int>(sigma.size()) != q) throw std::invalid_argument("symbol table size != q");
    std::vector<bool> seen(static_cast<std::size_t>(q), false);
    for (int v : sigma) {
        if (v < 0 || v >= q || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of the alphabet");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

HammingFunction make_block(const BlockSpec& spec) {
    switch (spec.kind) {
        case BlockKind::A:
            return make_a(spec.q, spec.k, spec.m);
        case BlockKind::Phi1:
            if (spec.q != 3) throw std::invalid_argument("phi_1 is defined for q = 3 only");
            return make_phi1();
        case BlockKind::B: {
            if (spec.q != 3) throw std::invalid_argument("B blocks are defined for q = 3 only");
            const auto pi = spec.pi.empty() ? identity_pi(3) : spec.pi;
            const auto sigmas = spec.sigmas.empty() ? identity_sigmas(3, 3) : spec.sigmas;
            return symmetry_apply(make_phi(), pi, sigmas);
        }
        case BlockKind::C:
            return make_c(spec.q, spec.k, spec.m);
        case BlockKind::D:
            return make_d(spec.q, spec.k);
        case BlockKind::E:
            return make_e(spec.q);
    }
    throw std::logic_error("unreachable");
}

HammingFunction tensor_product(const HammingFunction& f1, const HammingFunction& f2) {
    if (f1.q() != f2.q()) throw std::invalid_argument("tensor factors must share q");
    const int n = f1.n() + f2.n();
    const std::uint64_t count2 = f2.num_vertices();
    std::vector<Rat> values;
    values.reserve(f1.num_vertices() * count2);
    for (const Rat& v1 : f1.values()) {
        for (const Rat& v2 : f2.values()) values.push_back(v1 * v2);
    }
    (void)count2;
    return HammingFunction(n, f1.q(), std::move(values));
}

HammingFunction symmetry_apply(const HammingFunction& f, const std::vector<int>& pi,
                               const std::vector<std::vector<int>>& sigmas) {
    const int n = f.n();
    const int q = f.q();
    validate_perm_1indexed(pi, n);
    if (static_cast<int>(sigmas.size()) != n) {
        throw std::invalid_argument("need one symbol permutation per coordinate");
    }
    for (const auto& sigma : sigmas) validate_symbol_perm(sigma, q);

    const std::uint64_t count = f.num_vertices();
    std::vector<Rat> values(count);
    std::vector<int> x(static_cast<std::size_t>(n)), arg(static_cast<std::size_t>(n));
    for (std::uint64_t r = 0; r < count; ++r) {
        std::uint64_t rem = r;
        for (int t = n - 1; t >= 0; --t) {
            x[static_cast<std::size_t>(t)] = static_cast<int>(rem % static_cast<std::uint64_t>(q));
            rem /= static_cast<std::uint64_t>(q);
        }
        for (int t = 0; t < n; ++t) {
            const int src = pi[static_cast<std::size_t>(t)] - 1;
            arg[static_cast<std::size_t>(t)] =
                sigmas[static_cast<std::size_t>(t)][static_cast<std::size_t>(x[static_cast<std::size_t>(src)])];
        }
        std::uint64_t arg_rank = 0;
        for (int t = 0; t < n; ++t) {
            arg_rank = arg_rank * static_cast<std::uint64_t>(q) +
                       static_cast<std::uint64_t>(arg[static_cast<std::size_t>(t)]);
        }
        values[r] = f.values()[arg_rank];
    }
    return HammingFunction(n, q, std::move(values));
}

std::vector<HammingFunction> enumerate_B() {
    const HammingFunction phi = make_phi();
    std::vector<std::vector<int>> coord_perms;
    {
        std::vector<int> p = {1, 2, 3};
        do {
            coord_perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<std::vector<int>> symbol_perms;
    {
        std::vector<int> s = {0, 1, 2};
        do {
            symbol_perms.push_back(s);
        } while (std::next_permutation(s.begin(), s.end()));
    }

    std::set<std::vector<Rat>> seen;
    std::vector<HammingFunction> out;
    for (const auto& pi : coord_perms) {
        for (const auto& s1 : symbol_perms) {
            for (const auto& s2 : symbol_perms) {
                for (const auto& s3 : symbol_perms) {
                    HammingFunction g = symmetry_apply(phi, pi, {s1, s2, s3});
                    if (seen.insert(g.values()).second) out.push_back(std::move(g));
                }
            }
        }
    }
    return out;
}

}  // namespace hameig
