#include "hameig/families.hpp"

#include <random>
#include <stdexcept>

namespace hameig {

std::string to_string(Family family) {
    switch (family) {
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
        case Family::F4: return "F4";
    }
    throw std::logic_error("unreachable");
}

Family family_from_string(const std::string& name) {
    if (name == "F1") return Family::F1;
    if (name == "F2") return Family::F2;
    if (name == "F3") return Family::F3;
    if (name == "F4") return Family::F4;
    throw std::invalid_argument("unknown family '" + name + "'");
}

int family_q(Family family) {
    return (family == Family::F1 || family == Family::F2) ? 2 : 3;
}

BlockKind g_kind(Family family) {
    return family == Family::F4 ? BlockKind::B : BlockKind::A;
}

BlockKind h_kind(Family family) {
    switch (family) {
        case Family::F1: return BlockKind::E;
        case Family::F2: return BlockKind::C;
        case Family::F3: return BlockKind::B;
        case Family::F4: return BlockKind::C;
    }
    throw std::logic_error("unreachable");
}

SlotCounts slot_counts(Family family, int n, int i, int j) {
    if (n < 1 || i < 0 || i > j || j > n) {
        throw std::invalid_argument("need n >= 1 and 0 <= i <= j <= n");
    }
    SlotCounts counts;
    switch (family) {
        case Family::F1:
            if (i + j > n) throw std::invalid_argument("F1 requires i+j <= n");
            counts = {i, n - i - j, j - i};
            break;
        case Family::F2:
            if (i + j <= n) throw std::invalid_argument("F2 requires i+j > n");
            counts = {n - j, i + j - n, j - i};
            break;
        case Family::F3:
            if (i + j <= n) throw std::invalid_argument("F3 requires i+j > n");
            if (i + 2 * j > 2 * n) throw std::invalid_argument("F3 requires i/2+j <= n");
            counts = {2 * n - i - 2 * j, i + j - n, j - i};
            break;
        case Family::F4:
            if (i + 2 * j <= 2 * n) throw std::invalid_argument("F4 requires i/2+j > n");
            counts = {n - j, i + 2 * j - 2 * n, j - i};
            break;
    }
    return counts;
}

namespace {

BlockSpec canonical_block(BlockKind kind, int q) {
    BlockSpec spec;
    spec.kind = kind;
    spec.q = q;
    if (kind == BlockKind::C) {
        spec.k = 0;
        spec.m = 1;
    }
    return spec;
}

void check_slot(const BlockSpec& spec, BlockKind kind, int q, const char* slot) {
    if (spec.kind != kind) {
        throw std::invalid_argument(std::string("wrong block kind in slot ") + slot);
    }
    if (spec.q != q) {
        throw std::invalid_argument(std::string("wrong block alphabet in slot ") + slot);
    }
}

}  // namespace

HammingFunction construct(const FamilySpec& spec) {
    if (spec.c == 0) throw std::invalid_argument("scale c must be nonzero");
    const int q = family_q(spec.family);
    const SlotCounts counts = slot_counts(spec.family, spec.n, spec.i, spec.j);

    std::vector<BlockSpec> blocks;
    auto fill = [&](const std::vector<BlockSpec>& given, BlockKind kind, int count,
                    const char* slot) {
        if (!given.empty() && static_cast<int>(given.size()) != count) {
            throw std::invalid_argument(std::string("wrong number of blocks in slot ") + slot);
        }
        for (int t = 0; t < count; ++t) {
            BlockSpec b = given.empty() ? canonical_block(kind, q) : given[static_cast<std::size_t>(t)];
            check_slot(b, kind, q, slot);
            blocks.push_back(std::move(b));
        }
    };
    fill(spec.g, g_kind(spec.family), counts.g, "g");
    fill(spec.h, h_kind(spec.family), counts.h, "h");
    fill(spec.v, BlockKind::D, counts.v, "v");

    HammingFunction f = make_block(blocks.front());
    for (std::size_t t = 1; t < blocks.size(); ++t) {
        f = tensor_product(f, make_block(blocks[t]));
    }
    if (f.n() != spec.n) throw std::logic_error("slot arities do not total n");
    return spec.c == 1 ? f : scale(f, spec.c);
}

Int expected_support(Family family, int n, int i, int j) {
    slot_counts(family, n, i, j);  // regime validation
    Int value;
    switch (family) {
        case Family::F1:
            mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(n - j));
            break;
        case Family::F2:
            mpz_ui_pow_ui(value.get_mpz_t(), 2, static_cast<unsigned long>(i));
            break;
        case Family::F3: {
            Int p2, p3;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(3 * (n - j) - i));
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(i + j - n));
            value = p2 * p3;
            break;
        }
        case Family::F4: {
            Int p2, p3;
            mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(i + j - n));
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(n - j));
            value = p2 * p3;
            break;
        }
    }
    return value;
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::F1: return "F1";
        case Regime::F2: return "F2";
        case Regime::F3: return "F3";
        case Regime::F4: return "F4";
        case Regime::PriorWork: return "prior-work";
    }
    throw std::logic_error("unreachable");
}

Regime regime(int n, int q, int i, int j) {
    if (n < 1 || i < 0 || i > j || j > n) {
        throw std::invalid_argument("need n >= 1 and 0 <= i <= j <= n");
    }
    if (q == 2) return (i + j <= n) ? Regime::F1 : Regime::F2;
    if (q == 3) {
        if (i + j <= n) return Regime::PriorWork;
        return (i + 2 * j <= 2 * n) ? Regime::F3 : Regime::F4;
    }
    throw std::invalid_argument("regime dispatch covers q in {2,3} only");
}

FamilySpec random_spec(Family family, int n, int i, int j, std::uint64_t seed) {
    const int q = family_q(family);
    const SlotCounts counts = slot_counts(family, n, i, j);
    std::mt19937_64 rng(seed);
    auto uniform = [&](int bound) {
        return static_cast<int>(std::uniform_int_distribution<int>(0, bound - 1)(rng));
    };
    auto random_block = [&](BlockKind kind) {
        BlockSpec spec;
        spec.kind = kind;
        spec.q = q;
        switch (kind) {
            case BlockKind::A:
                spec.k = uniform(q);
                spec.m = uniform(q);
                break;
            case BlockKind::C:
                spec.k = uniform(q);
                spec.m = uniform(q - 1);
                if (spec.m >= spec.k) ++spec.m;
                break;
            case BlockKind::D:
                spec.k = uniform(q);
                break;
            case BlockKind::B: {
                spec.pi = {1, 2, 3};
                for (int t = 2; t >= 1; --t) std::swap(spec.pi[static_cast<std::size_t>(t)],
                                                       spec.pi[static_cast<std::size_t>(uniform(t + 1))]);
                for (int s = 0; s < 3; ++s) {
                    std::vector<int> sigma = {0, 1, 2};
                    for (int t = 2; t >= 1; --t) std::swap(sigma[static_cast<std::size_t>(t)],
                                                           sigma[static_cast<std::size_t>(uniform(t + 1))]);
                    spec.sigmas.push_back(std::move(sigma));
                }
                break;
            }
            case BlockKind::E:
            case BlockKind::Phi1:
                break;
        }
        return spec;
    };

    FamilySpec spec;
    spec.family = family;
    spec.n = n;
    spec.i = i;
    spec.j = j;
    for (int t = 0; t < counts.g; ++t) spec.g.push_back(random_block(g_kind(family)));
    for (int t = 0; t < counts.h; ++t) spec.h.push_back(random_block(h_kind(family)));
    for (int t = 0; t < counts.v; ++t) spec.v.push_back(random_block(BlockKind::D));
    return spec;
}

}  // namespace hameig
