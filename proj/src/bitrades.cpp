#include "hameig/bitrades.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "hameig/families.hpp"
#include "hameig/spectra.hpp"

namespace hameig {

namespace {

// Signed membership table: +1 for T0, -1 for T1, 0 otherwise. Throws on
// out-of-range ranks or overlap.
std::vector<int> membership_table(const Bitrade& b, std::uint64_t count) {
    std::vector<int> table(count, 0);
    for (Rank r : b.t0) {
        if (r >= count) throw std::invalid_argument("T0 rank out of range");
        if (table[r] != 0) throw std::invalid_argument("duplicate vertex in T0");
        table[r] = 1;
    }
    for (Rank r : b.t1) {
        if (r >= count) throw std::invalid_argument("T1 rank out of range");
        if (table[r] == -1) throw std::invalid_argument("duplicate vertex in T1");
        if (table[r] == 1) return {};  // overlap, reported by the caller
        table[r] = -1;
    }
    return table;
}

template <typename Visit>
void for_each_neighbor(Rank x, int n, int q, Visit visit) {
    std::uint64_t stride = 1;
    for (int d0 = n - 1; d0 >= 0; --d0) {
        const int sym = static_cast<int>((x / stride) % static_cast<std::uint64_t>(q));
        const Rank base = x - static_cast<Rank>(sym) * stride;
        for (int s = 0; s < q; ++s) {
            if (s == sym) continue;
            visit(base + static_cast<Rank>(s) * stride);
        }
        stride *= static_cast<std::uint64_t>(q);
    }
}

}  // namespace

BitradeVerdict verify_bitrade(const Bitrade& b) {
    BitradeVerdict verdict;
    verdict.size = b.size();
    const std::uint64_t count = vertex_count(b.n, b.q);

    verdict.nonempty = !b.t0.empty() && !b.t1.empty();
    if (!verdict.nonempty) {
        verdict.reason = "T0 and T1 must both be nonempty";
        return verdict;
    }

    std::vector<int> table = membership_table(b, count);
    verdict.disjoint = !table.empty();
    if (!verdict.disjoint) {
        verdict.reason = "T0 and T1 intersect";
        return verdict;
    }
    verdict.sizes_equal = b.t0.size() == b.t1.size();

    verdict.balls_ok = true;
    for (Rank x = 0; x < count && verdict.balls_ok; ++x) {
        int from_t0 = table[x] == 1 ? 1 : 0;
        int from_t1 = table[x] == -1 ? 1 : 0;
        for_each_neighbor(x, b.n, b.q, [&](Rank y) {
            if (table[y] == 1) ++from_t0;
            else if (table[y] == -1) ++from_t1;
        });
        const bool ok = (from_t0 == 1 && from_t1 == 1) || (from_t0 == 0 && from_t1 == 0);
        if (!ok) {
            verdict.balls_ok = false;
            verdict.counterexample = x;
            verdict.reason = "ball at " + word_to_string(unrank(x, b.n, b.q)) + " contains " +
                             std::to_string(from_t0) + " from T0 and " + std::to_string(from_t1) +
                             " from T1";
        }
    }

    verdict.independent = true;
    verdict.matching = true;
    for (Rank x = 0; x < count && verdict.independent && verdict.matching; ++x) {
        if (table[x] == 0) continue;
        int same = 0, other = 0;
        for_each_neighbor(x, b.n, b.q, [&](Rank y) {
            if (table[y] == 0) return;
            if (table[y] == table[x]) ++same;
            else ++other;
        });
        if (same != 0) {
            verdict.independent = false;
            if (!verdict.counterexample) verdict.counterexample = x;
            if (verdict.reason.empty()) {
                verdict.reason = "edge inside one part at " + word_to_string(unrank(x, b.n, b.q));
            }
        } else if (other != 1) {
            verdict.matching = false;
            if (!verdict.counterexample) verdict.counterexample = x;
            if (verdict.reason.empty()) {
                verdict.reason = "vertex " + word_to_string(unrank(x, b.n, b.q)) + " has " +
                                 std::to_string(other) + " partners across the parts";
            }
        }
    }

    verdict.valid = verdict.nonempty && verdict.disjoint && verdict.sizes_equal &&
                    verdict.balls_ok && verdict.independent && verdict.matching;
    if (verdict.valid) verdict.reason = "valid 1-perfect bitrade";
    return verdict;
}

HammingFunction to_eigenfunction(const Bitrade& b) {
    const BitradeVerdict verdict = verify_bitrade(b);
    if (!verdict.valid) {
        throw std::invalid_argument("not a 1-perfect bitrade: " + verdict.reason);
    }
    HammingFunction zero(b.n, b.q);
    std::vector<Rat> values(zero.values());
    for (Rank r : b.t0) values[r] = 1;
    for (Rank r : b.t1) values[r] = -1;
    return HammingFunction(b.n, b.q, std::move(values));
}

Bitrade from_level_sets(const HammingFunction& f, const Rat& c) {
    if (c == 0) throw std::invalid_argument("level constant c must be nonzero");
    Bitrade b;
    b.n = f.n();
    b.q = f.q();
    const Rat neg = -c;
    for (Rank r = 0; r < f.num_vertices(); ++r) {
        const Rat& v = f.values()[r];
        if (v == 0) continue;
        if (v == c) b.t0.push_back(r);
        else if (v == neg) b.t1.push_back(r);
        else {
            throw std::invalid_argument("value at " + word_to_string(unrank(r, b.n, b.q)) +
                                        " is outside {0, c, -c}");
        }
    }
    return b;
}

bool is_prime_power(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            int rest = q;
            while (rest % p == 0) rest /= p;
            return rest == 1;
        }
    }
    return true;  // q itself is prime
}

BitradeExistence exists_bitrade(int n, int q) {
    if (n < 1 || q < 2) throw std::invalid_argument("need n >= 1 and q >= 2");
    if (!is_prime_power(q)) return BitradeExistence::NotEstablished;
    return (n >= q + 1 && (n - 1) % q == 0) ? BitradeExistence::Exists
                                            : BitradeExistence::NotExists;
}

Bitrade minimal_bitrade_q3(int m, std::uint64_t max_vertices) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const int n = 3 * m + 1;
    if (vertex_count(n, 3) > max_vertices) {
        throw std::invalid_argument("3^(3m+1) exceeds the vertex cap");
    }
    FamilySpec spec;
    spec.family = Family::F4;
    spec.n = n;
    spec.i = 2 * m + 1;
    spec.j = 2 * m + 1;
    const HammingFunction f = construct(spec);
    Bitrade b = from_level_sets(f, Rat(1));
    const BitradeVerdict verdict = verify_bitrade(b);
    if (!verdict.valid) {
        throw std::logic_error("construction failed verification: " + verdict.reason);
    }
    return b;
}

nlohmann::ordered_json bitrade_to_json(const Bitrade& b) {
    nlohmann::ordered_json doc;
    doc["n"] = b.n;
    doc["q"] = b.q;
    auto words = [&](const std::vector<Rank>& part) {
        auto arr = nlohmann::ordered_json::array();
        for (Rank r : part) arr.push_back(word_to_string(unrank(r, b.n, b.q)));
        return arr;
    };
    doc["T0"] = words(b.t0);
    doc["T1"] = words(b.t1);
    return doc;
}

Bitrade bitrade_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("q") || !doc.contains("T0") ||
        !doc.contains("T1")) {
        throw std::invalid_argument("bitrade document needs n, q, T0 and T1");
    }
    Bitrade b;
    b.n = doc["n"].get<int>();
    b.q = doc["q"].get<int>();
    if (b.n < 1 || b.q < 2 || b.q > 10) {
        throw std::invalid_argument("bitrade document needs n >= 1 and 2 <= q <= 10");
    }
    auto parse_part = [&](const nlohmann::json& arr, std::vector<Rank>& part) {
        if (!arr.is_array()) throw std::invalid_argument("T0/T1 must be arrays of words");
        std::set<Rank> seen;
        for (const auto& w : arr) {
            if (!w.is_string()) throw std::invalid_argument("T0/T1 entries must be words");
            const std::string text = w.get<std::string>();
            if (static_cast<int>(text.size()) != b.n) {
                throw std::invalid_argument("word '" + text + "' has length != n");
            }
            const Rank r = rank_of(word_from_string(text, b.q), b.q);
            if (!seen.insert(r).second) throw std::invalid_argument("duplicate word '" + text + "'");
            part.push_back(r);
        }
        std::sort(part.begin(), part.end());
    };
    parse_part(doc["T0"], b.t0);
    parse_part(doc["T1"], b.t1);
    return b;
}

}  // namespace hameig
