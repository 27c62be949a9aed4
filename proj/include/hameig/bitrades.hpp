#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hameig/function.hpp"

namespace hameig {

/// An ordered pair of disjoint nonempty vertex sets. (T0, T1) is a 1-perfect
/// bitrade when every closed ball B(x) contains one vertex of each set or
/// none. Sets are kept as sorted rank lists.
struct Bitrade {
    int n;
    int q;
    std::vector<Rank> t0;
    std::vector<Rank> t1;

    std::uint64_t size() const { return t0.size() + t1.size(); }
};

struct BitradeVerdict {
    bool valid = false;
    bool nonempty = false;
    bool disjoint = false;
    bool sizes_equal = false;
    bool balls_ok = false;     // the defining closed-ball condition
    bool independent = false;  // no edge inside T0 or inside T1
    bool matching = false;     // T0 u T1 induces a perfect matching
    std::optional<Rank> counterexample;
    std::string reason;
    std::uint64_t size = 0;
};

/// Full check of the definition plus the structural consequences
/// (independence, equal sizes, induced perfect matching). The verdict
/// carries a violated vertex when the ball condition fails.
BitradeVerdict verify_bitrade(const Bitrade& b);

/// The +-1 indicator f_{(T0,T1)} of a verified bitrade; it satisfies
/// Af = -f, and |T0| + |T1| equals its support size. Throws on an invalid
/// bitrade.
HammingFunction to_eigenfunction(const Bitrade& b);

/// Level-set pair T0 = {f = c}, T1 = {f = -c} of a function whose values all
/// lie in {0, c, -c}. The result is not verified; run verify_bitrade on it.
Bitrade from_level_sets(const HammingFunction& f, const Rat& c);

bool is_prime_power(int q);

enum class BitradeExistence { Exists, NotExists, NotEstablished };

/// For prime-power q: H(n,q) has a 1-perfect bitrade iff n = qm+1 with
/// m >= 1 (the -1 eigenvalue condition). For other q the criterion is not
/// established and that is reported rather than guessed.
BitradeExistence exists_bitrade(int n, int q);

/// The minimum-size 1-perfect bitrade in H(3m+1, 3): the level sets of the
/// m-fold phi product times one c block, of size exactly 2^(m+1) 3^m.
/// Verified before returning.
Bitrade minimal_bitrade_q3(int m, std::uint64_t max_vertices = HammingFunction::kDenseCap);

/// Bitrade document: {"n":..., "q":..., "T0":[words], "T1":[words]}.
nlohmann::ordered_json bitrade_to_json(const Bitrade& b);
Bitrade bitrade_from_json(const nlohmann::json& doc);

}  // namespace hameig
