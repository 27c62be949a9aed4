#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hameig/blocks.hpp"

namespace hameig {

/// The four product families that attain the minimum support in their
/// parameter regimes:
///   F1: q=2, i+j <= n   (i copies of a, n-i-j of e, j-i of d)
///   F2: q=2, i+j > n    (n-j of a, i+j-n of c, j-i of d)
///   F3: q=3, i+j > n, i/2+j <= n  (2n-i-2j of a, i+j-n of B, j-i of d)
///   F4: q=3, i/2+j > n  (n-j of B, i+2j-2n of c, j-i of d)
enum class Family { F1, F2, F3, F4 };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

int family_q(Family family);

struct SlotCounts {
    int g = 0;  // first slot kind
    int h = 0;  // second slot kind
    int v = 0;  // d blocks
};

/// Per-family block kinds for the g/h slots (v is always D).
BlockKind g_kind(Family family);
BlockKind h_kind(Family family);

/// Slot counts for a valid (family, n, i, j); throws if the parameters fall
/// outside the family's regime. The consumed coordinates always total n.
SlotCounts slot_counts(Family family, int n, int i, int j);

struct FamilySpec {
    Family family;
    int n;
    int i;
    int j;
    Rat c = Rat(1);
    // Explicit block choices per slot; empty vectors mean the canonical
    // defaults (a_{q,0,0}, phi, c_{q,0,1}, d_{q,0}).
    std::vector<BlockSpec> g;
    std::vector<BlockSpec> h;
    std::vector<BlockSpec> v;
};

/// Tensor product over consecutive coordinates in slot order (all g blocks,
/// then h, then v), scaled by c.
HammingFunction construct(const FamilySpec& spec);

/// Closed-form support of any member of the family:
///   F1: 2^(n-j)   F2: 2^i   F3: 2^(3(n-j)-i) 3^(i+j-n)   F4: 2^(i+j-n) 3^(n-j)
Int expected_support(Family family, int n, int i, int j);

enum class Regime { F1, F2, F3, F4, PriorWork };

std::string to_string(Regime regime);

/// Which family covers (n,q,i,j). q=3 with i+j <= n is covered by the prior
/// product bound, not by a family constructed here; q must be 2 or 3.
Regime regime(int n, int q, int i, int j);

/// Fills every slot with reproducibly random valid block parameters.
FamilySpec random_spec(Family family, int n, int i, int j, std::uint64_t seed);

}  // namespace hameig
