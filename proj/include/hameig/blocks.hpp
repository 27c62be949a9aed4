#pragma once

#include <vector>

#include "hameig/function.hpp"

namespace hameig {

/// The named building-block kinds. A and C take (k, m); D takes k; B is a
/// symmetry image of phi and takes the permutations; Phi1 and E take nothing
/// beyond q.
enum class BlockKind { A, B, Phi1, C, D, E };

struct BlockSpec {
    BlockKind kind;
    int q = 3;
    int k = 0;
    int m = 0;
    // B only: pi is a permutation of {1,2,3} (pi[t-1] = pi(t)); sigmas are
    // three symbol permutations of {0,1,2} given as image tables.
    std::vector<int> pi;
    std::vector<std::vector<int>> sigmas;
};

/// Coordinates a block consumes inside a product: A and Phi1 use 2, B uses 3,
/// C/D/E use 1.
int block_arity(BlockKind kind);

HammingFunction make_block(const BlockSpec& spec);

/// a_{q,k,m} on H(2,q): +1 where x=k, y!=m; -1 where y=m, x!=k; 0 elsewhere.
/// Support 2(q-1); lies in U_1(2,q).
HammingFunction make_a(int q, int k, int m);

/// phi_1 on H(2,3): +1 at (0,0), -1 at (1,2), 0 elsewhere.
HammingFunction make_phi1();

/// phi on H(3,3): the z-slice shifts of phi_1 under addition mod 3.
/// Support 6; lies in U_2(3,3).
HammingFunction make_phi();

/// c_{q,k,m} on H(1,q): +1 at k, -1 at m (k != m). Support 2; in U_1(1,q).
HammingFunction make_c(int q, int k, int m);

/// d_{q,k} on H(1,q): indicator of k. Support 1; in U_{[0,1]}(1,q).
HammingFunction make_d(int q, int k);

/// e_q on H(1,q): the all-ones function. Support q; in U_0(1,q).
HammingFunction make_e(int q);

/// (f1.f2)(x,y) = f1(x) f2(y) on the concatenated coordinates. Supports
/// multiply; levels add (U_i x U_j -> U_{i+j}).
HammingFunction tensor_product(const HammingFunction& f1, const HammingFunction& f2);

/// f_{pi,sigma_1..sigma_n}(x_1..x_n) = f(sigma_1(x_{pi(1)}), ..., sigma_n(x_{pi(n)})).
/// pi is 1-indexed (pi[t-1] = pi(t)); each sigma is an image table on the
/// alphabet. This is the automorphism action: it preserves support size and
/// spectral interval.
HammingFunction symmetry_apply(const HammingFunction& f, const std::vector<int>& pi,
                               const std::vector<std::vector<int>>& sigmas);

/// All symmetry images of phi, deduplicated as functions. The canonical
/// block set for the q=3 families.
std::vector<HammingFunction> enumerate_B();

}  // namespace hameig
