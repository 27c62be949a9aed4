#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hameig/blocks.hpp"
#include "hameig/linalg.hpp"
#include "hameig/spectra.hpp"
#include "testutil.hpp"

using namespace hameig;

TEST_CASE("eigenvalue formula") {
    CHECK(eigenvalue(3, 2, 0) == 3);  // the degree of H(3,2)
    CHECK(eigenvalue(3, 3, 2) == 0);
    for (int m = 1; m <= 5; ++m) {
        CHECK(eigenvalue(3 * m + 1, 3, 2 * m + 1) == -1);
    }
    CHECK_THROWS_AS(eigenvalue(3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(eigenvalue(3, 3, -1), std::invalid_argument);
}

TEST_CASE("adjacency on constants multiplies by the degree") {
    const HammingFunction one(2, 3, std::vector<Rat>(9, Rat(1)));
    const auto image = apply_adjacency(one);
    for (const Rat& v : image.values()) CHECK(v == 4);
}

TEST_CASE("adjacency against a brute-force neighbor sum") {
    std::mt19937_64 rng(17);
    for (const auto& [n, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {2, 4}}) {
        const auto f = testutil::random_function(n, q, rng);
        const auto fast = apply_adjacency(f);
        for (Rank x = 0; x < f.num_vertices(); ++x) {
            Rat total(0);
            const Word w = unrank(x, n, q);
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < q; ++s) {
                    if (s == w.symbols[static_cast<std::size_t>(r)]) continue;
                    Word y = w;
                    y.symbols[static_cast<std::size_t>(r)] = s;
                    total += f.value(y);
                }
            }
            CHECK(fast.value(x) == total);
        }
    }
}

TEST_CASE("block eigenfunction facts") {
    CHECK(apply_adjacency(make_c(3, 0, 1)) == scale(make_c(3, 0, 1), Rat(-1)));
    CHECK(apply_adjacency(make_phi()).is_zero());  // lambda_2(3,3) = 0
    CHECK(is_eigenfunction(make_a(3, 1, 1), 1));
    CHECK_FALSE(is_eigenfunction(HammingFunction(2, 3), 0));  // zero function
    CHECK_FALSE(is_eigenfunction(HammingFunction(2, 3), 1));
    CHECK_FALSE(is_eigenfunction(make_e(3), 1));  // constants live at level 0
    CHECK(is_eigenfunction(make_e(3), 0));
}

TEST_CASE("interval membership via the annihilator") {
    CHECK(is_member(make_d(3, 0), {1, 3, 0, 1}));
    CHECK_FALSE(is_member(make_d(3, 0), {1, 3, 1, 1}));
    CHECK(is_member(HammingFunction(2, 3), {2, 3, 1, 1}));  // zero belongs everywhere
    std::mt19937_64 rng(19);
    const auto f = testutil::random_function(2, 3, rng);
    CHECK(is_member(f, {2, 3, 0, 2}));  // the whole space
    CHECK_THROWS_AS(is_member(f, {3, 3, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SpectrumInterval{2, 3, 2, 1}), std::invalid_argument);
}

TEST_CASE("decomposition of named functions") {
    SUBCASE("constant") {
        const HammingFunction one(2, 3, std::vector<Rat>(9, Rat(1)));
        const auto components = decompose(one);
        CHECK(components[0] == one);
        CHECK(components[1].is_zero());
        CHECK(components[2].is_zero());
    }
    SUBCASE("d splits into 1/3 plus the rest") {
        const auto components = decompose(make_d(3, 0));
        CHECK(components[0] == HammingFunction(1, 3, {Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
        CHECK(components[1] == HammingFunction(1, 3, {Rat(2, 3), Rat(-1, 3), Rat(-1, 3)}));
    }
    SUBCASE("phi is pure at level 2") {
        const auto components = decompose(make_phi());
        CHECK(components[0].is_zero());
        CHECK(components[1].is_zero());
        CHECK(components[2] == make_phi());
        CHECK(components[3].is_zero());
    }
}

TEST_CASE("projector identities on random functions") {
    std::mt19937_64 rng(23);
    for (const auto& [n, q] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        const auto f = testutil::random_function(n, q, rng);
        const auto components = decompose(f);

        HammingFunction total(n, q);
        for (int i = 0; i <= n; ++i) {
            total = add(total, components[static_cast<std::size_t>(i)]);
            // (A - lambda_i) kills the i-th component.
            CHECK(adjacency_shift(components[static_cast<std::size_t>(i)],
                                  eigenvalue(n, q, i))
                      .is_zero());
            // P_i is idempotent and orthogonal to the other projectors.
            const auto again = decompose(components[static_cast<std::size_t>(i)]);
            for (int k = 0; k <= n; ++k) {
                if (k == i) CHECK(again[static_cast<std::size_t>(k)] ==
                                  components[static_cast<std::size_t>(i)]);
                else CHECK(again[static_cast<std::size_t>(k)].is_zero());
            }
        }
        CHECK(total == f);
    }
}

TEST_CASE("membership agrees with the decomposition route") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3;
        const int q = trial % 2 == 0 ? 2 : 3;
        const auto f = testutil::random_function(n, q, rng);
        const auto components = decompose(f);
        for (int i = 0; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                bool outside_zero = true;
                for (int k = 0; k <= n; ++k) {
                    if (k >= i && k <= j) continue;
                    outside_zero =
                        outside_zero && components[static_cast<std::size_t>(k)].is_zero();
                }
                CHECK(is_member(f, {n, q, i, j}) == outside_zero);
            }
        }
    }
}

TEST_CASE("eigenspace bases have the expected dimensions") {
    // The closed form is background knowledge; the kernel computation is the
    // authority and the two must agree.
    SUBCASE("named examples") {
        CHECK(eigenspace_basis({2, 3, 0, 2}).size() == 9);
        CHECK(eigenspace_basis({2, 3, 1, 1}).size() == 4);
        CHECK(eigenspace_basis({3, 3, 2, 2}).size() == 12);
    }
    SUBCASE("grid n <= 3, q <= 4 plus n = 4, q <= 3") {
        for (const auto& [n, q] : {std::pair{1, 2}, {2, 2}, {3, 2}, {4, 2}, {1, 3},
                                   {2, 3},          {3, 3}, {4, 3}, {1, 4}, {2, 4},
                                   {3, 4}}) {
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const auto basis = eigenspace_basis({n, q, i, j});
                    CHECK(basis.size() == testutil::interval_dimension(n, q, i, j));
                    for (const auto& b : basis) CHECK(is_member(b, {n, q, i, j}));
                }
            }
        }
    }
    SUBCASE("n = 4, q = 4") {
        for (int i = 0; i <= 4; ++i) {
            for (int j = i; j <= 4; ++j) {
                CHECK(eigenspace_basis({4, 4, i, j}).size() ==
                      testutil::interval_dimension(4, 4, i, j));
            }
        }
    }
    CHECK_THROWS_AS(eigenspace_basis({4, 4, 0, 4}, 100), std::invalid_argument);
}

TEST_CASE("eigenspace bases are reproducible") {
    // pivot rule: first nonzero in column order, kernel vectors by ascending
    // free column with the free variable set to 1
    const auto basis = eigenspace_basis({1, 3, 1, 1});
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].values() == std::vector<Rat>{Rat(-1), Rat(1), Rat(0)});
    CHECK(basis[1].values() == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    for (int run = 0; run < 2; ++run) {
        const auto again = eigenspace_basis({3, 3, 1, 2});
        const auto reference = eigenspace_basis({3, 3, 1, 2});
        REQUIRE(again.size() == reference.size());
        for (std::size_t t = 0; t < again.size(); ++t) CHECK(again[t] == reference[t]);
    }
}

TEST_CASE("rref pivots and kernels are deterministic") {
    RatMatrix m = {{Rat(0), Rat(2), Rat(4)}, {Rat(1), Rat(1), Rat(1)}};
    const auto pivots = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m[0][0] == 1);
    CHECK(m[0][2] == -1);
    CHECK(m[1][2] == 2);
    const auto kernel = kernel_basis(RatMatrix{{Rat(1), Rat(2), Rat(3)}});
    REQUIRE(kernel.size() == 2);
    CHECK(kernel[0] == std::vector<Rat>{Rat(-2), Rat(1), Rat(0)});
    CHECK(kernel[1] == std::vector<Rat>{Rat(-3), Rat(0), Rat(1)});
}
