#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hameig/blocks.hpp"
#include "hameig/spectra.hpp"
#include "testutil.hpp"

using namespace hameig;

namespace {

Rat at(const HammingFunction& f, std::initializer_list<int> symbols) {
    return f.value(Word{std::vector<int>(symbols)});
}

}  // namespace

TEST_CASE("a blocks match the three-case definition") {
    SUBCASE("q = 2") {
        const auto a = make_a(2, 0, 0);
        CHECK(at(a, {0, 1}) == 1);
        CHECK(at(a, {1, 0}) == -1);
        CHECK(at(a, {0, 0}) == 0);
        CHECK(at(a, {1, 1}) == 0);
    }
    SUBCASE("q = 3, k = m = 1") {
        const auto a = make_a(3, 1, 1);
        CHECK(at(a, {1, 0}) == 1);
        CHECK(at(a, {1, 2}) == 1);
        CHECK(at(a, {0, 1}) == -1);
        CHECK(at(a, {2, 1}) == -1);
        CHECK(a.support_size() == 4);
    }
    SUBCASE("support and membership for q = 2, 3, 4") {
        for (int q = 2; q <= 4; ++q) {
            for (int k = 0; k < q; ++k) {
                for (int m = 0; m < q; ++m) {
                    const auto a = make_a(q, k, m);
                    CHECK(a.support_size() == static_cast<std::uint64_t>(2 * (q - 1)));
                    CHECK(is_eigenfunction(a, 1));
                }
            }
        }
    }
    CHECK_THROWS_AS(make_a(3, 3, 0), std::invalid_argument);
}

TEST_CASE("phi has the six-vertex support from the slice definition") {
    const auto phi = make_phi();
    CHECK(at(phi, {0, 0, 0}) == 1);
    CHECK(at(phi, {1, 2, 0}) == -1);
    CHECK(at(phi, {2, 2, 1}) == 1);
    CHECK(at(phi, {0, 1, 1}) == -1);
    CHECK(at(phi, {1, 1, 2}) == 1);
    CHECK(at(phi, {2, 0, 2}) == -1);
    // phi(1,1,1) = phi_1(1+1, 1+1) = phi_1(2,2) = 0.
    CHECK(at(phi, {1, 1, 1}) == 0);
    CHECK(phi.support_size() == 6);

    Rat total(0);
    for (const Rat& v : phi.values()) total += v;
    CHECK(total == 0);

    CHECK(is_eigenfunction(phi, 2));
    CHECK(is_member(phi, {3, 3, 2, 2}));
}

TEST_CASE("c, d, e blocks") {
    CHECK(make_c(3, 0, 1).values() == std::vector<Rat>{Rat(1), Rat(-1), Rat(0)});
    CHECK(make_d(3, 0).values() == std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
    CHECK(make_e(3).values() == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
    for (int q = 2; q <= 4; ++q) {
        CHECK(make_c(q, 0, 1).support_size() == 2);
        CHECK(make_d(q, 0).support_size() == 1);
        CHECK(make_e(q).support_size() == static_cast<std::uint64_t>(q));
        CHECK(is_eigenfunction(make_c(q, 0, 1), 1));
        CHECK(is_member(make_d(q, 0), {1, q, 0, 1}));
        CHECK(is_eigenfunction(make_e(q), 0));
    }
    CHECK_THROWS_AS(make_c(3, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_d(3, 3), std::invalid_argument);
}

TEST_CASE("tensor product values, supports and levels") {
    const auto e2 = tensor_product(make_e(3), make_e(3));
    for (const Rat& v : e2.values()) CHECK(v == 1);

    const auto cc = tensor_product(make_c(3, 0, 1), make_c(3, 0, 1));
    CHECK(cc.support_size() == 4);
    CHECK(is_member(cc, {2, 3, 2, 2}));

    const auto aphi = tensor_product(make_a(3, 0, 0), make_phi());
    CHECK(aphi.n() == 5);
    CHECK(aphi.support_size() == 24);
    CHECK(is_member(aphi, {5, 3, 3, 3}));

    CHECK_THROWS_AS(tensor_product(make_e(2), make_e(3)), std::invalid_argument);
}

TEST_CASE("tensor product support is multiplicative on random functions") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f1 = testutil::random_function(2, 3, rng, 1);
        const auto f2 = testutil::random_function(1, 3, rng, 1);
        CHECK(tensor_product(f1, f2).support_size() ==
              f1.support_size() * f2.support_size());
    }
}

TEST_CASE("tensor product of pure levels lands at the level sum") {
    std::mt19937_64 rng(37);
    int pairs = 0;
    while (pairs < 30) {
        const int q = pairs % 2 == 0 ? 2 : 3;
        const auto comp1 = decompose(testutil::random_function(2, q, rng));
        const auto comp2 = decompose(testutil::random_function(2, q, rng));
        std::uniform_int_distribution<int> level(0, 2);
        const int i = level(rng);
        const int j = level(rng);
        if (comp1[static_cast<std::size_t>(i)].is_zero() ||
            comp2[static_cast<std::size_t>(j)].is_zero()) {
            continue;
        }
        ++pairs;
        CHECK(is_member(tensor_product(comp1[static_cast<std::size_t>(i)],
                                       comp2[static_cast<std::size_t>(j)]),
                        {4, q, i + j, i + j}));
    }
}

TEST_CASE("symmetry action") {
    const auto phi = make_phi();
    SUBCASE("identity leaves functions unchanged") {
        CHECK(symmetry_apply(phi, {1, 2, 3},
                             {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}) == phi);
    }
    SUBCASE("support is preserved") {
        std::mt19937_64 rng(41);
        std::vector<std::vector<int>> perms3 = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2},
                                                {2, 1, 3}, {1, 3, 2}, {3, 2, 1}};
        std::vector<std::vector<int>> sym3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                              {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        std::uniform_int_distribution<std::size_t> pick(0, 5);
        for (int trial = 0; trial < 25; ++trial) {
            const auto g = symmetry_apply(
                phi, perms3[pick(rng)], {sym3[pick(rng)], sym3[pick(rng)], sym3[pick(rng)]});
            CHECK(g.support_size() == 6);
            CHECK(is_member(g, {3, 3, 2, 2}));
        }
    }
    SUBCASE("swapping 0 and 1 negates c_{3,0,1}") {
        const auto image = symmetry_apply(make_c(3, 0, 1), {1}, {{1, 0, 2}});
        CHECK(image == scale(make_c(3, 0, 1), Rat(-1)));
    }
    SUBCASE("the action commutes with the adjacency operator") {
        std::mt19937_64 rng(43);
        const std::vector<int> pi = {3, 1, 2};
        const std::vector<std::vector<int>> sigmas = {{1, 2, 0}, {0, 2, 1}, {2, 1, 0}};
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = testutil::random_function(3, 3, rng);
            CHECK(apply_adjacency(symmetry_apply(f, pi, sigmas)) ==
                  symmetry_apply(apply_adjacency(f), pi, sigmas));
        }
    }
    SUBCASE("malformed permutations are rejected") {
        CHECK_THROWS_AS(symmetry_apply(phi, {1, 2}, {{0, 1, 2}, {0, 1, 2}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(symmetry_apply(phi, {1, 1, 3},
                                       {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}),
                        std::invalid_argument);
        CHECK_THROWS_AS(symmetry_apply(phi, {1, 2, 3},
                                       {{0, 1, 1}, {0, 1, 2}, {0, 1, 2}}),
                        std::invalid_argument);
    }
}

TEST_CASE("the B set consists of support-6 kernel eigenfunctions") {
    const auto b_set = enumerate_B();
    CHECK(!b_set.empty());
    const auto phi = make_phi();
    bool contains_phi = false;
    for (const auto& g : b_set) {
        if (g == phi) contains_phi = true;
        CHECK(g.support_size() == 6);
        CHECK(apply_adjacency(g).is_zero());  // lambda_2(3,3) = 0
    }
    CHECK(contains_phi);
}
