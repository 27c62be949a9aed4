#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hameig/bounds.hpp"
#include "hameig/families.hpp"
#include "hameig/reduce.hpp"

using namespace hameig;

TEST_CASE("catalog values") {
    SUBCASE("q = 2") {
        const auto low = minsupp(4, 2, 1, 2);
        CHECK(*low.value == 4);
        CHECK(low.source == "Theorem 3");
        const auto high = minsupp(4, 2, 2, 3);
        CHECK(*high.value == 4);
        CHECK(high.source == "Theorem 4");
    }
    SUBCASE("q = 3") {
        const auto f3 = minsupp(3, 3, 2, 2);
        CHECK(*f3.value == 6);
        CHECK(f3.source == "Theorem 5");
        const auto f4 = minsupp(4, 3, 3, 3);
        CHECK(*f4.value == 12);
        CHECK(f4.source == "Theorem 6 / Corollary 2");
        CHECK(f4.regime == "F4");
        const auto f4_wide = minsupp(4, 3, 3, 4);
        CHECK(*f4_wide.value == 8);
        CHECK(f4_wide.source == "Theorem 6");
        const auto prior = minsupp(4, 3, 1, 2);
        CHECK(*prior.value == 12);  // 4 * 3
        CHECK(prior.regime == "prior-work");
    }
    SUBCASE("q >= 4") {
        const auto covered = minsupp(4, 4, 1, 1);
        CHECK(*covered.value == 2 * 3 * 16);  // 2^1 3^1 4^2
        const auto open = minsupp(4, 4, 3, 3);
        CHECK_FALSE(open.known());
        CHECK(open.regime == "out-of-scope");
    }
    CHECK_THROWS_AS(minsupp(0, 2, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(minsupp(3, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("uniform bound formula") {
    CHECK(uniform_bound(3, 3, 2, 2) == 12);  // 2 * 2 * 3
    CHECK(uniform_bound(4, 3, 3, 3) == 36);  // 2 * 2 * 9
    for (int n = 1; n <= 6; ++n) {
        Int qn;
        mpz_ui_pow_ui(qn.get_mpz_t(), 3, static_cast<unsigned long>(n));
        CHECK(uniform_bound(n, 3, n, n) == qn);
    }
    CHECK_THROWS_AS(uniform_bound(4, 3, 1, 2), std::invalid_argument);  // i+j < n
    CHECK_THROWS_AS(uniform_bound(4, 2, 2, 3), std::invalid_argument);  // q < 3
}

TEST_CASE("family members certify the bounds as sharp") {
    for (int family_idx = 0; family_idx < 4; ++family_idx) {
        const Family family = static_cast<Family>(family_idx);
        const int q = family_q(family);
        for (int n = 1; n <= 5; ++n) {
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    try {
                        slot_counts(family, n, i, j);
                    } catch (const std::invalid_argument&) {
                        continue;
                    }
                    const auto f = construct(FamilySpec{family, n, i, j});
                    const auto check = check_bound(f, {n, q, i, j});
                    CHECK(check.satisfied);
                    CHECK(check.equality);
                }
            }
        }
    }
}

TEST_CASE("check_bound preconditions") {
    CHECK_THROWS_AS(check_bound(HammingFunction(2, 3), {2, 3, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_bound(make_phi(), {3, 3, 0, 1}), std::invalid_argument);
}

TEST_CASE("uniform members respect the uniform floor") {
    // a and d blocks have coinciding slices away from one symbol, so their
    // products (optionally padded with e) are uniform.
    for (int s = 0; s <= 2; ++s) {
        for (int u = 0; u <= 2; ++u) {
            if (s + u == 0) continue;
            const int n = 2 * s + u;
            if (n > 4) continue;
            HammingFunction f = make_e(3);
            bool first = true;
            for (int b = 0; b < s; ++b, first = false) {
                f = first ? make_a(3, 1, 2) : tensor_product(f, make_a(3, 1, 2));
            }
            for (int b = 0; b < u; ++b, first = false) {
                f = first ? make_d(3, 1) : tensor_product(f, make_d(3, 1));
            }
            REQUIRE(is_uniform(f).uniform);
            // levels of f span [s, s+u]; any j >= n-s keeps i+j >= n
            for (int j = s + u; j <= n; ++j) {
                if (s + j < n) continue;
                CHECK(is_member(f, {n, 3, s, j}));
                CHECK(Int(static_cast<unsigned long>(f.support_size())) >=
                      uniform_bound(n, 3, s, j));
            }
        }
    }
}

TEST_CASE("q = 3 bound is monotone non-increasing in j") {
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i <= n; ++i) {
            for (int j = i; j < n; ++j) {
                const auto a = minsupp(n, 3, i, j);
                const auto b = minsupp(n, 3, i, j + 1);
                REQUIRE(a.known());
                REQUIRE(b.known());
                CHECK(*a.value >= *b.value);
            }
        }
    }
}

TEST_CASE("regime labels agree with the family dispatcher") {
    for (int q = 2; q <= 3; ++q) {
        for (int n = 1; n <= 8; ++n) {
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    CHECK(minsupp(n, q, i, j).regime == to_string(regime(n, q, i, j)));
                }
            }
        }
    }
}
