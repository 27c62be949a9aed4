#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hameig/bitrades.hpp"
#include "hameig/blocks.hpp"
#include "hameig/bounds.hpp"
#include "hameig/families.hpp"
#include "hameig/spectra.hpp"

using namespace hameig;

namespace {

Bitrade example1() {
    // T0 = {000, 111}, T1 = {001, 110} in H(3,2)
    return Bitrade{3, 2, {0, 7}, {1, 6}};
}

}  // namespace

TEST_CASE("the size-4 bitrade in H(3,2)") {
    const auto verdict = verify_bitrade(example1());
    CHECK(verdict.valid);
    CHECK(verdict.size == 4);
    CHECK(verdict.sizes_equal);
    CHECK(verdict.independent);
    CHECK(verdict.matching);
    CHECK_FALSE(verdict.counterexample.has_value());
}

TEST_CASE("antipodal pairs in H(2,2) are not a bitrade") {
    const Bitrade bad{2, 2, {0b00}, {0b11}};
    const auto verdict = verify_bitrade(bad);
    CHECK_FALSE(verdict.valid);
    CHECK_FALSE(verdict.balls_ok);
    REQUIRE(verdict.counterexample.has_value());
    // ball at 00 holds 00 from T0 but no T1 vertex
    CHECK(*verdict.counterexample == 0);
}

TEST_CASE("degenerate inputs are reported") {
    CHECK_FALSE(verify_bitrade(Bitrade{2, 2, {}, {1}}).nonempty);
    CHECK_FALSE(verify_bitrade(Bitrade{2, 2, {1}, {1}}).disjoint);
    const auto unequal = verify_bitrade(Bitrade{3, 2, {0, 7}, {1}});
    CHECK_FALSE(unequal.valid);
    CHECK_FALSE(unequal.sizes_equal);
}

TEST_CASE("automorphism images of a bitrade remain bitrades") {
    const auto f = to_eigenfunction(example1());
    const auto image = symmetry_apply(f, {3, 1, 2}, {{1, 0}, {0, 1}, {1, 0}});
    const auto moived = from_level_sets(image, Rat(1));
    CHECK(verify_bitrade(moived).valid);
}

TEST_CASE("bitrades give (-1)-eigenfunctions") {
    const auto f = to_eigenfunction(example1());
    CHECK(adjacency_shift(f, -1).is_zero());
    CHECK(is_eigenfunction(f, 2));  // lambda_2(3,2) = -1
    CHECK(f.support_size() == 4);

    const Bitrade invalid{2, 2, {0}, {3}};
    CHECK_THROWS_AS(to_eigenfunction(invalid), std::invalid_argument);
}

TEST_CASE("level sets recover bitrades from scaled functions") {
    const auto f = scale(to_eigenfunction(example1()), Rat(-3, 7));
    const auto b = from_level_sets(f, Rat(-3, 7));
    CHECK(verify_bitrade(b).valid);
    CHECK(b.t0 == example1().t0);

    CHECK_THROWS_AS(from_level_sets(f, Rat(1)), std::invalid_argument);
    CHECK_THROWS_AS(from_level_sets(f, Rat(0)), std::invalid_argument);
}

TEST_CASE("existence criterion for prime powers") {
    CHECK(exists_bitrade(4, 3) == BitradeExistence::Exists);
    CHECK(exists_bitrade(5, 3) == BitradeExistence::NotExists);
    CHECK(exists_bitrade(3, 2) == BitradeExistence::Exists);
    CHECK(exists_bitrade(7, 3) == BitradeExistence::Exists);
    CHECK(exists_bitrade(5, 4) == BitradeExistence::Exists);
    CHECK(exists_bitrade(3, 4) == BitradeExistence::NotExists);
    CHECK(exists_bitrade(10, 9) == BitradeExistence::Exists);
    CHECK(exists_bitrade(7, 6) == BitradeExistence::NotEstablished);
    CHECK(exists_bitrade(11, 10) == BitradeExistence::NotEstablished);
    CHECK(is_prime_power(8));
    CHECK(is_prime_power(27));
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}

TEST_CASE("minimum bitrade construction at m = 1") {
    const auto b = minimal_bitrade_q3(1);
    CHECK(b.n == 4);
    CHECK(b.size() == 12);  // 2^2 * 3
    const auto verdict = verify_bitrade(b);
    CHECK(verdict.valid);

    const auto f = to_eigenfunction(b);
    CHECK(adjacency_shift(f, -1).is_zero());
    CHECK(is_member(f, {4, 3, 3, 3}));  // lambda_3(4,3) = -1
    CHECK(f.support_size() == b.size());

    // the minimality chain: the eigenfunction bound at (4,3,3,3) is 12
    const auto bound = minsupp(4, 3, 3, 3);
    REQUIRE(bound.known());
    CHECK(*bound.value == 12);
    CHECK_THROWS_AS(minimal_bitrade_q3(0), std::invalid_argument);
    CHECK_THROWS_AS(minimal_bitrade_q3(2, 100), std::invalid_argument);
}

TEST_CASE("difference of the two parity Hamming codes in H(3,2)") {
    // The two 1-perfect codes {000, 111} and {001, 110}; each meets every
    // closed ball exactly once, and their difference is the size-4 bitrade.
    const std::vector<Rank> c1 = {0, 7};
    const std::vector<Rank> c2 = {1, 6};
    auto is_perfect_code = [](const std::vector<Rank>& code) {
        std::vector<int> covered(8, 0);
        for (Rank x : code) {
            covered[x] += 1;
            for (int r = 0; r < 3; ++r) covered[x ^ (Rank{1} << r)] += 1;
        }
        for (int c : covered) {
            if (c != 1) return false;
        }
        return true;
    };
    REQUIRE(is_perfect_code(c1));
    REQUIRE(is_perfect_code(c2));

    // C1 != C2, so (C1 \ C2, C2 \ C1) is a bitrade.
    const Bitrade b{3, 2, c1, c2};
    CHECK(verify_bitrade(b).valid);
}

TEST_CASE("bitrade documents round-trip") {
    const auto b = minimal_bitrade_q3(1);
    const auto doc = bitrade_to_json(b);
    const auto back = bitrade_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back.n == b.n);
    CHECK(back.q == b.q);
    CHECK(back.t0 == b.t0);
    CHECK(back.t1 == b.t1);

    CHECK_THROWS_AS(bitrade_from_json(nlohmann::json::parse(R"({"n":2,"q":2})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        bitrade_from_json(nlohmann::json::parse(R"({"n":2,"q":2,"T0":["21"],"T1":[]})")),
        std::invalid_argument);
}
