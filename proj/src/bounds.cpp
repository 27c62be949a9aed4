#include "hameig/bounds.hpp"

#include <stdexcept>

#include "hameig/families.hpp"

namespace hameig {

namespace {

Int pow_int(unsigned long base, long exp) {
    if (exp < 0) throw std::logic_error("negative exponent in bound formula");
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, static_cast<unsigned long>(exp));
    return out;
}

// 2^i (q-1)^i q^(n-i-j), the prior product bound for q >= 3, i+j <= n.
Int prior_product_bound(int n, int q, int i, int j) {
    return pow_int(2, i) * pow_int(static_cast<unsigned long>(q - 1), i) *
           pow_int(static_cast<unsigned long>(q), n - i - j);
}

Int theorem5_value(int n, int i, int j) {
    return pow_int(2, 3 * (n - j) - i) * pow_int(3, i + j - n);
}

}  // namespace

BoundResult minsupp(int n, int q, int i, int j) {
    if (n < 1 || q < 2 || i < 0 || i > j || j > n) {
        throw std::invalid_argument("need n >= 1, q >= 2 and 0 <= i <= j <= n");
    }
    BoundResult result;
    if (q == 2) {
        if (i + j <= n) {
            result.value = pow_int(2, n - j);
            result.source = "Theorem 3";
            result.regime = "F1";
        } else {
            result.value = pow_int(2, i);
            result.source = "Theorem 4";
            result.regime = "F2";
        }
        return result;
    }
    if (q == 3) {
        if (i + j <= n) {
            result.value = prior_product_bound(n, q, i, j);
            result.source = "Theorem 1 (prior work)";
            result.regime = "prior-work";
            if (i + j == n && *result.value != theorem5_value(n, i, j)) {
                throw std::logic_error("regime boundary mismatch at i+j = n");
            }
        } else if (i + 2 * j <= 2 * n) {
            result.value = theorem5_value(n, i, j);
            result.source = "Theorem 5";
            result.regime = "F3";
        } else {
            result.value = pow_int(2, i + j - n) * pow_int(3, n - j);
            result.source = (i == j) ? "Theorem 6 / Corollary 2" : "Theorem 6";
            result.regime = "F4";
        }
        return result;
    }
    if (i + j <= n) {
        result.value = prior_product_bound(n, q, i, j);
        result.source = "Theorem 1 (prior work)";
        result.regime = "prior-work";
    } else {
        result.source = "not covered (q >= 4, i+j > n)";
        result.regime = "out-of-scope";
    }
    return result;
}

Int uniform_bound(int n, int q, int i, int j) {
    if (n < 1 || i < 0 || i > j || j > n) {
        throw std::invalid_argument("need n >= 1 and 0 <= i <= j <= n");
    }
    if (q < 3) throw std::invalid_argument("uniform bound requires q >= 3");
    if (i + j < n) throw std::invalid_argument("uniform bound requires i+j >= n");
    return pow_int(2, n - j) * pow_int(static_cast<unsigned long>(q - 1), n - j) *
           pow_int(static_cast<unsigned long>(q), i + j - n);
}

BoundCheck check_bound(const HammingFunction& f, const SpectrumInterval& interval) {
    if (f.is_zero()) throw std::invalid_argument("check_bound requires a nonzero function");
    if (!is_member(f, interval)) {
        throw std::invalid_argument("f is not a member of the stated interval space");
    }
    BoundCheck check;
    check.support = Int(static_cast<unsigned long>(f.support_size()));
    check.bound = minsupp(interval.n, interval.q, interval.lo, interval.hi);
    if (check.bound.known()) {
        check.satisfied = check.support >= *check.bound.value;
        check.equality = check.support == *check.bound.value;
    } else {
        check.satisfied = true;
        check.equality = false;
    }
    return check;
}

}  // namespace hameig
