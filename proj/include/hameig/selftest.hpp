#pragma once

#include <string>
#include <vector>

namespace hameig {

struct SelfCheck {
    std::string tag;
    bool pass = false;
    std::string detail;
};

/// Runs the built-in invariant battery over the grid n <= 4, q in {2,3}
/// (blocks for q up to 4). One entry per catalog tag; every tag is exercised
/// at least once. Deterministic.
std::vector<SelfCheck> run_selftest();

}  // namespace hameig
