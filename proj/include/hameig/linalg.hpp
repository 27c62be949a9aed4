#pragma once

#include <cstddef>
#include <vector>

#include "hameig/rational.hpp"

namespace hameig {

using RatMatrix = std::vector<std::vector<Rat>>;

/// In-place reduced row echelon form over Q. Pivot rule: columns are scanned
/// left to right and the first row with a nonzero entry is taken, so the
/// result is deterministic. Returns the pivot columns in order.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

/// Basis of {x : m x = 0}, one vector per free column (ascending), derived
/// from the RREF with the free variable set to 1.
RatMatrix kernel_basis(RatMatrix m);

}  // namespace hameig
