#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hameig/rational.hpp"
#include "hameig/word.hpp"

namespace hameig {

/// An exact rational-valued function on the vertices of H(n,q).
///
/// Storage is a dense array indexed by rank; the sparse entry view is derived
/// on demand. Instances are immutable after construction and safe to share
/// across threads; every operation on them is pure.
class HammingFunction {
  public:
    /// Dense storage is only offered up to this many vertices.
    static constexpr std::uint64_t kDenseCap = std::uint64_t{1} << 24;

    /// The zero function on H(n,q).
    HammingFunction(int n, int q);

    /// Takes ownership of a full dense value table (size q^n, rank order).
    HammingFunction(int n, int q, std::vector<Rat> values);

    int n() const { return n_; }
    int q() const { return q_; }
    std::uint64_t num_vertices() const { return static_cast<std::uint64_t>(values_.size()); }

    const Rat& value(Rank r) const;
    const Rat& value(const Word& w) const;
    const std::vector<Rat>& values() const { return values_; }

    /// |Supp(f)|, the number of vertices with a nonzero value. Exact; no
    /// tolerance is involved anywhere.
    std::uint64_t support_size() const;

    /// Sparse view: (rank, value) for every nonzero entry, in rank order.
    std::vector<std::pair<Rank, Rat>> nonzero_entries() const;

    bool is_zero() const;

    bool operator==(const HammingFunction& other) const;
    bool operator!=(const HammingFunction& other) const { return !(*this == other); }

  private:
    int n_;
    int q_;
    std::vector<Rat> values_;
};

HammingFunction add(const HammingFunction& a, const HammingFunction& b);
HammingFunction sub(const HammingFunction& a, const HammingFunction& b);
HammingFunction scale(const HammingFunction& f, const Rat& c);

}  // namespace hameig
