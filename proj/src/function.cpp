#include "hameig/function.hpp"

#include <stdexcept>

namespace hameig {

namespace {

std::uint64_t checked_count(int n, int q) {
    const std::uint64_t count = vertex_count(n, q);
    if (count > HammingFunction::kDenseCap) {
        throw std::invalid_argument("q^n exceeds the dense storage cap (2^24)");
    }
    return count;
}

}  // namespace

HammingFunction::HammingFunction(int n, int q) : n_(n), q_(q) {
    values_.assign(checked_count(n, q), Rat(0));
}

HammingFunction::HammingFunction(int n, int q, std::vector<Rat> values)
    : n_(n), q_(q), values_(std::move(values)) {
    if (values_.size() != checked_count(n, q)) {
        throw std::invalid_argument("value table size does not equal q^n");
    }
}

const Rat& HammingFunction::value(Rank r) const {
    if (r >= values_.size()) throw std::invalid_argument("rank out of range");
    return values_[r];
}

const Rat& HammingFunction::value(const Word& w) const {
    if (w.n() != n_) throw std::invalid_argument("word length does not match n");
    return values_[rank_of(w, q_)];
}

std::uint64_t HammingFunction::support_size() const {
    std::uint64_t count = 0;
    for (const Rat& v : values_) {
        if (v != 0) ++count;
    }
    return count;
}

std::vector<std::pair<Rank, Rat>> HammingFunction::nonzero_entries() const {
    std::vector<std::pair<Rank, Rat>> entries;
    for (Rank r = 0; r < values_.size(); ++r) {
        if (values_[r] != 0) entries.emplace_back(r, values_[r]);
    }
    return entries;
}

bool HammingFunction::is_zero() const {
    for (const Rat& v : values_) {
        if (v != 0) return false;
    }
    return true;
}

bool HammingFunction::operator==(const HammingFunction& other) const {
    return n_ == other.n_ && q_ == other.q_ && values_ == other.values_;
}

namespace {

void require_same_domain(const HammingFunction& a, const HammingFunction& b) {
    if (a.n() != b.n() || a.q() != b.q()) {
        throw std::invalid_argument("functions live on different Hamming graphs");
    }
}

}  // namespace

HammingFunction add(const HammingFunction& a, const HammingFunction& b) {
    require_same_domain(a, b);
    std::vector<Rat> out(a.values());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += b.values()[r];
    return HammingFunction(a.n(), a.q(), std::move(out));
}

HammingFunction sub(const HammingFunction& a, const HammingFunction& b) {
    require_same_domain(a, b);
    std::vector<Rat> out(a.values());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] -= b.values()[r];
    return HammingFunction(a.n(), a.q(), std::move(out));
}

HammingFunction scale(const HammingFunction& f, const Rat& c) {
    std::vector<Rat> out(f.values());
    for (Rat& v : out) v *= c;
    return HammingFunction(f.n(), f.q(), std::move(out));
}

}  // namespace hameig
