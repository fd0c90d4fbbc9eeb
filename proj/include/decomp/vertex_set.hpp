#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace decomp {

// Subset of vertex identifiers 0..63, packed into one machine word.
// Iteration is always ascending by identifier.
class VertexSet {
public:
    constexpr VertexSet() = default;

    VertexSet(std::initializer_list<int> ids) {
        for (int v : ids) {
            check_id(v);
            mask_ |= bit(v);
        }
    }

    static constexpr VertexSet from_mask(std::uint64_t mask) {
        VertexSet s;
        s.mask_ = mask;
        return s;
    }

    static VertexSet single(int v) {
        check_id(v);
        return from_mask(bit(v));
    }

    // {0, 1, ..., n-1}
    static VertexSet universe(int n) {
        if (n < 0 || n > 64) throw std::invalid_argument("VertexSet: universe size must be in 0..64");
        if (n == 64) return from_mask(~std::uint64_t{0});
        return from_mask((std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool contains(int v) const { return v >= 0 && v < 64 && (mask_ & bit(v)) != 0; }

    // Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(mask_); }

    constexpr VertexSet operator|(VertexSet o) const { return from_mask(mask_ | o.mask_); }
    constexpr VertexSet operator&(VertexSet o) const { return from_mask(mask_ & o.mask_); }
    constexpr VertexSet operator-(VertexSet o) const { return from_mask(mask_ & ~o.mask_); }
    VertexSet& operator|=(VertexSet o) { mask_ |= o.mask_; return *this; }
    VertexSet& operator&=(VertexSet o) { mask_ &= o.mask_; return *this; }
    VertexSet& operator-=(VertexSet o) { mask_ &= ~o.mask_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    VertexSet with(int v) const { check_id(v); return from_mask(mask_ | bit(v)); }
    VertexSet without(int v) const { check_id(v); return from_mask(mask_ & ~bit(v)); }

    constexpr bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }
    constexpr bool disjoint_with(VertexSet o) const { return (mask_ & o.mask_) == 0; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::uint64_t m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m));
    }

    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t m) : rest_(m) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(mask_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int v : *this) {
            if (!first) out += ",";
            out += std::to_string(v);
            first = false;
        }
        return out + "}";
    }

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
    static void check_id(int v) {
        if (v < 0 || v >= 64) throw std::invalid_argument("VertexSet: identifier out of 0..63");
    }

    std::uint64_t mask_ = 0;
};

// Order on the ascending identifier sequences, e.g. {0,3} < {1,2} < {1,2,5}.
inline bool lex_less(VertexSet a, VertexSet b) {
    if (a == b) return false;
    std::uint64_t diff = a.mask() ^ b.mask();
    int d = std::countr_zero(diff);
    if (a.contains(d)) {
        // a's next element is d; a is smaller unless b is an exhausted prefix.
        return (b.mask() >> d) != 0;
    }
    return (a.mask() >> d) == 0;
}

// Calls f(s) for every subset s of the given set, in ascending mask order.
template <typename F>
void for_each_subset(VertexSet of, F&& f) {
    std::uint64_t m = of.mask();
    std::uint64_t sub = 0;
    while (true) {
        f(VertexSet::from_mask(sub));
        if (sub == m) break;
        sub = (sub - m) & m;  // next subset of m
    }
}

}  // namespace decomp
