#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace capset {

// Bitmask over the cells of AG(n,3); 81 bits cover every dimension up to 4.
// lo holds bits 0..63, hi holds bits 64..80.
struct PointSet {
    uint64_t lo = 0;
    uint64_t hi = 0;

    static constexpr int max_bits = 81;

    static constexpr PointSet single(int i) {
        PointSet s;
        s.set(i);
        return s;
    }

    static constexpr PointSet full(int num_points) {
        PointSet s;
        if (num_points >= 64) {
            s.lo = ~0ull;
            s.hi = (num_points == 64) ? 0 : ((1ull << (num_points - 64)) - 1);
        } else {
            s.lo = (1ull << num_points) - 1;
        }
        return s;
    }

    static PointSet from_indices(const std::vector<int>& idx) {
        PointSet s;
        for (int i : idx) s.set(i);
        return s;
    }

    constexpr bool test(int i) const {
        return i < 64 ? (lo >> i) & 1u : (hi >> (i - 64)) & 1u;
    }
    constexpr void set(int i) {
        if (i < 64)
            lo |= 1ull << i;
        else
            hi |= 1ull << (i - 64);
    }
    constexpr void reset(int i) {
        if (i < 64)
            lo &= ~(1ull << i);
        else
            hi &= ~(1ull << (i - 64));
    }

    constexpr int size() const { return std::popcount(lo) + std::popcount(hi); }
    constexpr bool empty() const { return (lo | hi) == 0; }

    constexpr PointSet operator|(PointSet o) const { return {lo | o.lo, hi | o.hi}; }
    constexpr PointSet operator&(PointSet o) const { return {lo & o.lo, hi & o.hi}; }
    constexpr PointSet operator^(PointSet o) const { return {lo ^ o.lo, hi ^ o.hi}; }
    // set difference
    constexpr PointSet operator-(PointSet o) const { return {lo & ~o.lo, hi & ~o.hi}; }
    constexpr PointSet& operator|=(PointSet o) {
        lo |= o.lo;
        hi |= o.hi;
        return *this;
    }
    constexpr PointSet& operator&=(PointSet o) {
        lo &= o.lo;
        hi &= o.hi;
        return *this;
    }

    constexpr bool operator==(const PointSet&) const = default;

    constexpr bool disjoint(PointSet o) const { return ((lo & o.lo) | (hi & o.hi)) == 0; }
    constexpr bool contains(PointSet o) const { return (o.lo & ~lo) == 0 && (o.hi & ~hi) == 0; }

    // Index of the lowest set bit; -1 on the empty set.
    constexpr int lowest() const {
        if (lo) return std::countr_zero(lo);
        if (hi) return 64 + std::countr_zero(hi);
        return -1;
    }

    constexpr int pop_lowest() {
        int i = lowest();
        if (i >= 0) reset(i);
        return i;
    }

    // Keep only bits strictly above i.
    constexpr PointSet above(int i) const {
        PointSet m = *this;
        if (i >= 63) {
            m.lo = 0;
            if (i >= 64) m.hi &= ~((i == 127) ? ~0ull : ((1ull << (i - 63)) - 1));
        } else {
            m.lo &= ~((1ull << (i + 1)) - 1);
        }
        return m;
    }

    // Lexicographic order on the ascending index lists: below the first
    // differing index the lists agree, so a < b iff a owns that index and b
    // still has elements after it, or b owns it and a is exhausted (prefix).
    static constexpr bool lex_less(PointSet a, PointSet b) {
        PointSet d = a ^ b;
        if (d.empty()) return false;
        int i = d.lowest();
        if (a.test(i)) return !b.above(i).empty();
        return a.above(i).empty();
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(size());
        PointSet m = *this;
        while (!m.empty()) out.push_back(m.pop_lowest());
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        PointSet m = *this;
        while (!m.empty()) fn(m.pop_lowest());
    }

    constexpr uint64_t hash() const {
        uint64_t h = 1469598103934665603ull;
        h = (h ^ lo) * 1099511628211ull;
        h = (h ^ hi) * 1099511628211ull;
        return h;
    }
};

struct PointSetHash {
    size_t operator()(const PointSet& s) const { return static_cast<size_t>(s.hash()); }
};

struct PointSetLexLess {
    bool operator()(const PointSet& a, const PointSet& b) const { return PointSet::lex_less(a, b); }
};

}  // namespace capset
