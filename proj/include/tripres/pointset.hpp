#pragma once

#include <cstdint>
#include <bit>
#include <cassert>

namespace tripres {

// Fixed-width set of small indices (0..127).  Incidence rows of every plane
// handled here fit (n = q^2+q+1 <= 91 for q <= 9), and the search inner loops
// are dominated by intersections of such sets, so O(1) word ops matter.
struct PointSet {
    std::uint64_t w0 = 0, w1 = 0;

    static constexpr int capacity = 128;

    static PointSet full(int n) {
        assert(n >= 0 && n <= capacity);
        PointSet s;
        if (n >= 64) {
            s.w0 = ~0ULL;
            s.w1 = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else {
            s.w0 = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        }
        return s;
    }

    void add(int i) {
        assert(i >= 0 && i < capacity);
        if (i < 64) w0 |= 1ULL << i; else w1 |= 1ULL << (i - 64);
    }
    void remove(int i) {
        assert(i >= 0 && i < capacity);
        if (i < 64) w0 &= ~(1ULL << i); else w1 &= ~(1ULL << (i - 64));
    }
    bool contains(int i) const {
        assert(i >= 0 && i < capacity);
        return (i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ULL;
    }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool empty() const { return (w0 | w1) == 0; }

    // lowest element, or -1 when empty
    int first() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }
    // lowest element greater than i, or -1 (use next(-1) to start iteration)
    int next(int i) const {
        if (i < -1 || i >= capacity) return -1;
        if (i < 63) {
            std::uint64_t m = w0 & ~((i < 0) ? 0ULL : ((2ULL << i) - 1));
            if (m) return std::countr_zero(m);
        }
        if (i < 127) {
            int j = i - 64;
            std::uint64_t m = w1 & ~((j < 0) ? 0ULL : ((2ULL << j) - 1));
            if (m) return 64 + std::countr_zero(m);
        }
        return -1;
    }
    // the unique element if the set is a singleton, else -1
    int only() const { return count() == 1 ? first() : -1; }

    friend PointSet operator&(PointSet a, PointSet b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend PointSet operator|(PointSet a, PointSet b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend PointSet operator^(PointSet a, PointSet b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
    PointSet& operator&=(PointSet b) { w0 &= b.w0; w1 &= b.w1; return *this; }
    PointSet& operator|=(PointSet b) { w0 |= b.w0; w1 |= b.w1; return *this; }
    bool operator==(const PointSet&) const = default;
};

} // namespace tripres
