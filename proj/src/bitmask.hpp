#pragma once

// Fixed 128-bit slot mask used by the exact-search paths. Slot i maps to
// bit (i % 64) of word (i / 64).

#include <bit>
#include <cstdint>
#include <functional>

namespace hostcap::detail {

struct SlotMask {
    std::uint64_t w0 = 0;
    std::uint64_t w1 = 0;

    bool test(int i) const {
        return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ULL) != 0;
    }
    void set(int i) {
        if (i < 64) w0 |= 1ULL << i;
        else w1 |= 1ULL << (i - 64);
    }
    void reset(int i) {
        if (i < 64) w0 &= ~(1ULL << i);
        else w1 &= ~(1ULL << (i - 64));
    }
    int count() const {
        return std::popcount(w0) + std::popcount(w1);
    }
    bool any() const { return (w0 | w1) != 0; }

    friend SlotMask operator&(SlotMask a, SlotMask b) {
        return {a.w0 & b.w0, a.w1 & b.w1};
    }
    friend SlotMask operator|(SlotMask a, SlotMask b) {
        return {a.w0 | b.w0, a.w1 | b.w1};
    }
    SlotMask operator~() const { return {~w0, ~w1}; }
    bool operator==(const SlotMask&) const = default;

    static SlotMask first_n(int n) {
        SlotMask m;
        if (n >= 64) {
            m.w0 = ~0ULL;
            m.w1 = n >= 128 ? ~0ULL : (n == 64 ? 0 : (1ULL << (n - 64)) - 1);
        } else {
            m.w0 = n <= 0 ? 0 : (1ULL << n) - 1;
        }
        return m;
    }

    // Index of the lowest set bit, or -1.
    int lowest() const {
        if (w0 != 0) return std::countr_zero(w0);
        if (w1 != 0) return 64 + std::countr_zero(w1);
        return -1;
    }
};

struct SlotMaskHash {
    std::size_t operator()(const SlotMask& m) const {
        std::uint64_t h = m.w0 * 0x9e3779b97f4a7c15ULL;
        h ^= m.w1 + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// True when a reads lexicographically before b as a bit string over slots
// 0..n-1 with 0 ordered before 1.
inline bool lex_less(const SlotMask& a, const SlotMask& b) {
    std::uint64_t x0 = a.w0 ^ b.w0;
    if (x0 != 0) {
        int i = std::countr_zero(x0);
        return ((a.w0 >> i) & 1ULL) == 0;
    }
    std::uint64_t x1 = a.w1 ^ b.w1;
    if (x1 != 0) {
        int i = std::countr_zero(x1);
        return ((a.w1 >> i) & 1ULL) == 0;
    }
    return false;
}

}  // namespace hostcap::detail
