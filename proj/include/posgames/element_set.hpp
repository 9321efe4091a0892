#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "posgames/errors.hpp"

namespace posgames {

/// Hard upper bound on board size. Every game board (hypergraph elements,
/// digraph vertices plus arcs) must fit.
inline constexpr int kMaxElements = 256;

/// Fixed-capacity bit vector over element indices 0..kMaxElements-1.
class ElementSet {
public:
    static constexpr int kWords = kMaxElements / 64;

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<int> elems) {
        for (int e : elems) set(e);
    }
    static ElementSet from(std::span<const int> elems) {
        ElementSet s;
        for (int e : elems) s.set(e);
        return s;
    }
    /// The set {0, ..., n-1}.
    static ElementSet prefix(int n) {
        check(n == 0 ? 0 : n - 1);
        ElementSet s;
        for (int w = 0; w < kWords; ++w) {
            const int lo = w * 64;
            if (n >= lo + 64) s.words_[w] = ~std::uint64_t{0};
            else if (n > lo) s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
        }
        return s;
    }

    void set(int i) {
        check(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        check(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    [[nodiscard]] bool test(int i) const {
        if (i < 0 || i >= kMaxElements) return false;
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }
    [[nodiscard]] bool contains(int i) const { return test(i); }

    [[nodiscard]] int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    [[nodiscard]] bool any() const { return !empty(); }

    /// Lowest element, or -1 when empty.
    [[nodiscard]] int first() const { return next(0); }
    /// Lowest element >= from, or -1.
    [[nodiscard]] int next(int from) const {
        if (from < 0) from = 0;
        for (int w = from >> 6; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            if (w == (from >> 6)) bits &= ~std::uint64_t{0} << (from & 63);
            if (bits) return w * 64 + std::countr_zero(bits);
        }
        return -1;
    }
    /// Highest element, or -1 when empty.
    [[nodiscard]] int last() const {
        for (int w = kWords - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int w = 0; w < kWords; ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                f(w * 64 + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int e) { out.push_back(e); });
        return out;
    }

    [[nodiscard]] bool is_subset_of(const ElementSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & ~o.words_[w]) return false;
        return true;
    }
    [[nodiscard]] bool intersects(const ElementSet& o) const {
        for (int w = 0; w < kWords; ++w)
            if (words_[w] & o.words_[w]) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (int w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    /// Elements shifted up by `offset` (used for disjoint unions).
    [[nodiscard]] ElementSet shifted(int offset) const {
        ElementSet out;
        for_each([&](int e) { out.set(e + offset); });
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;
    friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

    [[nodiscard]] std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xbf58476d1ce4e5b9ULL;
            h ^= h >> 31;
        }
        return static_cast<std::size_t>(h);
    }

    [[nodiscard]] std::string to_string() const;

private:
    static void check(int i) {
        if (i < 0 || i >= kMaxElements)
            throw InvalidArgument("element index " + std::to_string(i) + " outside [0," +
                                  std::to_string(kMaxElements) + ")");
    }

    std::array<std::uint64_t, kWords> words_{};
};

struct ElementSetHash {
    std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// Calls f(subset) for every subset of `pool` with exactly k elements, in
/// lexicographic order of the sorted element lists. Stops early when f returns false.
template <class F>
bool for_each_k_subset(const ElementSet& pool, int k, F&& f) {
    const std::vector<int> items = pool.to_vector();
    const int n = static_cast<int>(items.size());
    if (k < 0 || k > n) return true;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        ElementSet s;
        for (int i : idx) s.set(items[i]);
        if (!f(s)) return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace posgames
