#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace vtchroma
{
    class VertexSetIterator;

    /// Fixed-width bitset over vertex indices 0..capacity-1.
    class VertexSet
    {
        public:
            static constexpr int words = 2;
            static constexpr int capacity = 64 * words;

            constexpr VertexSet() = default;

            VertexSet(std::initializer_list<int> vertices)
            {
                for (int v : vertices)
                    set(v);
            }

            /// {0, ..., n-1}
            static auto full(int n) -> VertexSet
            {
                VertexSet result;
                for (int w = 0 ; w < words ; ++w) {
                    int lo = 64 * w;
                    if (n >= lo + 64)
                        result._bits[w] = ~std::uint64_t{0};
                    else if (n > lo)
                        result._bits[w] = (std::uint64_t{1} << (n - lo)) - 1;
                }
                return result;
            }

            static auto single(int v) -> VertexSet
            {
                VertexSet result;
                result.set(v);
                return result;
            }

            auto set(int v) -> void { _bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
            auto reset(int v) -> void { _bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
            auto test(int v) const -> bool { return (_bits[v >> 6] >> (v & 63)) & 1; }

            auto count() const -> int
            {
                int c = 0;
                for (auto w : _bits)
                    c += std::popcount(w);
                return c;
            }

            auto empty() const -> bool
            {
                for (auto w : _bits)
                    if (w)
                        return false;
                return true;
            }

            auto any() const -> bool { return ! empty(); }

            /// Lowest member, or -1 when empty.
            auto first() const -> int
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w])
                        return 64 * w + std::countr_zero(_bits[w]);
                return -1;
            }

            /// Highest member, or -1 when empty.
            auto last() const -> int
            {
                for (int w = words - 1 ; w >= 0 ; --w)
                    if (_bits[w])
                        return 64 * w + 63 - std::countl_zero(_bits[w]);
                return -1;
            }

            auto pop_first() -> int
            {
                int v = first();
                if (v >= 0)
                    reset(v);
                return v;
            }

            auto is_subset_of(const VertexSet & other) const -> bool
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w] & ~other._bits[w])
                        return false;
                return true;
            }

            auto intersects(const VertexSet & other) const -> bool
            {
                for (int w = 0 ; w < words ; ++w)
                    if (_bits[w] & other._bits[w])
                        return true;
                return false;
            }

            /// Complement relative to {0, ..., n-1}.
            auto complement_within(int n) const -> VertexSet
            {
                VertexSet result = full(n);
                for (int w = 0 ; w < words ; ++w)
                    result._bits[w] &= ~_bits[w];
                return result;
            }

            auto to_vector() const -> std::vector<int>
            {
                std::vector<int> result;
                result.reserve(count());
                VertexSet rest = *this;
                for (int v = rest.pop_first() ; v >= 0 ; v = rest.pop_first())
                    result.push_back(v);
                return result;
            }

            auto word(int w) const -> std::uint64_t { return _bits[w]; }

            auto operator&= (const VertexSet & o) -> VertexSet & { for (int w = 0 ; w < words ; ++w) _bits[w] &= o._bits[w]; return *this; }
            auto operator|= (const VertexSet & o) -> VertexSet & { for (int w = 0 ; w < words ; ++w) _bits[w] |= o._bits[w]; return *this; }
            auto operator^= (const VertexSet & o) -> VertexSet & { for (int w = 0 ; w < words ; ++w) _bits[w] ^= o._bits[w]; return *this; }
            auto operator-= (const VertexSet & o) -> VertexSet & { for (int w = 0 ; w < words ; ++w) _bits[w] &= ~o._bits[w]; return *this; }

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator^ (VertexSet a, const VertexSet & b) -> VertexSet { return a ^= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            friend auto operator== (const VertexSet &, const VertexSet &) -> bool = default;

            /// Orders by the sorted member lists, lexicographically (so {0,5} < {1}).
            friend auto operator<=> (const VertexSet & a, const VertexSet & b) -> std::strong_ordering
            {
                VertexSet x = a, y = b;
                while (true) {
                    int p = x.pop_first(), q = y.pop_first();
                    if (p != q) {
                        if (p < 0) return std::strong_ordering::less;
                        if (q < 0) return std::strong_ordering::greater;
                        return p < q ? std::strong_ordering::less : std::strong_ordering::greater;
                    }
                    if (p < 0)
                        return std::strong_ordering::equal;
                }
            }

            auto begin() const -> VertexSetIterator;
            auto end() const -> VertexSetIterator;

        private:
            std::array<std::uint64_t, words> _bits{};
    };

    /// Visits members in increasing order.
    class VertexSetIterator
    {
        public:
            using value_type = int;
            using difference_type = std::ptrdiff_t;

            VertexSetIterator() = default;
            explicit VertexSetIterator(const VertexSet & s) : _rest(s), _current(_rest.pop_first()) { }

            auto operator* () const -> int { return _current; }
            auto operator++ () -> VertexSetIterator & { _current = _rest.pop_first(); return *this; }
            auto operator++ (int) -> VertexSetIterator { auto t = *this; ++*this; return t; }
            friend auto operator== (const VertexSetIterator & a, const VertexSetIterator & b) -> bool
            {
                return a._current == b._current;
            }

        private:
            VertexSet _rest{};
            int _current = -1;
    };

    inline auto VertexSet::begin() const -> VertexSetIterator { return VertexSetIterator{*this}; }
    inline auto VertexSet::end() const -> VertexSetIterator { return VertexSetIterator{}; }

    struct VertexSetHash
    {
        auto operator() (const VertexSet & s) const -> std::size_t
        {
            std::size_t h = 0;
            for (int w = 0 ; w < VertexSet::words ; ++w)
                h = h * 0x9e3779b97f4a7c15ULL ^ (s.word(w) + 0x7f4a7c15ULL + (h << 6) + (h >> 2));
            return h;
        }
    };
}
