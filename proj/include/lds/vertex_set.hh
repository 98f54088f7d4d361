#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lds
{
    using Vertex = int;

    /// Fixed-capacity bit set over vertices 0..capacity-1. All binary operations
    /// require both operands to share the same capacity.
    class VertexSet
    {
    public:
        VertexSet() = default;

        explicit VertexSet(int capacity) :
            _capacity(capacity),
            _words((static_cast<std::size_t>(capacity) + 63) / 64, 0)
        {
        }

        VertexSet(int capacity, std::initializer_list<Vertex> members) :
            VertexSet(capacity)
        {
            for (auto v : members)
                set(v);
        }

        auto capacity() const -> int { return _capacity; }

        auto test(Vertex v) const -> bool
        {
            return (_words[word(v)] >> bit(v)) & 1u;
        }

        auto set(Vertex v) -> void { _words[word(v)] |= mask(v); }
        auto reset(Vertex v) -> void { _words[word(v)] &= ~mask(v); }

        auto count() const -> int
        {
            int total = 0;
            for (auto w : _words)
                total += std::popcount(w);
            return total;
        }

        auto empty() const -> bool
        {
            for (auto w : _words)
                if (w)
                    return false;
            return true;
        }

        /// |*this \ other| without materialising the difference.
        auto count_without(const VertexSet & other) const -> int
        {
            int total = 0;
            for (std::size_t i = 0; i < _words.size(); ++i)
                total += std::popcount(_words[i] & ~other._words[i]);
            return total;
        }

        auto operator&=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= other._words[i];
            return *this;
        }

        auto operator|=(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] |= other._words[i];
            return *this;
        }

        auto subtract(const VertexSet & other) -> VertexSet &
        {
            for (std::size_t i = 0; i < _words.size(); ++i)
                _words[i] &= ~other._words[i];
            return *this;
        }

        friend auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
        friend auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
        friend auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a.subtract(b); }

        friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

        /// Calls f(v) for each member in ascending order; stops early if f returns false.
        template <typename F>
        auto for_each(F && f) const -> bool
        {
            for (std::size_t i = 0; i < _words.size(); ++i) {
                auto w = _words[i];
                while (w) {
                    auto v = static_cast<Vertex>(i * 64 + std::countr_zero(w));
                    if (! f(v))
                        return false;
                    w &= w - 1;
                }
            }
            return true;
        }

        auto members() const -> std::vector<Vertex>
        {
            std::vector<Vertex> result;
            for_each([&](Vertex v) { result.push_back(v); return true; });
            return result;
        }

    private:
        static auto word(Vertex v) -> std::size_t { return static_cast<std::size_t>(v) / 64; }
        static auto bit(Vertex v) -> unsigned { return static_cast<unsigned>(v) % 64; }
        static auto mask(Vertex v) -> std::uint64_t { return std::uint64_t{1} << bit(v); }

        int _capacity = 0;
        std::vector<std::uint64_t> _words;
    };
}
