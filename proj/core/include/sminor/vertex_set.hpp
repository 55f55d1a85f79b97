#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <span>
#include <vector>

namespace sminor {

using Vertex = std::size_t;

inline constexpr Vertex no_vertex = std::numeric_limits<Vertex>::max();

/// Dense bit vector over the vertex ids [0, universe).
///
/// All binary operations require both operands to share the same universe.
/// Iteration yields members in ascending order, which every algorithm in the
/// library relies on for its deterministic tie-breaking.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0)
    {
    }

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe)
    {
        for (Vertex v : members)
            insert(v);
    }

    VertexSet(std::size_t universe, std::span<const Vertex> members) : VertexSet(universe)
    {
        for (Vertex v : members)
            insert(v);
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (auto & w : s.words_)
            w = ~Word{0};
        s.trim();
        return s;
    }

    /// Builds a set from the low bits of a 64-bit mask (universe <= 64).
    static VertexSet from_mask(std::size_t universe, Word mask)
    {
        VertexSet s(universe);
        if (!s.words_.empty())
            s.words_[0] = mask;
        s.trim();
        return s;
    }

    [[nodiscard]] std::size_t universe() const { return universe_; }

    [[nodiscard]] bool contains(Vertex v) const
    {
        return v < universe_ && ((words_[v / word_bits] >> (v % word_bits)) & 1U) != 0;
    }

    void insert(Vertex v) { words_[v / word_bits] |= Word{1} << (v % word_bits); }

    void erase(Vertex v) { words_[v / word_bits] &= ~(Word{1} << (v % word_bits)); }

    void clear()
    {
        for (auto & w : words_)
            w = 0;
    }

    [[nodiscard]] std::size_t size() const
    {
        std::size_t c = 0;
        for (Word w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool empty() const
    {
        for (Word w : words_)
            if (w != 0)
                return false;
        return true;
    }

    /// Smallest member, or no_vertex.
    [[nodiscard]] Vertex first() const { return next_from(0); }

    /// Smallest member >= v, or no_vertex.
    [[nodiscard]] Vertex next_from(Vertex v) const
    {
        if (v >= universe_)
            return no_vertex;
        std::size_t wi = v / word_bits;
        Word w = words_[wi] & (~Word{0} << (v % word_bits));
        while (true) {
            if (w != 0)
                return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size())
                return no_vertex;
            w = words_[wi];
        }
    }

    [[nodiscard]] Word word(std::size_t i) const { return i < words_.size() ? words_[i] : 0; }

    /// Low 64 bits; only meaningful when universe <= 64.
    [[nodiscard]] Word mask() const { return word(0); }

    [[nodiscard]] std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(size());
        for (Vertex v : *this)
            out.push_back(v);
        return out;
    }

    [[nodiscard]] bool intersects(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & o.words_[i]) != 0)
                return true;
        return false;
    }

    [[nodiscard]] bool is_subset_of(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0)
                return false;
        return true;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Lexicographic comparison on the ascending member list, used for
    /// canonical ordering of families.
    friend bool operator<(const VertexSet & a, const VertexSet & b)
    {
        return a.to_vector() < b.to_vector();
    }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex *;
        using reference = Vertex;

        iterator() = default;
        iterator(const VertexSet * s, Vertex v) : set_(s), v_(v) {}

        Vertex operator*() const { return v_; }

        iterator & operator++()
        {
            v_ = set_->next_from(v_ + 1);
            return *this;
        }

        iterator operator++(int)
        {
            auto t = *this;
            ++*this;
            return t;
        }

        friend bool operator==(const iterator & a, const iterator & b) { return a.v_ == b.v_; }

    private:
        const VertexSet * set_ = nullptr;
        Vertex v_ = no_vertex;
    };

    [[nodiscard]] iterator begin() const { return {this, first()}; }
    [[nodiscard]] iterator end() const { return {this, no_vertex}; }

private:
    void trim()
    {
        if (universe_ % word_bits != 0 && !words_.empty())
            words_.back() &= (Word{1} << (universe_ % word_bits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace sminor
