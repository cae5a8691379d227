#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace floodit {

using Vertex = std::uint32_t;

// Fixed-capacity bitset over {0..kMaxVertices-1}. Value type, O(1) membership,
// iteration in ascending vertex order. Every DP table in the library is keyed
// by these.
class VertexSet {
public:
    static constexpr std::size_t kWords = 4;
    static constexpr std::size_t kCapacity = kWords * 64;

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) {
        for (Vertex v : vs)
            insert(v);
    }

    static VertexSet single(Vertex v) {
        VertexSet s;
        s.insert(v);
        return s;
    }

    // {0..n-1}
    static VertexSet range(std::size_t n) {
        VertexSet s;
        for (std::size_t w = 0; w < kWords && n > 0; ++w) {
            const std::size_t take = n < 64 ? n : 64;
            s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
            n -= take;
        }
        return s;
    }

    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }
    bool contains(Vertex v) const { return v < kCapacity && (words_[v >> 6] & bit(v)) != 0; }

    std::size_t size() const {
        std::size_t total = 0;
        for (auto w : words_)
            total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    bool empty() const {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    // Smallest member; kCapacity when empty.
    Vertex min() const {
        for (std::size_t w = 0; w < kWords; ++w)
            if (words_[w] != 0)
                return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
        return static_cast<Vertex>(kCapacity);
    }

    bool is_subset_of(const VertexSet& other) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t w = 0; w < kWords; ++w)
            if ((words_[w] & other.words_[w]) != 0)
                return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] &= o.words_[w];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t w = 0; w < kWords; ++w)
            words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    // Lexicographic order on the ascending listing of members, so {0,2} < {1}
    // and {0} < {0,1}.
    friend bool lex_less(const VertexSet& a, const VertexSet& b) {
        for (std::size_t w = 0; w < kWords; ++w) {
            const std::uint64_t diff = a.words_[w] ^ b.words_[w];
            if (diff == 0)
                continue;
            const std::uint64_t low = diff & (~diff + 1);
            const bool in_a = (a.words_[w] & low) != 0;
            // The set holding the lowest differing element is smaller unless
            // the other set has nothing beyond that point (it is a prefix).
            const VertexSet& other = in_a ? b : a;
            bool other_has_more = (other.words_[w] & ~(low | (low - 1))) != 0;
            for (std::size_t u = w + 1; u < kWords && !other_has_more; ++u)
                other_has_more = other.words_[u] != 0;
            return in_a == other_has_more;
        }
        return false;
    }

    std::size_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : words_) {
            h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t word, std::uint64_t rest)
            : set_(set), word_(word), rest_(rest) {
            skip();
        }

        Vertex operator*() const {
            return static_cast<Vertex>(word_ * 64 + std::countr_zero(rest_));
        }
        const_iterator& operator++() {
            rest_ &= rest_ - 1;
            skip();
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        friend bool operator==(const const_iterator& a, const const_iterator& b) {
            return a.word_ == b.word_ && a.rest_ == b.rest_;
        }

    private:
        void skip() {
            while (rest_ == 0 && word_ + 1 < kWords) {
                ++word_;
                rest_ = set_->words_[word_];
            }
            if (rest_ == 0)
                word_ = kWords;
        }

        const VertexSet* set_ = nullptr;
        std::size_t word_ = kWords;
        std::uint64_t rest_ = 0;
    };

    const_iterator begin() const { return const_iterator(this, 0, words_[0]); }
    const_iterator end() const { return const_iterator(this, kWords, 0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

} // namespace floodit

template <>
struct std::hash<floodit::VertexSet> {
    std::size_t operator()(const floodit::VertexSet& s) const { return s.hash(); }
};
