#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gpos {

using Vertex = std::size_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Fixed-width bit-set over vertex indices 0..n-1. Bits above n are always
/// zero, so word-wise comparison is exact.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}
    VertexSet(std::size_t n, std::initializer_list<Vertex> members);
    VertexSet(std::size_t n, std::span<const Vertex> members);

    static VertexSet full(std::size_t n);
    /// Builds from raw words; bits at or above n are masked off.
    static VertexSet from_words(std::size_t n, std::span<const Word> words);

    std::size_t width() const noexcept { return n_; }
    std::size_t count() const noexcept;
    bool empty() const noexcept;

    bool test(Vertex v) const noexcept { return (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }
    void set(Vertex v) noexcept { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
    void reset(Vertex v) noexcept { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

    /// Smallest member, or width() when empty.
    Vertex first() const noexcept;
    /// Smallest member strictly greater than v, or width().
    Vertex next(Vertex v) const noexcept;

    std::vector<Vertex> to_vector() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word bits = words_[w];
            while (bits != 0) {
                f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    bool is_subset_of(const VertexSet& other) const noexcept;
    bool intersects(const VertexSet& other) const noexcept;

    VertexSet& operator|=(const VertexSet& o) noexcept;
    VertexSet& operator&=(const VertexSet& o) noexcept;
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) noexcept;
    VertexSet complement() const;

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    /// Orders by sorted member list, lexicographically; used for witness tie-breaks.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    std::span<const Word> words() const noexcept { return words_; }
    std::span<Word> words() noexcept { return words_; }

    /// "{0,3,5}".
    std::string str() const;

private:
    std::size_t n_ = 0;
    std::vector<Word> words_;
};

}  // namespace gpos
