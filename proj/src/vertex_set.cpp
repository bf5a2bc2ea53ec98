#include "gpos/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace gpos {

namespace {

Word tail_mask(std::size_t n) {
    const std::size_t r = n % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

VertexSet::VertexSet(std::size_t n, std::initializer_list<Vertex> members) : VertexSet(n) {
    for (Vertex v : members) {
        assert(v < n);
        set(v);
    }
}

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members) : VertexSet(n) {
    for (Vertex v : members) {
        assert(v < n);
        set(v);
    }
}

VertexSet VertexSet::full(std::size_t n) {
    VertexSet s(n);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    if (!s.words_.empty()) s.words_.back() &= tail_mask(n);
    return s;
}

VertexSet VertexSet::from_words(std::size_t n, std::span<const Word> words) {
    VertexSet s(n);
    std::copy_n(words.begin(), std::min(words.size(), s.words_.size()), s.words_.begin());
    if (!s.words_.empty()) s.words_.back() &= tail_mask(n);
    return s;
}

std::size_t VertexSet::count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

Vertex VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return n_;
}

Vertex VertexSet::next(Vertex v) const noexcept {
    Vertex start = v + 1;
    if (start >= n_) return n_;
    std::size_t w = start / kWordBits;
    Word bits = words_[w] & (~Word{0} << (start % kWordBits));
    while (true) {
        if (bits != 0) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return n_;
        bits = words_[w];
    }
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
}

VertexSet VertexSet::complement() const {
    VertexSet s = full(n_);
    return s -= *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto va = a.to_vector();
    const auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string VertexSet::str() const {
    std::string out = "{";
    bool first_member = true;
    for_each([&](Vertex v) {
        if (!first_member) out += ',';
        out += std::to_string(v);
        first_member = false;
    });
    return out + "}";
}

}  // namespace gpos
