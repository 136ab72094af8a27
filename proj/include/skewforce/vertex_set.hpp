#ifndef SKEWFORCE_VERTEX_SET_HPP
#define SKEWFORCE_VERTEX_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "skewforce/errors.hpp"

namespace skewforce {

// Word-sized subset representation used by the exhaustive routines, which
// are all capped well below 64 vertices.
using Mask = std::uint64_t;

constexpr int kMaskBits = 64;

inline Mask full_mask(int n) { return n >= kMaskBits ? ~Mask{0} : ((Mask{1} << n) - 1); }
inline Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

// Subset of {0, ..., n-1}, stored as a dense bitset.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int n) : n_(n), words_(word_count(n), 0) {
        if (n < 0) throw ValidationError("vertex set universe must be non-negative");
    }

    VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
        for (int v : members) insert(v);
    }

    template <typename Range>
    static VertexSet of(int n, const Range& members) {
        VertexSet s(n);
        for (int v : members) s.insert(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    static VertexSet from_mask(int n, Mask m) {
        if (n > kMaskBits) throw ValidationError("mask conversion needs n <= 64");
        if ((m & ~full_mask(n)) != 0) throw ValidationError("mask has members outside the universe");
        VertexSet s(n);
        if (n > 0) s.words_[0] = m;
        return s;
    }

    int universe() const noexcept { return n_; }

    bool contains(int v) const {
        return v >= 0 && v < n_ && ((words_[v / kMaskBits] >> (v % kMaskBits)) & 1U) != 0;
    }

    void insert(int v) {
        check(v);
        words_[v / kMaskBits] |= bit(v % kMaskBits);
    }

    void erase(int v) {
        check(v);
        words_[v / kMaskBits] &= ~bit(v % kMaskBits);
    }

    int size() const {
        int c = 0;
        for (Mask w : words_) c += popcount(w);
        return c;
    }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](Mask w) { return w == 0; });
    }

    bool is_full() const { return size() == n_; }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Mask m = words_[w];
            while (m != 0) {
                out.push_back(static_cast<int>(w) * kMaskBits + lowest(m));
                m &= m - 1;
            }
        }
        return out;
    }

    Mask mask() const {
        if (n_ > kMaskBits) throw ValidationError("mask conversion needs n <= 64");
        return words_.empty() ? Mask{0} : words_[0];
    }

    VertexSet complement() const {
        VertexSet out(n_);
        for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = ~words_[w];
        out.trim();
        return out;
    }

    bool is_subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~other.words_[w]) != 0) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

    // Orders by universe, then lexicographically by sorted member list.
    friend bool operator<(const VertexSet& a, const VertexSet& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.members() < b.members();
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : members()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    static std::size_t word_count(int n) {
        return n <= 0 ? 0 : static_cast<std::size_t>((n + kMaskBits - 1) / kMaskBits);
    }

    void check(int v) const {
        if (v < 0 || v >= n_)
            throw ValidationError("vertex " + std::to_string(v) + " outside universe of size " +
                                  std::to_string(n_));
    }

    void same_universe(const VertexSet& o) const {
        if (o.n_ != n_) throw ValidationError("vertex sets over different universes");
    }

    void trim() {
        if (n_ % kMaskBits != 0 && !words_.empty()) words_.back() &= full_mask(n_ % kMaskBits);
    }

    int n_ = 0;
    std::vector<Mask> words_;
};

} // namespace skewforce

#endif // SKEWFORCE_VERTEX_SET_HPP
