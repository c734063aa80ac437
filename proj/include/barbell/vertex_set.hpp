#pragma once

#include <cstdint>
#include <bit>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace barbell {

// Subset of the vertices {0, ..., universe-1} of some host graph, stored as
// a packed bitset.  All set operations require matching universes.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.set(v);
        return s;
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        check(v);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(int v) {
        check(v);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }

    void reset(int v) {
        check(v);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // First member, or -1 when empty.
    int first() const { return next(-1); }

    // Smallest member strictly greater than `after`, or -1.
    int next(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        size_t wi = size_t(start) >> 6;
        uint64_t cur = w_[wi] & (~uint64_t(0) << (start & 63));
        while (true) {
            if (cur) return int(wi * 64 + std::countr_zero(cur));
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool subset_of(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    int intersection_count(const VertexSet& o) const {
        same(o);
        int c = 0;
        for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    // Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same(o);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Lexicographic order on ascending member lists: {0,2} < {1}, {1} < {1,2}.
    bool lex_less(const VertexSet& o) const {
        same(o);
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](int v) {
            if (sep) s += ",";
            s += std::to_string(v + 1);  // 1-based for display
            sep = true;
        });
        return s + "}";
    }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe " + std::to_string(n_));
    }
    void same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace barbell
