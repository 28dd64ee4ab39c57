#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fcad {

// Set of small non-negative indices backed by a bit vector.
// The comparison order is the numeric value of the bit string (index i is
// bit i), which gives one stable canonical order for sets everywhere:
// {} < {0} < {1} < {0,1} < {2} < ...
class IndexSet {
public:
    IndexSet() = default;

    static IndexSet full(int n) {
        IndexSet s;
        for (int i = 0; i < n; ++i) s.set(i);
        return s;
    }
    static IndexSet single(int i) {
        IndexSet s;
        s.set(i);
        return s;
    }
    static IndexSet from_mask(std::uint64_t mask) {
        IndexSet s;
        if (mask) s.w_.push_back(mask);
        return s;
    }
    static IndexSet from_indices(const std::vector<int>& idx) {
        IndexSet s;
        for (int i : idx) s.set(i);
        return s;
    }

    bool test(int i) const {
        std::size_t w = static_cast<std::size_t>(i) / 64;
        if (i < 0 || w >= w_.size()) return false;
        return (w_[w] >> (i % 64)) & 1u;
    }
    void set(int i) {
        std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= w_.size()) w_.resize(w + 1, 0);
        w_[w] |= std::uint64_t{1} << (i % 64);
    }
    void reset(int i) {
        std::size_t w = static_cast<std::size_t>(i) / 64;
        if (w >= w_.size()) return;
        w_[w] &= ~(std::uint64_t{1} << (i % 64));
        trim();
    }

    bool empty() const { return w_.empty(); }
    int count() const {
        int n = 0;
        for (auto w : w_) n += std::popcount(w);
        return n;
    }
    // -1 when empty
    int max_index() const {
        if (w_.empty()) return -1;
        std::size_t last = w_.size() - 1;
        return static_cast<int>(last * 64 + 63 - std::countl_zero(w_[last]));
    }
    int min_index() const {
        for (std::size_t w = 0; w < w_.size(); ++w)
            if (w_[w]) return static_cast<int>(w * 64 + std::countr_zero(w_[w]));
        return -1;
    }

    bool subset_of(const IndexSet& o) const {
        if (w_.size() > o.w_.size()) return false;
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const IndexSet& o) const {
        std::size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < n; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    IndexSet& operator|=(const IndexSet& o) {
        if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    IndexSet& operator&=(const IndexSet& o) {
        if (w_.size() > o.w_.size()) w_.resize(o.w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        trim();
        return *this;
    }
    IndexSet& subtract(const IndexSet& o) {
        std::size_t n = w_.size() < o.w_.size() ? w_.size() : o.w_.size();
        for (std::size_t i = 0; i < n; ++i) w_[i] &= ~o.w_[i];
        trim();
        return *this;
    }

    friend IndexSet operator|(IndexSet a, const IndexSet& b) { a |= b; return a; }
    friend IndexSet operator&(IndexSet a, const IndexSet& b) { a &= b; return a; }
    friend IndexSet set_minus(IndexSet a, const IndexSet& b) { a.subtract(b); return a; }

    bool operator==(const IndexSet& o) const { return w_ == o.w_; }
    std::strong_ordering operator<=>(const IndexSet& o) const {
        if (w_.size() != o.w_.size())
            return w_.size() <=> o.w_.size();
        for (std::size_t i = w_.size(); i-- > 0;) {
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        }
        return std::strong_ordering::equal;
    }

    // Only valid when max_index() < 64; enumeration loops stay well below that.
    std::uint64_t as_mask() const { return w_.empty() ? 0 : w_[0]; }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t w = 0; w < w_.size(); ++w) {
            std::uint64_t bits = w_[w];
            while (bits) {
                f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i);
        });
        return s + "}";
    }
    std::string to_string(const std::vector<std::string>& names) const {
        std::string s = "{";
        bool first = true;
        for_each([&](int i) {
            if (!first) s += ",";
            first = false;
            if (i >= 0 && static_cast<std::size_t>(i) < names.size())
                s += names[static_cast<std::size_t>(i)];
            else
                s += "#" + std::to_string(i);
        });
        return s + "}";
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ull;
        for (auto w : w_) {
            h ^= static_cast<std::size_t>(w);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    std::vector<std::uint64_t> w_;  // trailing zero words trimmed

    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }
};

struct IndexSetHash {
    std::size_t operator()(const IndexSet& s) const { return s.hash(); }
};

}  // namespace fcad
