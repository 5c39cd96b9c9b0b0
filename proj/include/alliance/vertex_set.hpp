#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "alliance/errors.hpp"

namespace alliance {

// Subset of {0..n-1} backed by a word-packed bitset. Membership and
// mutation are O(1); cardinality and complement are O(n/64).
class vertex_set {
public:
    vertex_set() = default;

    explicit vertex_set(int universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {
        if (universe < 0)
            throw vertex_out_of_range("vertex_set universe must be >= 0");
    }

    static vertex_set of(int universe, std::initializer_list<int> members) {
        vertex_set s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    static vertex_set from_indices(int universe, const std::vector<int>& members) {
        vertex_set s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        check(v);
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        bits_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void remove(int v) {
        check(v);
        bits_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : bits_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : bits_) c += std::popcount(w);
        return c;
    }

    bool empty() const {
        for (uint64_t w : bits_)
            if (w) return false;
        return true;
    }

    vertex_set complement() const {
        vertex_set s(universe_);
        for (size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
        s.trim();
        return s;
    }

    // Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (size_t i = 0; i < bits_.size(); ++i) {
            uint64_t w = bits_[i];
            while (w) {
                out.push_back(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < bits_.size(); ++i) {
            uint64_t w = bits_[i];
            while (w) {
                fn(int(i << 6) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    bool operator==(const vertex_set& o) const {
        return universe_ == o.universe_ && bits_ == o.bits_;
    }
    bool operator!=(const vertex_set& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw vertex_out_of_range("vertex " + std::to_string(v) +
                                      " outside universe {0.." +
                                      std::to_string(universe_ - 1) + "}");
    }

    void trim() {
        int r = universe_ & 63;
        if (r != 0 && !bits_.empty()) bits_.back() &= (uint64_t{1} << r) - 1;
    }

    int universe_ = 0;
    std::vector<uint64_t> bits_;
};

} // namespace alliance
