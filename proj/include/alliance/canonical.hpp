#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "alliance/tree.hpp"

namespace alliance {

namespace detail {

// Rooted AHU code: "(" + concatenation of children codes, sorted
// lexicographically + ")". Equal codes iff the rooted trees are isomorphic.
inline std::string ahu_rooted(const tree& t, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.adj[root])
        if (w != parent) child_codes.push_back(ahu_rooted(t, w, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (auto& c : child_codes) code += c;
    code += ")";
    return code;
}

} // namespace detail

// Canonical code of a free tree: the AHU code rooted at the center, or for
// bicentral trees the sorted pair of the codes of the two halves across the
// center edge, joined by '|'. Equal codes iff the trees are isomorphic.
inline std::string canonical_code(const tree& t) {
    auto c = centers(t);
    if (c.size() == 1) return detail::ahu_rooted(t, c[0], -1);
    std::string a = detail::ahu_rooted(t, c[0], c[1]);
    std::string b = detail::ahu_rooted(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

namespace detail {

// Allocation-free canonical key for trees with n <= 10, used by the
// exhaustive dedupe scan. The rooted code is packed into an integer:
// '(' appends bit 1, ')' appends bit 0, children sorted by packed value.
// A rooted code on m vertices occupies exactly 2m bits and always starts
// with a 1 bit, so the integer is self-delimiting and unique per shape.
struct small_tree {
    int n = 0;
    int deg[10] = {};
    int adj[10][10];

    void clear(int vertices) {
        n = vertices;
        for (int i = 0; i < n; ++i) deg[i] = 0;
    }

    void add_edge(int u, int v) {
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
    }

    uint64_t ahu_packed(int root, int parent) const {
        uint64_t child[10];
        int lens[10];
        int cnt = 0;
        for (int i = 0; i < deg[root]; ++i) {
            int w = adj[root][i];
            if (w == parent) continue;
            child[cnt] = ahu_packed(w, root);
            lens[cnt] = 64 - std::countl_zero(child[cnt]); // 2 * subtree size
            ++cnt;
        }
        // insertion sort; ascending packed value is a canonical child order
        for (int i = 1; i < cnt; ++i) {
            uint64_t cv = child[i];
            int cl = lens[i];
            int j = i - 1;
            while (j >= 0 && child[j] > cv) {
                child[j + 1] = child[j];
                lens[j + 1] = lens[j];
                --j;
            }
            child[j + 1] = cv;
            lens[j + 1] = cl;
        }
        uint64_t code = 1; // '('
        for (int i = 0; i < cnt; ++i) code = (code << lens[i]) | child[i];
        return code << 1; // ')'
    }

    // Distinguishes unicentral from bicentral keys via bit 63.
    uint64_t canonical_key() const {
        if (n == 1) return 0b10u;
        int d[10];
        int layer[10], next[10];
        int nl = 0;
        for (int v = 0; v < n; ++v) {
            d[v] = deg[v];
            if (d[v] == 1) layer[nl++] = v;
        }
        int remaining = n;
        while (remaining > 2) {
            remaining -= nl;
            int nn = 0;
            for (int i = 0; i < nl; ++i) {
                int leaf = layer[i];
                d[leaf] = 0;
                for (int j = 0; j < deg[leaf]; ++j) {
                    int w = adj[leaf][j];
                    if (d[w] > 0 && --d[w] == 1) next[nn++] = w;
                }
            }
            for (int i = 0; i < nn; ++i) layer[i] = next[i];
            nl = nn;
        }
        if (nl == 1 || remaining == 1) {
            // single center: rooted code over the whole tree, <= 20 bits
            int c0 = layer[0];
            return ahu_packed(c0, -1);
        }
        int c0 = layer[0], c1 = layer[1];
        uint64_t a = ahu_packed(c0, c1); // halves across the center edge
        uint64_t b = ahu_packed(c1, c0); // each <= 18 bits for n <= 10
        if (b < a) std::swap(a, b);
        return (uint64_t{1} << 63) | (a << 20) | b;
    }
};

} // namespace detail

} // namespace alliance
