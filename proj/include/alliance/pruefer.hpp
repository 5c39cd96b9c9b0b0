#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "alliance/errors.hpp"
#include "alliance/tree.hpp"

namespace alliance {

namespace detail {

// Core of the standard decode, writing n-1 edges into out[]. Assumes the
// sequence is already range-checked. O(n) pointer walk.
inline void pruefer_decode_raw(const int* seq, int n, std::array<int, 2>* out) {
    if (n == 1) return;
    if (n == 2) {
        out[0] = {0, 1};
        return;
    }
    int deg[64];
    std::vector<int> heap_deg;
    int* d = deg;
    if (n > 64) {
        heap_deg.assign(n, 1);
        d = heap_deg.data();
    } else {
        for (int i = 0; i < n; ++i) d[i] = 1;
    }
    int len = n - 2;
    for (int i = 0; i < len; ++i) ++d[seq[i]];
    int ptr = 0;
    while (d[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < len; ++i) {
        int x = seq[i];
        out[i][0] = leaf;
        out[i][1] = x;
        if (--d[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (d[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    out[len][0] = leaf;
    out[len][1] = n - 1;
}

} // namespace detail

// Decodes a Pruefer sequence into the unique labeled tree on n vertices.
// n in {1,2} takes the empty sequence.
inline tree from_pruefer(const std::vector<int>& seq, int n) {
    if (n < 1) throw bad_sequence("vertex count must be >= 1");
    int expect = n >= 2 ? n - 2 : 0;
    if (int(seq.size()) != expect)
        throw bad_sequence("sequence for n=" + std::to_string(n) + " must have length " +
                           std::to_string(expect) + ", got " + std::to_string(seq.size()));
    for (int x : seq)
        if (x < 0 || x >= n)
            throw bad_sequence("entry " + std::to_string(x) + " outside {0.." +
                               std::to_string(n - 1) + "}");
    std::vector<edge> edges;
    if (n >= 2) {
        std::vector<std::array<int, 2>> buf(n - 1);
        detail::pruefer_decode_raw(seq.data(), n, buf.data());
        edges.reserve(n - 1);
        for (int i = 0; i < n - 1; ++i) edges.emplace_back(buf[i][0], buf[i][1]);
    }
    return tree::from_edges_unchecked(n, std::move(edges));
}

// Encodes a tree as its Pruefer sequence: repeatedly record the neighbor
// of the smallest-indexed leaf. Inverse of from_pruefer.
inline std::vector<int> to_pruefer(const tree& t) {
    int n = t.n;
    if (n <= 2) return {};
    std::vector<int> parent(n, -1);
    // root at n-1 so the final surviving edge matches the decoder's
    std::vector<int> order{n - 1};
    order.reserve(n);
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : t.adj[v])
            if (w != parent[v]) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.degree(v);
    std::vector<int> seq;
    seq.reserve(n - 2);
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < n - 2; ++i) {
        int next = parent[leaf];
        seq.push_back(next);
        if (--deg[next] == 1 && next < ptr) {
            leaf = next;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    return seq;
}

// Corpus dump line "n:p1,p2,...,p(n-2)"; empty sequence for n <= 2.
inline std::string pruefer_dump(const tree& t) {
    std::string s = std::to_string(t.n) + ":";
    auto seq = to_pruefer(t);
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s;
}

inline tree parse_pruefer_dump(const std::string& line) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw parse_error("dump line missing ':'");
    long long n;
    if (!detail::parse_int_token(line.substr(0, colon), n) || n < 1)
        throw parse_error("bad vertex count in dump line");
    std::vector<int> seq;
    std::string rest = line.substr(colon + 1);
    if (!rest.empty()) {
        size_t pos = 0;
        while (pos <= rest.size()) {
            size_t comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            long long x;
            if (!detail::parse_int_token(tok, x))
                throw parse_error("bad sequence entry '" + tok + "'");
            seq.push_back(int(x));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    return from_pruefer(seq, int(n));
}

} // namespace alliance
