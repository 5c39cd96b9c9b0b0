#pragma once

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "alliance/errors.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

using edge = std::pair<int, int>; // normalized u < v

// Connected acyclic graph on vertices {0..n-1}. Edges are stored
// normalized (u < v) and sorted; neighbor lists ascend. Construction
// validates unless the unchecked path is used by a generator that
// produces trees by construction.
struct tree {
    int n = 0;
    std::vector<edge> edges;
    std::vector<std::vector<int>> adj;

    static tree from_edges(int n, std::vector<edge> edges) {
        tree t = assemble(n, std::move(edges));
        t.validate();
        return t;
    }

    // For generators whose output is a tree by construction (Pruefer
    // decode). Skips the connectivity scan; normalization still runs.
    static tree from_edges_unchecked(int n, std::vector<edge> edges) {
        return assemble(n, std::move(edges));
    }

    int degree(int v) const { return int(adj[v].size()); }

    bool has_edge(int u, int v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges.begin(), edges.end(), edge{u, v});
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n)
            throw vertex_out_of_range("vertex " + std::to_string(v) +
                                      " outside {0.." + std::to_string(n - 1) + "}");
    }

    void validate() const {
        if (n < 1) throw not_a_tree("vertex count must be >= 1");
        for (size_t i = 0; i + 1 < edges.size(); ++i)
            if (edges[i] == edges[i + 1])
                throw not_a_tree("duplicate edge " + std::to_string(edges[i].first) +
                                 "-" + std::to_string(edges[i].second));
        if (int(edges.size()) != n - 1)
            throw not_a_tree("tree on " + std::to_string(n) + " vertices needs " +
                             std::to_string(n - 1) + " edges, got " +
                             std::to_string(edges.size()));
        // n-1 edges + connected => acyclic
        std::vector<int> stack{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n) throw not_a_tree("graph is disconnected");
    }

private:
    static tree assemble(int n, std::vector<edge> raw) {
        tree t;
        t.n = n;
        t.edges = std::move(raw);
        for (auto& [u, v] : t.edges) {
            if (u == v)
                throw not_a_tree("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n)
                throw vertex_out_of_range("edge endpoint outside {0.." +
                                          std::to_string(n - 1) + "}");
        }
        std::sort(t.edges.begin(), t.edges.end());
        t.adj.assign(n, {});
        for (auto [u, v] : t.edges) {
            t.adj[u].push_back(v);
            t.adj[v].push_back(u);
        }
        for (auto& nb : t.adj) std::sort(nb.begin(), nb.end());
        return t;
    }
};

// Two-coloring of a tree; side_a holds vertex 0.
struct bipartition_t {
    vertex_set side_a;
    vertex_set side_b;
};

// Breadth-first 2-coloring from vertex 0. Deterministic.
inline bipartition_t bipartition(const tree& t) {
    bipartition_t parts{vertex_set(t.n), vertex_set(t.n)};
    std::vector<int> color(t.n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : t.adj[v]) {
            if (color[w] == -1) {
                color[w] = color[v] ^ 1;
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < t.n; ++v)
        (color[v] == 0 ? parts.side_a : parts.side_b).add(v);
    return parts;
}

// Tree center(s) by iterative leaf removal; one or two vertices, ascending.
inline std::vector<int> centers(const tree& t) {
    if (t.n == 1) return {0};
    if (t.n == 2) return {0, 1};
    std::vector<int> deg(t.n);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        remaining -= int(layer.size());
        std::vector<int> next;
        for (int leaf : layer) {
            deg[leaf] = 0;
            for (int w : t.adj[leaf])
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace detail {

inline bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    errno = 0;
    char* end = nullptr;
    out = std::strtoll(tok.c_str(), &end, 10);
    return errno == 0 && end == tok.c_str() + tok.size();
}

} // namespace detail

// Edge-list text format: one edge per line as two nonnegative integers,
// blank lines and lines starting with '#' ignored, optional header line
// "vertices <n>" (mandatory for the one-vertex tree). n defaults to
// (max vertex id + 1) and ids must cover {0..n-1}.
inline tree parse_tree(std::istream& in) {
    std::vector<edge> edges;
    long long declared_n = -1;
    int max_id = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        std::istringstream ls(line);
        std::string a, b, rest;
        ls >> a;
        if (a == "vertices") {
            if (!(ls >> b) || (ls >> rest))
                throw parse_error("line " + std::to_string(lineno) +
                                  ": header needs exactly one integer");
            long long nv;
            if (!detail::parse_int_token(b, nv) || nv < 1)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": bad vertex count '" + b + "'");
            if (declared_n != -1)
                throw parse_error("line " + std::to_string(lineno) +
                                  ": duplicate vertices header");
            declared_n = nv;
            continue;
        }
        if (!(ls >> b) || (ls >> rest))
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected 'u v'");
        long long u, v;
        if (!detail::parse_int_token(a, u) || !detail::parse_int_token(b, v))
            throw parse_error("line " + std::to_string(lineno) +
                              ": expected two nonnegative integers");
        if (u > 1'000'000'000 || v > 1'000'000'000)
            throw parse_error("line " + std::to_string(lineno) + ": vertex id too large");
        if (u == v)
            throw not_a_tree("line " + std::to_string(lineno) + ": self-loop at " +
                             std::to_string(u));
        edges.emplace_back(int(std::min(u, v)), int(std::max(u, v)));
        max_id = std::max(max_id, int(std::max(u, v)));
    }
    if (declared_n == -1 && edges.empty())
        throw parse_error("no edges and no vertices header");
    int n = declared_n != -1 ? int(declared_n) : max_id + 1;
    if (max_id >= n)
        throw bad_vertex_ids("vertex id " + std::to_string(max_id) +
                             " outside declared range {0.." + std::to_string(n - 1) + "}");
    if (n >= 2) {
        std::vector<char> present(n, 0);
        for (auto [u, v] : edges) present[u] = present[v] = 1;
        for (int v = 0; v < n; ++v)
            if (!present[v])
                throw bad_vertex_ids("vertex id " + std::to_string(v) +
                                     " missing from {0.." + std::to_string(n - 1) + "}");
    }
    return tree::from_edges(n, std::move(edges));
}

inline tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    return parse_tree(in);
}

inline tree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return parse_tree(in);
}

} // namespace alliance
