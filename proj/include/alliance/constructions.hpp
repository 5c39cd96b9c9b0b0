#pragma once

#include <vector>

#include "alliance/predicates.hpp"
#include "alliance/tree.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

// Tree edges split by endpoint membership in S: both ends in S (e_s),
// exactly one (e_b), none (e_y). Always |e_s| + |e_b| + |e_y| = n - 1.
struct edge_partition_t {
    std::vector<edge> e_s;
    std::vector<edge> e_b;
    std::vector<edge> e_y;
    int k = 0; // |S|
    int n = 0;
};

struct inequality_check {
    long long lhs = 0;
    long long rhs = 0;
    bool holds = false;
};

// Integer instantiation of the counting argument for a global defensive
// alliance of size k: summing the defensive condition over S gives
// 2|E_S| + k >= |E_B|, domination gives |E_B| >= n - k, and chaining the
// two bounds |E_Y| from above. The last is kept in the doubled form
// 2|E_Y| <= 4k - n - 2 so everything stays integral.
struct certificate_report {
    edge_partition_t partition;
    inequality_check ineq_degree;     // 2|E_S| + k >= |E_B|
    inequality_check ineq_domination; // |E_B| >= n - k
    inequality_check ineq_star;       // 2|E_Y| <= 4k - n - 2
    bool all_hold = false;
};

// The smaller side of the 2-coloring (ties keep vertex 0's side). For
// n >= 2 this is always a global offensive alliance of size <= n/2.
inline vertex_set smaller_side_offensive(const tree& t) {
    if (t.n == 1)
        throw degenerate_instance(
            "one-vertex tree: the empty bipartition side does not dominate");
    auto parts = bipartition(t);
    int a = parts.side_a.count();
    int b = parts.side_b.count();
    return b < a ? parts.side_b : parts.side_a;
}

inline edge_partition_t edge_partition(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    edge_partition_t parts;
    parts.k = s.count();
    parts.n = t.n;
    for (auto [u, v] : t.edges) {
        int inside = int(s.contains(u)) + int(s.contains(v));
        (inside == 2 ? parts.e_s : inside == 1 ? parts.e_b : parts.e_y).push_back({u, v});
    }
    return parts;
}

namespace detail {

inline void require_global_defensive(const tree& t, const vertex_set& s) {
    if (!is_dominating(t, s))
        throw not_global_defensive("set " + s.to_string() + " is not dominating");
    if (!is_defensive(t, s))
        throw not_global_defensive("set " + s.to_string() +
                                   " fails the defensive condition");
}

} // namespace detail

inline certificate_report defensive_certificate(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    detail::require_global_defensive(t, s);
    certificate_report rep;
    rep.partition = edge_partition(t, s);
    long long es = (long long)rep.partition.e_s.size();
    long long eb = (long long)rep.partition.e_b.size();
    long long ey = (long long)rep.partition.e_y.size();
    long long k = rep.partition.k;
    long long n = rep.partition.n;
    rep.ineq_degree = {2 * es + k, eb, 2 * es + k >= eb};
    rep.ineq_domination = {eb, n - k, eb >= n - k};
    rep.ineq_star = {2 * ey, 4 * k - n - 2, 2 * ey <= 4 * k - n - 2};
    rep.all_hold =
        rep.ineq_degree.holds && rep.ineq_domination.holds && rep.ineq_star.holds;
    return rep;
}

// Minimum vertex cover of the forest induced by y, via the exact leaf
// greedy: take the lowest-indexed leaf of the remaining forest, put its
// unique neighbor in the cover, delete both. Isolated vertices are never
// picked.
inline vertex_set min_vertex_cover_forest(const tree& t, const vertex_set& y) {
    detail::check_same_universe(t, y);
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges)
        if (y.contains(u) && y.contains(v)) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    std::vector<int> deg(t.n, 0);
    std::vector<char> alive(t.n, 0);
    y.for_each([&](int v) { alive[v] = 1; });
    for (int v = 0; v < t.n; ++v) deg[v] = int(adj[v].size());

    vertex_set cover(t.n);
    // lazy min-heap of leaves keyed by index
    std::vector<int> heap;
    auto push = [&](int v) {
        heap.push_back(v);
        std::push_heap(heap.begin(), heap.end(), std::greater<>{});
    };
    auto pop = [&] {
        std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
        int v = heap.back();
        heap.pop_back();
        return v;
    };
    for (int v = 0; v < t.n; ++v)
        if (alive[v] && deg[v] == 1) push(v);
    while (!heap.empty()) {
        int leaf = pop();
        if (!alive[leaf] || deg[leaf] != 1) continue; // stale entry
        int mate = -1;
        for (int w : adj[leaf])
            if (alive[w]) {
                mate = w;
                break;
            }
        cover.add(mate);
        alive[leaf] = 0;
        alive[mate] = 0;
        for (int w : adj[mate]) {
            if (!alive[w]) continue;
            if (--deg[w] == 1) push(w);
        }
    }
    return cover;
}

// Turns a global defensive alliance into a global offensive one by adding
// a minimum cover of the edges inside Y = V - S, i.e. breaking every edge
// the complement still contains.
inline vertex_set augment_to_offensive(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    if (t.n == 1) throw degenerate_instance("one-vertex tree: nothing to augment");
    detail::require_global_defensive(t, s);
    vertex_set result = s;
    min_vertex_cover_forest(t, s.complement()).for_each([&](int v) { result.add(v); });
    return result;
}

} // namespace alliance
