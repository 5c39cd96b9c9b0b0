#pragma once

#include "alliance/tree.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

namespace detail {

inline void check_same_universe(const tree& t, const vertex_set& s) {
    if (s.universe() != t.n)
        throw vertex_out_of_range("set universe " + std::to_string(s.universe()) +
                                  " does not match tree on " + std::to_string(t.n) +
                                  " vertices");
}

} // namespace detail

// N[v] = {v} union neighbors(v).
inline vertex_set closed_neighborhood(const tree& t, int v) {
    t.check_vertex(v);
    vertex_set s(t.n);
    s.add(v);
    for (int w : t.adj[v]) s.add(w);
    return s;
}

// Vertices outside s adjacent to at least one member of s.
inline vertex_set boundary(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    vertex_set b(t.n);
    for (int v = 0; v < t.n; ++v) {
        if (s.contains(v)) continue;
        for (int w : t.adj[v]) {
            if (s.contains(w)) {
                b.add(v);
                break;
            }
        }
    }
    return b;
}

// S union boundary(S) = V: every vertex is in s or adjacent to it.
inline bool is_dominating(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    for (int v = 0; v < t.n; ++v) {
        if (s.contains(v)) continue;
        bool covered = false;
        for (int w : t.adj[v]) {
            if (s.contains(w)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

// For every v in s: |N[v] cap S| >= |N[v] cap (V-S)|. Vacuously true for
// the empty set.
inline bool is_defensive(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    for (int v = 0; v < t.n; ++v) {
        if (!s.contains(v)) continue;
        int inside = 1; // v itself
        int outside = 0;
        for (int w : t.adj[v]) (s.contains(w) ? inside : outside)++;
        if (inside < outside) return false;
    }
    return true;
}

// For every v in boundary(s): |N[v] cap S| >= |N[v] - S|, where v counts
// itself on the outside.
inline bool is_offensive(const tree& t, const vertex_set& s) {
    detail::check_same_universe(t, s);
    for (int v = 0; v < t.n; ++v) {
        if (s.contains(v)) continue;
        int inside = 0;
        int outside = 1; // v itself
        for (int w : t.adj[v]) (s.contains(w) ? inside : outside)++;
        if (inside == 0) continue; // not on the boundary
        if (inside < outside) return false;
    }
    return true;
}

inline bool is_global_defensive(const tree& t, const vertex_set& s) {
    return is_dominating(t, s) && is_defensive(t, s);
}

inline bool is_global_offensive(const tree& t, const vertex_set& s) {
    return is_dominating(t, s) && is_offensive(t, s);
}

} // namespace alliance
