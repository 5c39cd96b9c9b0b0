#pragma once

#include <cstdint>
#include <stdexcept>

#include "alliance/predicates.hpp"
#include "alliance/tree.hpp"
#include "alliance/vertex_set.hpp"

namespace alliance {

enum class alliance_kind { defensive, offensive };

inline const char* to_string(alliance_kind k) {
    return k == alliance_kind::defensive ? "defensive" : "offensive";
}

struct solver_options {
    // Worst-case subset counts stay interactive up to here; raise
    // explicitly for bigger instances.
    int max_exact_n = 22;
};

struct solve_result {
    int value = 0;
    vertex_set witness;
    alliance_kind kind = alliance_kind::defensive;
    uint64_t explored = 0; // candidate sets examined
};

namespace detail {

// Minimum global alliance by exhaustive search: cardinalities ascend, and
// within a cardinality candidates go in lexicographic order of their sorted
// index tuples, so the first hit is both minimum and deterministic.
inline solve_result solve_min_alliance(const tree& t, alliance_kind kind,
                                       const solver_options& opts) {
    if (t.n > opts.max_exact_n)
        throw instance_too_large(
            "n=" + std::to_string(t.n) + " exceeds the exact-size cap " +
            std::to_string(opts.max_exact_n) + "; raise --max-exact-n to override");
    const int n = t.n;
    // A bipartition side of size <= floor(n/2) is always a global offensive
    // alliance, so that cardinality level is never exceeded for n >= 2.
    const int k_max = (kind == alliance_kind::offensive && n >= 2) ? n / 2 : n;
    solve_result res;
    res.kind = kind;
    vertex_set candidate(n);
    std::vector<int> idx;
    for (int k = 1; k <= k_max; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            candidate.clear();
            for (int v : idx) candidate.add(v);
            ++res.explored;
            if (is_dominating(t, candidate) &&
                (kind == alliance_kind::defensive ? is_defensive(t, candidate)
                                                  : is_offensive(t, candidate))) {
                res.value = k;
                res.witness = candidate;
                return res;
            }
            int i = k - 1;
            while (i >= 0 && idx[i] == n - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    throw std::logic_error("no global alliance found; search invariant broken");
}

} // namespace detail

// Minimum size of a global defensive alliance, with its first witness in
// the deterministic search order.
inline solve_result gamma_a(const tree& t, const solver_options& opts = {}) {
    return detail::solve_min_alliance(t, alliance_kind::defensive, opts);
}

// Minimum size of a global offensive alliance.
inline solve_result gamma_o(const tree& t, const solver_options& opts = {}) {
    return detail::solve_min_alliance(t, alliance_kind::offensive, opts);
}

} // namespace alliance
