#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "alliance/canonical.hpp"
#include "alliance/errors.hpp"
#include "alliance/pruefer.hpp"
#include "alliance/tree.hpp"

namespace alliance {

inline constexpr int max_labeled_enum_n = 9;  // 9^7 sequences
inline constexpr int max_free_enum_n = 10;    // 10^8 sequences behind the dedupe

struct corpus_spec {
    enum class mode_t { exhaustive_labeled, exhaustive_free, random };
    mode_t mode = mode_t::exhaustive_labeled;
    int n_lo = 1;
    int n_hi = 1;
    int sample_count = 1; // random mode
    uint64_t seed = 0;    // random mode

    void validate() const {
        if (n_lo < 1 || n_hi < n_lo)
            throw error("bad vertex-count range " + std::to_string(n_lo) + ".." +
                        std::to_string(n_hi));
        if (mode == mode_t::random && sample_count < 1)
            throw error("random corpus needs sample_count >= 1");
    }
};

inline const char* to_string(corpus_spec::mode_t m) {
    switch (m) {
        case corpus_spec::mode_t::exhaustive_labeled: return "exhaustive-labeled";
        case corpus_spec::mode_t::exhaustive_free: return "exhaustive-free";
        default: return "random";
    }
}

// n^(n-2); 1 for n in {1,2}.
inline uint64_t count_labeled_trees(int n) {
    if (n < 1) throw error("n must be >= 1");
    uint64_t c = 1;
    for (int i = 0; i < n - 2; ++i) c *= uint64_t(n);
    return c;
}

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// State for sample i depends only on (seed, i), so samples are
// order-independent.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 1));
}

inline void index_to_sequence(uint64_t idx, int n, int len, int* seq) {
    for (int j = len - 1; j >= 0; --j) {
        seq[j] = int(idx % uint64_t(n));
        idx /= uint64_t(n);
    }
}

// Scans Pruefer indices [begin, end) in order, recording the first index
// of each canonical key. Hot path of the free-tree dedupe.
inline void dedupe_range(int n, uint64_t begin, uint64_t end,
                         std::unordered_map<uint64_t, uint64_t>& first_index) {
    const int len = n - 2;
    int seq[8];
    index_to_sequence(begin, n, len, seq);
    std::array<int, 2> edges[9];
    small_tree st;
    first_index.reserve(256);
    for (uint64_t idx = begin; idx < end; ++idx) {
        pruefer_decode_raw(seq, n, edges);
        st.clear(n);
        for (int i = 0; i < n - 1; ++i) st.add_edge(edges[i][0], edges[i][1]);
        first_index.try_emplace(st.canonical_key(), idx);
        // odometer step
        for (int j = len - 1; j >= 0; --j) {
            if (++seq[j] < n) break;
            seq[j] = 0;
        }
    }
}

} // namespace detail

// All n^(n-2) labeled trees in lexicographic Pruefer order. The callback
// receives the tree and its Pruefer sequence.
inline void for_each_labeled_tree(
    int n, const std::function<void(const tree&, const std::vector<int>&)>& fn) {
    if (n < 1) throw error("n must be >= 1");
    if (n > max_labeled_enum_n)
        throw instance_too_large("exhaustive labeled enumeration capped at n=" +
                                 std::to_string(max_labeled_enum_n));
    std::vector<int> seq(n >= 2 ? n - 2 : 0, 0);
    if (n <= 2) {
        fn(from_pruefer(seq, n), seq);
        return;
    }
    const uint64_t total = count_labeled_trees(n);
    for (uint64_t idx = 0; idx < total; ++idx) {
        fn(from_pruefer(seq, n), seq);
        for (int j = n - 3; j >= 0; --j) {
            if (++seq[j] < n) break;
            seq[j] = 0;
        }
    }
}

// One representative per isomorphism class: the tree whose Pruefer encoding
// is lexicographically least in its class. Returned in encoding order.
// The scan over all n^(n-2) sequences is partitioned across threads; the
// per-range first occurrences merge deterministically.
inline std::vector<tree> enumerate_free_trees(int n) {
    if (n < 1) throw error("n must be >= 1");
    if (n > max_free_enum_n)
        throw instance_too_large("free-tree enumeration capped at n=" +
                                 std::to_string(max_free_enum_n));
    if (n <= 3) {
        std::vector<int> seq(n >= 2 ? n - 2 : 0, 0);
        return {from_pruefer(seq, n)};
    }
    const uint64_t total = count_labeled_trees(n);
    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (total < 1'000'000) workers = 1;
    if (workers > 16) workers = 16;

    std::vector<std::unordered_map<uint64_t, uint64_t>> maps(workers);
    std::vector<std::thread> threads;
    const uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t begin = uint64_t(w) * chunk;
        uint64_t end = std::min(total, begin + chunk);
        if (begin >= end) break;
        threads.emplace_back(
            [n, begin, end, &m = maps[w]] { detail::dedupe_range(n, begin, end, m); });
    }
    for (auto& th : threads) th.join();

    std::unordered_map<uint64_t, uint64_t> first;
    for (auto& m : maps)
        for (auto [key, idx] : m) first.try_emplace(key, idx);

    std::vector<uint64_t> indices;
    indices.reserve(first.size());
    for (auto [key, idx] : first) indices.push_back(idx);
    std::sort(indices.begin(), indices.end());

    std::vector<tree> reps;
    reps.reserve(indices.size());
    std::vector<int> seq(n - 2);
    for (uint64_t idx : indices) {
        detail::index_to_sequence(idx, n, n - 2, seq.data());
        reps.push_back(from_pruefer(seq, n));
    }
    return reps;
}

// Uniform over labeled trees: the Pruefer sequence is drawn uniformly.
// Same (n, seed) gives the same tree.
inline tree random_tree(int n, uint64_t seed) {
    if (n < 1) throw error("n must be >= 1");
    std::vector<int> seq;
    if (n > 2) {
        std::mt19937_64 gen(detail::splitmix64(seed));
        std::uniform_int_distribution<int> pick(0, n - 1);
        seq.reserve(n - 2);
        for (int i = 0; i < n - 2; ++i) seq.push_back(pick(gen));
    }
    return from_pruefer(seq, n);
}

namespace detail {

inline std::string dump_from_sequence(int n, const std::vector<int>& seq) {
    std::string s = std::to_string(n) + ":";
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(seq[i]);
    }
    return s;
}

} // namespace detail

// Streams every tree of the corpus with a reproducible instance id:
// the Pruefer dump for exhaustive modes, "i=<k>;" + dump for random
// samples (the spec echo carries the seed).
inline void for_each_corpus_tree(
    const corpus_spec& spec,
    const std::function<void(const tree&, const std::string&)>& fn) {
    spec.validate();
    using mode_t = corpus_spec::mode_t;
    switch (spec.mode) {
        case mode_t::exhaustive_labeled:
            for (int n = spec.n_lo; n <= spec.n_hi; ++n)
                for_each_labeled_tree(n, [&](const tree& t, const std::vector<int>& seq) {
                    fn(t, detail::dump_from_sequence(n, seq));
                });
            break;
        case mode_t::exhaustive_free:
            for (int n = spec.n_lo; n <= spec.n_hi; ++n)
                for (const tree& t : enumerate_free_trees(n))
                    fn(t, pruefer_dump(t));
            break;
        case mode_t::random:
            for (int i = 0; i < spec.sample_count; ++i) {
                uint64_t s = detail::derive_seed(spec.seed, uint64_t(i));
                int n = spec.n_lo;
                if (spec.n_hi > spec.n_lo) {
                    std::mt19937_64 gen(detail::splitmix64(s ^ 0xA5A5A5A5A5A5A5A5ull));
                    n = std::uniform_int_distribution<int>(spec.n_lo, spec.n_hi)(gen);
                }
                tree t = random_tree(n, s);
                fn(t, "i=" + std::to_string(i) + ";" + pruefer_dump(t));
            }
            break;
    }
}

} // namespace alliance
