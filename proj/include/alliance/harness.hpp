#pragma once

#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "alliance/constructions.hpp"
#include "alliance/corpus.hpp"
#include "alliance/solvers.hpp"
#include "alliance/tree.hpp"

namespace alliance {

// Exact integer evaluation of the alliance-number inequalities for one
// tree. Fractions are cleared by scaling by 6:
//   slack6      = 6*gamma_a + n - 6*gamma_o - 2   (main bound, >= 0)
//   conj_slack6 = 6*gamma_a + n - 6*gamma_o       (unsharpened form)
// sharp means the main bound is met with equality.
struct theorem_record {
    std::string instance_id;
    int n = 0;
    int gamma_a = 0;
    std::vector<int> gamma_a_witness;
    int gamma_o = 0;
    std::vector<int> gamma_o_witness;
    long long slack6 = 0;
    long long conj_slack6 = 0;
    bool prior_bound_ok = false; // 2*|gamma_o - gamma_a| <= n
    bool sharp = false;
};

// Instance above the exact-solve cap: only the construction-backed facts
// are recorded. gamma_o_upper comes from the smaller bipartition side;
// prior_bound_ok certifies the one direction that follows from it
// (gamma_o - gamma_a <= gamma_o_upper - 1 <= n/2).
struct bounds_record {
    std::string instance_id;
    int n = 0;
    int gamma_o_upper = 0;
    bool step1_ok = false; // side is global offensive and 2*size <= n
    bool prior_bound_ok = false;
};

inline theorem_record check_theorem(const tree& t, const solver_options& opts = {},
                                    std::string instance_id = {}) {
    if (t.n == 1)
        throw degenerate_instance(
            "one-vertex tree: 6*1 + 1 - 6*1 - 2 = -1, the scaled bound fails at n=1");
    theorem_record rec;
    rec.instance_id = instance_id.empty() ? pruefer_dump(t) : std::move(instance_id);
    rec.n = t.n;
    auto a = gamma_a(t, opts);
    auto o = gamma_o(t, opts);
    rec.gamma_a = a.value;
    rec.gamma_a_witness = a.witness.to_vector();
    rec.gamma_o = o.value;
    rec.gamma_o_witness = o.witness.to_vector();
    rec.slack6 = 6LL * rec.gamma_a + rec.n - 6LL * rec.gamma_o - 2;
    rec.conj_slack6 = rec.slack6 + 2;
    rec.prior_bound_ok = 2LL * std::abs(rec.gamma_o - rec.gamma_a) <= rec.n;
    rec.sharp = rec.slack6 == 0;
    return rec;
}

inline bounds_record check_bounds_only(const tree& t, std::string instance_id = {}) {
    if (t.n == 1)
        throw degenerate_instance("one-vertex tree has no valid side construction");
    bounds_record rec;
    rec.instance_id = instance_id.empty() ? pruefer_dump(t) : std::move(instance_id);
    rec.n = t.n;
    vertex_set side = smaller_side_offensive(t);
    rec.gamma_o_upper = side.count();
    rec.step1_ok = is_global_offensive(t, side) && 2 * rec.gamma_o_upper <= t.n;
    rec.prior_bound_ok = 2LL * (rec.gamma_o_upper - 1) <= t.n;
    return rec;
}

struct sweep_report {
    corpus_spec spec;
    std::vector<theorem_record> records;       // exact records, corpus order
    std::vector<bounds_record> bounds_records; // instances above the cap
    uint64_t tree_count = 0;                   // instances evaluated (n >= 2)
    int degenerate_skipped = 0;                // n == 1 instances
    long long min_slack6 = LLONG_MAX;          // over exact records
    std::vector<std::string> violations;       // "id: reason" per failed check
    std::vector<std::string> sharp_instances;
    double wall_seconds = 0;
};

struct sweep_options {
    solver_options solver;
    bool keep_records = true; // set false to stream via the callbacks only
    std::function<void(const theorem_record&)> on_record;
    std::function<void(const bounds_record&)> on_bounds;
};

// Evaluates every corpus tree with n >= 2: exactly when n is within the
// solver cap, construction-backed bounds otherwise. A failed inequality
// becomes a violation entry, never an exception.
inline sweep_report sweep(const corpus_spec& spec, const sweep_options& opts = {}) {
    auto t0 = std::chrono::steady_clock::now();
    sweep_report rep;
    rep.spec = spec;
    for_each_corpus_tree(spec, [&](const tree& t, const std::string& id) {
        if (t.n == 1) {
            ++rep.degenerate_skipped;
            return;
        }
        ++rep.tree_count;
        try {
            if (t.n <= opts.solver.max_exact_n) {
                theorem_record rec = check_theorem(t, opts.solver, id);
                if (rec.slack6 < rep.min_slack6) rep.min_slack6 = rec.slack6;
                if (rec.slack6 < 0)
                    rep.violations.push_back(id + ": slack6=" +
                                             std::to_string(rec.slack6));
                if (!rec.prior_bound_ok)
                    rep.violations.push_back(id + ": prior bound 2|go-ga| <= n fails");
                if (rec.sharp) rep.sharp_instances.push_back(id);
                if (opts.on_record) opts.on_record(rec);
                if (opts.keep_records) rep.records.push_back(std::move(rec));
            } else {
                bounds_record rec = check_bounds_only(t, id);
                if (!rec.step1_ok)
                    rep.violations.push_back(id + ": smaller side is not a global "
                                                  "offensive alliance of size <= n/2");
                if (!rec.prior_bound_ok)
                    rep.violations.push_back(id + ": offensive-side bound fails");
                if (opts.on_bounds) opts.on_bounds(rec);
                if (opts.keep_records) rep.bounds_records.push_back(std::move(rec));
            }
        } catch (const error& e) {
            throw error(id + ": " + e.what());
        }
    });
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace alliance
