#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "alliance/canonical.hpp"
#include "alliance/harness.hpp"
#include "test_support.hpp"

using namespace alliance;
using fixtures::fig3_tree;
using fixtures::path_tree;
using fixtures::star_tree;

TEST_CASE("theorem record for the 8-vertex augmentation example") {
    auto rec = check_theorem(fig3_tree());
    CHECK(rec.n == 8);
    CHECK(rec.gamma_a == 3);
    CHECK(rec.gamma_a_witness == std::vector<int>{0, 3, 4});
    CHECK(rec.gamma_o == 3);
    CHECK(rec.slack6 == 6); // 18 + 8 - 18 - 2
    CHECK(rec.conj_slack6 == 8);
    CHECK_FALSE(rec.sharp);
    CHECK(rec.prior_bound_ok);
    CHECK(rec.instance_id == "8:1,2,3,3,4,4");
}

TEST_CASE("theorem record on the single edge") {
    auto rec = check_theorem(path_tree(2));
    CHECK(rec.gamma_a == 1);
    CHECK(rec.gamma_o == 1);
    CHECK(rec.slack6 == 0); // 6 + 2 - 6 - 2
    CHECK(rec.sharp);
}

TEST_CASE("theorem record on the 3-path") {
    auto rec = check_theorem(path_tree(3), {}, "path3");
    CHECK(rec.gamma_a == 2);
    CHECK(rec.gamma_o == 1);
    CHECK(rec.slack6 == 7); // 12 + 3 - 6 - 2
    CHECK_FALSE(rec.sharp);
    CHECK(rec.instance_id == "path3");
}

TEST_CASE("degenerate and oversized instances are rejected") {
    CHECK_THROWS_AS(check_theorem(path_tree(1)), degenerate_instance);
    CHECK_THROWS_AS(check_theorem(star_tree(23)), instance_too_large);
}

TEST_CASE("sweep of all free trees with 2 to 8 vertices") {
    corpus_spec spec{corpus_spec::mode_t::exhaustive_free, 2, 8};
    sweep_report rep = sweep(spec);
    CHECK(rep.tree_count == 47); // 1+1+2+3+6+11+23
    CHECK(rep.records.size() == 47);
    CHECK(rep.violations.empty());
    CHECK(rep.min_slack6 == 0);
    CHECK(rep.degenerate_skipped == 0);

    // the single edge is the only equality instance this small
    CHECK(rep.sharp_instances == std::vector<std::string>{"2:"});

    // the fig3 class attains the minimum slack among the 23 trees on 8
    // vertices, but that minimum is 6, not 0
    std::string fig3_code = canonical_code(fig3_tree());
    long long n8_min = 1 << 20;
    long long fig3_slack = -1;
    for (const auto& rec : rep.records) {
        if (rec.n != 8) continue;
        n8_min = std::min(n8_min, rec.slack6);
        if (canonical_code(parse_pruefer_dump(rec.instance_id)) == fig3_code)
            fig3_slack = rec.slack6;
    }
    CHECK(n8_min == 6);
    CHECK(fig3_slack == 6);

    for (const auto& rec : rep.records) {
        CHECK(rec.conj_slack6 == rec.slack6 + 2);
        CHECK(rec.sharp == (rec.slack6 == 0));
    }
}

TEST_CASE("sweep of all labeled trees with 2 to 5 vertices") {
    corpus_spec spec{corpus_spec::mode_t::exhaustive_labeled, 2, 5};
    sweep_report rep = sweep(spec);
    CHECK(rep.tree_count == 1 + 3 + 16 + 125);
    CHECK(rep.violations.empty());
    CHECK(rep.min_slack6 == 0); // the single edge is sharp
}

TEST_CASE("sweep skips one-vertex instances") {
    corpus_spec spec{corpus_spec::mode_t::exhaustive_free, 1, 3};
    sweep_report rep = sweep(spec);
    CHECK(rep.degenerate_skipped == 1);
    CHECK(rep.tree_count == 2);
}

TEST_CASE("sweep above the cap records construction-backed bounds only") {
    corpus_spec spec{corpus_spec::mode_t::random, 30, 30, 20, 4242};
    sweep_report rep = sweep(spec);
    CHECK(rep.records.empty());
    CHECK(rep.bounds_records.size() == 20);
    CHECK(rep.violations.empty());
    for (const auto& rec : rep.bounds_records) {
        CHECK(rec.n == 30);
        CHECK(rec.step1_ok);
        CHECK(rec.prior_bound_ok);
        CHECK(rec.gamma_o_upper <= 15);
    }
}

TEST_CASE("sweep callbacks stream records without keeping them") {
    corpus_spec spec{corpus_spec::mode_t::exhaustive_free, 2, 6};
    sweep_options opts;
    opts.keep_records = false;
    std::vector<std::string> seen;
    opts.on_record = [&](const theorem_record& r) { seen.push_back(r.instance_id); };
    sweep_report rep = sweep(spec, opts);
    CHECK(rep.records.empty());
    CHECK(seen.size() == rep.tree_count);
    CHECK(std::all_of(seen.begin(), seen.end(),
                      [](const std::string& s) { return !s.empty(); }));
}

TEST_CASE("mixed sweep straddling the cap") {
    corpus_spec spec{corpus_spec::mode_t::random, 18, 26, 12, 99};
    sweep_options opts;
    opts.solver.max_exact_n = 20;
    sweep_report rep = sweep(spec, opts);
    CHECK(rep.records.size() + rep.bounds_records.size() == 12);
    for (const auto& rec : rep.records) CHECK(rec.n <= 20);
    for (const auto& rec : rep.bounds_records) CHECK(rec.n > 20);
    CHECK(rep.violations.empty());
}
