#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "alliance/harness.hpp"

namespace alliance::cli {

using nlohmann::json;

namespace detail {

struct n_range {
    int lo = 1;
    int hi = 1;
};

inline n_range parse_n_range(const std::string& s) {
    auto dots = s.find("..");
    long long lo, hi;
    if (dots == std::string::npos) {
        if (!alliance::detail::parse_int_token(s, lo) || lo < 1)
            throw error("bad --n value '" + s + "' (expected <int> or <a>..<b>)");
        return {int(lo), int(lo)};
    }
    if (!alliance::detail::parse_int_token(s.substr(0, dots), lo) ||
        !alliance::detail::parse_int_token(s.substr(dots + 2), hi) || lo < 1 || hi < lo)
        throw error("bad --n range '" + s + "' (expected <a>..<b> with 1 <= a <= b)");
    return {int(lo), int(hi)};
}

inline std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> ids;
    if (s.empty()) return ids;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok =
            s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        long long v;
        if (!alliance::detail::parse_int_token(tok, v))
            throw error("bad vertex id '" + tok + "' in --set");
        ids.push_back(int(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return ids;
}

inline corpus_spec::mode_t parse_mode(const std::string& s) {
    if (s == "exhaustive-labeled" || s == "labeled")
        return corpus_spec::mode_t::exhaustive_labeled;
    if (s == "exhaustive-free" || s == "free") return corpus_spec::mode_t::exhaustive_free;
    if (s == "random") return corpus_spec::mode_t::random;
    throw error("bad --mode '" + s + "'");
}

inline json ineq_json(const inequality_check& c, const char* relation) {
    return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"relation", relation}, {"holds", c.holds}};
}

inline json record_json(const theorem_record& r) {
    return {{"instance_id", r.instance_id},
            {"n", r.n},
            {"gamma_a", r.gamma_a},
            {"gamma_a_witness", r.gamma_a_witness},
            {"gamma_o", r.gamma_o},
            {"gamma_o_witness", r.gamma_o_witness},
            {"slack6", r.slack6},
            {"conj_slack6", r.conj_slack6},
            {"prior_bound_ok", r.prior_bound_ok},
            {"sharp", r.sharp}};
}

inline json bounds_json(const bounds_record& r) {
    return {{"instance_id", r.instance_id},
            {"n", r.n},
            {"gamma_o_upper", r.gamma_o_upper},
            {"step1_ok", r.step1_ok},
            {"prior_bound_ok", r.prior_bound_ok},
            {"bounds_only", true}};
}

inline const char* csv_header() {
    return "instance_id,n,gamma_a,gamma_o,slack6,sharp,prior_bound_ok";
}

// instance ids contain commas, so that field is always quoted
inline std::string csv_row(const theorem_record& r) {
    return "\"" + r.instance_id + "\"," + std::to_string(r.n) + "," +
           std::to_string(r.gamma_a) + "," + std::to_string(r.gamma_o) + "," +
           std::to_string(r.slack6) + "," + (r.sharp ? "true" : "false") + "," +
           (r.prior_bound_ok ? "true" : "false");
}

struct output_target {
    std::ofstream file;
    std::ostream* stream = nullptr;

    output_target(const std::string& path, std::ostream& fallback) {
        if (path.empty()) {
            stream = &fallback;
        } else {
            file.open(path);
            if (!file) throw error("cannot open output file '" + path + "'");
            stream = &file;
        }
    }
    std::ostream& get() { return *stream; }
};

} // namespace detail

// Dispatches argv (without the program name). Exit codes: 0 success or
// all checks hold, 1 a verified predicate is false / a violation or no
// witness was found, 2 usage or input error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for global defensive and offensive alliances on trees"};
    app.require_subcommand(1);

    std::string input, set_arg, kind, method, mode, n_arg, out_path;
    std::string format = "json";
    int max_exact_n = 22;
    int samples = 1;
    uint64_t seed = 0;
    bool sharp_flag = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "tree file (edge-list format)")->required();
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "write output to this path instead of stdout");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_corpus = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode,
                        "exhaustive-labeled|exhaustive-free|random")
            ->required();
        cmd->add_option("--n", n_arg, "vertex count <int> or range <a>..<b>")->required();
        cmd->add_option("--samples", samples, "sample count (random mode)");
        cmd->add_option("--seed", seed, "random seed (random mode)");
    };

    auto* solve_cmd = app.add_subcommand("solve", "minimum global alliance number");
    add_input(solve_cmd);
    add_out(solve_cmd);
    solve_cmd->add_option("--kind", kind, "defensive|offensive")
        ->required()
        ->check(CLI::IsMember({"defensive", "offensive"}));
    solve_cmd->add_option("--max-exact-n", max_exact_n, "exact-solve size cap");

    auto* verify_cmd = app.add_subcommand("verify", "test a predicate on a vertex set");
    add_input(verify_cmd);
    add_out(verify_cmd);
    verify_cmd->add_option("--set", set_arg, "comma-separated vertex ids")->required();
    verify_cmd
        ->add_option("--kind", kind,
                     "dominating|defensive|offensive|global-defensive|global-offensive")
        ->required()
        ->check(CLI::IsMember({"dominating", "defensive", "offensive",
                               "global-defensive", "global-offensive"}));

    auto* construct_cmd =
        app.add_subcommand("construct", "run a constructive procedure");
    add_input(construct_cmd);
    add_out(construct_cmd);
    construct_cmd->add_option("--method", method, "bipartition|augment")
        ->required()
        ->check(CLI::IsMember({"bipartition", "augment"}));
    auto* construct_set =
        construct_cmd->add_option("--set", set_arg, "global defensive alliance (augment)");

    auto* cert_cmd =
        app.add_subcommand("certificate", "edge-partition inequality certificate");
    add_input(cert_cmd);
    add_out(cert_cmd);
    cert_cmd->add_option("--set", set_arg, "global defensive alliance")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "dump a tree corpus");
    add_corpus(enum_cmd);
    add_out(enum_cmd);

    auto* sweep_cmd =
        app.add_subcommand("sweep", "evaluate the inequalities over a corpus");
    add_corpus(sweep_cmd);
    add_out(sweep_cmd);
    add_format(sweep_cmd);
    sweep_cmd->add_option("--max-exact-n", max_exact_n, "exact-solve size cap");

    auto* witness_cmd = app.add_subcommand("witness", "find equality instances");
    witness_cmd->add_flag("--sharp", sharp_flag, "list instances meeting the bound "
                                                 "with equality")
        ->required();
    add_corpus(witness_cmd);
    add_out(witness_cmd);
    add_format(witness_cmd);
    witness_cmd->add_option("--max-exact-n", max_exact_n, "exact-solve size cap");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*solve_cmd) {
            tree t = load_tree(input);
            solve_result res = kind == "defensive"
                                   ? gamma_a(t, {max_exact_n})
                                   : gamma_o(t, {max_exact_n});
            json j{{"kind", kind},
                   {"n", t.n},
                   {"value", res.value},
                   {"witness", res.witness.to_vector()},
                   {"explored", res.explored}};
            detail::output_target target(out_path, out);
            target.get() << j.dump(2) << "\n";
            return 0;
        }

        if (*verify_cmd) {
            tree t = load_tree(input);
            vertex_set s = vertex_set::from_indices(t.n, detail::parse_id_list(set_arg));
            bool holds = kind == "dominating"          ? is_dominating(t, s)
                         : kind == "defensive"         ? is_defensive(t, s)
                         : kind == "offensive"         ? is_offensive(t, s)
                         : kind == "global-defensive"  ? is_global_defensive(t, s)
                                                       : is_global_offensive(t, s);
            json j{{"kind", kind}, {"set", s.to_vector()}, {"holds", holds}};
            detail::output_target target(out_path, out);
            target.get() << j.dump(2) << "\n";
            return holds ? 0 : 1;
        }

        if (*construct_cmd) {
            tree t = load_tree(input);
            json j;
            if (method == "bipartition") {
                if (*construct_set)
                    throw error("--set is not used by the bipartition method");
                j = {{"method", method},
                     {"result", smaller_side_offensive(t).to_vector()}};
            } else {
                if (!*construct_set)
                    throw error("the augment method needs --set");
                vertex_set s =
                    vertex_set::from_indices(t.n, detail::parse_id_list(set_arg));
                vertex_set grown = augment_to_offensive(t, s);
                std::vector<int> added;
                grown.for_each([&](int v) {
                    if (!s.contains(v)) added.push_back(v);
                });
                j = {{"method", method},
                     {"result", grown.to_vector()},
                     {"added", added}};
            }
            detail::output_target target(out_path, out);
            target.get() << j.dump(2) << "\n";
            return 0;
        }

        if (*cert_cmd) {
            tree t = load_tree(input);
            vertex_set s = vertex_set::from_indices(t.n, detail::parse_id_list(set_arg));
            certificate_report rep = defensive_certificate(t, s);
            auto edges_json = [](const std::vector<edge>& es) {
                json a = json::array();
                for (auto [u, v] : es) a.push_back({u, v});
                return a;
            };
            json j{{"n", rep.partition.n},
                   {"k", rep.partition.k},
                   {"e_s", rep.partition.e_s.size()},
                   {"e_b", rep.partition.e_b.size()},
                   {"e_y", rep.partition.e_y.size()},
                   {"e_s_edges", edges_json(rep.partition.e_s)},
                   {"e_b_edges", edges_json(rep.partition.e_b)},
                   {"e_y_edges", edges_json(rep.partition.e_y)},
                   {"ineq_degree", detail::ineq_json(rep.ineq_degree, ">=")},
                   {"ineq_domination", detail::ineq_json(rep.ineq_domination, ">=")},
                   {"ineq_star", detail::ineq_json(rep.ineq_star, "<=")},
                   {"all_hold", rep.all_hold}};
            detail::output_target target(out_path, out);
            target.get() << j.dump(2) << "\n";
            return rep.all_hold ? 0 : 1;
        }

        if (*enum_cmd) {
            auto range = detail::parse_n_range(n_arg);
            corpus_spec spec{detail::parse_mode(mode), range.lo, range.hi, samples, seed};
            detail::output_target target(out_path, out);
            for_each_corpus_tree(spec, [&](const tree& t, const std::string&) {
                target.get() << pruefer_dump(t) << "\n";
            });
            return 0;
        }

        if (*sweep_cmd) {
            auto range = detail::parse_n_range(n_arg);
            corpus_spec spec{detail::parse_mode(mode), range.lo, range.hi, samples, seed};
            detail::output_target target(out_path, out);
            sweep_options opts;
            opts.solver.max_exact_n = max_exact_n;
            opts.keep_records = false;
            size_t exact_count = 0, bounds_count = 0;
            if (format == "csv") {
                target.get() << detail::csv_header() << "\n";
                opts.on_record = [&](const theorem_record& r) {
                    ++exact_count;
                    target.get() << detail::csv_row(r) << "\n";
                };
                opts.on_bounds = [&](const bounds_record&) { ++bounds_count; };
            } else {
                opts.on_record = [&](const theorem_record&) { ++exact_count; };
                opts.on_bounds = [&](const bounds_record&) { ++bounds_count; };
            }
            sweep_report rep = sweep(spec, opts);
            if (format == "json") {
                json j{{"spec",
                        {{"mode", to_string(spec.mode)},
                         {"n_lo", spec.n_lo},
                         {"n_hi", spec.n_hi},
                         {"samples", spec.sample_count},
                         {"seed", spec.seed}}},
                       {"tree_count", rep.tree_count},
                       {"degenerate_skipped", rep.degenerate_skipped},
                       {"exact_count", exact_count},
                       {"bounds_only_count", bounds_count},
                       {"min_slack6", exact_count ? json(rep.min_slack6) : json()},
                       {"violations", rep.violations},
                       {"sharp_instances", rep.sharp_instances},
                       {"wall_seconds", rep.wall_seconds}};
                target.get() << j.dump(2) << "\n";
            }
            if (!rep.violations.empty()) {
                err << rep.violations.size() << " violation(s) found\n";
                return 1;
            }
            return 0;
        }

        if (*witness_cmd) {
            auto range = detail::parse_n_range(n_arg);
            corpus_spec spec{detail::parse_mode(mode), range.lo, range.hi, samples, seed};
            sweep_options opts;
            opts.solver.max_exact_n = max_exact_n;
            opts.keep_records = false;
            std::vector<theorem_record> sharp;
            opts.on_record = [&](const theorem_record& r) {
                if (r.sharp) sharp.push_back(r);
            };
            sweep(spec, opts);
            detail::output_target target(out_path, out);
            if (format == "csv") {
                target.get() << detail::csv_header() << "\n";
                for (const auto& r : sharp) target.get() << detail::csv_row(r) << "\n";
            } else {
                json arr = json::array();
                for (const auto& r : sharp) arr.push_back(detail::record_json(r));
                target.get() << arr.dump(2) << "\n";
            }
            if (sharp.empty()) {
                err << "no sharp instance in the swept corpus\n";
                return 1;
            }
            return 0;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace alliance::cli
