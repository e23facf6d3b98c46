#include "app.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "queuelab/bounds.hpp"
#include "queuelab/cache.hpp"
#include "queuelab/census.hpp"
#include "queuelab/core.hpp"
#include "queuelab/experiment.hpp"
#include "queuelab/layout.hpp"
#include "queuelab/rainbow.hpp"
#include "queuelab/randreg.hpp"
#include "queuelab/verify.hpp"

namespace queuelab::cli {

namespace {

std::string format_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string edge_list(const std::vector<OrderedEdge>& edges)
{
    std::string out;
    for (const auto& e : edges) {
        if (!out.empty())
            out += ' ';
        out += "(" + std::to_string(e.left) + "," + std::to_string(e.right) + ")";
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t pos = 0;
            values.push_back(std::stoi(item, &pos));
            if (pos != item.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw CLI::ValidationError(std::string(what) + ": bad integer '" + item + "'");
        }
    }
    if (values.empty())
        throw CLI::ValidationError(std::string(what) + ": empty list");
    return values;
}

int cmd_rainbow(const std::string& path, std::ostream& out)
{
    OrderedGraph g = read_ordered_graph_file(path);
    MaxRainbow result = max_rainbow(g);
    out << "max rainbow: " << result.size << "\n";
    out << "certificate: " << edge_list(result.certificate.edges) << "\n";
    return 0;
}

int cmd_partition(const std::string& path, std::ostream& out)
{
    OrderedGraph g = read_ordered_graph_file(path);
    QueueAssignment a = greedy_partition(g);
    out << "queues: " << a.queue_count << "\n";
    for (int q = 1; q <= a.queue_count; ++q) {
        std::vector<OrderedEdge> members;
        for (std::size_t i = 0; i < a.queue_of.size(); ++i)
            if (a.queue_of[i] == q)
                members.push_back(a.graph.edges()[i]);
        out << "queue " << q << ": " << edge_list(members) << "\n";
    }
    return 0;
}

int cmd_queue_number(const std::string& path, bool exact, std::uint64_t budget, int restarts,
                     std::uint64_t seed, std::ostream& out)
{
    LabelledGraph g = read_labelled_graph_file(path, true);
    LayoutResult result;
    if (exact) {
        ExactOptions opts;
        opts.node_budget = budget;
        result = exact_queue_number(g, opts);
    } else {
        result = heuristic_queue_number(g, restarts, seed);
    }
    out << "queue number: " << result.queue_number
        << (result.exact ? " (exact)" : " (upper bound)") << "\n";
    out << "order:";
    for (int v : result.witness_order)
        out << ' ' << v;
    out << "\n";
    return 0;
}

int cmd_census(int n, std::optional<int> m, std::optional<int> k, std::optional<int> delta,
               const std::string& sizes_text, bool labelled, const std::string& cache_path,
               std::ostream& out, std::ostream& err)
{
    if (!sizes_text.empty()) {
        auto sizes = parse_int_list(sizes_text, "--sizes");
        mpz_class count = count_kqueues_with_sizes(n, sizes);
        std::string joined;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            joined += (i ? "," : "") + std::to_string(sizes[i]);
        out << "g(" << n << "; " << joined << ") = " << count.get_str() << "\n";
        return 0;
    }

    CensusEntry entry;
    entry.n = n;
    entry.timestamp = utc_timestamp();
    if (delta) {
        auto census = count_labelled_regular(n, *delta);
        entry.kind = CensusKind::labelled_regular;
        entry.delta = delta;
        entry.count = census.count;
        entry.method = "degree-backtrack";
        out << "regular(" << n << ", " << *delta << ") = " << census.count.get_str();
        if (census.odd_parity)
            out << " (odd n*delta: none exist)";
        out << "\n";
    } else if (labelled) {
        if (!m || !k)
            throw CLI::ValidationError("--labelled requires --m and --k");
        entry.kind = CensusKind::labelled_qn_le;
        entry.m = m;
        entry.k = k;
        entry.count = count_labelled_qn_le(n, *m, *k);
        entry.method = "exact-search";
        out << "labelled_qn_le(" << n << ", " << *m << ", " << *k
            << ") = " << entry.count.get_str() << "\n";
    } else if (m && k) {
        entry.kind = CensusKind::kqueues_by_n_m_k;
        entry.m = m;
        entry.k = k;
        entry.count = count_kqueues(n, *m, *k);
        entry.method = "subset-scan";
        out << "g(" << n << ", " << *m << ", " << *k << ") = " << entry.count.get_str() << "\n";
    } else if (m) {
        entry.kind = CensusKind::queues_by_n_m;
        entry.m = m;
        entry.count = count_queues_by_edges(n, *m);
        entry.method = "bitmask-backtrack";
        out << "g(" << n << ", " << *m << ") = " << entry.count.get_str() << "\n";
    } else {
        if (k)
            throw CLI::ValidationError("--k requires --m");
        entry.kind = CensusKind::queues_by_n;
        entry.count = enumerate_queues(n);
        entry.method = "bitmask-backtrack";
        out << "g(" << n << ") = " << entry.count.get_str() << "\n";
    }

    CensusCache cache(cache_path);
    if (!cache.record_or_verify(entry)) {
        auto cached = cache.find(entry.kind, entry.n, entry.m, entry.k, entry.delta);
        err << "FAIL cache-mismatch computed=" << entry.count.get_str()
            << " cached=" << cached->count.get_str() << " key=" << format_cache_line(entry)
            << "\n";
        return 1;
    }
    return 0;
}

int cmd_verify_lemmas(int max_n, std::ostream& out)
{
    auto results = verify_lemmas(max_n, &out);
    bool all_ok = true;
    for (const auto& r : results)
        all_ok = all_ok && r.ok;
    out << (all_ok ? "all checks passed" : "checks FAILED") << "\n";
    return all_ok ? 0 : 1;
}

int cmd_max_edges(int n, std::ostream& out)
{
    auto result = max_queue_edges(n);
    out << "max edges: " << result.max_edges << "\n";
    out << "witness:\n" << to_text(result.witness);
    return 0;
}

int cmd_doubling_patterns(bool loop, std::ostream& out)
{
    auto patterns = doubling_patterns(loop);
    out << patterns.size() << " patterns\n";
    for (const auto& p : patterns)
        out << edge_list(p.edges) << "\n";
    return 0;
}

int cmd_gen_regular(int n, int delta, std::uint64_t seed, std::ostream& out)
{
    RegularSample sample = gen_regular(n, delta, seed);
    out << "# n=" << n << " delta=" << delta << " seed=" << seed
        << " rejections=" << sample.rejections << "\n";
    out << to_text(sample.graph);
    return 0;
}

int cmd_bounds(int n, int delta, std::optional<int> m, std::optional<int> k, double c,
               std::ostream& out)
{
    out << "regular_count_lower_log(" << n << ", " << delta
        << ") = " << format_double(regular_count_lower_bound_log(n, delta)) << "\n";
    out << "dujwoo_upper(" << n << ", " << delta
        << ") = " << format_double(dujwoo_upper(n, delta)) << "\n";
    if (delta >= 3) {
        out << "theorem_lower(c=" << format_double(c)
            << ") = " << format_double(theorem_lower(n, delta, c)) << "\n";
        out << "solve_min_k(c=" << format_double(c) << ") = " << solve_min_k(n, delta, c)
            << "\n";
    }
    if (m && k) {
        out << "kqueue_count_bound_log(m=" << *m << ", k=" << *k << ", c=" << format_double(c)
            << ") = " << format_double(kqueue_count_bound_log(n, *m, *k, c)) << "\n";
        out << "labelled_count_bound_log = "
            << format_double(labelled_count_bound_log(n, *m, *k, c)) << "\n";
    }
    return 0;
}

int cmd_experiment(const ExperimentConfig& config, const std::string& out_path,
                   const std::string& svg_path, std::ostream& out)
{
    auto rows = run_experiment(config);
    std::string csv = experiment_csv(rows);
    std::ofstream file(out_path);
    if (!file)
        throw std::runtime_error("cannot write " + out_path);
    file << csv;
    file.close();
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        if (!svg)
            throw std::runtime_error("cannot write " + svg_path);
        svg << experiment_svg(rows);
    }
    int failures = 0;
    for (const auto& r : rows)
        if (!r.error.empty())
            ++failures;
    out << "wrote " << rows.size() << " rows to " << out_path;
    if (failures)
        out << " (" << failures << " failed rows)";
    out << "\n";
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"queuelab: queue layouts, rainbow partitions, and counting experiments"};
    app.require_subcommand(1);
    app.fallthrough(); // lets global options like --cache appear after the subcommand

    std::string cache_path = "./census.cache";
    app.add_option("--cache", cache_path, "census cache file")
        ->envname("QUEUELAB_CACHE")
        ->capture_default_str();

    std::string graph_path;
    auto* rainbow_cmd = app.add_subcommand("rainbow", "max rainbow of an ordered graph");
    rainbow_cmd->add_option("--graph", graph_path, "graph file")->required();

    auto* partition_cmd =
        app.add_subcommand("partition", "greedy queue partition of an ordered graph");
    partition_cmd->add_option("--graph", graph_path, "graph file")->required();

    bool exact = false;
    std::uint64_t budget = 10'000'000;
    int restarts = 32;
    std::uint64_t seed = 0;
    auto* qn_cmd = app.add_subcommand("queue-number", "queue-number of a simple graph");
    qn_cmd->add_option("--graph", graph_path, "graph file")->required();
    qn_cmd->add_flag("--exact", exact, "branch-and-bound exact search");
    qn_cmd->add_option("--budget", budget, "search node budget")->capture_default_str();
    qn_cmd->add_option("--restarts", restarts, "heuristic restarts")->capture_default_str();
    qn_cmd->add_option("--seed", seed, "heuristic seed")->capture_default_str();

    int census_n = 0;
    std::optional<int> census_m, census_k, census_delta;
    std::string sizes_text;
    bool labelled = false;
    auto* census_cmd = app.add_subcommand("census", "exact queue counts");
    census_cmd->add_option("--n", census_n, "vertex count")->required();
    census_cmd->add_option("--m", census_m, "edge count");
    census_cmd->add_option("--k", census_k, "queue count");
    census_cmd->add_option("--sizes", sizes_text, "comma-separated class sizes");
    census_cmd->add_option("--delta", census_delta, "count labelled delta-regular graphs");
    census_cmd->add_flag("--labelled", labelled, "count labelled graphs with queue-number <= k");

    auto* verify_cmd = app.add_subcommand("verify", "verification suites");
    int max_n = 5;
    auto* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "verify the counting lemmas");
    lemmas_cmd->add_option("--max-n", max_n, "enumeration scale")->capture_default_str();
    verify_cmd->require_subcommand(1);

    int plain_n = 0;
    auto* max_edges_cmd = app.add_subcommand("max-edges", "max edges of a nesting-free graph");
    max_edges_cmd->add_option("--n", plain_n, "vertex count")->required();

    bool loop_patterns = false;
    auto* patterns_cmd = app.add_subcommand("doubling-patterns", "doubling edge patterns");
    patterns_cmd->add_flag("--loop", loop_patterns, "patterns for a loop quotient edge");

    int reg_n = 0, reg_delta = 0;
    std::uint64_t reg_seed = 0;
    auto* gen_cmd = app.add_subcommand("gen-regular", "sample a random regular graph");
    gen_cmd->add_option("--n", reg_n, "vertex count")->required();
    gen_cmd->add_option("--delta", reg_delta, "degree")->required();
    gen_cmd->add_option("--seed", reg_seed, "generator seed")->capture_default_str();

    int bounds_n = 0, bounds_delta = 0;
    std::optional<int> bounds_m, bounds_k;
    double bounds_c = 1.0;
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the closed-form bounds");
    bounds_cmd->add_option("--n", bounds_n, "vertex count")->required();
    bounds_cmd->add_option("--delta", bounds_delta, "degree")->required();
    bounds_cmd->add_option("--m", bounds_m, "edge count");
    bounds_cmd->add_option("--k", bounds_k, "queue count");
    bounds_cmd->add_option("--c", bounds_c, "constant")->capture_default_str();

    ExperimentConfig config;
    std::string n_list_text, out_path, svg_path;
    auto* exp_cmd = app.add_subcommand("experiment", "regular-graph queue-number table");
    exp_cmd->add_option("--delta", config.delta, "degree")->required();
    exp_cmd->add_option("--n-list", n_list_text, "comma-separated vertex counts")->required();
    exp_cmd->add_option("--samples", config.samples, "samples per n")->capture_default_str();
    exp_cmd->add_option("--seed", config.seed, "base seed")->capture_default_str();
    exp_cmd->add_option("--exact-limit", config.exact_limit, "exact search up to this n")
        ->capture_default_str();
    exp_cmd->add_option("--restarts", config.restarts, "heuristic restarts")
        ->capture_default_str();
    exp_cmd->add_option("--out", out_path, "CSV output file")->required();
    exp_cmd->add_option("--svg", svg_path, "SVG scatter output file");
    exp_cmd->add_flag("--timings", config.measured_timings,
                      "record wall-clock runtimes (breaks byte-reproducibility)");

    std::vector<const char*> argv;
    argv.push_back("queuelab");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(rainbow_cmd))
            return cmd_rainbow(graph_path, out);
        if (app.got_subcommand(partition_cmd))
            return cmd_partition(graph_path, out);
        if (app.got_subcommand(qn_cmd))
            return cmd_queue_number(graph_path, exact, budget, restarts, seed, out);
        if (app.got_subcommand(census_cmd))
            return cmd_census(census_n, census_m, census_k, census_delta, sizes_text, labelled,
                              cache_path, out, err);
        if (app.got_subcommand(verify_cmd))
            return cmd_verify_lemmas(max_n, out);
        if (app.got_subcommand(max_edges_cmd))
            return cmd_max_edges(plain_n, out);
        if (app.got_subcommand(patterns_cmd))
            return cmd_doubling_patterns(loop_patterns, out);
        if (app.got_subcommand(gen_cmd))
            return cmd_gen_regular(reg_n, reg_delta, reg_seed, out);
        if (app.got_subcommand(bounds_cmd))
            return cmd_bounds(bounds_n, bounds_delta, bounds_m, bounds_k, bounds_c, out);
        if (app.got_subcommand(exp_cmd)) {
            config.n_list = parse_int_list(n_list_text, "--n-list");
            return cmd_experiment(config, out_path, svg_path, out);
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

} // namespace queuelab::cli
