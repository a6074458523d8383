// Command-line driver: generate benchmark graphs, run the shortest-path
// solvers over a configurable suite, emit CSV/markdown tables, and
// cross-check solver output on a single graph.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "pst/baselines.hpp"
#include "pst/contract.hpp"
#include "pst/experiment.hpp"
#include "pst/graph.hpp"
#include "pst/metrics.hpp"
#include "pst/pstw.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep)) out.push_back(item);
    return out;
}

long long parse_ll(const std::string& s, const char* what) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(what) + ": expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error(std::string(what) + ": trailing characters in '" + s + "'");
    return v;
}

double parse_double(const std::string& s, const char* what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error(std::string(what) + ": expected a number, got '" + s + "'");
    }
    if (pos != s.size())
        throw std::runtime_error(std::string(what) + ": trailing characters in '" + s + "'");
    return v;
}

pst::GraphFamily parse_family_arg(const std::string& s) {
    const auto f = pst::parse_family(s);
    if (!f) throw std::runtime_error("--family: expected 'hypercube' or 'scalefree', got '" + s + "'");
    return *f;
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> out;
    for (const std::string& tok : split(s, ',')) {
        const long long v = parse_ll(tok, "--n");
        if (v < 2 || v > (1 << 20)) throw std::runtime_error("--n: size out of range: " + tok);
        out.push_back(static_cast<int>(v));
    }
    if (out.empty()) throw std::runtime_error("--n: empty size list");
    return out;
}

// A bare integer k means "k seeds, numbered 1..k"; any comma makes the
// value an explicit seed list (a trailing comma turns a single number
// into a one-element list: "--seeds 42,").
std::vector<std::uint64_t> parse_seeds(const std::string& s) {
    std::vector<std::uint64_t> out;
    if (s.find(',') == std::string::npos) {
        const long long k = parse_ll(s, "--seeds");
        if (k < 1 || k > 100000) throw std::runtime_error("--seeds: count out of range: " + s);
        for (long long i = 1; i <= k; ++i) out.push_back(static_cast<std::uint64_t>(i));
        return out;
    }
    for (const std::string& tok : split(s, ',')) {
        const long long v = parse_ll(tok, "--seeds");
        if (v < 0) throw std::runtime_error("--seeds: seeds must be nonnegative: " + tok);
        out.push_back(static_cast<std::uint64_t>(v));
    }
    if (out.empty()) throw std::runtime_error("--seeds: empty seed list");
    return out;
}

pst::WeightRange parse_weights(const std::string& s) {
    const std::vector<std::string> parts = split(s, ',');
    if (parts.size() != 2) throw std::runtime_error("--weights: expected 'lo,hi', got '" + s + "'");
    pst::WeightRange wr;
    wr.lo = parse_double(parts[0], "--weights");
    wr.hi = parse_double(parts[1], "--weights");
    if (!(wr.lo > 0.0) || !(wr.hi > wr.lo))
        throw std::runtime_error("--weights: need 0 < lo < hi, got '" + s + "'");
    return wr;
}

pst::NPrimeRule parse_nprime(const std::string& s) {
    pst::NPrimeRule rule;
    if (s == "sqrt") {
        rule.use_sqrt = true;
        return rule;
    }
    const long long v = parse_ll(s, "--nprime");
    if (v < 2) throw std::runtime_error("--nprime: must be >= 2 or 'sqrt', got '" + s + "'");
    rule.fixed = static_cast<int>(v);
    return rule;
}

std::vector<pst::Algo> parse_algos(const std::string& s) {
    std::vector<pst::Algo> out;
    for (const std::string& tok : split(s, ',')) {
        const auto a = pst::parse_algo(tok);
        if (!a)
            throw std::runtime_error(
                "--algos: expected pstw|dijkstra|peng|floyd, got '" + tok + "'");
        for (const pst::Algo seen : out) {
            if (seen == *a) throw std::runtime_error("--algos: duplicate entry '" + tok + "'");
        }
        out.push_back(*a);
    }
    if (out.empty()) throw std::runtime_error("--algos: empty algorithm list");
    return out;
}

pst::Graph make_one_graph(pst::GraphFamily family, int n, const pst::NPrimeRule& rule,
                          const pst::WeightRange& weights, std::uint64_t seed) {
    if (family == pst::GraphFamily::kHypercube) {
        pst::require(n >= 2 && (n & (n - 1)) == 0,
                     "hypercube sizes must be powers of two >= 2");
        int dim = 0;
        while ((1 << (dim + 1)) <= n) ++dim;
        return pst::gen_hypercube(dim, weights, seed);
    }
    return pst::gen_scale_free(n, rule.resolve(n), weights, seed);
}

int cmd_run(const std::string& family_str, const std::string& n_str,
            const std::string& nprime_str, const std::string& weights_str,
            const std::string& seeds_str, const std::string& algos_str, bool verify,
            const std::string& out_path, const std::string& format, bool extended,
            bool no_timing, int jobs, int oracle_cap) {
    pst::ExperimentConfig cfg;
    cfg.family = parse_family_arg(family_str);
    if (n_str.empty()) {
        cfg.sizes = {64, 256, 1024};
        if (extended) cfg.sizes.push_back(4096);
    } else {
        cfg.sizes = parse_sizes(n_str);
    }
    cfg.n_prime = parse_nprime(nprime_str);
    cfg.weights = parse_weights(weights_str);
    cfg.seeds = parse_seeds(seeds_str);
    cfg.algos = parse_algos(algos_str);
    cfg.verify = verify;
    cfg.oracle_cap = oracle_cap;
    cfg.timing = !no_timing;
    cfg.jobs = jobs;

    if (format != "csv" && format != "markdown")
        throw std::runtime_error("--format: expected 'csv' or 'markdown', got '" + format + "'");

    const std::vector<pst::ResultRecord> records = pst::run_experiment(cfg);

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    }
    std::ostream& out = out_path.empty() ? std::cout : file;
    if (format == "csv") {
        pst::emit_csv(records, out, cfg.timing);
    } else {
        pst::emit_markdown(records, out, cfg.timing);
    }
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + (out_path.empty() ? "<stdout>" : out_path));
    if (!out_path.empty())
        std::cerr << "wrote " << records.size() << " records to " << out_path << '\n';
    return 0;
}

int cmd_gen(const std::string& family_str, int n, const std::string& nprime_str,
            const std::string& weights_str, std::uint64_t seed, const std::string& out_path) {
    const pst::GraphFamily family = parse_family_arg(family_str);
    const pst::Graph g = make_one_graph(family, n, parse_nprime(nprime_str),
                                        parse_weights(weights_str), seed);
    pst::save_graph(g, out_path);
    const pst::GraphStats st = pst::graph_stats(g);
    std::cerr << "wrote " << out_path << ": n=" << st.n << " m=" << st.m
              << " avg_degree=" << st.average_degree
              << (st.connected ? " connected" : " DISCONNECTED") << '\n';
    return 0;
}

int cmd_stats(const std::string& in_path) {
    const pst::Graph g = pst::load_graph(in_path);
    const pst::GraphStats st = pst::graph_stats(g);
    std::cout << "n = " << st.n << "\nm = " << st.m
              << "\naverage_degree = " << st.average_degree
              << "\nconnected = " << (st.connected ? "yes" : "no") << '\n';
    return 0;
}

int cmd_verify(const std::string& in_path, const std::string& family_str, int n_arg,
               const std::string& nprime_str, const std::string& weights_str,
               std::uint64_t seed, int oracle_cap) {
    pst::Graph g = [&] {
        if (!in_path.empty()) return pst::load_graph(in_path);
        const pst::GraphFamily family = parse_family_arg(family_str);
        return make_one_graph(family, n_arg, parse_nprime(nprime_str),
                              parse_weights(weights_str), seed);
    }();

    const pst::GraphStats st = pst::graph_stats(g);
    if (!st.connected) {
        std::cerr << "error: graph is disconnected (" << st.n << " vertices, " << st.m
                  << " edges); the solvers require a connected graph\n";
        return 1;
    }
    const int n = g.num_vertices();

    const bool oracle_fits = n <= oracle_cap;
    if (!oracle_fits)
        std::cerr << "note: n=" << n << " exceeds the oracle cap " << oracle_cap
                  << "; using the per-source solver as the reference\n";
    const pst::ApspResult reference = oracle_fits
                                          ? pst::apsp_floyd_warshall(g, oracle_cap)
                                          : pst::apsp_dijkstra(g);
    const std::string ref_name = oracle_fits ? "floyd" : "dijkstra";

    std::vector<pst::Algo> algos{pst::Algo::kPstw, pst::Algo::kDijkstra, pst::Algo::kPeng};
    if (oracle_fits) algos.push_back(pst::Algo::kFloyd);

    bool all_pass = true;
    for (const pst::Algo algo : algos) {
        const bool is_reference = pst::to_string(algo) == ref_name;
        const pst::ApspResult result = [&] {
            if (is_reference) return reference;
            switch (algo) {
                case pst::Algo::kPstw: return pst::run_pstw(g);
                case pst::Algo::kDijkstra: return pst::apsp_dijkstra(g);
                case pst::Algo::kPeng: return pst::apsp_peng(g);
                case pst::Algo::kFloyd: return pst::apsp_floyd_warshall(g, oracle_cap);
            }
            throw pst::contract_error("unknown algorithm");
        }();

        const pst::VerifyReport dist_report = pst::verify_distances(result.dist, reference.dist);
        const pst::VerifyReport tree_report = pst::verify_tree(result.parent, result.dist, g);
        const bool pass = dist_report.pass && tree_report.pass;
        all_pass = all_pass && pass;

        char buf[256];
        std::snprintf(buf, sizeof buf,
                      "%-8s  alpha=%-8.3f max|d-ref|=%-10.3g mismatches=%-6llu "
                      "tree_violations=%-6llu %s",
                      pst::to_string(algo).c_str(), pst::alpha(result.metrics.access_count, n),
                      dist_report.max_abs_error,
                      static_cast<unsigned long long>(dist_report.mismatch_count),
                      static_cast<unsigned long long>(tree_report.tree_violations),
                      pass ? "PASS" : "FAIL");
        std::cout << buf << '\n';
    }
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"All-pairs shortest-path benchmark toolkit"};
    app.require_subcommand(1);

    // run
    std::string family_str = "hypercube";
    std::string n_str;
    std::string nprime_str = "2";
    std::string weights_str = "0.1,1.0";
    std::string seeds_str = "5";
    std::string algos_str = "pstw,dijkstra,peng";
    bool verify = false;
    std::string out_path;
    std::string format = "csv";
    bool extended = false;
    bool no_timing = false;
    int jobs = 1;
    CLI::App* run = app.add_subcommand("run", "Generate graphs, run the solvers, emit a table");
    run->add_option("--family", family_str, "Graph family: hypercube | scalefree");
    run->add_option("--n", n_str, "Comma-separated vertex counts (default 64,256,1024)");
    run->add_option("--nprime", nprime_str, "Scale-free attachment count: integer or 'sqrt'");
    run->add_option("--weights", weights_str, "Edge-weight range 'lo,hi' (uniform, half-open)");
    run->add_option("--seeds", seeds_str,
                    "Seed list 's1,s2,...'; a bare integer k means seeds 1..k");
    run->add_option("--algos", algos_str, "Comma-separated subset of pstw,dijkstra,peng,floyd");
    run->add_flag("--verify", verify, "Cross-check each run against the cubic oracle");
    run->add_option("--out", out_path, "Output file (default: stdout)");
    run->add_option("--format", format, "csv | markdown");
    run->add_flag("--extended", extended, "Add n=4096 to the default size list");
    run->add_flag("--no-timing", no_timing, "Zero timing columns for byte-stable output");
    run->add_option("--jobs", jobs, "Worker threads across (size, seed) cells")
        ->check(CLI::Range(1, 256));

    // gen
    std::string g_family = "hypercube";
    int g_n = 64;
    std::string g_nprime = "2";
    std::string g_weights = "0.1,1.0";
    std::uint64_t g_seed = 1;
    std::string g_out;
    CLI::App* gen = app.add_subcommand("gen", "Generate one graph and save it as an edge list");
    gen->add_option("--family", g_family, "Graph family: hypercube | scalefree");
    gen->add_option("--n", g_n, "Vertex count (hypercube: power of two)");
    gen->add_option("--nprime", g_nprime, "Scale-free attachment count: integer or 'sqrt'");
    gen->add_option("--weights", g_weights, "Edge-weight range 'lo,hi'");
    gen->add_option("--seed", g_seed, "Generator seed");
    gen->add_option("--out", g_out, "Destination edge-list file")->required();

    // stats
    std::string s_in;
    CLI::App* stats = app.add_subcommand("stats", "Print size and connectivity of a saved graph");
    stats->add_option("--in", s_in, "Edge-list file")->required();

    // verify
    std::string v_in;
    std::string v_family = "hypercube";
    int v_n = 64;
    std::string v_nprime = "2";
    std::string v_weights = "0.1,1.0";
    std::uint64_t v_seed = 1;
    CLI::App* ver =
        app.add_subcommand("verify", "Run every solver on one graph and cross-check the results");
    ver->add_option("--in", v_in, "Edge-list file (when absent, a graph is generated)");
    ver->add_option("--family", v_family, "Graph family: hypercube | scalefree");
    ver->add_option("--n", v_n, "Vertex count (hypercube: power of two)");
    ver->add_option("--nprime", v_nprime, "Scale-free attachment count: integer or 'sqrt'");
    ver->add_option("--weights", v_weights, "Edge-weight range 'lo,hi'");
    ver->add_option("--seed", v_seed, "Generator seed");

    CLI11_PARSE(app, argc, argv);

    int oracle_cap = pst::kDefaultOracleCap;
    if (const char* env = std::getenv("PST_ORACLE_CAP")) {
        try {
            const long long v = parse_ll(env, "PST_ORACLE_CAP");
            if (v < 1) throw std::runtime_error("PST_ORACLE_CAP: must be positive");
            oracle_cap = static_cast<int>(std::min<long long>(v, 1 << 20));
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return 2;
        }
    }

    try {
        if (app.got_subcommand(run))
            return cmd_run(family_str, n_str, nprime_str, weights_str, seeds_str, algos_str,
                           verify, out_path, format, extended, no_timing, jobs, oracle_cap);
        if (app.got_subcommand(gen))
            return cmd_gen(g_family, g_n, g_nprime, g_weights, g_seed, g_out);
        if (app.got_subcommand(stats)) return cmd_stats(s_in);
        if (app.got_subcommand(ver))
            return cmd_verify(v_in, v_family, v_n, v_nprime, v_weights, v_seed, oracle_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
