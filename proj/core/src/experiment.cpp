#include "pst/experiment.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "pst/baselines.hpp"
#include "pst/contract.hpp"
#include "pst/metrics.hpp"
#include "pst/pstw.hpp"

namespace pst {

std::string to_string(GraphFamily f) {
    switch (f) {
        case GraphFamily::kHypercube: return "hypercube";
        case GraphFamily::kScaleFree: return "scalefree";
    }
    throw contract_error("to_string: unknown graph family");
}

std::string to_string(Algo a) {
    switch (a) {
        case Algo::kPstw: return "pstw";
        case Algo::kDijkstra: return "dijkstra";
        case Algo::kPeng: return "peng";
        case Algo::kFloyd: return "floyd";
    }
    throw contract_error("to_string: unknown algorithm");
}

std::optional<GraphFamily> parse_family(const std::string& s) {
    if (s == "hypercube") return GraphFamily::kHypercube;
    if (s == "scalefree") return GraphFamily::kScaleFree;
    return std::nullopt;
}

std::optional<Algo> parse_algo(const std::string& s) {
    if (s == "pstw") return Algo::kPstw;
    if (s == "dijkstra") return Algo::kDijkstra;
    if (s == "peng") return Algo::kPeng;
    if (s == "floyd") return Algo::kFloyd;
    return std::nullopt;
}

int NPrimeRule::resolve(int n) const {
    if (use_sqrt) return static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    return fixed;
}

namespace {

struct Cell {
    int n = 0;
    std::uint64_t seed = 0;
};

Graph make_graph(const ExperimentConfig& cfg, int n, std::uint64_t seed, int* n_prime_out) {
    if (cfg.family == GraphFamily::kHypercube) {
        require(n >= 2 && (n & (n - 1)) == 0,
                "run_experiment: hypercube sizes must be powers of two >= 2");
        *n_prime_out = 0;
        const int dim = std::countr_zero(static_cast<unsigned>(n));
        return gen_hypercube(dim, cfg.weights, seed);
    }
    const int n_prime = cfg.n_prime.resolve(n);
    *n_prime_out = n_prime;
    return gen_scale_free(n, n_prime, cfg.weights, seed);
}

ApspResult run_algo(Algo a, const Graph& g, int oracle_cap) {
    switch (a) {
        case Algo::kPstw: return run_pstw(g);
        case Algo::kDijkstra: return apsp_dijkstra(g);
        case Algo::kPeng: return apsp_peng(g);
        case Algo::kFloyd: return apsp_floyd_warshall(g, oracle_cap);
    }
    throw contract_error("run_algo: unknown algorithm");
}

std::mutex warn_mutex;

void warn(const std::string& message) {
    const std::lock_guard<std::mutex> lock(warn_mutex);
    std::cerr << "warning: " << message << '\n';
}

}  // namespace

std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg) {
    require(!cfg.algos.empty(), "run_experiment: algorithm set must not be empty");
    require(!cfg.sizes.empty(), "run_experiment: size list must not be empty");
    require(!cfg.seeds.empty(), "run_experiment: seed list must not be empty");
    require(cfg.jobs >= 1, "run_experiment: jobs must be >= 1");

    std::vector<Cell> cells;
    cells.reserve(cfg.sizes.size() * cfg.seeds.size());
    for (const int n : cfg.sizes) {
        for (const std::uint64_t seed : cfg.seeds) cells.push_back(Cell{n, seed});
    }

    const std::size_t per_cell = cfg.algos.size();
    std::vector<ResultRecord> records(cells.size() * per_cell);

    auto process_cell = [&cfg, &cells, &records, per_cell](std::size_t index) {
        const Cell& cell = cells[index];
        int n_prime = 0;
        const Graph g = make_graph(cfg, cell.n, cell.seed, &n_prime);

        const bool oracle_fits = cell.n <= cfg.oracle_cap;
        std::optional<ApspResult> oracle;
        if (cfg.verify && oracle_fits) {
            oracle = apsp_floyd_warshall(g, cfg.oracle_cap);
        } else if (cfg.verify) {
            warn("n = " + std::to_string(cell.n) + " exceeds the oracle cap " +
                 std::to_string(cfg.oracle_cap) + "; verification skipped");
        }

        for (std::size_t k = 0; k < per_cell; ++k) {
            const Algo algo = cfg.algos[k];
            // When the oracle already ran, reuse it as the floyd record
            // rather than repeating the cubic pass.
            const ApspResult result = (algo == Algo::kFloyd && oracle.has_value())
                                          ? *oracle
                                          : run_algo(algo, g, cfg.oracle_cap);

            bool verified = false;
            if (oracle.has_value()) {
                const bool dist_ok =
                    verify_distances(result.dist, oracle->dist).pass;
                const bool tree_ok = verify_tree(result.parent, result.dist, g).pass;
                verified = dist_ok && tree_ok;
                if (!verified) {
                    warn(to_string(algo) + " failed verification on " +
                         to_string(cfg.family) + " n=" + std::to_string(cell.n) +
                         " seed=" + std::to_string(cell.seed));
                }
            }

            ResultRecord rec;
            rec.family = cfg.family;
            rec.n = cell.n;
            rec.n_prime = n_prime;
            rec.seed = cell.seed;
            rec.algo = algo;
            rec.wall_seconds = cfg.timing ? result.metrics.wall_seconds : 0.0;
            rec.access_count = result.metrics.access_count;
            rec.alpha = alpha(result.metrics.access_count, cell.n);
            rec.waits = result.metrics.wait_count;
            rec.verified = verified;
            records[index * per_cell + k] = rec;
        }
    };

    const std::size_t worker_count =
        std::min<std::size_t>(static_cast<std::size_t>(cfg.jobs), cells.size());
    if (worker_count <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) process_cell(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                try {
                    process_cell(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(worker_count);
        for (std::size_t t = 0; t < worker_count; ++t) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    return records;
}

namespace {

std::string sig6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.6g", value);
    return buf;
}

std::string fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

std::string fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", value);
    return buf;
}

double mean_of(const std::vector<double>& xs) {
    double sum = 0.0;
    for (const double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double mean = mean_of(xs);
    double acc = 0.0;
    for (const double x : xs) acc += (x - mean) * (x - mean);
    return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

}  // namespace

void emit_csv(const std::vector<ResultRecord>& records, std::ostream& out, bool timing) {
    out << "family,n,n_prime,seed,algorithm,wall_seconds,access_count,alpha,waits,verified\n";
    for (const ResultRecord& r : records) {
        out << to_string(r.family) << ',' << r.n << ',' << r.n_prime << ',' << r.seed
            << ',' << to_string(r.algo) << ',' << sig6(timing ? r.wall_seconds : 0.0)
            << ',' << r.access_count << ',' << sig6(r.alpha) << ',' << r.waits << ','
            << (r.verified ? "true" : "false") << '\n';
    }
    if (!out) throw std::runtime_error("emit_csv: write failed");
}

void emit_markdown(const std::vector<ResultRecord>& records, std::ostream& out,
                   bool timing) {
    // Group records per (family, n, n_prime), keeping first-appearance order.
    using GroupKey = std::tuple<GraphFamily, int, int>;
    std::vector<GroupKey> group_order;
    std::map<GroupKey, std::vector<const ResultRecord*>> groups;
    for (const ResultRecord& r : records) {
        const GroupKey key{r.family, r.n, r.n_prime};
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) group_order.push_back(key);
        it->second.push_back(&r);
    }

    bool first_group = true;
    for (const GroupKey& key : group_order) {
        const auto& rows = groups[key];

        std::vector<Algo> algos;
        std::vector<std::uint64_t> seeds;
        for (const ResultRecord* r : rows) {
            if (std::find(algos.begin(), algos.end(), r->algo) == algos.end())
                algos.push_back(r->algo);
            if (std::find(seeds.begin(), seeds.end(), r->seed) == seeds.end())
                seeds.push_back(r->seed);
        }
        const bool have_pstw =
            std::find(algos.begin(), algos.end(), Algo::kPstw) != algos.end();

        auto find_record = [&rows](std::uint64_t seed, Algo algo) -> const ResultRecord* {
            for (const ResultRecord* r : rows) {
                if (r->seed == seed && r->algo == algo) return r;
            }
            return nullptr;
        };

        if (!first_group) out << '\n';
        first_group = false;
        out << "### " << to_string(std::get<0>(key)) << ", n = " << std::get<1>(key);
        if (std::get<0>(key) == GraphFamily::kScaleFree)
            out << ", n' = " << std::get<2>(key);
        out << "\n\n";

        // Column layout: per algorithm its alpha (and time), then ratio
        // columns against the tree-growth solver when it is present.
        out << "| seed |";
        for (const Algo a : algos) {
            out << ' ' << to_string(a) << " alpha |";
            if (timing) out << ' ' << to_string(a) << " time (s) |";
        }
        if (have_pstw) {
            for (const Algo a : algos) {
                if (a == Algo::kPstw) continue;
                out << ' ' << to_string(a) << " alpha/pstw |";
                if (timing) out << ' ' << to_string(a) << " time/pstw |";
            }
        }
        out << '\n';
        out << "|---|";
        for (const Algo a : algos) {
            out << "---|";
            if (timing) out << "---|";
            (void)a;
        }
        if (have_pstw) {
            for (const Algo a : algos) {
                if (a == Algo::kPstw) continue;
                out << "---|";
                if (timing) out << "---|";
            }
        }
        out << '\n';

        // Per-seed rows, then mean and stddev rows once several seeds exist.
        // Column cells are gathered per seed so the summary rows can average
        // the per-seed values (ratios included).
        std::vector<std::vector<double>> columns;  // column -> per-seed values
        std::vector<bool> column_ok;               // false once any cell was missing
        auto ensure_column = [&columns, &column_ok](std::size_t idx) {
            if (columns.size() <= idx) {
                columns.resize(idx + 1);
                column_ok.resize(idx + 1, true);
            }
        };

        for (const std::uint64_t seed : seeds) {
            out << "| " << seed << " |";
            std::size_t col = 0;
            const ResultRecord* pstw = have_pstw ? find_record(seed, Algo::kPstw) : nullptr;
            auto emit_cell = [&](const ResultRecord* r, double value, bool is_time) {
                ensure_column(col);
                if (r == nullptr) {
                    out << " n/a |";
                    column_ok[col] = false;
                } else {
                    out << ' ' << (is_time ? fixed4(value) : fixed2(value)) << " |";
                    columns[col].push_back(value);
                }
                ++col;
            };
            for (const Algo a : algos) {
                const ResultRecord* r = find_record(seed, a);
                emit_cell(r, r ? r->alpha : 0.0, false);
                if (timing) emit_cell(r, r ? r->wall_seconds : 0.0, true);
            }
            if (have_pstw) {
                for (const Algo a : algos) {
                    if (a == Algo::kPstw) continue;
                    const ResultRecord* r = find_record(seed, a);
                    const bool usable = r != nullptr && pstw != nullptr && pstw->alpha > 0.0;
                    emit_cell(usable ? r : nullptr, usable ? r->alpha / pstw->alpha : 0.0,
                              false);
                    if (timing) {
                        const bool t_usable = r != nullptr && pstw != nullptr &&
                                              pstw->wall_seconds > 0.0;
                        emit_cell(t_usable ? r : nullptr,
                                  t_usable ? r->wall_seconds / pstw->wall_seconds : 0.0,
                                  false);
                    }
                }
            }
            out << '\n';
        }

        if (seeds.size() >= 2) {
            const std::size_t expected = seeds.size();
            auto emit_summary = [&](const char* label, auto fold) {
                out << "| " << label << " |";
                for (std::size_t c = 0; c < columns.size(); ++c) {
                    if (!column_ok[c] || columns[c].size() != expected) {
                        out << " n/a |";
                    } else {
                        out << ' ' << fixed2(fold(columns[c])) << " |";
                    }
                }
                out << '\n';
            };
            emit_summary("mean", [](const std::vector<double>& xs) { return mean_of(xs); });
            emit_summary("stddev",
                         [](const std::vector<double>& xs) { return sample_stddev(xs); });
        }
    }
    if (!out) throw std::runtime_error("emit_markdown: write failed");
}

}  // namespace pst
