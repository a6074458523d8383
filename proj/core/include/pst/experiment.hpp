#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pst/graph.hpp"

namespace pst {

enum class GraphFamily { kHypercube, kScaleFree };
enum class Algo { kPstw, kDijkstra, kPeng, kFloyd };

std::string to_string(GraphFamily f);
std::string to_string(Algo a);
std::optional<GraphFamily> parse_family(const std::string& s);
std::optional<Algo> parse_algo(const std::string& s);

// How the scale-free attachment count n' is chosen per graph size.
struct NPrimeRule {
    bool use_sqrt = false;  // n' = round(sqrt(n)) when set
    int fixed = 2;          // otherwise this constant
    int resolve(int n) const;
};

struct ExperimentConfig {
    GraphFamily family = GraphFamily::kHypercube;
    std::vector<int> sizes;             // vertex counts (hypercube sizes must be powers of two)
    NPrimeRule n_prime;                 // scale-free only
    WeightRange weights;
    std::vector<std::uint64_t> seeds;
    std::vector<Algo> algos;
    bool verify = false;                // cross-check distance matrices per (graph, seed)
    int oracle_cap = 2048;              // largest n the cubic oracle will accept
    bool timing = true;                 // report wall-clock seconds
    int jobs = 1;                       // worker threads across (size, seed) cells
};

// One CSV row: one algorithm on one generated graph.
struct ResultRecord {
    GraphFamily family;
    int n = 0;
    int n_prime = 0;                    // 0 for hypercubes
    std::uint64_t seed = 0;
    Algo algo;
    double wall_seconds = 0.0;
    std::uint64_t access_count = 0;
    double alpha = 0.0;
    std::uint64_t waits = 0;
    bool verified = false;              // true only when --verify ran and passed
};

// Runs every (size, seed, algorithm) cell and returns the records in
// deterministic order (size-major, then seed, then algorithm as configured)
// regardless of `jobs`. With `verify` set, each cell's distances and parent
// tree are checked against the cubic oracle when n is within `oracle_cap`;
// above the cap verification is skipped with a warning on stderr. A failed
// check marks the record unverified (also warned), never throws.
std::vector<ResultRecord> run_experiment(const ExperimentConfig& cfg);

// family,n,n_prime,seed,algorithm,wall_seconds,access_count,alpha,waits,verified
void emit_csv(const std::vector<ResultRecord>& records, std::ostream& out,
              bool timing = true);

// Human-readable tables, one per (family, size): per-seed rows with each
// algorithm's alpha (and time), ratio columns against the tree-growth solver
// when its records are present, and mean/stddev rows once several seeds exist.
void emit_markdown(const std::vector<ResultRecord>& records, std::ostream& out,
                   bool timing = true);

}  // namespace pst
