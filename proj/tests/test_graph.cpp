#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pst/contract.hpp"
#include "pst/detail/rng_util.hpp"
#include "pst/graph.hpp"

using pst::EdgeTriple;
using pst::Graph;
using pst::WeightRange;

namespace {

template <typename Fn>
std::string error_message(Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("from_edges builds a sorted undirected adjacency") {
    const std::vector<EdgeTriple> edges{{2, 0, 1.5}, {0, 1, 0.5}};
    const Graph g = Graph::from_edges(3, edges);
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    REQUIRE(g.degree(0) == 2);
    CHECK(g.neighbors(0)[0].to == 1);
    CHECK(g.neighbors(0)[1].to == 2);
    CHECK(g.edge_weight(0, 2) == 1.5);
    CHECK(g.edge_weight(2, 0) == 1.5);
    CHECK(g.edge_weight(1, 2) == std::nullopt);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("from_edges accepts a single-vertex graph") {
    const Graph g = Graph::from_edges(1, {});
    CHECK(g.num_vertices() == 1);
    CHECK(g.num_edges() == 0);
    const pst::GraphStats st = pst::graph_stats(g);
    CHECK(st.connected);
    CHECK(st.average_degree == 0.0);
}

TEST_CASE("from_edges rejects malformed input") {
    using pst::contract_error;
    const std::vector<EdgeTriple> out_of_range{{0, 3, 1.0}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, out_of_range), contract_error);
    const std::vector<EdgeTriple> self_loop{{1, 1, 1.0}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, self_loop), contract_error);
    const std::vector<EdgeTriple> zero_weight{{0, 1, 0.0}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, zero_weight), contract_error);
    const std::vector<EdgeTriple> negative_weight{{0, 1, -2.0}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, negative_weight), contract_error);
    const std::vector<EdgeTriple> parallel{{0, 1, 1.0}, {1, 0, 2.0}};
    CHECK_THROWS_AS((void)Graph::from_edges(3, parallel), contract_error);
    CHECK_THROWS_AS((void)Graph::from_edges(0, {}), contract_error);
}

TEST_CASE("hypercube generator: structure is exact") {
    const WeightRange wr;
    const Graph g = pst::gen_hypercube(3, wr, 7);
    CHECK(g.num_vertices() == 8);
    CHECK(g.num_edges() == 12);
    for (int v = 0; v < 8; ++v) {
        REQUIRE(g.degree(v) == 3);
        for (const auto& e : g.neighbors(v)) {
            const unsigned diff = static_cast<unsigned>(v ^ e.to);
            CHECK((diff & (diff - 1)) == 0);  // exactly one bit differs
            CHECK(e.weight >= wr.lo);
            CHECK(e.weight < wr.hi);
        }
    }
    CHECK(pst::graph_stats(g).connected);
}

TEST_CASE("hypercube generator: dimension bounds") {
    CHECK_THROWS_AS((void)pst::gen_hypercube(0, WeightRange{}, 1), pst::contract_error);
    CHECK_THROWS_AS((void)pst::gen_hypercube(21, WeightRange{}, 1), pst::contract_error);
}

TEST_CASE("generators are deterministic in the seed") {
    const WeightRange wr;
    CHECK(pst::gen_hypercube(4, wr, 42) == pst::gen_hypercube(4, wr, 42));
    CHECK_FALSE(pst::gen_hypercube(4, wr, 42) == pst::gen_hypercube(4, wr, 43));
    CHECK(pst::gen_scale_free(50, 3, wr, 9) == pst::gen_scale_free(50, 3, wr, 9));
    CHECK_FALSE(pst::gen_scale_free(50, 3, wr, 9) == pst::gen_scale_free(50, 3, wr, 10));
}

TEST_CASE("custom weight ranges are honored") {
    WeightRange wr;
    wr.lo = 2.0;
    wr.hi = 3.0;
    const Graph g = pst::gen_hypercube(4, wr, 5);
    bool saw_distinct = false;
    double first = -1.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (const auto& e : g.neighbors(v)) {
            CHECK(e.weight >= 2.0);
            CHECK(e.weight < 3.0);
            if (first < 0.0) first = e.weight;
            if (e.weight != first) saw_distinct = true;
        }
    }
    CHECK(saw_distinct);
}

TEST_CASE("scale-free generator: edge count and connectivity") {
    const WeightRange wr;
    // A seed clique of n' vertices plus n' edges per later vertex.
    const Graph a = pst::gen_scale_free(64, 2, wr, 1);
    CHECK(a.num_vertices() == 64);
    CHECK(a.num_edges() == 1 + 62 * 2);
    CHECK(pst::graph_stats(a).connected);

    const Graph b = pst::gen_scale_free(64, 8, wr, 1);
    CHECK(b.num_edges() == 28 + 56 * 8);
    CHECK(pst::graph_stats(b).connected);

    for (int v = 2; v < 64; ++v) CHECK(a.degree(v) >= 2);
    for (int v = 8; v < 64; ++v) CHECK(b.degree(v) >= 8);
}

TEST_CASE("scale-free generator: parameter validation") {
    CHECK_THROWS_AS((void)pst::gen_scale_free(10, 1, WeightRange{}, 1), pst::contract_error);
    CHECK_THROWS_AS((void)pst::gen_scale_free(10, 10, WeightRange{}, 1), pst::contract_error);
    CHECK_THROWS_AS((void)pst::gen_scale_free(10, 11, WeightRange{}, 1), pst::contract_error);
}

TEST_CASE("scale-free generator: attachment favors high-degree vertices") {
    const WeightRange wr;
    double early = 0.0;
    double late = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = pst::gen_scale_free(200, 2, wr, seed);
        for (int v = 0; v < 10; ++v) early += g.degree(v);
        for (int v = 150; v < 200; ++v) late += g.degree(v);
    }
    early /= 20.0 * 10.0;
    late /= 20.0 * 50.0;
    CHECK(early > 1.5 * late);
}

TEST_CASE("rng primitives: uniform_below covers its range") {
    std::mt19937_64 rng(123);
    std::vector<int> counts(7, 0);
    for (int i = 0; i < 10000; ++i) {
        const std::uint64_t v = pst::detail::uniform_below(rng, 7);
        REQUIRE(v < 7);
        ++counts[static_cast<std::size_t>(v)];
    }
    for (const int c : counts) CHECK(c > 0);
}

TEST_CASE("rng primitives: uniform_real stays in the half-open interval") {
    std::mt19937_64 rng(99);
    bool low_half = false;
    bool high_half = false;
    for (int i = 0; i < 10000; ++i) {
        const double x = pst::detail::uniform_real(rng, 0.1, 1.0);
        REQUIRE(x >= 0.1);
        REQUIRE(x < 1.0);
        if (x < 0.55) low_half = true;
        if (x >= 0.55) high_half = true;
    }
    CHECK(low_half);
    CHECK(high_half);
}

TEST_CASE("rng primitives: weighted picks follow the weights") {
    // Two buckets with weights 1 and 2: a chi-squared test with one degree
    // of freedom at the 0.001 level (critical value 10.83).
    std::mt19937_64 rng(77);
    const std::vector<std::uint64_t> weights{1, 2};
    int hits[2] = {0, 0};
    const int draws = 3000;
    for (int i = 0; i < draws; ++i) {
        const std::uint64_t ticket = pst::detail::uniform_below(rng, 3);
        ++hits[pst::detail::pick_weighted(weights, ticket)];
    }
    const double exp0 = draws / 3.0;
    const double exp1 = 2.0 * draws / 3.0;
    const double chi2 = (hits[0] - exp0) * (hits[0] - exp0) / exp0 +
                        (hits[1] - exp1) * (hits[1] - exp1) / exp1;
    CHECK(chi2 < 10.83);
}

TEST_CASE("save/load round-trips through a stream") {
    const Graph g = pst::gen_scale_free(40, 3, WeightRange{}, 11);
    std::stringstream buf;
    pst::save_graph(g, buf);
    const Graph back = pst::load_graph(buf);
    CHECK(back == g);
}

TEST_CASE("save/load round-trips through a file") {
    const Graph g = pst::gen_hypercube(4, WeightRange{}, 21);
    const std::string path = "roundtrip_test_graph.txt";
    pst::save_graph(g, path);
    const Graph back = pst::load_graph(path);
    CHECK(back == g);
    std::remove(path.c_str());
}

TEST_CASE("load_graph reports the offending line") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return pst::load_graph(in);
    };

    CHECK(error_message([&] { (void)load(""); }).find("line 1") != std::string::npos);
    CHECK(error_message([&] { (void)load("3\n"); }).find("header") != std::string::npos);
    CHECK(error_message([&] { (void)load("3 1 9\n"); }).find("line 1") != std::string::npos);
    CHECK(error_message([&] { (void)load("0 0\n"); }).find("vertex count") !=
          std::string::npos);

    // Vertex ids out of range, wrong orientation, bad weights, duplicates —
    // each reported with its line number.
    CHECK(error_message([&] { (void)load("2 1\n0 5 1.0\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_message([&] { (void)load("2 1\n1 0 1.0\n"); }).find("u < v") !=
          std::string::npos);
    CHECK(error_message([&] { (void)load("2 1\n0 1 -1.0\n"); }).find("positive") !=
          std::string::npos);
    CHECK(error_message([&] { (void)load("2 1\n0 1 nope\n"); }).find("line 2") !=
          std::string::npos);
    const std::string dup = "3 3\n0 1 1.0\n0 2 1.0\n0 1 2.0\n";
    CHECK(error_message([&] { (void)load(dup); }).find("line 4") != std::string::npos);
    CHECK(error_message([&] { (void)load(dup); }).find("duplicate") != std::string::npos);
    CHECK(error_message([&] { (void)load("2 1\n0 1 1.0 extra\n"); }).find("line 2") !=
          std::string::npos);
    CHECK(error_message([&] { (void)load("2 2\n0 1 1.0\n"); }).find("promised") !=
          std::string::npos);
    CHECK(error_message([&] { (void)pst::load_graph("no_such_file_here.txt"); })
              .find("cannot open") != std::string::npos);
}

TEST_CASE("graph_stats reports connectivity and average degree") {
    const std::vector<EdgeTriple> edges{{0, 1, 1.0}};
    const Graph g = Graph::from_edges(3, edges);
    const pst::GraphStats st = pst::graph_stats(g);
    CHECK(st.n == 3);
    CHECK(st.m == 1);
    CHECK(st.average_degree == doctest::Approx(2.0 / 3.0));
    CHECK_FALSE(st.connected);

    const pst::GraphStats cube = pst::graph_stats(pst::gen_hypercube(5, WeightRange{}, 3));
    CHECK(cube.connected);
    CHECK(cube.average_degree == 5.0);
}
