#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "pst/baselines.hpp"
#include "pst/contract.hpp"
#include "pst/graph.hpp"
#include "pst/matrices.hpp"
#include "pst/metrics.hpp"

using pst::contract_error;
using pst::EdgeTriple;
using pst::Graph;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Graph make_graph(int n, std::vector<EdgeTriple> edges) {
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("single-source run on an edge") {
    const Graph g = make_graph(2, {{0, 1, 0.7}});
    std::uint64_t accesses = 0;
    const pst::SsspResult r = pst::sssp_dijkstra(g, 0, &accesses);
    CHECK(r.dist[0] == 0.0);
    CHECK(r.dist[1] == 0.7);
    CHECK(r.parent[0] == pst::kNoParent);
    CHECK(r.parent[1] == 0);
    CHECK(accesses == 2);  // both settled vertices scan their one neighbor
    CHECK_THROWS_AS((void)pst::sssp_dijkstra(g, 2), contract_error);
    CHECK_THROWS_AS((void)pst::sssp_dijkstra(g, -1), contract_error);
}

TEST_CASE("single-source run routes around a costly edge") {
    const Graph g = make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    const pst::SsspResult r = pst::sssp_dijkstra(g, 0);
    CHECK(r.dist[1] == 1.0);
    CHECK(r.dist[2] == 2.0);
    CHECK(r.parent[2] == 1);
}

TEST_CASE("single-source run leaves unreachable vertices at infinity") {
    const Graph g = make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    const pst::SsspResult r = pst::sssp_dijkstra(g, 0);
    CHECK(r.dist[1] == 1.0);
    CHECK(r.dist[2] == kInf);
    CHECK(r.dist[3] == kInf);
    CHECK(r.parent[2] == pst::kNotSearched);
}

TEST_CASE("full-scan baseline touches exactly the degree sum per source") {
    const Graph g = pst::gen_hypercube(4, pst::WeightRange{}, 9);
    const pst::ApspResult res = pst::apsp_dijkstra(g);
    const std::uint64_t n = 16;
    const std::uint64_t m = 32;
    CHECK(res.metrics.access_count == n * 2 * m);
    CHECK(pst::alpha(res.metrics.access_count, 16) == 4.0);  // the degree, exactly
    CHECK(res.metrics.algorithm == "dijkstra");
    CHECK(res.dist.at(0, 0) == 0.0);
    CHECK(res.parent.at(0, 0) == pst::kNoParent);

    const Graph sf = pst::gen_scale_free(50, 3, pst::WeightRange{}, 4);
    const pst::ApspResult sres = pst::apsp_dijkstra(sf);
    CHECK(sres.metrics.access_count ==
          static_cast<std::uint64_t>(sf.num_vertices()) * 2 *
              static_cast<std::uint64_t>(sf.num_edges()));
}

TEST_CASE("row reuse on a star: hub row first, then one scan per leaf") {
    // Star with center 0. Exactly representable weights make every sum exact.
    const Graph g = make_graph(
        5, {{0, 1, 0.25}, {0, 2, 0.5}, {0, 3, 1.0}, {0, 4, 2.0}});
    const pst::ApspResult res = pst::apsp_peng(g);
    CHECK(res.metrics.algorithm == "peng");

    // Leaf-to-leaf goes through the hub.
    CHECK(res.dist.at(1, 2) == 0.75);
    CHECK(res.dist.at(4, 1) == 2.25);
    CHECK(res.parent.at(1, 2) == 0);
    CHECK(res.parent.at(4, 1) == 0);
    CHECK(res.dist.at(0, 3) == 1.0);

    // The hub's run scans everything (8 entries); each leaf run scans only
    // the leaf itself (1 entry) -- the hub pop reuses the solved row and
    // every other leaf arrives covered and is skipped.
    CHECK(res.metrics.access_count == 8 + 4 * 1);

    const pst::ApspResult base = pst::apsp_dijkstra(g);
    CHECK(pst::verify_distances(res.dist, base.dist).pass);
    CHECK(pst::verify_tree(res.parent, res.dist, g).pass);
    CHECK(base.metrics.access_count == 5 * 2 * 4);  // 40, vs 12 with reuse
}

TEST_CASE("row reuse never touches more adjacency entries than the baseline") {
    std::mt19937_64 rng(555);
    for (int round = 0; round < 12; ++round) {
        const int n = 8 + static_cast<int>(rng() % 57);
        const Graph g = pst::gen_scale_free(n, 2 + static_cast<int>(rng() % 4),
                                            pst::WeightRange{}, rng());
        const pst::ApspResult peng = pst::apsp_peng(g);
        const pst::ApspResult base = pst::apsp_dijkstra(g);
        REQUIRE(pst::verify_distances(peng.dist, base.dist).pass);
        REQUIRE(pst::verify_tree(peng.parent, peng.dist, g).pass);
        REQUIRE(peng.metrics.access_count <= base.metrics.access_count);
    }
    const Graph cube = pst::gen_hypercube(5, pst::WeightRange{}, 77);
    const pst::ApspResult peng = pst::apsp_peng(cube);
    const pst::ApspResult base = pst::apsp_dijkstra(cube);
    CHECK(pst::verify_distances(peng.dist, base.dist).pass);
    CHECK(peng.metrics.access_count <= base.metrics.access_count);
}

TEST_CASE("cubic oracle: exact answers on small fixtures") {
    SUBCASE("edge") {
        const Graph g = make_graph(2, {{0, 1, 0.7}});
        const pst::ApspResult res = pst::apsp_floyd_warshall(g);
        CHECK(res.dist.at(1, 0) == 0.7);
        CHECK(res.parent.at(1, 0) == 0);
        CHECK(res.metrics.algorithm == "floyd");
        CHECK(res.metrics.access_count == 0);  // not an adjacency-list method
    }
    SUBCASE("four-cycle with one costly edge") {
        const Graph g = make_graph(
            4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 10.0}});
        const pst::ApspResult res = pst::apsp_floyd_warshall(g);
        CHECK(res.dist.at(3, 0) == 3.0);   // around the cycle, not the 10-edge
        CHECK(res.parent.at(3, 0) == 2);
        CHECK(res.dist.at(2, 0) == 2.0);
        CHECK(res.dist.at(0, 3) == 3.0);
        CHECK(res.parent.at(0, 3) == 1);
    }
    SUBCASE("path") {
        const Graph g = make_graph(4, {{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 0.5}});
        const pst::ApspResult res = pst::apsp_floyd_warshall(g);
        CHECK(res.dist.at(3, 0) == 1.5);
        CHECK(res.parent.at(3, 0) == 2);
        CHECK(res.parent.at(2, 0) == 1);
        CHECK(res.parent.at(1, 0) == 0);
    }
    SUBCASE("disconnected pairs stay infinite") {
        const Graph g = make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
        const pst::ApspResult res = pst::apsp_floyd_warshall(g);
        CHECK(res.dist.at(2, 0) == kInf);
        CHECK(res.parent.at(2, 0) == pst::kNotSearched);
        CHECK(res.dist.at(1, 0) == 1.0);
    }
}

TEST_CASE("cubic oracle refuses graphs above its cap") {
    const Graph g = pst::gen_hypercube(3, pst::WeightRange{}, 1);
    CHECK_THROWS_AS((void)pst::apsp_floyd_warshall(g, 4), contract_error);
    CHECK_NOTHROW((void)pst::apsp_floyd_warshall(g, 8));
}

TEST_CASE("all three solvers agree on a disconnected graph") {
    const Graph g = make_graph(5, {{0, 1, 0.3}, {1, 2, 0.4}, {3, 4, 0.9}});
    const pst::ApspResult fw = pst::apsp_floyd_warshall(g);
    const pst::ApspResult dj = pst::apsp_dijkstra(g);
    const pst::ApspResult pg = pst::apsp_peng(g);
    CHECK(pst::verify_distances(dj.dist, fw.dist).pass);
    CHECK(pst::verify_distances(pg.dist, fw.dist).pass);
    CHECK(pst::verify_tree(dj.parent, dj.dist, g).pass);
    CHECK(pst::verify_tree(pg.parent, pg.dist, g).pass);
    CHECK(dj.dist.at(3, 0) == kInf);
}

TEST_CASE("single-vertex graph is a fixed point for every solver") {
    const Graph g = make_graph(1, {});
    for (const pst::ApspResult& res :
         {pst::apsp_dijkstra(g), pst::apsp_peng(g), pst::apsp_floyd_warshall(g)}) {
        CHECK(res.dist.at(0, 0) == 0.0);
        CHECK(res.parent.at(0, 0) == pst::kNoParent);
        CHECK(res.metrics.access_count == 0);
    }
}
