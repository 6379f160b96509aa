#include <doctest.h>

#include <random>
#include <sstream>

#include "graphqc/sweep.hpp"
#include "oracles.hpp"

using namespace graphqc;

namespace {

std::vector<SweepRecord> records_with_counts(const std::vector<std::int32_t>& counts,
                                             const std::vector<double>& sigmas) {
    std::vector<SweepRecord> out;
    for (std::size_t i = 0; i < counts.size(); ++i)
        out.push_back({sigmas[i], counts[i], {}});
    return out;
}

}  // namespace

TEST_CASE("log grid spans the default-distance scale") {
    auto grid = log_sigma_grid(10.0);
    REQUIRE(grid.size() == 30);
    CHECK(grid.front() == doctest::Approx(1.0));
    CHECK(grid.back() == doctest::Approx(30.0));
    for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);
    // log spacing: constant ratio
    const double ratio = grid[1] / grid[0];
    for (std::size_t k = 2; k < grid.size(); ++k)
        CHECK(grid[k] / grid[k - 1] == doctest::Approx(ratio).epsilon(1e-9));
}

TEST_CASE("linear grid covers the endpoints") {
    auto grid = linear_sigma_grid(2.0, 4.0, 5);
    CHECK(grid == std::vector<double>{2.0, 2.5, 3.0, 3.5, 4.0});
    CHECK(linear_sigma_grid(2.0, 4.0, 1) == std::vector<double>{2.0});
}

TEST_CASE("a single-sigma sweep equals a direct cluster run") {
    std::mt19937 rng(1414);
    Graph g = oracles::random_graph(rng, 30, 3.0);
    auto labels = make_label_set(oracles::random_labeling(rng, 30, 2));
    const double sigma = 2.0;

    auto records = run_sweep(g, std::vector<double>{sigma}, &labels, 2);
    REQUIRE(records.size() == 1);
    ClusterAssignment c = cluster(g, sigma, 1);
    MetricReport direct = evaluate(g, c, &labels, 1.0, sigma);
    CHECK(records[0].num_clusters == c.num_clusters);
    CHECK(records[0].metrics.modularity == direct.modularity);
    CHECK(records[0].metrics.nmi == direct.nmi);
    CHECK(records[0].metrics.ari == direct.ari);
    CHECK(records[0].metrics.fmi == direct.fmi);
}

TEST_CASE("sweeps are deterministic") {
    std::mt19937 rng(1515);
    Graph g = oracles::random_graph(rng, 40, 4.0);
    auto grid = log_sigma_grid(g.default_distance(), 8);
    auto a = run_sweep(g, grid, nullptr, 4);
    auto b = run_sweep(g, grid, nullptr, 2);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].sigma == b[k].sigma);
        CHECK(a[k].num_clusters == b[k].num_clusters);
        CHECK(a[k].metrics.modularity == b[k].metrics.modularity);
    }
}

TEST_CASE("tiny sigma fragments a star into leaf clusters") {
    std::vector<Edge> edges;
    for (std::int32_t k = 1; k <= 8; ++k) edges.push_back({0, k, 1.0});
    Graph g(9, edges, 10.0);
    // Small enough to suppress everything beyond direct neighbors, large
    // enough that exp(-1/(2 sigma^2)) does not underflow: the hub then has
    // the highest potential and every leaf is its own center.
    ClusterAssignment c = cluster(g, 0.2, 1);
    CHECK(c.num_clusters == 8);
    for (std::int32_t leaf = 1; leaf <= 8; ++leaf) CHECK(c.center[leaf] == leaf);

    // Once sigma is so small that every Gaussian weight underflows to 0,
    // all potentials tie at 0 and the id tie-break collapses each closed
    // neighborhood onto its smallest id, here the hub.
    ClusterAssignment tied = cluster(g, 0.01, 1);
    CHECK(tied.num_clusters == 1);
    CHECK(tied.centers == std::vector<std::int32_t>{0});
}

TEST_CASE("cluster count is bounded below by the component count") {
    std::mt19937 rng(1616);
    for (int trial = 0; trial < 5; ++trial) {
        Graph g = oracles::random_graph(rng, 30, 1.5);
        auto [comp, comp_count] = connected_components(g);
        for (auto& rec : run_sweep(g, log_sigma_grid(g.default_distance(), 5), nullptr, 2))
            CHECK(rec.num_clusters >= comp_count);
    }
}

TEST_CASE("sweep validates its grid") {
    std::mt19937 rng(1717);
    Graph g = oracles::random_graph(rng, 10, 2.0);
    CHECK_THROWS_AS(run_sweep(g, std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(g, std::vector<double>{1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(g, std::vector<double>{2.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(run_sweep(g, std::vector<double>{-1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("mutation detection finds the maximal drop") {
    SUBCASE("no decrease") {
        auto recs = records_with_counts({5, 5, 5}, {1, 2, 3});
        CHECK_FALSE(detect_mutation(recs).has_value());
    }
    SUBCASE("single maximal drop") {
        auto recs = records_with_counts({10, 9, 3, 2}, {1, 2, 3, 4});
        auto m = detect_mutation(recs);
        REQUIRE(m.has_value());
        CHECK(m->sigma_low == 2.0);
        CHECK(m->sigma_high == 3.0);
        CHECK(m->drop == 6);
    }
    SUBCASE("ties break to the smallest sigma") {
        auto recs = records_with_counts({8, 5, 5, 2}, {1, 2, 3, 4});
        auto m = detect_mutation(recs);
        REQUIRE(m.has_value());
        CHECK(m->sigma_low == 1.0);
        CHECK(m->sigma_high == 2.0);
        CHECK(m->drop == 3);
    }
    SUBCASE("increases are ignored") {
        auto recs = records_with_counts({3, 7, 6}, {1, 2, 3});
        auto m = detect_mutation(recs);
        REQUIRE(m.has_value());
        CHECK(m->drop == 1);
        CHECK(m->sigma_low == 2.0);
    }
    SUBCASE("needs two records") {
        auto recs = records_with_counts({3}, {1});
        CHECK_THROWS_AS(detect_mutation(recs), std::invalid_argument);
    }
}

TEST_CASE("karate stays at two clusters across the 10..300 sigma plateau") {
    // Past the mutation the partition is flat: a linear sweep over the
    // whole 10..300 range (including 190..200) records two clusters at
    // every point and therefore no further mutation.
    Graph g = load_edge_list(std::string(GRAPHQC_DATA_DIR) + "/karate.edges", 10.0);
    auto grid = linear_sigma_grid(10.0, 300.0, 30);
    auto records = run_sweep(g, grid, nullptr, 2);
    for (const auto& rec : records) CHECK(rec.num_clusters == 2);
    CHECK_FALSE(detect_mutation(records).has_value());
}

TEST_CASE("mutation endpoints are members of the sigma grid") {
    std::mt19937 rng(1818);
    Graph g = oracles::random_graph(rng, 25, 3.0, 10.0, /*unit_weights=*/true);
    auto grid = log_sigma_grid(g.default_distance(), 12);
    auto records = run_sweep(g, grid, nullptr, 2);
    if (auto m = detect_mutation(records)) {
        CHECK(std::find(grid.begin(), grid.end(), m->sigma_low) != grid.end());
        CHECK(std::find(grid.begin(), grid.end(), m->sigma_high) != grid.end());
    }
}

TEST_CASE("sweep csv format") {
    std::vector<SweepRecord> recs(2);
    recs[0].sigma = 1.0;
    recs[0].num_clusters = 5;
    recs[0].metrics.modularity = 0.25;
    recs[1].sigma = 2.0;
    recs[1].num_clusters = 2;
    recs[1].metrics.modularity = 0.5;
    recs[1].metrics.nmi = 1.0;
    recs[1].metrics.ari = 0.5;
    recs[1].metrics.fmi = 0.75;
    std::ostringstream out;
    write_sweep_csv(out, recs);
    CHECK(out.str() ==
          "sigma,num_clusters,modularity,nmi,ari,fmi\n"
          "1,5,0.25,,,\n"
          "2,2,0.5,1,0.5,0.75\n");
}
