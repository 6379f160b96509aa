#include "graphqc/potential.hpp"

#include <stdexcept>
#include <thread>
#include <vector>

namespace graphqc {

namespace {

// Scratch rows reused across nodes; one instance per worker thread.
struct Workspace {
    Eigen::ArrayXd dist2;
    Eigen::ArrayXd gauss;
    explicit Workspace(std::int32_t n) : dist2(n), gauss(n) {}
};

double potential_at(const Graph& g, std::int32_t i, double inv_two_sigma_sq, Workspace& ws) {
    const double w2 = g.default_distance() * g.default_distance();
    ws.dist2.setConstant(w2);
    auto ids = g.neighbor_ids(i);
    auto weights = g.neighbor_weights(i);
    for (std::size_t k = 0; k < ids.size(); ++k) ws.dist2[ids[k]] = weights[k] * weights[k];
    ws.dist2[i] = 0.0;

    ws.gauss = (-inv_two_sigma_sq * ws.dist2).exp();

    // The denominator's self term is exp(0) == 1, so it is always >= 1.
    // Accumulation stays strictly ascending in j for determinism.
    double num = 0.0;
    double den = 0.0;
    for (Eigen::Index j = 0; j < ws.dist2.size(); ++j) {
        num += ws.dist2[j] * ws.gauss[j];
        den += ws.gauss[j];
    }
    return inv_two_sigma_sq * (num / den);
}

double checked_inv_two_sigma_sq(double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
    return 1.0 / (2.0 * sigma * sigma);
}

}  // namespace

double node_potential(const Graph& g, std::int32_t node, double sigma) {
    const double inv = checked_inv_two_sigma_sq(sigma);
    g.check_node(node);
    Workspace ws(g.num_nodes());
    return potential_at(g, node, inv, ws);
}

PotentialField compute_potentials(const Graph& g, double sigma) {
    const double inv = checked_inv_two_sigma_sq(sigma);
    const std::int32_t n = g.num_nodes();
    PotentialField pf{sigma, g.default_distance(), Eigen::VectorXd(n)};
    Workspace ws(n);
    for (std::int32_t i = 0; i < n; ++i) pf.values[i] = potential_at(g, i, inv, ws);
    return pf;
}

PotentialField compute_potentials_parallel(const Graph& g, double sigma, int workers) {
    const double inv = checked_inv_two_sigma_sq(sigma);
    if (workers < 1) throw std::invalid_argument("workers must be at least 1");
    const std::int32_t n = g.num_nodes();
    PotentialField pf{sigma, g.default_distance(), Eigen::VectorXd(n)};

    // Contiguous node blocks, one per worker; each value is written by
    // exactly one thread, so assembly is positional and schedule-free.
    const std::int32_t base = n / workers;
    const std::int32_t rem = n % workers;
    auto block_begin = [&](int w) {
        return static_cast<std::int32_t>(w) * base + std::min<std::int32_t>(w, rem);
    };
    auto run_block = [&](std::int32_t begin, std::int32_t end) {
        Workspace ws(n);
        for (std::int32_t i = begin; i < end; ++i) pf.values[i] = potential_at(g, i, inv, ws);
    };

    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (int w = 1; w < workers; ++w)
        pool.emplace_back(run_block, block_begin(w), block_begin(w + 1));
    run_block(block_begin(0), block_begin(1));
    pool.clear();  // joins
    return pf;
}

}  // namespace graphqc
