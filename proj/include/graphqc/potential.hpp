#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "graphqc/graph.hpp"

namespace graphqc {

/// Per-node potential values for one width parameter sigma.
///
/// The potential of node i is
///
///   v(i) = 1/(2 sigma^2) * [ sum_j d(i,j)^2 exp(-d(i,j)^2 / (2 sigma^2)) ]
///                        / [ sum_j          exp(-d(i,j)^2 / (2 sigma^2)) ]
///
/// where j runs over every node including i itself (the self term adds 1 to
/// the denominator and nothing to the numerator, so the denominator never
/// vanishes) and d(i,j) is pairwise_distance(). Low values mark density
/// centers. The inner sums are accumulated in ascending j so the result is
/// a pure function of (graph, sigma).
struct PotentialField {
    double sigma = 1.0;
    double default_distance = 10.0;
    Eigen::VectorXd values;
};

/// Potential of a single node. sigma must be positive.
double node_potential(const Graph& g, std::int32_t node, double sigma);

/// Full field, single-threaded reference path.
PotentialField compute_potentials(const Graph& g, double sigma);

/// Full field computed by `workers` threads over disjoint node ranges.
/// Bit-identical to compute_potentials for any worker count: each node's
/// sums stay sequential, parallelism is across nodes only.
PotentialField compute_potentials_parallel(const Graph& g, double sigma, int workers);

}  // namespace graphqc
