#pragma once

#include <cstdint>
#include <vector>

#include "graphqc/graph.hpp"
#include "graphqc/potential.hpp"

namespace graphqc {

/// Successor pointer per node: the (potential, id)-lexicographic minimum of
/// the node's closed neighborhood {i} + neighbors(i). Fixed points
/// (succ[i] == i) are the local minima; every non-trivial step strictly
/// decreases (potential, id), so pointer chains cannot cycle.
struct SuccessorMap {
    std::vector<std::int32_t> succ;
};

/// Resolved clustering: every node's chain of successors ends in a fixed
/// point, its center. Clusters are numbered densely by ascending center id.
struct ClusterAssignment {
    std::vector<std::int32_t> center;         // fixed point reached from each node
    std::vector<std::int32_t> cluster_index;  // dense 0..K-1 per node
    std::vector<std::int32_t> centers;        // distinct center ids, ascending
    std::int32_t num_clusters = 0;
};

SuccessorMap build_successors(const Graph& g, const PotentialField& pf);

/// Chases successor pointers to their fixed points with path compression.
/// Throws std::logic_error if the map contains a cycle, which a map built
/// by build_successors cannot.
ClusterAssignment resolve_centers(const SuccessorMap& s);

/// Full pipeline: potentials (parallel over `workers`), successor map,
/// resolved centers.
ClusterAssignment cluster(const Graph& g, double sigma, int workers = 1);

}  // namespace graphqc
