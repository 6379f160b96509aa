#include "graphqc/ggd.hpp"

#include <stdexcept>

namespace graphqc {

SuccessorMap build_successors(const Graph& g, const PotentialField& pf) {
    const std::int32_t n = g.num_nodes();
    if (pf.values.size() != n)
        throw std::invalid_argument("potential field does not match graph size");
    SuccessorMap s;
    s.succ.resize(n);
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t best = i;
        for (std::int32_t j : g.neighbor_ids(i)) {
            // lexicographic (potential, id); id breaks exact ties
            if (pf.values[j] < pf.values[best] ||
                (pf.values[j] == pf.values[best] && j < best))
                best = j;
        }
        s.succ[i] = best;
    }
    return s;
}

ClusterAssignment resolve_centers(const SuccessorMap& s) {
    const std::int32_t n = static_cast<std::int32_t>(s.succ.size());
    ClusterAssignment out;
    out.center.assign(n, -1);
    std::vector<std::int32_t> path;
    for (std::int32_t i = 0; i < n; ++i) {
        if (out.center[i] != -1) continue;
        path.clear();
        std::int32_t x = i;
        std::int32_t steps = 0;
        while (out.center[x] == -1 && s.succ[x] != x) {
            if (s.succ[x] < 0 || s.succ[x] >= n)
                throw std::invalid_argument("successor id out of range");
            path.push_back(x);
            x = s.succ[x];
            if (++steps > n) throw std::logic_error("successor map contains a cycle");
        }
        const std::int32_t root = out.center[x] == -1 ? x : out.center[x];
        out.center[x] = root;
        for (std::int32_t p : path) out.center[p] = root;
    }

    for (std::int32_t i = 0; i < n; ++i)
        if (out.center[i] == i) out.centers.push_back(i);
    out.num_clusters = static_cast<std::int32_t>(out.centers.size());

    std::vector<std::int32_t> index_of(n, -1);
    for (std::int32_t k = 0; k < out.num_clusters; ++k) index_of[out.centers[k]] = k;
    out.cluster_index.resize(n);
    for (std::int32_t i = 0; i < n; ++i) out.cluster_index[i] = index_of[out.center[i]];
    return out;
}

ClusterAssignment cluster(const Graph& g, double sigma, int workers) {
    PotentialField pf = compute_potentials_parallel(g, sigma, workers);
    return resolve_centers(build_successors(g, pf));
}

}  // namespace graphqc
