// Independent brute-force oracles used to check the library, plus random
// input generators. Everything here recomputes results from first
// principles and must stay independent of the implementation paths it
// checks.
#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "graphqc/graph.hpp"

namespace oracles {

// Pair classification of two labelings over all n(n-1)/2 node pairs.
struct PairCounts {
    std::int64_t same_same = 0;   // same cluster in both
    std::int64_t same_diff = 0;   // same in truth only
    std::int64_t diff_same = 0;   // same in pred only
    std::int64_t diff_diff = 0;
};

inline PairCounts pair_counts(std::span<const std::int32_t> truth,
                              std::span<const std::int32_t> pred) {
    PairCounts c;
    const std::size_t n = truth.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool st = truth[i] == truth[j];
            const bool sp = pred[i] == pred[j];
            if (st && sp) ++c.same_same;
            else if (st) ++c.same_diff;
            else if (sp) ++c.diff_same;
            else ++c.diff_diff;
        }
    return c;
}

// Hubert-Arabie adjusted Rand index from pair counts.
inline double ari(std::span<const std::int32_t> truth, std::span<const std::int32_t> pred) {
    const PairCounts c = pair_counts(truth, pred);
    const double a = static_cast<double>(c.same_same);
    const double b = static_cast<double>(c.same_diff);
    const double cc = static_cast<double>(c.diff_same);
    const double d = static_cast<double>(c.diff_diff);
    const double denom = (a + b) * (b + d) + (a + cc) * (cc + d);
    if (denom == 0.0) return b == 0.0 && cc == 0.0 ? 1.0 : 0.0;
    return 2.0 * (a * d - b * cc) / denom;
}

inline double fmi(std::span<const std::int32_t> truth, std::span<const std::int32_t> pred) {
    const PairCounts c = pair_counts(truth, pred);
    const double tp = static_cast<double>(c.same_same);
    const double tp_fn = tp + static_cast<double>(c.same_diff);
    const double tp_fp = tp + static_cast<double>(c.diff_same);
    if (tp_fp == 0.0 || tp_fn == 0.0) return 0.0;
    return tp / std::sqrt(tp_fp * tp_fn);
}

// Direct-summation NMI over map-based joint counts (natural log).
inline double nmi(std::span<const std::int32_t> truth, std::span<const std::int32_t> pred) {
    const double n = static_cast<double>(truth.size());
    std::map<std::pair<std::int32_t, std::int32_t>, std::int64_t> joint;
    std::map<std::int32_t, std::int64_t> t_count, p_count;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++joint[{truth[i], pred[i]}];
        ++t_count[truth[i]];
        ++p_count[pred[i]];
    }
    double ht = 0.0, hp = 0.0;
    for (const auto& [_, c] : t_count) ht -= c / n * std::log(c / n);
    for (const auto& [_, c] : p_count) hp -= c / n * std::log(c / n);
    if (ht == 0.0 || hp == 0.0) return 0.0;
    double mi = 0.0;
    for (const auto& [key, c] : joint) {
        const double pij = c / n;
        const double pi = t_count[key.first] / n;
        const double pj = p_count[key.second] / n;
        mi += pij * std::log(pij / (pi * pj));
    }
    return mi / std::sqrt(ht * hp);
}

// O(N^2) double-loop modularity straight from the definition.
inline double modularity(const graphqc::Graph& g, std::span<const std::int32_t> clusters,
                         double gamma = 1.0) {
    const std::int32_t n = g.num_nodes();
    std::map<std::pair<std::int32_t, std::int32_t>, double> adj;
    for (std::int32_t i = 0; i < n; ++i)
        for (const auto& [j, w] : graphqc::neighbors(g, i)) adj[{i, j}] = w;
    std::vector<double> strength(n, 0.0);
    double w_total = 0.0;
    for (const auto& [key, w] : adj) {
        strength[key.first] += w;
        w_total += w;
    }
    double q = 0.0;
    for (std::int32_t i = 0; i < n; ++i)
        for (std::int32_t j = 0; j < n; ++j) {
            if (clusters[i] != clusters[j]) continue;
            const auto it = adj.find({i, j});
            const double a = it == adj.end() ? 0.0 : it->second;
            q += a - gamma * strength[i] * strength[j] / w_total;
        }
    return q / w_total;
}

// Scalar evaluation of the node potential from its definition, using its
// own adjacency lookup and std::exp.
inline double node_potential(const graphqc::Graph& g, std::int32_t i, double sigma) {
    std::map<std::int32_t, double> row;
    for (const auto& [j, w] : graphqc::neighbors(g, i)) row[j] = w;
    const double w_default = g.default_distance();
    const double two_sigma_sq = 2.0 * sigma * sigma;
    double num = 0.0, den = 0.0;
    for (std::int32_t j = 0; j < g.num_nodes(); ++j) {
        double d = w_default;
        if (j == i) d = 0.0;
        else if (auto it = row.find(j); it != row.end()) d = it->second;
        const double d2 = d * d;
        const double e = std::exp(-d2 / two_sigma_sq);
        num += d2 * e;
        den += e;
    }
    return num / den / two_sigma_sq;
}

// --- random input generators (all take an explicit seeded engine) ---

inline graphqc::Graph random_graph(std::mt19937& rng, std::int32_t n, double avg_degree,
                                   double default_distance = 10.0,
                                   bool unit_weights = false) {
    std::uniform_int_distribution<std::int32_t> node(0, n - 1);
    std::uniform_real_distribution<double> weight(0.5, 2.0);
    const std::int64_t target = std::max<std::int64_t>(
        1, static_cast<std::int64_t>(avg_degree * n / 2.0));
    std::set<std::pair<std::int32_t, std::int32_t>> seen;
    std::vector<graphqc::Edge> edges;
    for (std::int64_t attempts = 0;
         static_cast<std::int64_t>(edges.size()) < target && attempts < 20 * target;
         ++attempts) {
        std::int32_t u = node(rng), v = node(rng);
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) continue;
        edges.push_back({key.first, key.second, unit_weights ? 1.0 : weight(rng)});
    }
    if (edges.empty()) edges.push_back({0, n > 1 ? 1 : 0, 1.0});
    return graphqc::Graph(n, edges, default_distance);
}

inline std::vector<std::int32_t> random_labeling(std::mt19937& rng, std::size_t n,
                                                 std::int32_t num_classes) {
    std::uniform_int_distribution<std::int32_t> cls(0, num_classes - 1);
    std::vector<std::int32_t> out(n);
    for (auto& x : out) x = cls(rng);
    return out;
}

}  // namespace oracles
