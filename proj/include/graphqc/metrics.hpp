#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphqc/ggd.hpp"
#include "graphqc/graph.hpp"

namespace graphqc {

/// Co-occurrence counts between a true and a predicted partition.
struct ContingencyTable {
    Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts;  // K_true x K_pred
    Eigen::Vector<std::int64_t, Eigen::Dynamic> row_sums;                // a_i
    Eigen::Vector<std::int64_t, Eigen::Dynamic> col_sums;                // b_j
    std::int64_t total = 0;                                              // n
};

/// Classification-style scores after mapping clusters onto classes by the
/// accuracy-maximizing assignment (exhaustive for K <= 8, greedy beyond).
/// The headline f1/recall use the class mapped from cluster 0 as positive
/// when K == 2 and macro averages otherwise; per-class values are kept so
/// any positive-class convention can be checked.
struct MatchedScores {
    double f1 = 0.0;
    double accuracy = 0.0;
    double recall = 0.0;
    std::vector<double> class_precision;
    std::vector<double> class_recall;
    std::vector<double> class_f1;
    std::vector<std::int32_t> cluster_to_class;
};

/// Flat metric record; absent fields were not computable for the run
/// (no labels, cluster/class count mismatch, or no graph).
struct MetricReport {
    std::optional<double> modularity;
    std::optional<double> nmi;
    std::optional<double> ari;
    std::optional<double> fmi;
    std::optional<MatchedScores> matched;
    std::optional<std::int32_t> num_clusters;
    std::optional<double> sigma;
};

/// Newman modularity with resolution gamma:
///   Q = 1/w * sum_ij (A_ij - gamma * w_i w_j / w) [c_i == c_j]
/// with w_i the node strength and w the total of all adjacency entries
/// (twice the edge weight sum). Throws if the graph has no edges.
double modularity(const Graph& g, std::span<const std::int32_t> clusters, double gamma = 1.0);
double modularity(const Graph& g, const ClusterAssignment& c, double gamma = 1.0);

ContingencyTable contingency(std::span<const std::int32_t> truth, std::int32_t k_true,
                             std::span<const std::int32_t> pred, std::int32_t k_pred);
ContingencyTable contingency(const LabelSet& truth, const ClusterAssignment& pred);

/// Adjusted Rand index in [-1, 1]. When the adjustment denominator is zero
/// (both partitions trivial) returns 1 for identical partitions, else 0.
double ari(const ContingencyTable& t);

/// Fowlkes-Mallows index in [0, 1]: TP / sqrt((TP+FP)(TP+FN)) over node
/// pairs. All-singleton partitions have no same-cluster pair; returns 0
/// with a warning.
double fmi(const ContingencyTable& t);

/// Normalized mutual information MI / sqrt(H_true * H_pred), natural log,
/// 0 log 0 := 0. Returns 0 when either entropy is zero.
double nmi(const ContingencyTable& t);

MatchedScores matched_scores(std::span<const std::int32_t> truth, std::int32_t k_true,
                             std::span<const std::int32_t> pred, std::int32_t k_pred);
MatchedScores matched_scores(const LabelSet& truth, const ClusterAssignment& pred);

/// Full report for a clustering of g: modularity always, external metrics
/// when labels are given, matched scores when the cluster count equals the
/// class count.
MetricReport evaluate(const Graph& g, const ClusterAssignment& c,
                      const LabelSet* labels = nullptr, double gamma = 1.0,
                      std::optional<double> sigma = std::nullopt);

/// Report for two standalone labelings; modularity only when a graph is
/// supplied (pred is then read as a partition of its nodes).
MetricReport evaluate_labelings(std::span<const std::int32_t> truth, std::int32_t k_true,
                                std::span<const std::int32_t> pred, std::int32_t k_pred,
                                const Graph* g = nullptr, double gamma = 1.0);

// Serialization. CSV field order is fixed:
//   modularity,nmi,ari,fmi,f1,accuracy,recall,num_clusters,sigma
// and the JSON object mirrors it one-to-one with null for absent fields.
std::string metric_csv_header();
std::string metric_csv_row(const MetricReport& r);
std::string metric_json(const MetricReport& r);

}  // namespace graphqc
