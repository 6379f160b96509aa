#include "graphqc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphqc/format.hpp"

namespace graphqc {

double modularity(const Graph& g, std::span<const std::int32_t> clusters, double gamma) {
    const std::int32_t n = g.num_nodes();
    if (static_cast<std::int32_t>(clusters.size()) != n)
        throw std::invalid_argument("cluster assignment does not cover the graph");
    if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be positive");

    std::int32_t k = 0;
    for (std::int32_t c : clusters) {
        if (c < 0) throw std::invalid_argument("negative cluster index");
        k = std::max(k, c + 1);
    }

    // w, intra and the per-cluster strengths are accumulated in the same
    // per-node ascending order, which keeps the single-cluster case at
    // exactly zero: intra then equals w bit for bit.
    Eigen::VectorXd strengths(n);
    for (std::int32_t i = 0; i < n; ++i) strengths[i] = g.strength(i);
    double w = 0.0;
    for (std::int32_t i = 0; i < n; ++i) w += strengths[i];
    if (w == 0.0) throw std::invalid_argument("modularity undefined for a graph with no edges");

    double intra = 0.0;
    for (std::int32_t i = 0; i < n; ++i) {
        auto ids = g.neighbor_ids(i);
        auto ws = g.neighbor_weights(i);
        double row = 0.0;
        for (std::size_t t = 0; t < ids.size(); ++t)
            if (clusters[ids[t]] == clusters[i]) row += ws[t];
        intra += row;
    }

    Eigen::VectorXd cluster_strength = Eigen::VectorXd::Zero(k);
    for (std::int32_t i = 0; i < n; ++i) cluster_strength[clusters[i]] += strengths[i];

    double null_model = 0.0;
    for (std::int32_t c = 0; c < k; ++c) {
        const double frac = cluster_strength[c] / w;
        null_model += frac * frac;
    }
    return intra / w - gamma * null_model;
}

double modularity(const Graph& g, const ClusterAssignment& c, double gamma) {
    return modularity(g, std::span<const std::int32_t>(c.cluster_index), gamma);
}

ContingencyTable contingency(std::span<const std::int32_t> truth, std::int32_t k_true,
                             std::span<const std::int32_t> pred, std::int32_t k_pred) {
    if (truth.size() != pred.size())
        throw std::invalid_argument("labelings cover different node sets");
    if (truth.empty()) throw std::invalid_argument("empty labelings");
    ContingencyTable t;
    t.counts.setZero(k_true, k_pred);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] < 0 || truth[i] >= k_true || pred[i] < 0 || pred[i] >= k_pred)
            throw std::invalid_argument("label index out of range");
        ++t.counts(truth[i], pred[i]);
    }
    t.row_sums = t.counts.rowwise().sum();
    t.col_sums = t.counts.colwise().sum();
    t.total = static_cast<std::int64_t>(truth.size());
    return t;
}

ContingencyTable contingency(const LabelSet& truth, const ClusterAssignment& pred) {
    if (truth.size() != static_cast<std::int32_t>(pred.cluster_index.size()))
        throw std::invalid_argument("labels and clustering cover different node sets");
    return contingency(truth.labels(), truth.num_classes(), pred.cluster_index,
                       pred.num_clusters);
}

namespace {

double comb2(std::int64_t x) { return 0.5 * static_cast<double>(x) * static_cast<double>(x - 1); }

// Identical as set partitions: the nonzero pattern is a bijection.
bool partitions_identical(const ContingencyTable& t) {
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i) {
        std::int64_t nonzero = 0;
        for (Eigen::Index j = 0; j < t.counts.cols(); ++j)
            if (t.counts(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
        std::int64_t nonzero = 0;
        for (Eigen::Index i = 0; i < t.counts.rows(); ++i)
            if (t.counts(i, j) != 0) ++nonzero;
        if (nonzero != 1) return false;
    }
    return true;
}

}  // namespace

double ari(const ContingencyTable& t) {
    if (t.total < 2) throw std::invalid_argument("ari needs at least two samples");
    double sum_ij = 0.0;
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i)
        for (Eigen::Index j = 0; j < t.counts.cols(); ++j) sum_ij += comb2(t.counts(i, j));
    double sum_a = 0.0;
    for (Eigen::Index i = 0; i < t.row_sums.size(); ++i) sum_a += comb2(t.row_sums[i]);
    double sum_b = 0.0;
    for (Eigen::Index j = 0; j < t.col_sums.size(); ++j) sum_b += comb2(t.col_sums[j]);

    const double expected = sum_a * sum_b / comb2(t.total);
    const double denom = 0.5 * (sum_a + sum_b) - expected;
    if (denom == 0.0) return partitions_identical(t) ? 1.0 : 0.0;
    return (sum_ij - expected) / denom;
}

double fmi(const ContingencyTable& t) {
    double tp = 0.0;
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i)
        for (Eigen::Index j = 0; j < t.counts.cols(); ++j) tp += comb2(t.counts(i, j));
    double tp_fp = 0.0;
    for (Eigen::Index j = 0; j < t.col_sums.size(); ++j) tp_fp += comb2(t.col_sums[j]);
    double tp_fn = 0.0;
    for (Eigen::Index i = 0; i < t.row_sums.size(); ++i) tp_fn += comb2(t.row_sums[i]);
    if (tp_fp == 0.0 || tp_fn == 0.0) {
        std::cerr << "warning: fmi undefined for an all-singleton partition, reporting 0\n";
        return 0.0;
    }
    return tp / std::sqrt(tp_fp * tp_fn);
}

double nmi(const ContingencyTable& t) {
    const double n = static_cast<double>(t.total);
    double h_true = 0.0;
    for (Eigen::Index i = 0; i < t.row_sums.size(); ++i)
        if (t.row_sums[i] > 0) {
            const double p = t.row_sums[i] / n;
            h_true -= p * std::log(p);
        }
    double h_pred = 0.0;
    for (Eigen::Index j = 0; j < t.col_sums.size(); ++j)
        if (t.col_sums[j] > 0) {
            const double p = t.col_sums[j] / n;
            h_pred -= p * std::log(p);
        }
    if (h_true == 0.0 || h_pred == 0.0) return 0.0;

    double mi = 0.0;
    for (Eigen::Index i = 0; i < t.counts.rows(); ++i)
        for (Eigen::Index j = 0; j < t.counts.cols(); ++j) {
            if (t.counts(i, j) == 0) continue;  // 0 log 0 := 0
            const double p = t.counts(i, j) / n;
            const double pi = t.row_sums[i] / n;
            const double pj = t.col_sums[j] / n;
            mi += p * std::log(p / (pi * pj));
        }
    return mi / std::sqrt(h_true * h_pred);
}

namespace {

// Cluster -> class assignment maximizing sum of matched counts.
std::vector<std::int32_t> best_mapping(const ContingencyTable& t) {
    const std::int32_t k = static_cast<std::int32_t>(t.counts.rows());
    std::vector<std::int32_t> mapping(k);
    if (k <= 8) {
        std::vector<std::int32_t> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::int64_t best = -1;
        do {
            std::int64_t score = 0;
            for (std::int32_t j = 0; j < k; ++j) score += t.counts(perm[j], j);
            if (score > best) {
                best = score;
                mapping = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return mapping;
    }
    // Greedy: repeatedly take the largest remaining (class, cluster) overlap.
    std::vector<bool> class_used(k, false), cluster_used(k, false);
    for (std::int32_t step = 0; step < k; ++step) {
        std::int64_t best = -1;
        std::int32_t bi = 0, bj = 0;
        for (std::int32_t i = 0; i < k; ++i) {
            if (class_used[i]) continue;
            for (std::int32_t j = 0; j < k; ++j) {
                if (cluster_used[j]) continue;
                if (t.counts(i, j) > best) {
                    best = t.counts(i, j);
                    bi = i;
                    bj = j;
                }
            }
        }
        class_used[bi] = true;
        cluster_used[bj] = true;
        mapping[bj] = bi;
    }
    return mapping;
}

}  // namespace

MatchedScores matched_scores(std::span<const std::int32_t> truth, std::int32_t k_true,
                             std::span<const std::int32_t> pred, std::int32_t k_pred) {
    if (k_true != k_pred)
        throw std::invalid_argument("matched scores need equal cluster and class counts");
    const ContingencyTable t = contingency(truth, k_true, pred, k_pred);
    const std::int32_t k = k_true;
    MatchedScores m;
    m.cluster_to_class = best_mapping(t);

    std::int64_t matched = 0;
    for (std::int32_t j = 0; j < k; ++j) matched += t.counts(m.cluster_to_class[j], j);
    m.accuracy = static_cast<double>(matched) / static_cast<double>(t.total);

    // With the bijective mapping in place every class score reads directly
    // off the contingency table.
    std::vector<std::int32_t> class_to_cluster(k);
    for (std::int32_t j = 0; j < k; ++j) class_to_cluster[m.cluster_to_class[j]] = j;
    m.class_precision.resize(k);
    m.class_recall.resize(k);
    m.class_f1.resize(k);
    for (std::int32_t c = 0; c < k; ++c) {
        const std::int32_t j = class_to_cluster[c];
        const double tp = static_cast<double>(t.counts(c, j));
        const double fp = static_cast<double>(t.col_sums[j]) - tp;
        const double fn = static_cast<double>(t.row_sums[c]) - tp;
        const double precision = tp + fp > 0.0 ? tp / (tp + fp) : 0.0;
        const double recall = tp + fn > 0.0 ? tp / (tp + fn) : 0.0;
        m.class_precision[c] = precision;
        m.class_recall[c] = recall;
        m.class_f1[c] = precision + recall > 0.0
                            ? 2.0 * precision * recall / (precision + recall)
                            : 0.0;
    }

    if (k == 2) {
        const std::int32_t positive = m.cluster_to_class[0];
        m.f1 = m.class_f1[positive];
        m.recall = m.class_recall[positive];
    } else {
        m.f1 = std::accumulate(m.class_f1.begin(), m.class_f1.end(), 0.0) / k;
        m.recall = std::accumulate(m.class_recall.begin(), m.class_recall.end(), 0.0) / k;
    }
    return m;
}

MatchedScores matched_scores(const LabelSet& truth, const ClusterAssignment& pred) {
    if (truth.size() != static_cast<std::int32_t>(pred.cluster_index.size()))
        throw std::invalid_argument("labels and clustering cover different node sets");
    return matched_scores(truth.labels(), truth.num_classes(), pred.cluster_index,
                          pred.num_clusters);
}

MetricReport evaluate(const Graph& g, const ClusterAssignment& c, const LabelSet* labels,
                      double gamma, std::optional<double> sigma) {
    MetricReport r;
    r.modularity = modularity(g, c, gamma);
    r.num_clusters = c.num_clusters;
    r.sigma = sigma;
    if (labels) {
        const ContingencyTable t = contingency(*labels, c);
        r.nmi = nmi(t);
        r.ari = ari(t);
        r.fmi = fmi(t);
        if (labels->num_classes() == c.num_clusters) r.matched = matched_scores(*labels, c);
    }
    return r;
}

MetricReport evaluate_labelings(std::span<const std::int32_t> truth, std::int32_t k_true,
                                std::span<const std::int32_t> pred, std::int32_t k_pred,
                                const Graph* g, double gamma) {
    MetricReport r;
    const ContingencyTable t = contingency(truth, k_true, pred, k_pred);
    r.nmi = nmi(t);
    r.ari = ari(t);
    r.fmi = fmi(t);
    r.num_clusters = k_pred;
    if (k_true == k_pred) r.matched = matched_scores(truth, k_true, pred, k_pred);
    if (g) r.modularity = modularity(*g, pred, gamma);
    return r;
}

std::string metric_csv_header() {
    return "modularity,nmi,ari,fmi,f1,accuracy,recall,num_clusters,sigma";
}

std::string metric_csv_row(const MetricReport& r) {
    std::ostringstream out;
    out << format_cell(r.modularity) << ',' << format_cell(r.nmi) << ','
        << format_cell(r.ari) << ',' << format_cell(r.fmi) << ',';
    if (r.matched)
        out << format_double(r.matched->f1) << ',' << format_double(r.matched->accuracy)
            << ',' << format_double(r.matched->recall);
    else
        out << ",,";
    out << ',';
    if (r.num_clusters) out << *r.num_clusters;
    out << ',' << format_cell(r.sigma);
    return out.str();
}

std::string metric_json(const MetricReport& r) {
    nlohmann::ordered_json j;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("modularity", r.modularity);
    put("nmi", r.nmi);
    put("ari", r.ari);
    put("fmi", r.fmi);
    put("f1", r.matched ? std::optional<double>(r.matched->f1) : std::nullopt);
    put("accuracy", r.matched ? std::optional<double>(r.matched->accuracy) : std::nullopt);
    put("recall", r.matched ? std::optional<double>(r.matched->recall) : std::nullopt);
    if (r.num_clusters)
        j["num_clusters"] = *r.num_clusters;
    else
        j["num_clusters"] = nullptr;
    put("sigma", r.sigma);
    return j.dump();
}

}  // namespace graphqc
