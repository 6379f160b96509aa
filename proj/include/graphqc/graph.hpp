#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace graphqc {

/// Error raised for unreadable or malformed input files.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::int32_t u = 0;
    std::int32_t v = 0;
    double weight = 1.0;
};

/// Undirected weighted graph over dense node ids 0..N-1.
///
/// Adjacency is stored in CSR form with neighbor ids ascending within each
/// row. Edge weights are positive distances; node pairs without an edge lie
/// at `default_distance`, which is part of the graph's identity. The graph
/// is immutable after construction and safe for concurrent reads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list over dense ids. Duplicate edges are
    /// collapsed keeping the first weight (a conflicting second weight is
    /// warned about on stderr); self loops are dropped. `names` maps dense
    /// ids back to external node names and defaults to decimal ids.
    Graph(std::int32_t num_nodes, std::span<const Edge> edges,
          double default_distance, std::vector<std::string> names = {});

    std::int32_t num_nodes() const { return static_cast<std::int32_t>(offsets_.size()) - 1; }
    std::int64_t num_edges() const { return static_cast<std::int64_t>(nbr_ids_.size()) / 2; }
    double default_distance() const { return default_distance_; }

    std::int32_t degree(std::int32_t i) const;
    /// Sum of incident edge weights.
    double strength(std::int32_t i) const;

    std::span<const std::int32_t> neighbor_ids(std::int32_t i) const;
    std::span<const double> neighbor_weights(std::int32_t i) const;

    const std::string& name_of(std::int32_t id) const;
    /// Dense id for an external name, or -1 if unknown.
    std::int32_t id_of(const std::string& name) const;

    /// Canonical edge list: u < v, sorted ascending.
    std::vector<Edge> edges() const;

    void check_node(std::int32_t i) const;

    friend Graph complete_graph(std::int32_t n, double weight, double default_distance);

private:
    std::vector<std::int64_t> offsets_{0};
    std::vector<std::int32_t> nbr_ids_;
    std::vector<double> nbr_weights_;
    double default_distance_ = 10.0;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::int32_t> ids_;
};

/// Ground-truth labeling of every graph node, relabeled to dense 0..K-1
/// class indices in first-appearance order.
class LabelSet {
public:
    LabelSet() = default;
    LabelSet(std::vector<std::int32_t> dense_labels, std::int32_t num_classes,
             std::vector<std::string> class_names);

    std::int32_t num_classes() const { return num_classes_; }
    std::int32_t size() const { return static_cast<std::int32_t>(labels_.size()); }
    std::int32_t label_of(std::int32_t node) const { return labels_.at(node); }
    std::span<const std::int32_t> labels() const { return labels_; }
    const std::vector<std::string>& class_names() const { return class_names_; }

private:
    std::vector<std::int32_t> labels_;
    std::int32_t num_classes_ = 0;
    std::vector<std::string> class_names_;
};

/// Parses a whitespace-separated edge list (`u v` or `u v w`, `#` comment
/// lines). Node names are arbitrary strings mapped to dense ids in
/// first-appearance order; missing weights default to 1.0.
Graph parse_edge_list(std::istream& in, double default_distance,
                      const std::string& source = "<stream>");
Graph load_edge_list(const std::string& path, double default_distance);

/// Writes the canonical edge list (`name_u name_v weight` per line) so that
/// reloading reproduces the same named graph.
void write_edge_list(std::ostream& out, const Graph& g);

/// Parses a `node label` per line file covering every node of `g`.
LabelSet parse_labels(std::istream& in, const Graph& g,
                      const std::string& source = "<stream>");
LabelSet load_labels(const std::string& path, const Graph& g);

/// Dense relabeling of an arbitrary integer labeling.
LabelSet make_label_set(std::span<const std::int32_t> raw_labels);

/// Neighbors of i as (id, weight) pairs, ascending by id; excludes i.
std::vector<std::pair<std::int32_t, double>> neighbors(const Graph& g, std::int32_t i);

/// Distance between two nodes: 0 for i == j, the edge weight for adjacent
/// pairs, the graph's default distance otherwise.
double pairwise_distance(const Graph& g, std::int32_t i, std::int32_t j);

/// Connected component id per node (dense, by smallest contained node id)
/// and the component count.
std::pair<std::vector<std::int32_t>, std::int32_t> connected_components(const Graph& g);

/// Complete graph on n nodes with uniform edge weight; used by the
/// benchmark harness. Builds the CSR rows directly.
Graph complete_graph(std::int32_t n, double weight = 1.0, double default_distance = 10.0);

}  // namespace graphqc
