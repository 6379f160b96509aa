#include "graphqc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "graphqc/format.hpp"

namespace graphqc {

namespace {

std::vector<std::string> default_names(std::int32_t n) {
    std::vector<std::string> names(n);
    for (std::int32_t i = 0; i < n; ++i) names[i] = std::to_string(i);
    return names;
}

}  // namespace

Graph::Graph(std::int32_t num_nodes, std::span<const Edge> edges,
             double default_distance, std::vector<std::string> names)
    : default_distance_(default_distance) {
    if (num_nodes < 1) throw std::invalid_argument("graph needs at least one node");
    if (default_distance <= 0.0) throw std::invalid_argument("default distance must be positive");
    if (!names.empty() && static_cast<std::int32_t>(names.size()) != num_nodes)
        throw std::invalid_argument("name list does not match node count");
    names_ = names.empty() ? default_names(num_nodes) : std::move(names);
    ids_.reserve(names_.size());
    for (std::int32_t i = 0; i < num_nodes; ++i) {
        if (!ids_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate node name: " + names_[i]);
    }

    // Collapse duplicates keeping the first weight; drop self loops.
    std::map<std::pair<std::int32_t, std::int32_t>, double> unique;
    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= num_nodes || e.v < 0 || e.v >= num_nodes)
            throw std::out_of_range("edge endpoint out of range");
        if (e.weight <= 0.0) throw std::invalid_argument("edge weight must be positive");
        if (e.u == e.v) continue;
        auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = unique.emplace(key, e.weight);
        if (!inserted && it->second != e.weight)
            std::cerr << "warning: duplicate edge " << names_[key.first] << " "
                      << names_[key.second] << " keeps weight " << format_double(it->second)
                      << ", ignoring " << format_double(e.weight) << "\n";
    }

    std::vector<std::int32_t> deg(num_nodes, 0);
    for (const auto& [key, w] : unique) {
        ++deg[key.first];
        ++deg[key.second];
    }
    offsets_.assign(num_nodes + 1, 0);
    for (std::int32_t i = 0; i < num_nodes; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
    nbr_ids_.resize(offsets_[num_nodes]);
    nbr_weights_.resize(offsets_[num_nodes]);
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    // std::map iterates keys ascending, so each CSR row fills ascending.
    for (const auto& [key, w] : unique) {
        nbr_ids_[cursor[key.first]] = key.second;
        nbr_weights_[cursor[key.first]++] = w;
        nbr_ids_[cursor[key.second]] = key.first;
        nbr_weights_[cursor[key.second]++] = w;
    }
}

void Graph::check_node(std::int32_t i) const {
    if (i < 0 || i >= num_nodes())
        throw std::out_of_range("node id " + std::to_string(i) + " out of range");
}

std::int32_t Graph::degree(std::int32_t i) const {
    check_node(i);
    return static_cast<std::int32_t>(offsets_[i + 1] - offsets_[i]);
}

double Graph::strength(std::int32_t i) const {
    check_node(i);
    double s = 0.0;
    for (std::int64_t k = offsets_[i]; k < offsets_[i + 1]; ++k) s += nbr_weights_[k];
    return s;
}

std::span<const std::int32_t> Graph::neighbor_ids(std::int32_t i) const {
    check_node(i);
    return {nbr_ids_.data() + offsets_[i], static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

std::span<const double> Graph::neighbor_weights(std::int32_t i) const {
    check_node(i);
    return {nbr_weights_.data() + offsets_[i],
            static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

const std::string& Graph::name_of(std::int32_t id) const {
    check_node(id);
    return names_[id];
}

std::int32_t Graph::id_of(const std::string& name) const {
    auto it = ids_.find(name);
    return it == ids_.end() ? -1 : it->second;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(num_edges()));
    for (std::int32_t i = 0; i < num_nodes(); ++i) {
        auto ids = neighbor_ids(i);
        auto ws = neighbor_weights(i);
        for (std::size_t k = 0; k < ids.size(); ++k)
            if (i < ids[k]) out.push_back({i, ids[k], ws[k]});
    }
    return out;
}

LabelSet::LabelSet(std::vector<std::int32_t> dense_labels, std::int32_t num_classes,
                   std::vector<std::string> class_names)
    : labels_(std::move(dense_labels)),
      num_classes_(num_classes),
      class_names_(std::move(class_names)) {}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Non-comment, non-blank lines tokenized on whitespace.
std::vector<Line> tokenized_lines(std::istream& in) {
    std::vector<Line> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0][0] == '#') continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

double parse_weight(const std::string& tok, const std::string& where) {
    double w = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw IoError(where + ": malformed weight '" + tok + "'");
    return w;
}

}  // namespace

Graph parse_edge_list(std::istream& in, double default_distance, const std::string& source) {
    if (default_distance <= 0.0)
        throw std::invalid_argument("default distance must be positive");
    std::vector<std::string> names;
    std::unordered_map<std::string, std::int32_t> ids;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = ids.emplace(name, static_cast<std::int32_t>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    };

    std::vector<Edge> edges;
    for (const Line& line : tokenized_lines(in)) {
        const std::string where = source + ": line " + std::to_string(line.number);
        if (line.tokens.size() != 2 && line.tokens.size() != 3)
            throw IoError(where + ": malformed line, expected 'u v' or 'u v w'");
        double w = 1.0;
        if (line.tokens.size() == 3) w = parse_weight(line.tokens[2], where);
        if (w <= 0.0) throw IoError(where + ": non-positive weight");
        std::int32_t u = intern(line.tokens[0]);
        std::int32_t v = intern(line.tokens[1]);
        if (u == v) continue;  // self loops dropped
        edges.push_back({u, v, w});
    }
    if (names.empty()) throw IoError(source + ": empty edge list");
    const std::int32_t n = static_cast<std::int32_t>(names.size());
    return Graph(n, edges, default_distance, std::move(names));
}

Graph load_edge_list(const std::string& path, double default_distance) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_edge_list(in, default_distance, path);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const Edge& e : g.edges())
        out << g.name_of(e.u) << " " << g.name_of(e.v) << " " << format_double(e.weight)
            << "\n";
}

LabelSet parse_labels(std::istream& in, const Graph& g, const std::string& source) {
    std::vector<std::int32_t> raw(g.num_nodes(), -1);
    std::vector<std::string> class_names;
    std::unordered_map<std::string, std::int32_t> class_ids;

    for (const Line& line : tokenized_lines(in)) {
        const std::string where = source + ": line " + std::to_string(line.number);
        if (line.tokens.size() != 2)
            throw IoError(where + ": malformed line, expected 'node label'");
        std::int32_t node = g.id_of(line.tokens[0]);
        if (node < 0) throw IoError(where + ": unknown node '" + line.tokens[0] + "'");
        auto [it, inserted] =
            class_ids.emplace(line.tokens[1], static_cast<std::int32_t>(class_names.size()));
        if (inserted) class_names.push_back(line.tokens[1]);
        if (raw[node] != -1 && raw[node] != it->second)
            throw IoError(where + ": conflicting duplicate label for node '" +
                          line.tokens[0] + "'");
        raw[node] = it->second;
    }
    for (std::int32_t i = 0; i < g.num_nodes(); ++i)
        if (raw[i] == -1) throw IoError(source + ": unlabeled node '" + g.name_of(i) + "'");
    const std::int32_t num_classes = static_cast<std::int32_t>(class_names.size());
    return LabelSet(std::move(raw), num_classes, std::move(class_names));
}

LabelSet load_labels(const std::string& path, const Graph& g) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_labels(in, g, path);
}

LabelSet make_label_set(std::span<const std::int32_t> raw_labels) {
    std::vector<std::int32_t> dense(raw_labels.size());
    std::vector<std::string> class_names;
    std::unordered_map<std::int32_t, std::int32_t> class_ids;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] =
            class_ids.emplace(raw_labels[i], static_cast<std::int32_t>(class_names.size()));
        if (inserted) class_names.push_back(std::to_string(raw_labels[i]));
        dense[i] = it->second;
    }
    const std::int32_t num_classes = static_cast<std::int32_t>(class_names.size());
    return LabelSet(std::move(dense), num_classes, std::move(class_names));
}

std::vector<std::pair<std::int32_t, double>> neighbors(const Graph& g, std::int32_t i) {
    auto ids = g.neighbor_ids(i);
    auto ws = g.neighbor_weights(i);
    std::vector<std::pair<std::int32_t, double>> out;
    out.reserve(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) out.emplace_back(ids[k], ws[k]);
    return out;
}

double pairwise_distance(const Graph& g, std::int32_t i, std::int32_t j) {
    g.check_node(i);
    g.check_node(j);
    if (i == j) return 0.0;
    auto ids = g.neighbor_ids(i);
    auto it = std::lower_bound(ids.begin(), ids.end(), j);
    if (it != ids.end() && *it == j)
        return g.neighbor_weights(i)[static_cast<std::size_t>(it - ids.begin())];
    return g.default_distance();
}

std::pair<std::vector<std::int32_t>, std::int32_t> connected_components(const Graph& g) {
    const std::int32_t n = g.num_nodes();
    std::vector<std::int32_t> comp(n, -1);
    std::int32_t count = 0;
    std::deque<std::int32_t> queue;
    for (std::int32_t start = 0; start < n; ++start) {
        if (comp[start] != -1) continue;
        comp[start] = count;
        queue.push_back(start);
        while (!queue.empty()) {
            std::int32_t u = queue.front();
            queue.pop_front();
            for (std::int32_t v : g.neighbor_ids(u)) {
                if (comp[v] == -1) {
                    comp[v] = count;
                    queue.push_back(v);
                }
            }
        }
        ++count;
    }
    return {std::move(comp), count};
}

Graph complete_graph(std::int32_t n, double weight, double default_distance) {
    if (n < 1) throw std::invalid_argument("graph needs at least one node");
    if (weight <= 0.0) throw std::invalid_argument("edge weight must be positive");
    Graph g(1, {}, default_distance);
    g.names_ = default_names(n);
    g.ids_.clear();
    g.ids_.reserve(n);
    for (std::int32_t i = 0; i < n; ++i) g.ids_.emplace(g.names_[i], i);
    g.offsets_.assign(n + 1, 0);
    for (std::int32_t i = 0; i <= n; ++i)
        g.offsets_[i] = static_cast<std::int64_t>(i) * (n - 1);
    g.nbr_ids_.resize(static_cast<std::size_t>(n) * (n - 1));
    g.nbr_weights_.assign(static_cast<std::size_t>(n) * (n - 1), weight);
    for (std::int32_t i = 0; i < n; ++i) {
        std::int64_t k = g.offsets_[i];
        for (std::int32_t j = 0; j < n; ++j)
            if (j != i) g.nbr_ids_[k++] = j;
    }
    return g;
}

}  // namespace graphqc
