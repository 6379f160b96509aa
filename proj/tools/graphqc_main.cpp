// Command-line front end: cluster, sweep, bench and eval subcommands.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "graphqc/format.hpp"
#include "graphqc/ggd.hpp"
#include "graphqc/graph.hpp"
#include "graphqc/metrics.hpp"
#include "graphqc/potential.hpp"
#include "graphqc/sweep.hpp"

namespace {

using namespace graphqc;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitBadParam = 2;

int default_workers() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : static_cast<int>(n);
}

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// Writes to the named file, or to stdout for "-".
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) : path_(path) {
        if (path_ != "-") {
            file_.open(path_);
            if (!file_) throw IoError("cannot open " + path_ + " for writing");
        }
    }
    std::ostream& stream() { return path_ == "-" ? std::cout : file_; }
    void finish() {
        if (path_ == "-") return;
        file_.close();
        if (!file_) throw IoError("error writing " + path_);
    }

private:
    std::string path_;
    std::ofstream file_;
};

void print_report(const MetricReport& report, const std::string& format) {
    if (format == "json")
        std::cout << metric_json(report) << "\n";
    else
        std::cout << metric_csv_header() << "\n" << metric_csv_row(report) << "\n";
}

void write_assignment_csv(std::ostream& out, const Graph& g, const ClusterAssignment& c) {
    out << "node,center,cluster\n";
    for (std::int32_t i = 0; i < g.num_nodes(); ++i)
        out << g.name_of(i) << ',' << g.name_of(c.center[i]) << ',' << c.cluster_index[i]
            << '\n';
}

struct ClusterOptions {
    std::string graph_path;
    std::string labels_path;
    double sigma = 1.0;
    double default_distance = 10.0;
    int workers = default_workers();
    double gamma = 1.0;
    std::string out = "-";
    std::string format = "csv";
};

int run_cluster(const ClusterOptions& opt) {
    require(opt.sigma > 0.0, "sigma must be positive");
    require(opt.default_distance > 0.0, "default-distance must be positive");
    require(opt.workers >= 1, "workers must be at least 1");
    require(opt.gamma > 0.0, "gamma must be positive");

    Graph g = load_edge_list(opt.graph_path, opt.default_distance);
    std::optional<LabelSet> labels;
    if (!opt.labels_path.empty()) labels = load_labels(opt.labels_path, g);

    ClusterAssignment c = cluster(g, opt.sigma, opt.workers);
    MetricReport report =
        evaluate(g, c, labels ? &*labels : nullptr, opt.gamma, opt.sigma);

    OutputTarget out(opt.out);
    write_assignment_csv(out.stream(), g, c);
    out.finish();
    print_report(report, opt.format);
    return kExitOk;
}

struct SweepOptions {
    ClusterOptions base;
    double sigma_min = 0.0;  // 0 means "derive from default distance"
    double sigma_max = 0.0;
    int sigma_steps = 30;
    bool log_grid = true;
};

int run_sweep_cmd(const SweepOptions& opt) {
    require(opt.base.default_distance > 0.0, "default-distance must be positive");
    require(opt.base.workers >= 1, "workers must be at least 1");
    require(opt.base.gamma > 0.0, "gamma must be positive");
    require(opt.sigma_steps >= 1, "sigma-steps must be at least 1");

    const double w = opt.base.default_distance;
    const double lo = opt.sigma_min > 0.0 ? opt.sigma_min : 0.1 * w;
    const double hi = opt.sigma_max > 0.0 ? opt.sigma_max : 3.0 * w;
    require(lo > 0.0, "sigma-min must be positive");
    require(hi >= lo, "sigma-max must not be below sigma-min");

    std::vector<double> grid;
    if (opt.sigma_steps == 1) {
        grid = {lo};  // one point is the same under either spacing
    } else if (opt.log_grid) {
        grid = log_sigma_grid(w, opt.sigma_steps, lo / w, hi / w);
    } else {
        grid = linear_sigma_grid(lo, hi, opt.sigma_steps);
    }

    Graph g = load_edge_list(opt.base.graph_path, w);
    std::optional<LabelSet> labels;
    if (!opt.base.labels_path.empty()) labels = load_labels(opt.base.labels_path, g);

    std::vector<SweepRecord> records =
        run_sweep(g, grid, labels ? &*labels : nullptr, opt.base.workers, opt.base.gamma);

    OutputTarget out(opt.base.out);
    write_sweep_csv(out.stream(), records);
    out.finish();

    if (records.size() < 2) {
        std::cout << "mutation interval: none\n";
        return kExitOk;
    }
    if (auto m = detect_mutation(records))
        std::cout << "mutation interval: [" << format_double(m->sigma_low) << ", "
                  << format_double(m->sigma_high) << "] drop=" << m->drop << "\n";
    else
        std::cout << "mutation interval: none\n";
    return kExitOk;
}

struct BenchOptions {
    std::vector<int> sizes = {1000, 5000, 10000};
    std::vector<int> workers = {1, 2, 4, 8};
    double sigma = 1.0;
    std::string out = "-";
};

int run_bench(const BenchOptions& opt) {
    require(!opt.sizes.empty(), "sizes must not be empty");
    require(!opt.workers.empty(), "workers list must not be empty");
    for (std::size_t k = 0; k < opt.sizes.size(); ++k) {
        require(opt.sizes[k] >= 1, "sizes must be positive");
        require(k == 0 || opt.sizes[k] > opt.sizes[k - 1], "sizes must be ascending");
    }
    for (int wk : opt.workers) require(wk >= 1, "workers must be at least 1");
    require(opt.sigma > 0.0, "sigma must be positive");

    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    OutputTarget out(opt.out);
    out.stream() << "n,workers,serial_ms,parallel_ms,speedup\n";
    for (int n : opt.sizes) {
        const Graph g = complete_graph(n);
        const PotentialField reference = compute_potentials(g, opt.sigma);

        const auto t_serial = clock::now();
        const PotentialField serial = compute_potentials(g, opt.sigma);
        const double serial_ms = ms_since(t_serial);
        if (serial.values != reference.values) {
            std::cerr << "serial potential engine is not deterministic at n=" << n << "\n";
            return kExitIo;
        }

        for (int wk : opt.workers) {
            // Contract check before any timing is reported.
            const PotentialField check = compute_potentials_parallel(g, opt.sigma, wk);
            if (check.values != reference.values) {
                std::cerr << "serial/parallel potential mismatch at n=" << n
                          << " workers=" << wk << "\n";
                return kExitIo;
            }
            const auto t_par = clock::now();
            const PotentialField timed = compute_potentials_parallel(g, opt.sigma, wk);
            const double parallel_ms = ms_since(t_par);
            (void)timed;
            out.stream() << n << ',' << wk << ',' << format_double(serial_ms) << ','
                         << format_double(parallel_ms) << ','
                         << format_double(serial_ms / parallel_ms) << '\n';
        }
    }
    out.finish();
    return kExitOk;
}

struct EvalOptions {
    std::string truth_path;
    std::string pred_path;
    std::string graph_path;
    double default_distance = 10.0;
    double gamma = 1.0;
    std::string format = "csv";
};

// `node label` lines keyed by node name, in first-appearance order.
std::vector<std::pair<std::string, std::string>> read_labeling(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::map<std::string, std::string> seen;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::istringstream ls(line);
        std::string node, label, extra;
        if (!(ls >> node) || node[0] == '#') continue;
        if (!(ls >> label) || (ls >> extra))
            throw IoError(path + ": line " + std::to_string(number) +
                          ": malformed line, expected 'node label'");
        auto it = seen.find(node);
        if (it != seen.end()) {
            if (it->second != label)
                throw IoError(path + ": line " + std::to_string(number) +
                              ": conflicting duplicate label for node '" + node + "'");
            continue;
        }
        seen.emplace(node, label);
        out.emplace_back(node, label);
    }
    if (out.empty()) throw IoError(path + ": empty labeling");
    return out;
}

int run_eval(const EvalOptions& opt) {
    require(opt.gamma > 0.0, "gamma must be positive");
    require(opt.default_distance > 0.0, "default-distance must be positive");
    auto truth_pairs = read_labeling(opt.truth_path);
    auto pred_pairs = read_labeling(opt.pred_path);

    std::map<std::string, std::string> pred_by_node(pred_pairs.begin(), pred_pairs.end());
    if (truth_pairs.size() != pred_by_node.size())
        throw std::invalid_argument("labelings cover different node sets");

    // Node order comes from the graph when given, else from the truth file.
    std::optional<Graph> g;
    std::vector<std::string> node_order;
    if (!opt.graph_path.empty()) {
        g = load_edge_list(opt.graph_path, opt.default_distance);
        std::map<std::string, std::string> truth_by_node(truth_pairs.begin(),
                                                         truth_pairs.end());
        if (static_cast<std::size_t>(g->num_nodes()) != truth_by_node.size())
            throw std::invalid_argument("labelings do not cover the graph's node set");
        node_order.reserve(g->num_nodes());
        for (std::int32_t i = 0; i < g->num_nodes(); ++i)
            node_order.push_back(g->name_of(i));
        for (const auto& name : node_order)
            if (!truth_by_node.count(name))
                throw std::invalid_argument("labelings do not cover the graph's node set");
        truth_pairs.clear();
        for (const auto& name : node_order) truth_pairs.emplace_back(name, truth_by_node[name]);
    }

    std::vector<std::int32_t> truth_dense, pred_dense;
    std::map<std::string, std::int32_t> truth_classes, pred_classes;
    for (const auto& [node, label] : truth_pairs) {
        auto pit = pred_by_node.find(node);
        if (pit == pred_by_node.end())
            throw std::invalid_argument("labelings cover different node sets");
        truth_dense.push_back(static_cast<std::int32_t>(
            truth_classes.emplace(label, truth_classes.size()).first->second));
        pred_dense.push_back(static_cast<std::int32_t>(
            pred_classes.emplace(pit->second, pred_classes.size()).first->second));
    }

    MetricReport report = evaluate_labelings(
        truth_dense, static_cast<std::int32_t>(truth_classes.size()), pred_dense,
        static_cast<std::int32_t>(pred_classes.size()), g ? &*g : nullptr, opt.gamma);
    print_report(report, opt.format);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum clustering for graph structures"};
    app.require_subcommand(1);

    ClusterOptions cluster_opt;
    CLI::App* cmd_cluster = app.add_subcommand(
        "cluster", "Cluster a graph at one sigma and report metrics");
    cmd_cluster->add_option("graph", cluster_opt.graph_path, "edge-list file")->required();
    cmd_cluster->add_option("--labels", cluster_opt.labels_path, "ground-truth label file");
    cmd_cluster->add_option("--sigma", cluster_opt.sigma, "width parameter")->required();
    cmd_cluster->add_option("--default-distance", cluster_opt.default_distance,
                            "distance of non-adjacent node pairs");
    cmd_cluster->add_option("--workers", cluster_opt.workers, "worker threads");
    cmd_cluster->add_option("--gamma", cluster_opt.gamma, "modularity resolution");
    cmd_cluster->add_option("--out", cluster_opt.out, "assignment CSV path, - for stdout");
    cmd_cluster->add_option("--format", cluster_opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));

    SweepOptions sweep_opt;
    CLI::App* cmd_sweep =
        app.add_subcommand("sweep", "Sweep sigma and record cluster counts and metrics");
    cmd_sweep->add_option("graph", sweep_opt.base.graph_path, "edge-list file")->required();
    cmd_sweep->add_option("--labels", sweep_opt.base.labels_path, "ground-truth label file");
    cmd_sweep->add_option("--default-distance", sweep_opt.base.default_distance,
                          "distance of non-adjacent node pairs");
    cmd_sweep->add_option("--workers", sweep_opt.base.workers, "worker threads");
    cmd_sweep->add_option("--gamma", sweep_opt.base.gamma, "modularity resolution");
    cmd_sweep->add_option("--out", sweep_opt.base.out, "sweep CSV path, - for stdout");
    cmd_sweep->add_option("--sigma-min", sweep_opt.sigma_min,
                          "grid start (default 0.1 * default distance)");
    cmd_sweep->add_option("--sigma-max", sweep_opt.sigma_max,
                          "grid end (default 3 * default distance)");
    cmd_sweep->add_option("--sigma-steps", sweep_opt.sigma_steps, "grid size");
    cmd_sweep->add_flag("--log-grid,!--linear-grid", sweep_opt.log_grid,
                        "log-spaced grid (default) or linear");

    BenchOptions bench_opt;
    CLI::App* cmd_bench = app.add_subcommand(
        "bench", "Time serial vs parallel potential computation on complete graphs");
    cmd_bench->add_option("--sizes", bench_opt.sizes, "node counts, ascending")
        ->delimiter(',');
    cmd_bench->add_option("--workers", bench_opt.workers, "worker counts to time")
        ->delimiter(',');
    cmd_bench->add_option("--sigma", bench_opt.sigma, "width parameter");
    cmd_bench->add_option("--out", bench_opt.out, "bench CSV path, - for stdout");

    EvalOptions eval_opt;
    CLI::App* cmd_eval =
        app.add_subcommand("eval", "Score a predicted labeling against ground truth");
    cmd_eval->add_option("truth", eval_opt.truth_path, "ground-truth label file")->required();
    cmd_eval->add_option("pred", eval_opt.pred_path, "predicted label file")->required();
    cmd_eval->add_option("--graph", eval_opt.graph_path,
                         "edge-list file, enables modularity");
    cmd_eval->add_option("--default-distance", eval_opt.default_distance,
                         "distance of non-adjacent node pairs");
    cmd_eval->add_option("--gamma", eval_opt.gamma, "modularity resolution");
    cmd_eval->add_option("--format", eval_opt.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParam;
    }

    try {
        if (cmd_cluster->parsed()) return run_cluster(cluster_opt);
        if (cmd_sweep->parsed()) return run_sweep_cmd(sweep_opt);
        if (cmd_bench->parsed()) return run_bench(bench_opt);
        if (cmd_eval->parsed()) return run_eval(eval_opt);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParam;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: allocation failure\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}
