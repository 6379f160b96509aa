#include "graphqc/sweep.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "graphqc/format.hpp"

namespace graphqc {

std::vector<double> log_sigma_grid(double default_distance, int steps, double lo_factor,
                                   double hi_factor) {
    if (default_distance <= 0.0 || lo_factor <= 0.0 || hi_factor <= lo_factor)
        throw std::invalid_argument("invalid sigma grid bounds");
    if (steps < 1) throw std::invalid_argument("sigma grid needs at least one point");
    const double lo = std::log(lo_factor * default_distance);
    const double hi = std::log(hi_factor * default_distance);
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = std::exp(lo);
        return grid;
    }
    for (int k = 0; k < steps; ++k)
        grid[k] = std::exp(lo + (hi - lo) * k / (steps - 1));
    return grid;
}

std::vector<double> linear_sigma_grid(double lo, double hi, int steps) {
    if (lo <= 0.0 || hi < lo) throw std::invalid_argument("invalid sigma grid bounds");
    if (steps < 1) throw std::invalid_argument("sigma grid needs at least one point");
    std::vector<double> grid(steps);
    if (steps == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int k = 0; k < steps; ++k) grid[k] = lo + (hi - lo) * k / (steps - 1);
    return grid;
}

std::vector<SweepRecord> run_sweep(const Graph& g, std::span<const double> sigmas,
                                   const LabelSet* labels, int workers, double gamma) {
    if (sigmas.empty()) throw std::invalid_argument("sigma grid is empty");
    for (std::size_t k = 0; k < sigmas.size(); ++k) {
        if (!(sigmas[k] > 0.0)) throw std::invalid_argument("sigma must be positive");
        if (k > 0 && sigmas[k] <= sigmas[k - 1])
            throw std::invalid_argument("sigma grid must be strictly ascending");
    }
    std::vector<SweepRecord> records;
    records.reserve(sigmas.size());
    for (double sigma : sigmas) {
        ClusterAssignment c = cluster(g, sigma, workers);
        SweepRecord rec;
        rec.sigma = sigma;
        rec.num_clusters = c.num_clusters;
        rec.metrics = evaluate(g, c, labels, gamma, sigma);
        records.push_back(std::move(rec));
    }
    return records;
}

std::optional<MutationInterval> detect_mutation(std::span<const SweepRecord> records) {
    if (records.size() < 2)
        throw std::invalid_argument("mutation detection needs at least two records");
    std::optional<MutationInterval> best;
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        const std::int32_t drop = records[k].num_clusters - records[k + 1].num_clusters;
        if (drop >= 1 && (!best || drop > best->drop))
            best = MutationInterval{records[k].sigma, records[k + 1].sigma, drop};
    }
    return best;
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records) {
    out << "sigma,num_clusters,modularity,nmi,ari,fmi\n";
    for (const SweepRecord& r : records) {
        out << format_double(r.sigma) << ',' << r.num_clusters << ','
            << format_cell(r.metrics.modularity) << ',' << format_cell(r.metrics.nmi) << ','
            << format_cell(r.metrics.ari) << ',' << format_cell(r.metrics.fmi) << '\n';
    }
}

}  // namespace graphqc
