#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "graphqc/ggd.hpp"
#include "graphqc/graph.hpp"
#include "graphqc/metrics.hpp"

namespace graphqc {

struct SweepRecord {
    double sigma = 0.0;
    std::int32_t num_clusters = 0;
    MetricReport metrics;
};

/// Largest single-step drop of the cluster count across consecutive sigmas.
struct MutationInterval {
    double sigma_low = 0.0;
    double sigma_high = 0.0;
    std::int32_t drop = 0;
};

/// Default grid: `steps` log-spaced sigmas from lo_factor*W to hi_factor*W,
/// W being the graph's default distance.
std::vector<double> log_sigma_grid(double default_distance, int steps = 30,
                                   double lo_factor = 0.1, double hi_factor = 3.0);
std::vector<double> linear_sigma_grid(double lo, double hi, int steps);

/// One clustering + metric record per sigma. sigmas must be strictly
/// ascending and positive.
std::vector<SweepRecord> run_sweep(const Graph& g, std::span<const double> sigmas,
                                   const LabelSet* labels = nullptr, int workers = 1,
                                   double gamma = 1.0);

/// The consecutive pair with the maximum cluster-count drop, earliest pair
/// on ties; nullopt if the count never decreases. Needs >= 2 records.
std::optional<MutationInterval> detect_mutation(std::span<const SweepRecord> records);

/// CSV with header sigma,num_clusters,modularity,nmi,ari,fmi.
void write_sweep_csv(std::ostream& out, std::span<const SweepRecord> records);

}  // namespace graphqc
