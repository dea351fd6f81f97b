// analysis.hpp — power-law exponent fits and band flatness/gap metrics

#pragma once

#include <utility>
#include <vector>

namespace chiralwg {

struct PowerLawFit {
    double exponent = 0.0;  // slope of log Gamma vs log N
    double intercept = 0.0; // log-space
    double r_squared = 0.0;
    int n_points = 0;
};

// Plain least squares on (log N, log Gamma). Requires >= 3 points, N >= 1 and
// Gamma > 0; a nonpositive Gamma throws naming the offending point.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points);

struct BandMetrics {
    std::vector<double> band_widths;   // max - min per band, over the grid
    double global_bandwidth = 0.0;     // overall max - overall min
    std::vector<double> flatness;      // width / global bandwidth (0 when global == 0)
    std::vector<double> adjacent_gaps; // min over grid of band_{j+1} - band_j
    double min_gap = 0.0;              // min over adjacent pairs (0 when single band)
};

// Bands are per-band sample lists over a common grid (already filtered of
// excluded points). Widths and gaps are computed over the provided samples
// only; invariant under reordering and duplication of grid points.
BandMetrics band_metrics(const std::vector<std::vector<double>>& bands);

} // namespace chiralwg
