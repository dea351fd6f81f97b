// analysis.cpp — log-log fits and band metrics

#include "chiralwg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace chiralwg {

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& points) {
    if (points.size() < 3) {
        throw std::invalid_argument("fit_power_law: need at least 3 points, got " +
                                    std::to_string(points.size()));
    }
    for (size_t i = 0; i < points.size(); ++i) {
        const auto& [n, gamma] = points[i];
        if (!(n >= 1.0) || !std::isfinite(n)) {
            throw std::invalid_argument("fit_power_law: point " + std::to_string(i) +
                                        " has invalid N=" + std::to_string(n));
        }
        if (!(gamma > 0.0) || !std::isfinite(gamma)) {
            throw std::invalid_argument("fit_power_law: point " + std::to_string(i) +
                                        " (N=" + std::to_string(n) + ") has nonpositive Gamma=" +
                                        std::to_string(gamma));
        }
    }

    const size_t n = points.size();
    double sx = 0.0, sy = 0.0;
    for (const auto& [N, g] : points) {
        sx += std::log(N);
        sy += std::log(g);
    }
    const double mx = sx / n;
    const double my = sy / n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (const auto& [N, g] : points) {
        const double dx = std::log(N) - mx;
        const double dy = std::log(g) - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx <= 0.0) {
        throw std::invalid_argument("fit_power_law: all N equal; slope is undefined");
    }

    PowerLawFit fit;
    fit.n_points = static_cast<int>(n);
    fit.exponent = sxy / sxx;
    fit.intercept = my - fit.exponent * mx;
    double ss_res = 0.0;
    for (const auto& [N, g] : points) {
        const double pred = fit.intercept + fit.exponent * std::log(N);
        const double e = std::log(g) - pred;
        ss_res += e * e;
    }
    if (syy <= 1e-300) {
        fit.r_squared = ss_res <= 1e-300 ? 1.0 : 0.0; // constant data
    } else {
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    }
    return fit;
}

BandMetrics band_metrics(const std::vector<std::vector<double>>& bands) {
    if (bands.empty()) throw std::invalid_argument("band_metrics: no bands provided");
    for (size_t b = 0; b < bands.size(); ++b) {
        if (bands[b].empty()) {
            throw std::invalid_argument("band_metrics: band " + std::to_string(b) + " is empty");
        }
        for (double v : bands[b]) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("band_metrics: band " + std::to_string(b) +
                                            " contains a non-finite value");
            }
        }
    }

    BandMetrics m;
    double global_min = std::numeric_limits<double>::infinity();
    double global_max = -std::numeric_limits<double>::infinity();
    for (const auto& band : bands) {
        const auto [lo, hi] = std::minmax_element(band.begin(), band.end());
        m.band_widths.push_back(*hi - *lo);
        global_min = std::min(global_min, *lo);
        global_max = std::max(global_max, *hi);
    }
    m.global_bandwidth = global_max - global_min;
    for (double w : m.band_widths) {
        m.flatness.push_back(m.global_bandwidth > 0.0 ? w / m.global_bandwidth : 0.0);
    }

    // gaps need pointwise comparison: bands must share the grid
    for (size_t b = 0; b + 1 < bands.size(); ++b) {
        if (bands[b].size() != bands[b + 1].size()) {
            throw std::invalid_argument("band_metrics: bands sampled on different grids");
        }
        double gap = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < bands[b].size(); ++i) {
            gap = std::min(gap, bands[b + 1][i] - bands[b][i]);
        }
        m.adjacent_gaps.push_back(gap);
    }
    m.min_gap = m.adjacent_gaps.empty()
                    ? 0.0
                    : *std::min_element(m.adjacent_gaps.begin(), m.adjacent_gaps.end());
    return m;
}

} // namespace chiralwg
