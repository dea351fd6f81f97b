// exact.cpp — scatterer coefficients, transfer matrix, exact band solver

#include "chiralwg/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chiralwg/errors.hpp"

namespace chiralwg {

Eigen::Matrix2cd scatterer_matrix(double x, double delta, double gamma0,
                                  ScattererConvention convention, double pole_tol) {
    const double denom = x * x - delta * delta;
    if (std::abs(denom) < pole_tol) throw ResonancePole(x);

    const double alpha = (convention == ScattererConvention::supplemental) ? 1.0 : 2.0;
    const complexd pref = complexd(0.0, alpha * gamma0) / denom;
    Eigen::Matrix2cd h;
    h << pref * x, pref * (-delta),
         pref * (-delta), pref * x;
    return h;
}

ScattererResponse scattering_coefficients(double x, double delta, double gamma0, double tol) {
    const complexd d = x - complexd(0.0, 0.5 * gamma0);
    const complexd denom = d * d - delta * delta;
    if (std::abs(denom) < tol) {
        throw DegenerateScatterer("scattering_coefficients: (x - i gamma0/2)^2 - delta^2 vanishes at x=" +
                                  std::to_string(x));
    }
    ScattererResponse resp;
    resp.x = x;
    resp.t = (x * x - delta * delta + 0.25 * gamma0 * gamma0) / denom;
    resp.r = complexd(0.0, -delta * gamma0) / denom;
    // t and r stay finite at the bare resonance x^2 = delta^2 where the level
    // matrix itself diverges; store NaN entries there instead of refusing
    if (std::abs(x * x - delta * delta) > 0.0) {
        resp.h = scatterer_matrix(x, delta, gamma0, ScattererConvention::supplemental,
                                  std::numeric_limits<double>::min());
    } else {
        resp.h.setConstant(complexd(std::numeric_limits<double>::quiet_NaN(),
                                    std::numeric_limits<double>::quiet_NaN()));
    }
    return resp;
}

Eigen::Matrix2cd transfer_matrix(double x, const PhaseQd& qd, double delta, double gamma0,
                                 double tol) {
    const ScattererResponse s = scattering_coefficients(x, delta, gamma0, tol);
    if (std::abs(s.t) < tol) {
        throw DegenerateScatterer("transfer_matrix: transmission vanishes at x=" + std::to_string(x));
    }
    const complexd phase = std::polar(1.0, qd.value());
    Eigen::Matrix2cd tm;
    tm << (s.t * s.t - s.r * s.r) * phase / s.t, s.r / s.t,
          -s.r / s.t, complexd(1.0, 0.0) / (phase * s.t);
    return tm;
}

double dispersion_rhs(double x, double qd, double delta, double gamma0) {
    const double num = x * x - delta * delta;
    const double g24 = 0.25 * gamma0 * gamma0;
    return std::cos(qd) * (num - g24) / (num + g24) -
           std::sin(qd) * (x * gamma0) / (num + g24);
}

ExactBandPoint solve_exact_bands(double kd, const ChainSpec& spec) {
    spec.validate();
    if (std::abs(std::cos(kd)) > 1.0 + 1e-12) {
        throw std::invalid_argument("solve_exact_bands: |cos(kd)| must be <= 1");
    }
    const double qd = spec.qd.value();
    const double g0 = spec.gamma0;
    const double delta = spec.delta;
    const double ck = std::cos(kd);
    const double cq = std::cos(qd);

    // Clearing the denominator of cos(kd) = RHS(x) gives A x^2 + B x + C = 0.
    const double A = ck - cq;
    const double B = g0 * std::sin(qd);
    const double C = (ck + cq) * 0.25 * g0 * g0 - (ck - cq) * delta * delta;

    ExactBandPoint point;
    point.kd = kd;

    std::vector<double> candidates;
    const double a_tol = 1e-13 * (std::abs(ck) + std::abs(cq) + 1.0);
    const double b_tol = 1e-12 * g0; // sin(qd) roundoff must not fabricate a root
    if (std::abs(A) < a_tol) {
        // degenerate: linear equation B x + C = 0
        if (std::abs(B) > b_tol) candidates.push_back(-C / B);
        // B ~ 0 too: no isolated root (C != 0) or the identity 0 = 0 (no band info)
    } else {
        const double disc = B * B - 4.0 * A * C;
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            if (B == 0.0) {
                candidates.push_back(-sq / (2.0 * A));
                candidates.push_back(sq / (2.0 * A));
            } else {
                // numerically stable pairing
                const double q = -0.5 * (B + std::copysign(sq, B));
                candidates.push_back(q / A);
                if (q != 0.0) candidates.push_back(C / q);
            }
        }
        // disc < 0: complex pair, i.e. a gap at this kd
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end(),
                                 [](double a, double b) { return std::abs(a - b) < 1e-14; }),
                     candidates.end());

    for (double x : candidates) {
        // Certify against the uncleared relation; a root that lands on the RHS
        // pole was introduced by clearing and is discarded.
        const double pole = x * x - delta * delta + 0.25 * g0 * g0;
        if (std::abs(pole) < 1e-12) continue;
        const double residual = std::abs(ck - dispersion_rhs(x, qd, delta, g0));
        if (residual <= 1e-10) {
            point.roots.push_back(x);
            point.residuals.push_back(residual);
        }
    }
    return point;
}

std::vector<ExactBandPoint> exact_bands_on_grid(const ChainSpec& spec,
                                                const std::vector<double>& kd_grid) {
    std::vector<ExactBandPoint> out;
    out.reserve(kd_grid.size());
    for (double kd : kd_grid) out.push_back(solve_exact_bands(kd, spec));
    return out;
}

DeviationReport compare_dispersions(const BandSet& markov,
                                    const std::vector<ExactBandPoint>& exact) {
    if (markov.kd.size() != exact.size()) {
        throw std::invalid_argument("compare_dispersions: grid size mismatch");
    }
    for (size_t i = 0; i < exact.size(); ++i) {
        if (std::abs(markov.kd[i] - exact[i].kd) > 1e-12) {
            throw std::invalid_argument("compare_dispersions: grids differ at index " +
                                        std::to_string(i));
        }
    }

    DeviationReport report;
    double sum = 0.0;
    for (size_t i = 0; i < markov.kd.size(); ++i) {
        for (size_t b = 0; b < markov.bands.size(); ++b) {
            BandDeviation row;
            row.kd = markov.kd[i];
            row.band = static_cast<int>(b);
            row.markov_energy = markov.bands[b][i];
            // exact band energies are shifts eps - omega = -x
            double best = std::numeric_limits<double>::infinity();
            double best_energy = 0.0;
            for (double x : exact[i].roots) {
                const double e = -x;
                const double d = std::abs(e - row.markov_energy);
                if (d < best) {
                    best = d;
                    best_energy = e;
                }
            }
            if (std::isfinite(best)) {
                row.matched = true;
                row.exact_energy = best_energy;
                row.abs_diff = best;
                report.max_abs_diff = std::max(report.max_abs_diff, best);
                sum += best;
                ++report.matched_count;
            } else {
                ++report.unmatched_count;
            }
            report.rows.push_back(row);
        }
    }
    report.mean_abs_diff = report.matched_count > 0 ? sum / report.matched_count : 0.0;
    return report;
}

DeviationReport compare_dispersions(const ChainSpec& spec, int k_points, double eta) {
    const BandSet markov = markov_bands_1d(spec, k_points, eta);
    const std::vector<ExactBandPoint> exact = exact_bands_on_grid(spec, markov.kd);
    return compare_dispersions(markov, exact);
}

} // namespace chiralwg
