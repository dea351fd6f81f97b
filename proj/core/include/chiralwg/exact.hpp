// exact.hpp — Transfer-matrix scatterer and the exact (non-Markovian)
// dispersion solver.
//
// Conventions: x = omega - eps is the detuning of the probe from the polariton
// energy, in units of gamma0. The band energy reported downstream is the shift
// eps - omega = -x.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "chiralwg/chain.hpp"
#include "chiralwg/model.hpp"

namespace chiralwg {

// The supplemental derivation chain (h = R h0 R^{-1} with diagonal
// i*gamma0/(omega_nu - eps)) is the normalization consistent with the
// validated t, r coefficients and the dispersion relation; the main-text
// variant carries an extra factor 2 and is kept selectable for audit.
enum class ScattererConvention { supplemental, main_text };

// 2x2 level matrix of one scatterer in the circular basis:
// (alpha * i * gamma0 / (x^2 - delta^2)) [[x, -delta], [-delta, x]],
// alpha = 1 (supplemental, default) or 2 (main text).
// Throws ResonancePole when |x^2 - delta^2| < pole_tol.
Eigen::Matrix2cd scatterer_matrix(double x, double delta, double gamma0,
                                  ScattererConvention convention = ScattererConvention::supplemental,
                                  double pole_tol = 1e-12);

struct ScattererResponse {
    double x = 0.0;
    complexd t; // transmission
    complexd r; // reflection (circular-channel conversion)
    Eigen::Matrix2cd h; // supplemental-convention level matrix
};

// t = (x^2 - delta^2 + gamma0^2/4) / D,  r = -i delta gamma0 / D,
// D = (x - i gamma0/2)^2 - delta^2. For delta = 0: r = 0 and |t| = 1.
// Throws DegenerateScatterer when |D| < tol.
ScattererResponse scattering_coefficients(double x, double delta, double gamma0,
                                          double tol = 1e-14);

// Transfer matrix over one period: (1/t) [[(t^2-r^2) e^{i qd}, r], [-r, e^{-i qd}]].
// det == 1 by construction. Throws DegenerateScatterer when t == 0.
Eigen::Matrix2cd transfer_matrix(double x, const PhaseQd& qd, double delta, double gamma0,
                                 double tol = 1e-14);

// Right-hand side of the exact dispersion relation cos(kd) = RHS(x).
double dispersion_rhs(double x, double qd, double delta, double gamma0);

// Real roots x of the dispersion relation at fixed kd, each certified by the
// residual |cos(kd) - RHS(x)|. An empty root list marks a band gap.
struct ExactBandPoint {
    double kd = 0.0;
    std::vector<double> roots;     // ascending in x
    std::vector<double> residuals; // same order
};

ExactBandPoint solve_exact_bands(double kd, const ChainSpec& spec);

// Per-k matched differences between Markovian bands and exact roots; energies
// compared as shifts eps - omega. Unmatched Markov samples (no exact root at
// that kd) are flagged, not dropped.
struct BandDeviation {
    double kd = 0.0;
    int band = 0;
    double markov_energy = 0.0;
    double exact_energy = 0.0; // meaningful when matched
    double abs_diff = 0.0;
    bool matched = false;
};

struct DeviationReport {
    std::vector<BandDeviation> rows;
    double max_abs_diff = 0.0;  // over matched rows
    double mean_abs_diff = 0.0; // over matched rows
    int matched_count = 0;
    int unmatched_count = 0;
};

// Grids must agree exactly; throws std::invalid_argument on mismatch.
DeviationReport compare_dispersions(const BandSet& markov,
                                    const std::vector<ExactBandPoint>& exact);

// Convenience: sample both methods on the same (-pi, pi] grid.
DeviationReport compare_dispersions(const ChainSpec& spec, int k_points, double eta = 1e-6);

std::vector<ExactBandPoint> exact_bands_on_grid(const ChainSpec& spec,
                                                const std::vector<double>& kd_grid);

} // namespace chiralwg
