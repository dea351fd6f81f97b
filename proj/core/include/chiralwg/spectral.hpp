// spectral.hpp — Dense non-Hermitian diagonalization with residual
// certificates, decay-rate classification, darkest states, photonic
// distributions and size sweeps.

#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "chiralwg/chain.hpp"
#include "chiralwg/model.hpp"

namespace chiralwg {

// Right eigenpair set. Residuals are ||H v - eps v||_2 per pair and are
// bounded by 1e-8 * ||H||_F (Frobenius norm; recorded in matrix_norm).
// defective_warning is raised when eigenvalues cluster below
// 1e-8 * ||H||_F *and* the eigenvector basis is numerically rank deficient —
// clean degeneracies with a healthy eigenbasis do not trigger it.
struct ComplexSpectrum {
    Eigen::VectorXcd eigenvalues;
    Eigen::MatrixXcd eigenvectors; // unit columns, same order
    Eigen::VectorXd residuals;
    double matrix_norm = 0.0; // Frobenius
    bool defective_warning = false;

    int size() const { return static_cast<int>(eigenvalues.size()); }
};

ComplexSpectrum eigendecompose(const Eigen::MatrixXcd& h);
ComplexSpectrum eigendecompose(const LatticeHamiltonian& h);

// (Gamma, state index) sorted ascending by Gamma = -Im(eps);
// ties keep the original index order.
std::vector<std::pair<double, int>> decay_rates(const ComplexSpectrum& spectrum);

// State of minimal decay rate; ties broken by smaller |Re(eps)|, then by
// lowest index. Throws DefectiveMatrix when the spectrum carries the
// defectiveness warning (use the analytic delta = 0 identities instead).
std::pair<complexd, Eigen::VectorXcd> darkest_state(const ComplexSpectrum& spectrum);

// Classification thresholds are explicit, configurable metadata: subradiant
// when Gamma < c_sub * gamma0, superradiant when Gamma > c_super * n_atoms *
// gamma0, bright otherwise.
struct DecayThresholds {
    double c_sub = 0.1;
    double c_super = 0.5;
};

enum class DecayClass { subradiant, bright, superradiant };

DecayClass classify_decay(double gamma, int n_atoms, double gamma0,
                          const DecayThresholds& thresholds = {});

const char* decay_class_name(DecayClass c);

// Normalized |psi|^2 per (site, polarization).
struct PhotonicDistribution {
    IndexLayout layout;
    Eigen::VectorXd probabilities;

    double at(int site, int pol) const { return probabilities(layout.row_of(site, pol)); }
};

PhotonicDistribution photonic_distribution(const Eigen::VectorXcd& vec, const IndexLayout& layout);

// Size sweep: per-N darkest decay rate, ascending N, sequential and
// deterministic.
enum class SweepModel { chain_1d, lattice_2d };

struct SweepSpec {
    SweepModel model = SweepModel::chain_1d;
    PhaseQd qd{};
    double delta = 0.0;   // 1D
    double delta_x = 0.0; // 2D
    double delta_y = 0.0; // 2D
    double gamma0 = 1.0;
};

struct SweepRow {
    int n_sites = 0;
    double gamma_min = 0.0;
    std::vector<double> all_gammas; // ascending; filled when keep_all
};

// 1D sweeps require delta != 0 (the delta = 0 chain is defective; its
// spectrum is served by the analytic identities).
std::vector<SweepRow> size_sweep(const SweepSpec& spec, const std::vector<int>& n_list,
                                 bool keep_all = false);

} // namespace chiralwg
