// chain.hpp — 1D finite-chain non-Hermitian Hamiltonian, 1D Bloch matrix and
// Markovian band sampling.

#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "chiralwg/model.hpp"

namespace chiralwg {

// Dense non-Hermitian single-excitation Hamiltonian of a finite array, with
// the layout that maps (site, polarization) onto rows.
struct LatticeHamiltonian {
    Eigen::MatrixXcd entries;
    IndexLayout layout;
    std::variant<ChainSpec, LatticeSpec> spec;

    int dim() const { return static_cast<int>(entries.rows()); }
};

// Chain Hamiltonian: R-block element (m,n) = -i(gamma0/2) Theta(m-n) e^{i qd |m-n|}
// (lower triangular in site order), L-block its transpose, delta on every
// same-site R<->L pair. At delta = 0 the matrix is defective (Jordan blocks);
// see defective_chain_modes for the analytic eigenstructure.
LatticeHamiltonian build_chain_hamiltonian(const ChainSpec& spec);

// 2x2 Markovian Bloch matrix at quasi-momentum kd: real symmetric with
// cotangent diagonal and delta off-diagonal.
struct BlochMatrix {
    double kd = 0.0;
    Eigen::Matrix2d entries = Eigen::Matrix2d::Zero();
};

// Throws SingularK when kd lies within eta of a cotangent pole (kd = ±qd mod 2pi).
BlochMatrix bloch_hamiltonian_1d(double kd, const ChainSpec& spec, double eta = 1e-6);

struct ExcludedPoint {
    double kd = 0.0;
    std::string reason;
};

// Sampled dispersion curves; bands[b][i] belongs to kd[i], sorted ascending in
// b at each grid point. Excluded grid points are recorded, not interpolated.
struct BandSet {
    std::vector<double> kd;
    std::vector<std::vector<double>> bands;
    std::vector<ExcludedPoint> excluded;
};

// Two Markovian bands on a uniform kd-grid over (-pi, pi], right endpoint
// included; pole-adjacent points land in `excluded`.
BandSet markov_bands_1d(const ChainSpec& spec, int k_points, double eta = 1e-6);

// Analytic eigenstructure of the defective delta = 0 chain: the single
// eigenvalue -i gamma0/4 with the R-branch right eigenvector concentrated on
// the last site and the L-branch on the first site (forward substitution).
struct DefectiveChainModes {
    complexd eigenvalue;
    Eigen::VectorXcd right_edge_mode; // (site N-1, R) unit vector, full 2N dim
    Eigen::VectorXcd left_edge_mode;  // (site 0, L) unit vector, full 2N dim
};

DefectiveChainModes defective_chain_modes(const ChainSpec& spec);

} // namespace chiralwg
