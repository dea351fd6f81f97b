// lattice2d.hpp — 2D N x N lattice Hamiltonian over crossed chiral waveguide
// networks, plus the 3x3 Bloch matrices (full cotangent form and its
// linearization near k = 0 at qd = pi).

#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chiralwg/chain.hpp"
#include "chiralwg/model.hpp"

namespace chiralwg {

// Rows express (b_{R_zx}, b_{L_zx}) in the on-site (b_{R_yz}, b_{L_yz}, b_x)
// basis: (i/2)(1, -1, -sqrt2) and (i/2)(1, -1, +sqrt2). u u^H = I2.
Eigen::Matrix<complexd, 2, 3> site_basis_transform();

// On-site detuning block in the (R_yz, L_yz, x) basis:
// [[dy/2, dx-dy/2, 0], [dx-dy/2, dy/2, 0], [0, 0, dy]].
Eigen::Matrix3d lattice_delta_block(double delta_x, double delta_y);

// Which waveguide orientations contribute; the single-orientation variants
// exist for block-structure checks.
enum class WaveguideAxes { both, x_only, y_only };

// H = H^x (chiral chains along x acting on R_yz/L_yz) + u^H H^y u (chains
// along y built in their natural R_zx/L_zx basis and conjugated per site
// pair) + the on-site delta block. Dimension 3 N^2.
LatticeHamiltonian build_lattice_hamiltonian(const LatticeSpec& spec,
                                             WaveguideAxes axes = WaveguideAxes::both);

enum class BlochVariant { full, linearized };

struct Bloch2DMatrix {
    double kx_d = 0.0;
    double ky_d = 0.0;
    Eigen::Matrix3d entries = Eigen::Matrix3d::Zero();
    BlochVariant variant = BlochVariant::full;
};

// Full 3x3 Bloch matrix: cotangent terms in kx plus the y-network terms
// sigma = sin(qd)/(cos qd - cos ky d), sigma_y = sin(ky d)/(cos qd - cos ky d):
//   (gamma0/4) [[cot((qd-kx d)/2) - sigma/2,  sigma/2,            sigma_y/sqrt2],
//               [sigma/2,  cot((qd+kx d)/2) - sigma/2,           -sigma_y/sqrt2],
//               [sigma_y/sqrt2, -sigma_y/sqrt2,                  -sigma        ]]
// plus the delta block. Throws SingularK near poles of either denominator.
Bloch2DMatrix bloch_hamiltonian_2d_full(double kx_d, double ky_d, const LatticeSpec& spec,
                                        double eta = 1e-6);

// Low-energy expansion at qd = pi, printed with the detunings sharing the
// gamma0/8 prefactor:
//   (gamma0/8) [[kx d + dy, 2 dx - dy, -ky d/sqrt2],
//               [2 dx - dy, -kx d + dy, ky d/sqrt2],
//               [-ky d/sqrt2, ky d/sqrt2, 2 dy]]
Bloch2DMatrix bloch_hamiltonian_2d_linear(double kx_d, double ky_d,
                                          double delta_x, double delta_y, double gamma0);

// Uniform inclusive grid: n_points samples of each axis over [-extent, extent].
struct GridSpec {
    int n_points = 101;
    double extent = 0.5;

    std::vector<double> axis() const;
};

struct Excluded2D {
    double kx_d = 0.0;
    double ky_d = 0.0;
    std::string reason;
};

// Three real eigenvalue surfaces sorted ascending per k-point, stored kx-major
// (index = ix * n_ky + iy). Excluded points hold NaN and are listed.
struct BandSurfaces {
    std::vector<double> kx;
    std::vector<double> ky;
    std::vector<std::vector<double>> bands; // bands[b][ix*nky+iy]
    std::vector<Excluded2D> excluded;
    BlochVariant variant = BlochVariant::linearized;

    // NaN-filtered samples of one band, for metrics
    std::vector<double> band_samples(int b) const;
};

// The linearized variant requires qd = pi (exact tag or within 1e-12).
BandSurfaces bands_2d(const LatticeSpec& spec, const GridSpec& grid, BlochVariant variant,
                      double eta = 1e-6);

} // namespace chiralwg
