// lattice2d.cpp — 2D lattice builders, Bloch matrices, band surfaces

#include "chiralwg/lattice2d.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chiralwg/errors.hpp"

namespace chiralwg {

namespace {

constexpr double sqrt2 = 1.41421356237309504880;

double phase_distance(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * pi));
}

bool is_pi(const PhaseQd& qd) {
    return qd.tag() == PhaseQd::Tag::pi_exact || std::abs(qd.value() - pi) <= 1e-12;
}

} // namespace

Eigen::Matrix<complexd, 2, 3> site_basis_transform() {
    Eigen::Matrix<complexd, 2, 3> u;
    const complexd ih(0.0, 0.5); // i/2
    u << ih, -ih, -ih * sqrt2,
         ih, -ih, ih * sqrt2;
    return u;
}

Eigen::Matrix3d lattice_delta_block(double delta_x, double delta_y) {
    Eigen::Matrix3d d;
    d << 0.5 * delta_y, delta_x - 0.5 * delta_y, 0.0,
         delta_x - 0.5 * delta_y, 0.5 * delta_y, 0.0,
         0.0, 0.0, delta_y;
    return d;
}

LatticeHamiltonian build_lattice_hamiltonian(const LatticeSpec& spec, WaveguideAxes axes) {
    spec.validate();
    const int n = spec.n_sites;
    const IndexLayout layout = IndexLayout::lattice(n);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(layout.dim(), layout.dim());

    const complexd step = std::polar(1.0, spec.qd.value());
    std::vector<complexd> phase(static_cast<size_t>(n));
    phase[0] = complexd(1.0, 0.0);
    for (int r = 1; r < n; ++r) phase[static_cast<size_t>(r)] = phase[static_cast<size_t>(r - 1)] * step;

    const complexd coupling = complexd(0.0, -0.5 * spec.gamma0);
    const int Ryz = static_cast<int>(Polarization2D::R_yz);
    const int Lyz = static_cast<int>(Polarization2D::L_yz);

    const bool with_x = axes != WaveguideAxes::y_only;
    const bool with_y = axes != WaveguideAxes::x_only;

    if (with_x) {
        // chains along x: standard chiral chain on (R_yz, L_yz) in every row
        for (int iy = 0; iy < n; ++iy) {
            for (int m = 0; m < n; ++m) {
                const int sm = layout.site_index(m, iy);
                h(layout.row_of(sm, Ryz), layout.row_of(sm, Ryz)) += 0.5 * coupling;
                h(layout.row_of(sm, Lyz), layout.row_of(sm, Lyz)) += 0.5 * coupling;
                for (int nn = 0; nn < m; ++nn) {
                    const int sn = layout.site_index(nn, iy);
                    const complexd amp = coupling * phase[static_cast<size_t>(m - nn)];
                    h(layout.row_of(sm, Ryz), layout.row_of(sn, Ryz)) += amp;
                    h(layout.row_of(sn, Lyz), layout.row_of(sm, Lyz)) += amp;
                }
            }
        }
    }

    if (with_y) {
        // chains along y, built in the (R_zx, L_zx) pair basis and conjugated
        // into the 3-orbital basis per site pair
        const Eigen::Matrix<complexd, 2, 3> u = site_basis_transform();
        const Eigen::Matrix<complexd, 3, 2> uh = u.adjoint();
        for (int ix = 0; ix < n; ++ix) {
            for (int m = 0; m < n; ++m) {
                for (int nn = 0; nn < n; ++nn) {
                    Eigen::Matrix2cd blk = Eigen::Matrix2cd::Zero();
                    const complexd base = coupling * phase[static_cast<size_t>(std::abs(m - nn))];
                    blk(0, 0) = base * heaviside_half(m - nn); // R_zx hops toward +y
                    blk(1, 1) = base * heaviside_half(nn - m); // L_zx hops toward -y
                    if (blk(0, 0) == complexd(0, 0) && blk(1, 1) == complexd(0, 0)) continue;
                    const Eigen::Matrix3cd b3 = uh * blk * u;
                    const int sa = layout.site_index(ix, m);
                    const int sb = layout.site_index(ix, nn);
                    h.block<3, 3>(layout.row_of(sa, 0), layout.row_of(sb, 0)) += b3;
                }
            }
        }
    }

    // on-site detunings enter through the assembled delta block
    const Eigen::Matrix3d dblk = lattice_delta_block(spec.delta_x, spec.delta_y);
    for (int s = 0; s < layout.total_sites(); ++s) {
        h.block<3, 3>(layout.row_of(s, 0), layout.row_of(s, 0)) += dblk.cast<complexd>();
    }

    return LatticeHamiltonian{std::move(h), layout, spec};
}

Bloch2DMatrix bloch_hamiltonian_2d_full(double kx_d, double ky_d, const LatticeSpec& spec,
                                        double eta) {
    spec.validate();
    const double qd = spec.qd.value();

    const double dxm = phase_distance(kx_d, qd);
    const double dxp = phase_distance(kx_d, -qd);
    if (dxm < eta) throw SingularK(kx_d, qd, "cot((qd-kx d)/2)");
    if (dxp < eta) throw SingularK(kx_d, -qd, "cot((qd+kx d)/2)");
    // 1/(cos qd - cos ky d) poles at ky = +/- qd (mod 2pi)
    const double dym = phase_distance(ky_d, qd);
    const double dyp = phase_distance(ky_d, -qd);
    if (dym < eta) throw SingularK(ky_d, qd, "1/(cos qd - cos ky d)");
    if (dyp < eta) throw SingularK(ky_d, -qd, "1/(cos qd - cos ky d)");

    auto cot = [](double v) { return std::cos(v) / std::sin(v); };
    const double den = std::cos(qd) - std::cos(ky_d);
    const double sigma = std::sin(qd) / den;
    const double sigma_y = std::sin(ky_d) / den;
    const double g4 = 0.25 * spec.gamma0;

    Bloch2DMatrix b;
    b.kx_d = kx_d;
    b.ky_d = ky_d;
    b.variant = BlochVariant::full;
    Eigen::Matrix3d m;
    m << cot(0.5 * (qd - kx_d)) - 0.5 * sigma, 0.5 * sigma, sigma_y / sqrt2,
         0.5 * sigma, cot(0.5 * (qd + kx_d)) - 0.5 * sigma, -sigma_y / sqrt2,
         sigma_y / sqrt2, -sigma_y / sqrt2, -sigma;
    b.entries = g4 * m + lattice_delta_block(spec.delta_x, spec.delta_y);
    return b;
}

Bloch2DMatrix bloch_hamiltonian_2d_linear(double kx_d, double ky_d,
                                          double delta_x, double delta_y, double gamma0) {
    Bloch2DMatrix b;
    b.kx_d = kx_d;
    b.ky_d = ky_d;
    b.variant = BlochVariant::linearized;
    const double g8 = 0.125 * gamma0;
    Eigen::Matrix3d m;
    m << kx_d + delta_y, 2.0 * delta_x - delta_y, -ky_d / sqrt2,
         2.0 * delta_x - delta_y, -kx_d + delta_y, ky_d / sqrt2,
         -ky_d / sqrt2, ky_d / sqrt2, 2.0 * delta_y;
    b.entries = g8 * m;
    return b;
}

std::vector<double> GridSpec::axis() const {
    if (n_points < 1) throw std::invalid_argument("GridSpec: n_points must be >= 1");
    if (!(extent > 0.0)) throw std::invalid_argument("GridSpec: extent must be positive");
    std::vector<double> v(static_cast<size_t>(n_points));
    if (n_points == 1) {
        v[0] = 0.0;
        return v;
    }
    const double h = 2.0 * extent / (n_points - 1);
    for (int i = 0; i < n_points; ++i) v[static_cast<size_t>(i)] = -extent + i * h;
    return v;
}

std::vector<double> BandSurfaces::band_samples(int b) const {
    std::vector<double> out;
    out.reserve(bands.at(static_cast<size_t>(b)).size());
    for (double v : bands[static_cast<size_t>(b)]) {
        if (std::isfinite(v)) out.push_back(v);
    }
    return out;
}

BandSurfaces bands_2d(const LatticeSpec& spec, const GridSpec& grid, BlochVariant variant,
                      double eta) {
    spec.validate();
    if (variant == BlochVariant::linearized && !is_pi(spec.qd)) {
        throw std::invalid_argument("bands_2d: the linearized variant is derived at qd = pi only");
    }

    BandSurfaces out;
    out.variant = variant;
    out.kx = grid.axis();
    out.ky = grid.axis();
    const size_t nk = out.kx.size();
    out.bands.assign(3, std::vector<double>(nk * nk, std::numeric_limits<double>::quiet_NaN()));

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    for (size_t ix = 0; ix < nk; ++ix) {
        for (size_t iy = 0; iy < nk; ++iy) {
            const double kx = out.kx[ix];
            const double ky = out.ky[iy];
            try {
                const Bloch2DMatrix b = (variant == BlochVariant::full)
                    ? bloch_hamiltonian_2d_full(kx, ky, spec, eta)
                    : bloch_hamiltonian_2d_linear(kx, ky, spec.delta_x, spec.delta_y, spec.gamma0);
                es.compute(b.entries);
                for (int band = 0; band < 3; ++band) {
                    out.bands[static_cast<size_t>(band)][ix * nk + iy] = es.eigenvalues()(band);
                }
            } catch (const SingularK& e) {
                out.excluded.push_back({kx, ky, e.what()});
            }
        }
    }
    return out;
}

} // namespace chiralwg
