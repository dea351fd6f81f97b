// chain.cpp — 1D chain builders and Markovian band sampling

#include "chiralwg/chain.hpp"

#include <cmath>
#include <stdexcept>

#include "chiralwg/errors.hpp"

namespace chiralwg {

namespace {

// circular distance between two phases, in [0, pi]
double phase_distance(double a, double b) {
    double d = std::remainder(a - b, 2.0 * pi);
    return std::abs(d);
}

} // namespace

LatticeHamiltonian build_chain_hamiltonian(const ChainSpec& spec) {
    spec.validate();
    const int n = spec.n_sites;
    const IndexLayout layout = IndexLayout::chain(n);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(layout.dim(), layout.dim());

    // phase[r] = e^{i qd r}, built by repeated multiplication
    const complexd step = std::polar(1.0, spec.qd.value());
    std::vector<complexd> phase(static_cast<size_t>(n));
    phase[0] = complexd(1.0, 0.0);
    for (int r = 1; r < n; ++r) phase[static_cast<size_t>(r)] = phase[static_cast<size_t>(r - 1)] * step;

    const complexd coupling = complexd(0.0, -0.5 * spec.gamma0); // -i gamma0/2
    const int R = static_cast<int>(Polarization1D::R);
    const int L = static_cast<int>(Polarization1D::L);

    for (int m = 0; m < n; ++m) {
        // on-site: Theta(0) = 1/2
        const complexd diag = 0.5 * coupling;
        h(layout.row_of(m, R), layout.row_of(m, R)) += diag;
        h(layout.row_of(m, L), layout.row_of(m, L)) += diag;
        // strictly below-diagonal in site order: R hops rightward, L leftward
        for (int nn = 0; nn < m; ++nn) {
            const complexd amp = coupling * phase[static_cast<size_t>(m - nn)];
            h(layout.row_of(m, R), layout.row_of(nn, R)) += amp;
            h(layout.row_of(nn, L), layout.row_of(m, L)) += amp;
        }
        // same-site R<->L mixing
        h(layout.row_of(m, R), layout.row_of(m, L)) += spec.delta;
        h(layout.row_of(m, L), layout.row_of(m, R)) += spec.delta;
    }

    return LatticeHamiltonian{std::move(h), layout, spec};
}

BlochMatrix bloch_hamiltonian_1d(double kd, const ChainSpec& spec, double eta) {
    spec.validate();
    const double qd = spec.qd.value();

    // cot((qd -/+ kd)/2) poles sit at kd = +/- qd (mod 2pi)
    const double d_minus = phase_distance(kd, qd);
    const double d_plus = phase_distance(kd, -qd);
    if (d_minus < eta) {
        double pole = kd + std::remainder(qd - kd, 2.0 * pi);
        throw SingularK(kd, pole, "cot((qd-kd)/2)");
    }
    if (d_plus < eta) {
        double pole = kd + std::remainder(-qd - kd, 2.0 * pi);
        throw SingularK(kd, pole, "cot((qd+kd)/2)");
    }

    auto cot = [](double x) { return std::cos(x) / std::sin(x); };
    BlochMatrix b;
    b.kd = kd;
    b.entries(0, 0) = 0.25 * spec.gamma0 * cot(0.5 * (qd - kd));
    b.entries(1, 1) = 0.25 * spec.gamma0 * cot(0.5 * (qd + kd));
    b.entries(0, 1) = spec.delta;
    b.entries(1, 0) = spec.delta;
    return b;
}

BandSet markov_bands_1d(const ChainSpec& spec, int k_points, double eta) {
    spec.validate();
    if (k_points < 2) throw std::invalid_argument("markov_bands_1d: k_points must be >= 2");

    BandSet out;
    out.bands.assign(2, {});
    const double h = 2.0 * pi / k_points;
    for (int i = 1; i <= k_points; ++i) {
        const double kd = -pi + i * h; // (-pi, pi], right endpoint included
        try {
            const BlochMatrix b = bloch_hamiltonian_1d(kd, spec, eta);
            Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(b.entries);
            out.kd.push_back(kd);
            out.bands[0].push_back(es.eigenvalues()(0));
            out.bands[1].push_back(es.eigenvalues()(1));
        } catch (const SingularK& e) {
            out.excluded.push_back({kd, e.what()});
        }
    }
    return out;
}

DefectiveChainModes defective_chain_modes(const ChainSpec& spec) {
    spec.validate();
    if (spec.delta != 0.0) {
        throw std::invalid_argument(
            "defective_chain_modes: analytic identities hold for delta == 0 only");
    }
    const IndexLayout layout = IndexLayout::chain(spec.n_sites);
    DefectiveChainModes modes;
    modes.eigenvalue = complexd(0.0, -0.25 * spec.gamma0);
    modes.right_edge_mode = Eigen::VectorXcd::Zero(layout.dim());
    modes.left_edge_mode = Eigen::VectorXcd::Zero(layout.dim());
    modes.right_edge_mode(layout.row_of(spec.n_sites - 1, static_cast<int>(Polarization1D::R))) = 1.0;
    modes.left_edge_mode(layout.row_of(0, static_cast<int>(Polarization1D::L))) = 1.0;
    return modes;
}

} // namespace chiralwg
