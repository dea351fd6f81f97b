// spectral.cpp — eigensolver wrapper, decay analysis, distributions, sweeps

#include "chiralwg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "chiralwg/errors.hpp"
#include "chiralwg/lattice2d.hpp"

namespace chiralwg {

namespace {

// numerical defectiveness proxy: smallest singular value of the unit-column
// eigenvector matrix
double eigenbasis_min_singular(const Eigen::MatrixXcd& v) {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(v);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

} // namespace

ComplexSpectrum eigendecompose(const Eigen::MatrixXcd& h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw std::invalid_argument("eigendecompose: matrix must be square and nonempty");
    }
    if (!h.allFinite()) {
        throw std::invalid_argument("eigendecompose: matrix entries must be finite");
    }

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(h, /*computeEigenvectors=*/true);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecompose: dense solver failed (dim=" +
                                 std::to_string(h.rows()) +
                                 ", frobenius=" + std::to_string(h.norm()) + ")");
    }

    ComplexSpectrum s;
    s.eigenvalues = solver.eigenvalues();
    s.eigenvectors = solver.eigenvectors();
    s.matrix_norm = h.norm();

    const int n = s.size();
    for (int j = 0; j < n; ++j) s.eigenvectors.col(j).normalize();

    s.residuals.resize(n);
    for (int j = 0; j < n; ++j) {
        s.residuals(j) = (h * s.eigenvectors.col(j) - s.eigenvalues(j) * s.eigenvectors.col(j)).norm();
    }

    // clustered eigenvalues alone are fine; flag only when the eigenbasis
    // also collapses
    double min_gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < n && n > 1; ++a) {
        for (int b = a + 1; b < n; ++b) {
            min_gap = std::min(min_gap, std::abs(s.eigenvalues(a) - s.eigenvalues(b)));
        }
    }
    if (n > 1 && min_gap < 1e-8 * s.matrix_norm) {
        if (eigenbasis_min_singular(s.eigenvectors) < 1e-6) {
            s.defective_warning = true;
        }
    }
    return s;
}

ComplexSpectrum eigendecompose(const LatticeHamiltonian& h) {
    return eigendecompose(h.entries);
}

std::vector<std::pair<double, int>> decay_rates(const ComplexSpectrum& spectrum) {
    std::vector<std::pair<double, int>> rates;
    rates.reserve(static_cast<size_t>(spectrum.size()));
    for (int j = 0; j < spectrum.size(); ++j) {
        rates.emplace_back(-spectrum.eigenvalues(j).imag(), j);
    }
    std::stable_sort(rates.begin(), rates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    return rates;
}

std::pair<complexd, Eigen::VectorXcd> darkest_state(const ComplexSpectrum& spectrum) {
    if (spectrum.size() == 0) throw std::invalid_argument("darkest_state: empty spectrum");
    if (spectrum.defective_warning) {
        throw DefectiveMatrix(
            "darkest_state: spectrum flagged as defective; use the analytic delta=0 "
            "identities (defective_chain_modes) instead of numerical eigenvectors");
    }

    auto gamma = [&](int j) { return -spectrum.eigenvalues(j).imag(); };
    auto re = [&](int j) { return std::abs(spectrum.eigenvalues(j).real()); };
    const double tie = 1e-12 + 1e-9 * spectrum.matrix_norm;

    int best = 0;
    for (int j = 1; j < spectrum.size(); ++j) {
        if (gamma(j) < gamma(best) - tie) {
            best = j;
        } else if (std::abs(gamma(j) - gamma(best)) <= tie && re(j) < re(best) - tie) {
            best = j;
        }
    }
    return {spectrum.eigenvalues(best), spectrum.eigenvectors.col(best)};
}

DecayClass classify_decay(double gamma, int n_atoms, double gamma0,
                          const DecayThresholds& thresholds) {
    if (gamma > thresholds.c_super * n_atoms * gamma0) return DecayClass::superradiant;
    if (gamma < thresholds.c_sub * gamma0) return DecayClass::subradiant;
    return DecayClass::bright;
}

const char* decay_class_name(DecayClass c) {
    switch (c) {
        case DecayClass::subradiant: return "subradiant";
        case DecayClass::superradiant: return "superradiant";
        default: return "bright";
    }
}

PhotonicDistribution photonic_distribution(const Eigen::VectorXcd& vec, const IndexLayout& layout) {
    if (vec.size() != layout.dim()) {
        throw std::invalid_argument("photonic_distribution: vector dimension does not match layout");
    }
    const double norm2 = vec.squaredNorm();
    if (norm2 <= 0.0) {
        throw std::invalid_argument("photonic_distribution: zero vector has no distribution");
    }
    PhotonicDistribution dist{layout, Eigen::VectorXd(vec.size())};
    for (Eigen::Index i = 0; i < vec.size(); ++i) {
        dist.probabilities(i) = std::norm(vec(i)) / norm2;
    }
    return dist;
}

std::vector<SweepRow> size_sweep(const SweepSpec& spec, const std::vector<int>& n_list,
                                 bool keep_all) {
    if (n_list.empty()) throw std::invalid_argument("size_sweep: empty size list");
    if (spec.model == SweepModel::chain_1d && spec.delta == 0.0) {
        throw std::invalid_argument(
            "size_sweep: the delta = 0 chain is defective; its spectrum is the analytic "
            "multiset {-i gamma0/4} (see defective_chain_modes)");
    }

    std::set<int> sizes(n_list.begin(), n_list.end());
    std::vector<SweepRow> rows;
    rows.reserve(sizes.size());
    for (int n : sizes) {
        if (n < 1) throw std::invalid_argument("size_sweep: sizes must be >= 1");
        ComplexSpectrum spectrum;
        if (spec.model == SweepModel::chain_1d) {
            ChainSpec cs{n, spec.qd, spec.delta, spec.gamma0};
            spectrum = eigendecompose(build_chain_hamiltonian(cs));
        } else {
            LatticeSpec ls{n, spec.qd, spec.delta_x, spec.delta_y, spec.gamma0};
            spectrum = eigendecompose(build_lattice_hamiltonian(ls));
        }
        SweepRow row;
        row.n_sites = n;
        auto rates = decay_rates(spectrum);
        row.gamma_min = rates.front().first;
        if (keep_all) {
            row.all_gammas.reserve(rates.size());
            for (const auto& [g, idx] : rates) row.all_gammas.push_back(g);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace chiralwg
