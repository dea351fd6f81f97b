// acceptance_main.cpp — end-to-end reproduction targets for the library.
//
// Runs one numbered check per invocation (or all of them) and prints a single
// [PASS]/[FAIL] line per criterion, with indented notes carrying measured
// values and sensitivity companions. The exit code is the number of failures.
//
// Three targets are expected to fail for the model as defined; the notes and
// the README discuss why (measured exponents at the stated detunings, the
// exactly dark flat band, and the chiral scatterer's t != 1 + r). They are
// kept failing rather than loosened.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "chiralwg/analysis.hpp"
#include "chiralwg/chain.hpp"
#include "chiralwg/exact.hpp"
#include "chiralwg/lattice2d.hpp"
#include "chiralwg/model.hpp"
#include "chiralwg/spectral.hpp"
#include "../oracles.hpp"

using namespace chiralwg;

namespace {

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes.push_back("FAILED: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

PowerLawFit sweep_fit(SweepModel model, const PhaseQd& qd, double delta, double dx, double dy,
                      int n_min, int n_max, int n_step) {
    SweepSpec sweep;
    sweep.model = model;
    sweep.qd = qd;
    sweep.delta = delta;
    sweep.delta_x = dx;
    sweep.delta_y = dy;
    std::vector<int> sizes;
    for (int n = n_min; n <= n_max; n += n_step) sizes.push_back(n);
    const auto rows = size_sweep(sweep, sizes);
    std::vector<std::pair<double, double>> pts;
    for (const auto& r : rows) pts.emplace_back(r.n_sites, r.gamma_min);
    return fit_power_law(pts);
}

// --- criterion 1: 1D subradiant scaling --------------------------------------

Check criterion1() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    for (const char* qd_text : {"pi", "pi/2"}) {
        const PhaseQd qd = PhaseQd::parse(qd_text);
        const auto fit = sweep_fit(SweepModel::chain_1d, qd, 0.1, 0, 0, 10, 100, 10);
        c.note(std::string("qd=") + qd_text + ", delta=0.1: exponent " + fmt(fit.exponent) +
               ", r^2 " + fmt(fit.r_squared));
        c.require(fit.exponent >= -1.3 && fit.exponent <= -0.7,
                  std::string("qd=") + qd_text +
                      " exponent in [-1.3, -0.7] at delta=0.1 (measured " + fmt(fit.exponent) +
                      "; band-edge modes dominate, giving the cubic law)");
        c.require(fit.r_squared >= 0.98, std::string("qd=") + qd_text + " r^2 >= 0.98");
    }
    // sensitivity companion: the linear-transport window needs a much smaller
    // splitting (crossover size N* ~ pi gamma0 / (8 delta))
    for (const char* qd_text : {"pi", "pi/2"}) {
        const PhaseQd qd = PhaseQd::parse(qd_text);
        const auto fit = sweep_fit(SweepModel::chain_1d, qd, 0.001, 0, 0, 10, 100, 10);
        c.note(std::string("companion (not asserted): qd=") + qd_text +
               ", delta=0.001: exponent " + fmt(fit.exponent) + ", r^2 " + fmt(fit.r_squared));
    }
    const double elapsed = seconds_since(t0);
    c.note("elapsed " + fmt(elapsed) + " s");
    c.require(elapsed <= 120.0, "runtime <= 2 minutes");
    return c;
}

// --- criterion 2: 2D subradiant scaling --------------------------------------

Check criterion2() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();

    SweepSpec sweep;
    sweep.model = SweepModel::lattice_2d;
    sweep.qd = PhaseQd::parse("pi");
    std::vector<int> sizes;
    for (int n = 4; n <= 14; ++n) sizes.push_back(n);
    const auto rows = size_sweep(sweep, sizes, /*keep_all=*/true);

    std::vector<std::pair<double, double>> darkest;
    std::vector<std::pair<double, double>> darkest_nonzero;
    for (const auto& r : rows) {
        darkest.emplace_back(r.n_sites, r.gamma_min);
        for (double g : r.all_gammas) {
            if (g > 1e-10) {
                darkest_nonzero.emplace_back(r.n_sites, g);
                break;
            }
        }
    }

    bool fit_ok = false;
    try {
        const auto fit = fit_power_law(darkest);
        c.note("darkest-state fit: exponent " + fmt(fit.exponent) + ", r^2 " +
               fmt(fit.r_squared));
        fit_ok = fit.exponent >= -3.5 && fit.exponent <= -2.5 && fit.r_squared >= 0.95;
        c.require(fit_ok, "darkest-state exponent in [-3.5, -2.5] with r^2 >= 0.95");
    } catch (const std::exception& e) {
        c.require(false,
                  std::string("power-law fit of the darkest decay rate: ") + e.what());
        const int n = rows.back().n_sites;
        const int zeros = static_cast<int>(
            std::count_if(rows.back().all_gammas.begin(), rows.back().all_gammas.end(),
                          [](double g) { return std::abs(g) <= 1e-10; }));
        c.note("at qd=pi, delta_x=delta_y=0 the flat band is exactly dark: N=" +
               std::to_string(n) + " has " + std::to_string(zeros) + " = (N-1)^2 states with " +
               "Gamma = 0 to machine precision, so the darkest rate carries no power law");
    }

    try {
        const auto fit = fit_power_law(darkest_nonzero);
        c.note("companion (not asserted): darkest nonzero rate: exponent " + fmt(fit.exponent) +
               ", r^2 " + fmt(fit.r_squared));
    } catch (const std::exception&) {
    }
    {
        const auto fit = sweep_fit(SweepModel::lattice_2d, PhaseQd::parse("pi"), 0, 0.0, 0.02,
                                   4, 14, 1);
        c.note("companion (not asserted): delta_y=0.02 lifts the dark band: exponent " +
               fmt(fit.exponent) + ", r^2 " + fmt(fit.r_squared));
    }

    const double elapsed = seconds_since(t0);
    c.note("elapsed " + fmt(elapsed) + " s (largest matrix 588x588)");
    c.require(elapsed <= 600.0, "runtime <= 10 minutes");
    return c;
}

// --- criterion 3: flat-band identity -----------------------------------------

Check criterion3() {
    Check c;
    LatticeSpec spec{1, PhaseQd::parse("pi"), 0.0, 0.0, 1.0};
    const auto surf = bands_2d(spec, GridSpec{101, 0.5}, BlochVariant::linearized);
    const size_t nk = surf.kx.size();

    double mid_max = 0.0, outer_err = 0.0;
    for (size_t ix = 0; ix < nk; ++ix) {
        for (size_t iy = 0; iy < nk; ++iy) {
            const size_t at = ix * nk + iy;
            mid_max = std::max(mid_max, std::abs(surf.bands[1][at]));
            const double cone = std::hypot(surf.kx[ix], surf.ky[iy]) / 8.0;
            outer_err = std::max(outer_err, std::abs(surf.bands[0][at] + cone));
            outer_err = std::max(outer_err, std::abs(surf.bands[2][at] - cone));
        }
    }
    c.note("101x101 grid over [-0.5, 0.5]^2: max |middle band| = " + fmt(mid_max) +
           ", max outer-cone deviation = " + fmt(outer_err));
    c.require(mid_max <= 1e-12, "middle band identically zero (<= 1e-12)");
    c.require(outer_err <= 1e-10, "outer bands match +/-(gamma0/8)|k|d (<= 1e-10)");
    return c;
}

// --- criterion 4: gap opening -------------------------------------------------

Check criterion4() {
    Check c;
    // k = 0, delta_y = 0.02: the flat-band level detaches from the (degenerate)
    // cone pair; the separation between the two distinct levels is the gap
    LatticeSpec gapped{1, PhaseQd::parse("pi"), 0.0, 0.02, 1.0};
    const auto surf = bands_2d(gapped, GridSpec{1, 0.5}, BlochVariant::linearized);
    const auto metrics =
        band_metrics({surf.band_samples(0), surf.band_samples(1), surf.band_samples(2)});
    const double separation = metrics.adjacent_gaps[0]; // flat band to cone pair
    c.note("delta_x=0, delta_y=0.02: levels at k=0 are {" + fmt(surf.bands[0][0]) + ", " +
           fmt(surf.bands[1][0]) + ", " + fmt(surf.bands[2][0]) +
           "}; flat-band separation " + fmt(separation));
    c.require(separation > 0.0, "middle-to-outer separation > 0 at k=0 for delta_y=0.02");

    LatticeSpec flat{1, PhaseQd::parse("pi"), 0.0, 0.0, 1.0};
    const auto surf0 = bands_2d(flat, GridSpec{1, 0.5}, BlochVariant::linearized);
    const auto metrics0 =
        band_metrics({surf0.band_samples(0), surf0.band_samples(1), surf0.band_samples(2)});
    c.note("delta_x=delta_y=0: max |separation| at k=0 = " + fmt(metrics0.min_gap));
    c.require(std::abs(metrics0.min_gap) <= 1e-12 &&
                  std::abs(metrics0.adjacent_gaps[0]) <= 1e-12 &&
                  std::abs(metrics0.adjacent_gaps[1]) <= 1e-12,
              "separation <= 1e-12 at k=0 for zero detuning");
    return c;
}

// --- criterion 5: chiral transfer-matrix identities ---------------------------

Check criterion5() {
    Check c;
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> xs(-5.0, 5.0);
    std::uniform_real_distribution<double> ds(-0.9, 0.9);
    std::uniform_real_distribution<double> qs(0.1, 6.2);
    std::uniform_real_distribution<double> gs(0.3, 2.0);

    // (a) delta = 0: no reflection, unimodular transmission
    double chiral_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto s = scattering_coefficients(xs(rng), 0.0, 1.0);
        chiral_err = std::max({chiral_err, std::abs(s.r), std::abs(std::abs(s.t) - 1.0)});
    }
    c.note("delta=0 over 1000 random x: max(|r|, ||t|-1|) = " + fmt(chiral_err));
    c.require(chiral_err <= 1e-12, "|t| = 1 and r = 0 for delta = 0 (<= 1e-12)");

    // (b) t = 1 + r, as stated; the coefficients certified by the resummation
    // oracle instead satisfy |t - r| = |t + r| = 1
    double one_plus_r = 0.0, channel_err = 0.0, oracle_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = xs(rng), d = ds(rng), g = gs(rng);
        if (std::abs(x * x - d * d) < 1e-3) continue;
        const auto s = scattering_coefficients(x, d, g);
        one_plus_r = std::max(one_plus_r, std::abs(s.t - (1.0 + s.r)));
        channel_err = std::max({channel_err, std::abs(std::abs(s.t - s.r) - 1.0),
                                std::abs(std::abs(s.t + s.r) - 1.0)});
        const auto [t_ref, r_ref] = oracle::greens_resummation(x, d, g);
        oracle_err = std::max({oracle_err, std::abs(s.t - t_ref), std::abs(s.r - r_ref)});
    }
    c.note("max |t - (1 + r)| = " + fmt(one_plus_r) +
           "; channel identities max ||t -/+ r| - 1| = " + fmt(channel_err) +
           "; resummation-oracle deviation = " + fmt(oracle_err));
    c.require(one_plus_r <= 1e-12,
              "t = 1 + r (measured max deviation " + fmt(one_plus_r) +
                  "; the chiral scatterer satisfies |t - r| = |t + r| = 1 instead)");

    // (c) det(T) = 1
    double det_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const auto t = transfer_matrix(xs(rng), PhaseQd::from_value(qs(rng)), ds(rng), gs(rng));
        det_err = std::max(det_err, std::abs(t.determinant() - complexd(1.0, 0.0)));
    }
    c.note("max |det(T) - 1| = " + fmt(det_err));
    c.require(det_err <= 1e-10, "det(T) = 1 (<= 1e-10)");

    // (d) every solved band root satisfies the dispersion relation
    double res_max = 0.0;
    int root_count = 0;
    for (const char* qd_text : {"pi", "pi/2", "2pi"}) {
        for (double delta : {0.0, 0.2, 0.6}) {
            ChainSpec spec{1, PhaseQd::parse(qd_text), delta, 1.0};
            for (int i = 0; i <= 200; ++i) {
                const double kd = -pi + 2.0 * pi * i / 200.0;
                const auto pt = solve_exact_bands(kd, spec);
                for (double r : pt.residuals) res_max = std::max(res_max, r);
                root_count += static_cast<int>(pt.roots.size());
            }
        }
    }
    c.note("exact-band roots checked: " + std::to_string(root_count) +
           ", max residual = " + fmt(res_max));
    c.require(res_max <= 1e-10, "every root satisfies the dispersion relation (<= 1e-10)");

    // half-trace of the transfer matrix reproduces the dispersion RHS
    double trace_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = xs(rng), d = ds(rng), q = qs(rng), g = gs(rng);
        const auto t = transfer_matrix(x, PhaseQd::from_value(q), d, g);
        trace_err = std::max(trace_err,
                             std::abs(0.5 * (t(0, 0) + t(1, 1)).real() -
                                      dispersion_rhs(x, q, d, g)));
    }
    c.note("max |Tr(T)/2 - RHS| over 1000 random points = " + fmt(trace_err));
    c.require(trace_err <= 1e-10, "cos(kd) = Tr(T)/2 matches the dispersion RHS");
    return c;
}

// --- criterion 6: defective-limit identities ----------------------------------

Check criterion6() {
    Check c;
    for (int n : {2, 5, 60}) {
        ChainSpec spec{n, PhaseQd::parse("pi/2"), 0.0, 1.0};
        const auto h = build_chain_hamiltonian(spec).entries;

        // structural inspection: triangular blocks, constant diagonal, no mixing
        bool structure = true;
        for (int i = 0; i < n; ++i) {
            structure = structure && h(2 * i, 2 * i) == complexd(0.0, -0.25) &&
                        h(2 * i + 1, 2 * i + 1) == complexd(0.0, -0.25);
            for (int j = 0; j < n; ++j) {
                if (j > i) structure = structure && h(2 * i, 2 * j) == complexd(0.0, 0.0);
                if (j < i) structure = structure && h(2 * i + 1, 2 * j + 1) == complexd(0.0, 0.0);
                structure = structure && h(2 * i, 2 * j + 1) == complexd(0.0, 0.0) &&
                            h(2 * i + 1, 2 * j) == complexd(0.0, 0.0);
            }
        }
        c.require(structure, "N=" + std::to_string(n) +
                                 ": block-triangular structure pins the eigenvalue multiset "
                                 "{-i gamma0/4} x 2N");

        const auto modes = defective_chain_modes(spec);
        const double res_r =
            (h * modes.right_edge_mode - modes.eigenvalue * modes.right_edge_mode).norm();
        const double res_l =
            (h * modes.left_edge_mode - modes.eigenvalue * modes.left_edge_mode).norm();
        c.require(res_r == 0.0 && res_l == 0.0,
                  "N=" + std::to_string(n) + ": forward-substitution edge modes are exact");

        const IndexLayout layout = IndexLayout::chain(n);
        const auto dr = photonic_distribution(modes.right_edge_mode, layout);
        const auto dl = photonic_distribution(modes.left_edge_mode, layout);
        c.require(dr.at(n - 1, 0) == 1.0 && dl.at(0, 1) == 1.0,
                  "N=" + std::to_string(n) +
                      ": darkest distributions sit on the right end (R) / left end (L)");
    }
    c.note("checked N in {2, 5, 60} without numerical diagonalization");
    return c;
}

// --- criterion 7: oracle equivalence ------------------------------------------

Check criterion7() {
    Check c;
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> qs(0.05, 6.25);
    std::uniform_real_distribution<double> ds(-1.0, 1.0);
    std::uniform_real_distribution<double> gs(0.2, 2.0);

    double chain_err = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            ChainSpec spec{n, PhaseQd::from_value(qs(rng)), ds(rng), gs(rng)};
            const auto a = build_chain_hamiltonian(spec).entries;
            const auto b = oracle::naive_chain_hamiltonian(spec);
            chain_err = std::max(chain_err, (a - b).cwiseAbs().maxCoeff());
        }
    }
    c.note("chain builder vs naive loop, N <= 6 x 20 random specs: max |diff| = " +
           fmt(chain_err));
    c.require(chain_err <= 1e-14, "chain oracle equivalence (<= 1e-14)");

    double lattice_err = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 20; ++trial) {
            LatticeSpec spec{n, PhaseQd::from_value(qs(rng)), ds(rng), ds(rng), gs(rng)};
            const auto a = build_lattice_hamiltonian(spec).entries;
            const auto b = oracle::naive_lattice_hamiltonian(spec);
            lattice_err = std::max(lattice_err, (a - b).cwiseAbs().maxCoeff());
        }
    }
    c.note("lattice builder vs naive two-orientation loop: max |diff| = " + fmt(lattice_err));
    c.require(lattice_err <= 1e-14, "lattice oracle equivalence (<= 1e-14)");

    double series_err = 0.0;
    for (double phi : {0.4, 1.1, 2.0, -2.6, 2.9}) {
        const complexd series = oracle::damped_series(phi, 1.0, 1e-4, 1000000);
        series_err = std::max(series_err,
                              std::abs(series - complexd(0.25 / std::tan(0.5 * phi), 0.0)));
    }
    c.note("cotangent vs damped geometric series (eta=1e-4, J=1e6): max |diff| = " +
           fmt(series_err));
    c.require(series_err <= 1e-3, "Bloch cotangent matches the damped series (<= 1e-3)");
    return c;
}

// --- criterion 8: 2D single-site spectrum --------------------------------------

Check criterion8() {
    Check c;
    LatticeSpec spec{1, PhaseQd::parse("pi"), 0.0, 0.0, 1.0};
    const auto h = build_lattice_hamiltonian(spec);

    const auto oracle_m = oracle::single_site_decay(1.0);
    const double matrix_err = (h.entries - oracle_m).cwiseAbs().maxCoeff();
    c.require(matrix_err <= 1e-15, "single-site matrix equals the projector-algebra oracle");

    const auto s = eigendecompose(h);
    std::vector<double> g;
    for (int i = 0; i < s.size(); ++i) g.push_back(-s.eigenvalues(i).imag());
    std::sort(g.begin(), g.end());
    c.note("decay rates: {" + fmt(g[0]) + ", " + fmt(g[1]) + ", " + fmt(g[2]) + "} gamma0");
    c.require(std::abs(g[0] - 0.25) <= 1e-10 && std::abs(g[1] - 0.25) <= 1e-10 &&
                  std::abs(g[2] - 0.5) <= 1e-10,
              "eigenvalues {-i/4, -i/4, -i/2} gamma0 (<= 1e-10)");
    double re_max = 0.0;
    for (int i = 0; i < s.size(); ++i) re_max = std::max(re_max, std::abs(s.eigenvalues(i).real()));
    c.require(re_max <= 1e-10, "eigenvalues are purely imaginary");
    return c;
}

const char* kDescriptions[8] = {
    "1D subradiant scaling: fit of darkest rate over N=10..100, qd in {pi, pi/2}, delta=0.1",
    "2D subradiant scaling: fit of darkest rate over N=4..14, qd=pi, delta_x=delta_y=0",
    "flat-band identity: linearized middle band zero, outer bands on the cone",
    "gap opening at k=0 for delta_y=0.02; no gap at zero detuning",
    "chiral transfer-matrix identities (t, r, det T, band-root residuals)",
    "defective-limit identities of the delta=0 chain (structural, no eigensolver)",
    "oracle equivalence: builders vs naive constructions, cotangent vs damped series",
    "2D single-site spectrum {-i/4, -i/4, -i/2} gamma0",
};

int run_criterion(int idx) {
    Check c;
    switch (idx) {
        case 1: c = criterion1(); break;
        case 2: c = criterion2(); break;
        case 3: c = criterion3(); break;
        case 4: c = criterion4(); break;
        case 5: c = criterion5(); break;
        case 6: c = criterion6(); break;
        case 7: c = criterion7(); break;
        case 8: c = criterion8(); break;
        default:
            std::fprintf(stderr, "unknown criterion %d (valid: 1..8)\n", idx);
            return 1;
    }
    std::printf("[%s] criterion %d: %s\n", c.ok ? "PASS" : "FAIL", idx, kDescriptions[idx - 1]);
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    return c.ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        return run_criterion(std::atoi(argv[1]));
    }
    int failures = 0;
    for (int i = 1; i <= 8; ++i) failures += run_criterion(i);
    std::printf("%d/8 criteria passed\n", 8 - failures);
    return failures;
}
