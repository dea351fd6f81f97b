#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "chiralwg/chain.hpp"
#include "chiralwg/errors.hpp"
#include "chiralwg/lattice2d.hpp"
#include "chiralwg/model.hpp"
#include "chiralwg/spectral.hpp"
#include "oracles.hpp"

using namespace chiralwg;

namespace {

Eigen::MatrixXcd random_complex(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::MatrixXcd m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = complexd(d(rng), d(rng));
    }
    return m;
}

std::vector<double> sorted_gammas(const ComplexSpectrum& s) {
    std::vector<double> g;
    for (int i = 0; i < s.size(); ++i) g.push_back(-s.eigenvalues(i).imag());
    std::sort(g.begin(), g.end());
    return g;
}

} // namespace

TEST_SUITE("spectral") {

TEST_CASE("single-site chain spectrum: -i gamma0/4 +/- delta") {
    ChainSpec spec{1, PhaseQd::parse("pi"), 0.3, 1.0};
    const auto s = eigendecompose(build_chain_hamiltonian(spec));
    REQUIRE(s.size() == 2);
    std::vector<complexd> eigs{s.eigenvalues(0), s.eigenvalues(1)};
    std::sort(eigs.begin(), eigs.end(),
              [](complexd a, complexd b) { return a.real() < b.real(); });
    CHECK(std::abs(eigs[0] - complexd(-0.3, -0.25)) <= 1e-12);
    CHECK(std::abs(eigs[1] - complexd(0.3, -0.25)) <= 1e-12);
}

TEST_CASE("single-site lattice spectrum: {-i/4, -i/4, -i/2}") {
    LatticeSpec spec{1, PhaseQd::parse("pi"), 0.0, 0.0, 1.0};
    const auto s = eigendecompose(build_lattice_hamiltonian(spec));
    const auto g = sorted_gammas(s);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(g[1] == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(g[2] == doctest::Approx(0.5).epsilon(1e-10));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(s.eigenvalues(i).real()) <= 1e-12);
}

TEST_CASE("residual certificates and unit eigenvectors on random matrices") {
    for (unsigned seed : {1u, 2u, 3u}) {
        const auto m = random_complex(8, seed);
        const auto s = eigendecompose(m);
        for (int j = 0; j < s.size(); ++j) {
            CHECK(s.residuals(j) <= 1e-8 * s.matrix_norm);
            CHECK(std::abs(s.eigenvectors.col(j).norm() - 1.0) <= 1e-12);
        }
    }
    CHECK_THROWS_AS(eigendecompose(Eigen::MatrixXcd::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("decay rates sort ascending, real shifts do not contribute") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = complexd(0.0, -0.1);
    m(1, 1) = complexd(0.0, -2.0);
    m(2, 2) = complexd(0.0, -0.001);
    const auto s = eigendecompose(m);
    const auto rates = decay_rates(s);
    CHECK(rates[0].first == doctest::Approx(0.001));
    CHECK(rates[1].first == doctest::Approx(0.1));
    CHECK(rates[2].first == doctest::Approx(2.0));

    ChainSpec spec{1, PhaseQd::parse("pi"), 0.3, 1.0};
    const auto chain = eigendecompose(build_chain_hamiltonian(spec));
    const auto chain_rates = decay_rates(chain);
    CHECK(chain_rates[0].first == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(chain_rates[1].first == doctest::Approx(0.25).epsilon(1e-12));

    // Hermitian input: all decay rates vanish
    Eigen::MatrixXcd h = random_complex(6, 4);
    h = (h + h.adjoint()).eval();
    for (const auto& [g, idx] : decay_rates(eigendecompose(h))) {
        CHECK(std::abs(g) <= 1e-12 * eigendecompose(h).matrix_norm);
    }
}

TEST_CASE("darkest state selection and tie-breaking") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = complexd(0.0, -0.3);
    m(1, 1) = complexd(0.0, -0.01);
    m(2, 2) = complexd(0.0, -0.2);
    const auto [eps, vec] = darkest_state(eigendecompose(m));
    CHECK(eps == complexd(0.0, -0.01));
    CHECK(std::abs(vec(1)) == doctest::Approx(1.0));

    Eigen::MatrixXcd tie = Eigen::MatrixXcd::Zero(2, 2);
    tie(0, 0) = complexd(0.5, -0.01);
    tie(1, 1) = complexd(0.0, -0.01);
    const auto [eps2, vec2] = darkest_state(eigendecompose(tie));
    CHECK(eps2 == complexd(0.0, -0.01));
}

TEST_CASE("defective delta = 0 chain is flagged and refuses darkest-state queries") {
    ChainSpec spec{6, PhaseQd::parse("pi"), 0.0, 1.0};
    const auto s = eigendecompose(build_chain_hamiltonian(spec));
    CHECK(s.defective_warning);
    CHECK_THROWS_AS(darkest_state(s), DefectiveMatrix);

    // a clean degeneracy does not trip the warning
    Eigen::MatrixXcd deg = Eigen::MatrixXcd::Zero(3, 3);
    deg(0, 0) = complexd(1.0, 0.0);
    deg(1, 1) = complexd(1.0, 0.0);
    deg(2, 2) = complexd(2.0, 0.0);
    CHECK_FALSE(eigendecompose(deg).defective_warning);
}

TEST_CASE("photonic distribution basics") {
    const IndexLayout layout = IndexLayout::chain(5);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(layout.dim());
    v(layout.row_of(3, 0)) = 1.0;
    const auto d = photonic_distribution(v, layout);
    CHECK(d.at(3, 0) == 1.0);
    CHECK(d.probabilities.sum() == doctest::Approx(1.0).epsilon(1e-12));

    Eigen::VectorXcd two = Eigen::VectorXcd::Zero(layout.dim());
    two(0) = complexd(0.0, 1.0);
    two(5) = 1.0;
    const auto d2 = photonic_distribution(two, layout);
    CHECK(d2.probabilities(0) == doctest::Approx(0.5));
    CHECK(d2.probabilities(5) == doctest::Approx(0.5));

    CHECK_THROWS_AS(photonic_distribution(Eigen::VectorXcd::Zero(layout.dim()), layout),
                    std::invalid_argument);
    CHECK_THROWS_AS(photonic_distribution(Eigen::VectorXcd::Ones(3), layout),
                    std::invalid_argument);

    // analytic defective-chain mode: all weight on the last site, R polarization
    ChainSpec spec{5, PhaseQd::parse("pi"), 0.0, 1.0};
    const auto modes = defective_chain_modes(spec);
    const auto dr = photonic_distribution(modes.right_edge_mode, layout);
    CHECK(dr.at(4, 0) == 1.0);
    for (int site = 0; site < 4; ++site) CHECK(dr.at(site, 0) == 0.0);
}

TEST_CASE("spectrum is invariant under site permutation similarity") {
    for (int n : {3, 5, 6}) {
        ChainSpec spec{n, PhaseQd::from_value(2.6), 0.37, 1.0};
        const auto h = build_chain_hamiltonian(spec).entries;
        // reverse site order, keeping polarization minor
        Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
        for (int s = 0; s < n; ++s) {
            p(2 * (n - 1 - s), 2 * s) = 1.0;
            p(2 * (n - 1 - s) + 1, 2 * s + 1) = 1.0;
        }
        const Eigen::MatrixXcd hp = p * h * p.transpose();
        auto a = eigendecompose(h);
        auto b = eigendecompose(hp);
        auto ga = sorted_gammas(a);
        auto gb = sorted_gammas(b);
        for (size_t i = 0; i < ga.size(); ++i) CHECK(ga[i] == doctest::Approx(gb[i]).epsilon(1e-9));
    }
}

TEST_CASE("chain spectrum is invariant under delta -> -delta") {
    for (int n : {4, 11, 20}) {
        ChainSpec plus{n, PhaseQd::from_value(1.9), 0.23, 1.0};
        ChainSpec minus = plus;
        minus.delta = -plus.delta;
        auto gp = sorted_gammas(eigendecompose(build_chain_hamiltonian(plus)));
        auto gm = sorted_gammas(eigendecompose(build_chain_hamiltonian(minus)));
        for (size_t i = 0; i < gp.size(); ++i) {
            CHECK(gp[i] == doctest::Approx(gm[i]).epsilon(1e-9));
        }
    }
}

TEST_CASE("passivity: every decay rate is nonnegative up to roundoff") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> qs(0.1, 6.2);
    std::uniform_real_distribution<double> ds(-1.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        ChainSpec spec{3 + trial * 2, PhaseQd::from_value(qs(rng)), ds(rng), 1.0};
        if (spec.delta == 0.0) spec.delta = 0.1;
        const auto g = sorted_gammas(eigendecompose(build_chain_hamiltonian(spec)));
        CHECK(g.front() >= -1e-9);
    }
    for (int n : {2, 3}) {
        LatticeSpec spec{n, PhaseQd::from_value(qs(rng)), ds(rng), ds(rng), 1.0};
        const auto g = sorted_gammas(eigendecompose(build_lattice_hamiltonian(spec)));
        CHECK(g.front() >= -1e-9);
    }
}

TEST_CASE("decay classification thresholds") {
    CHECK(classify_decay(0.01, 10, 1.0) == DecayClass::subradiant);
    CHECK(classify_decay(0.5, 10, 1.0) == DecayClass::bright);
    CHECK(classify_decay(6.0, 10, 1.0) == DecayClass::superradiant);
    DecayThresholds strict{0.5, 0.1};
    CHECK(classify_decay(0.4, 10, 1.0, strict) == DecayClass::subradiant);
    CHECK(classify_decay(1.5, 10, 1.0, strict) == DecayClass::superradiant);
}

TEST_CASE("1D size sweep: darkest rate decreases with N at finite delta") {
    SweepSpec sweep;
    sweep.model = SweepModel::chain_1d;
    sweep.qd = PhaseQd::parse("pi");
    sweep.delta = 0.1;
    const auto rows = size_sweep(sweep, {10, 20, 30, 40});
    REQUIRE(rows.size() == 4);
    for (size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].gamma_min < rows[i - 1].gamma_min);
    }
    CHECK(rows[0].n_sites == 10);

    // single entry is fine
    const auto one = size_sweep(sweep, {12});
    CHECK(one.size() == 1);

    // the defective limit is rejected with a pointer to the analytic path
    SweepSpec zero = sweep;
    zero.delta = 0.0;
    CHECK_THROWS_AS(size_sweep(zero, {4, 5}), std::invalid_argument);
}

TEST_CASE("2D size sweep at zero detuning: the darkest flat-band states are exactly dark") {
    SweepSpec sweep;
    sweep.model = SweepModel::lattice_2d;
    sweep.qd = PhaseQd::parse("pi");
    const auto rows = size_sweep(sweep, {2, 3, 4}, /*keep_all=*/true);
    for (const auto& row : rows) {
        CHECK(std::abs(row.gamma_min) <= 1e-12);
        // exactly (N-1)^2 dark states in the flat band
        const int expected = (row.n_sites - 1) * (row.n_sites - 1);
        const int zeros = static_cast<int>(std::count_if(
            row.all_gammas.begin(), row.all_gammas.end(),
            [](double g) { return std::abs(g) <= 1e-10; }));
        CHECK(zeros == expected);
    }

    // unequal detunings lift the darkness and restore a decreasing trend
    SweepSpec lifted = sweep;
    lifted.delta_y = 0.02;
    const auto lifted_rows = size_sweep(lifted, {3, 4, 5, 6});
    for (size_t i = 0; i < lifted_rows.size(); ++i) {
        CHECK(lifted_rows[i].gamma_min > 1e-12);
        if (i > 0) CHECK(lifted_rows[i].gamma_min < lifted_rows[i - 1].gamma_min);
    }
}

} // TEST_SUITE
