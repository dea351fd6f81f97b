// chiralwg_cli.cpp — command-line front end
//
// Subcommands: bands1d, bands1d-exact, spectrum1d, bands2d, spectrum2d,
// scaling, distribution, compare. Each writes a ResultTable (csv or json)
// whose metadata echoes the full run configuration, and optionally a static
// SVG plot. A --config JSON file mirrors the flags; explicit flags win.
// CHIRALWG_OUTPUT_DIR, when set, prefixes relative output paths.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chiralwg/analysis.hpp"
#include "chiralwg/chain.hpp"
#include "chiralwg/errors.hpp"
#include "chiralwg/exact.hpp"
#include "chiralwg/lattice2d.hpp"
#include "chiralwg/model.hpp"
#include "chiralwg/spectral.hpp"
#include "chiralwg/svg.hpp"
#include "chiralwg/table.hpp"
#include "chiralwg/version.hpp"

namespace {

using namespace chiralwg;
using chiralwg::io::Cell;
using chiralwg::io::ResultTable;
using nlohmann::json;

struct CommonOpts {
    std::string output;
    std::string format; // empty: infer from the output extension
    std::string plot;
    std::string config;

    std::string effective_format() const {
        if (!format.empty()) return format;
        return output.size() >= 5 && output.substr(output.size() - 5) == ".json" ? "json" : "csv";
    }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--output,-o", c.output, "output table path")->required();
    cmd->add_option("--format", c.format, "table format: csv or json (default: by extension)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--plot", c.plot, "optional SVG plot path");
    cmd->add_option("--config", c.config, "JSON config file mirroring the flags");
}

// config-file merge: a flag not given on the command line takes the config value
json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    json cfg = json::parse(in);
    if (!cfg.is_object()) throw std::runtime_error("config file must hold a JSON object");
    return cfg;
}

template <typename T>
void merge(const CLI::App* cmd, const json& cfg, const std::string& flag, T& value) {
    const CLI::Option* opt = cmd->get_option("--" + flag);
    if (opt->count() > 0) return;
    if (!cfg.contains(flag)) return;
    value = cfg.at(flag).get<T>();
}

std::filesystem::path resolve_output(const std::string& path) {
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("CHIRALWG_OUTPUT_DIR"); dir && *dir && p.is_relative()) {
        p = std::filesystem::path(dir) / p;
    }
    return p;
}

json qd_json(const PhaseQd& qd) {
    return json{{"text", qd.str()}, {"value", qd.value()}, {"exact", qd.is_exact()}};
}

json base_metadata(const std::string& subcommand, const CommonOpts& c) {
    json meta;
    meta["tool"] = "chiralwg";
    meta["version"] = library_version;
    meta["config"] = json{{"subcommand", subcommand},
                          {"output", c.output},
                          {"format", c.format},
                          {"plot", c.plot}};
    return meta;
}

void emit(const ResultTable& table, const CommonOpts& c,
          std::optional<chiralwg::io::PlotKind> plot_kind) {
    const auto fmt = chiralwg::io::parse_format(c.format);
    chiralwg::io::write_table(table, resolve_output(c.output), fmt);
    if (!c.plot.empty()) {
        if (!plot_kind) {
            throw std::invalid_argument("this subcommand does not support --plot");
        }
        chiralwg::io::render_plot(table, *plot_kind, resolve_output(c.plot));
    }
}

json excluded_json(const std::vector<ExcludedPoint>& excluded) {
    json out = json::array();
    for (const auto& e : excluded) out.push_back({{"kd", e.kd}, {"reason", e.reason}});
    return out;
}

// ----------------------------- subcommands ----------------------------------

int run_bands1d(const CommonOpts& c, const ChainSpec& spec, int k_points, double eta) {
    const BandSet bands = markov_bands_1d(spec, k_points, eta);

    ResultTable table;
    table.columns = {{"kd", "1"}, {"band_index", ""}, {"energy", "Gamma0"}};
    for (size_t i = 0; i < bands.kd.size(); ++i) {
        for (size_t b = 0; b < bands.bands.size(); ++b) {
            table.append_row({bands.kd[i], static_cast<std::int64_t>(b), bands.bands[b][i]});
        }
    }
    table.metadata = base_metadata("bands1d", c);
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta"] = spec.delta;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["config"]["k_points"] = k_points;
    table.metadata["config"]["eta"] = eta;
    table.metadata["excluded"] = excluded_json(bands.excluded);

    emit(table, c, chiralwg::io::PlotKind::bands1d);
    return 0;
}

int run_bands1d_exact(const CommonOpts& c, const ChainSpec& spec, int k_points) {
    ResultTable table;
    table.columns = {{"kd", "1"}, {"band_index", ""}, {"x", "Gamma0"},
                     {"energy", "Gamma0"}, {"residual", "1"}};
    json gaps = json::array();
    const double h = 2.0 * pi / k_points;
    for (int i = 1; i <= k_points; ++i) {
        const double kd = -pi + i * h;
        const ExactBandPoint pt = solve_exact_bands(kd, spec);
        if (pt.roots.empty()) gaps.push_back(kd);
        for (size_t r = 0; r < pt.roots.size(); ++r) {
            table.append_row({kd, static_cast<std::int64_t>(r), pt.roots[r], -pt.roots[r],
                              pt.residuals[r]});
        }
    }
    table.metadata = base_metadata("bands1d-exact", c);
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta"] = spec.delta;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["config"]["k_points"] = k_points;
    table.metadata["gap_points"] = gaps;
    table.metadata["note"] = "x = omega - eps; energy = eps - omega = -x";

    emit(table, c, chiralwg::io::PlotKind::bands1d_exact);
    return 0;
}

void append_spectrum_rows(ResultTable& table, const ComplexSpectrum& spectrum, int n_atoms,
                          double gamma0, const DecayThresholds& thresholds) {
    const auto rates = decay_rates(spectrum);
    for (const auto& [gamma, idx] : rates) {
        const complexd e = spectrum.eigenvalues(idx);
        table.append_row({static_cast<std::int64_t>(idx), e.real(), e.imag(), gamma,
                          std::string(decay_class_name(
                              classify_decay(gamma, n_atoms, gamma0, thresholds)))});
    }
}

int run_spectrum1d(const CommonOpts& c, const ChainSpec& spec) {
    const LatticeHamiltonian h = build_chain_hamiltonian(spec);
    const ComplexSpectrum spectrum = eigendecompose(h);
    const DecayThresholds thresholds;

    ResultTable table;
    table.columns = {{"state", ""}, {"energy_re", "Gamma0"}, {"energy_im", "Gamma0"},
                     {"gamma", "Gamma0"}, {"class", ""}};
    append_spectrum_rows(table, spectrum, spec.n_sites, spec.gamma0, thresholds);

    table.metadata = base_metadata("spectrum1d", c);
    table.metadata["config"]["n"] = spec.n_sites;
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta"] = spec.delta;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["thresholds"] = {{"c_sub", thresholds.c_sub}, {"c_super", thresholds.c_super},
                                    {"n_atoms", spec.n_sites}};
    table.metadata["defective_warning"] = spectrum.defective_warning;
    if (spectrum.defective_warning) {
        table.metadata["note"] =
            "matrix is numerically defective (delta = 0 chain); eigenvalues are the analytic "
            "multiset {-i gamma0/4} and numerical eigenvectors are unreliable";
    }

    emit(table, c, std::nullopt);
    return 0;
}

int run_spectrum2d(const CommonOpts& c, const LatticeSpec& spec) {
    const LatticeHamiltonian h = build_lattice_hamiltonian(spec);
    const ComplexSpectrum spectrum = eigendecompose(h);
    const DecayThresholds thresholds;
    const int n_atoms = spec.n_sites * spec.n_sites;

    ResultTable table;
    table.columns = {{"state", ""}, {"energy_re", "Gamma0"}, {"energy_im", "Gamma0"},
                     {"gamma", "Gamma0"}, {"class", ""}};
    append_spectrum_rows(table, spectrum, n_atoms, spec.gamma0, thresholds);

    table.metadata = base_metadata("spectrum2d", c);
    table.metadata["config"]["n"] = spec.n_sites;
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta_x"] = spec.delta_x;
    table.metadata["config"]["delta_y"] = spec.delta_y;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["thresholds"] = {{"c_sub", thresholds.c_sub}, {"c_super", thresholds.c_super},
                                    {"n_atoms", n_atoms}};
    table.metadata["defective_warning"] = spectrum.defective_warning;

    emit(table, c, std::nullopt);
    return 0;
}

int run_bands2d(const CommonOpts& c, const LatticeSpec& spec, const std::string& variant_text,
                int grid_points, double extent, double eta) {
    const BlochVariant variant =
        variant_text == "full" ? BlochVariant::full : BlochVariant::linearized;
    const GridSpec grid{grid_points, extent};
    const BandSurfaces surfaces = bands_2d(spec, grid, variant, eta);

    ResultTable table;
    table.columns = {{"kx_d", "1"}, {"ky_d", "1"}, {"band1", "Gamma0"}, {"band2", "Gamma0"},
                     {"band3", "Gamma0"}};
    const size_t nk = surfaces.kx.size();
    for (size_t ix = 0; ix < nk; ++ix) {
        for (size_t iy = 0; iy < nk; ++iy) {
            const double b1 = surfaces.bands[0][ix * nk + iy];
            if (!std::isfinite(b1)) continue; // excluded point, recorded in metadata
            table.append_row({surfaces.kx[ix], surfaces.ky[iy], b1,
                              surfaces.bands[1][ix * nk + iy], surfaces.bands[2][ix * nk + iy]});
        }
    }

    table.metadata = base_metadata("bands2d", c);
    table.metadata["config"]["variant"] = variant_text;
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta_x"] = spec.delta_x;
    table.metadata["config"]["delta_y"] = spec.delta_y;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["config"]["grid"] = grid_points;
    table.metadata["config"]["extent"] = extent;
    table.metadata["config"]["eta"] = eta;
    json excl = json::array();
    for (const auto& e : surfaces.excluded) {
        excl.push_back({{"kx_d", e.kx_d}, {"ky_d", e.ky_d}, {"reason", e.reason}});
    }
    table.metadata["excluded"] = excl;

    const auto metrics = band_metrics({surfaces.band_samples(0), surfaces.band_samples(1),
                                       surfaces.band_samples(2)});
    table.metadata["band_metrics"] = {
        {"band_widths", metrics.band_widths},
        {"global_bandwidth", metrics.global_bandwidth},
        {"flatness", metrics.flatness},
        {"adjacent_gaps", metrics.adjacent_gaps},
        {"min_gap", metrics.min_gap},
    };

    emit(table, c, chiralwg::io::PlotKind::bands2d_cuts);
    return 0;
}

int run_scaling(const CommonOpts& c, const SweepSpec& sweep, int n_min, int n_max, int n_step) {
    if (n_min < 1 || n_max < n_min || n_step < 1) {
        throw std::invalid_argument("scaling: require 1 <= n-min <= n-max and n-step >= 1");
    }
    std::vector<int> sizes;
    for (int n = n_min; n <= n_max; n += n_step) sizes.push_back(n);

    const auto rows = size_sweep(sweep, sizes);

    ResultTable table;
    table.columns = {{"n_sites", ""}, {"gamma_min", "Gamma0"}};
    std::vector<std::pair<double, double>> points;
    for (const auto& row : rows) {
        table.append_row({static_cast<std::int64_t>(row.n_sites), row.gamma_min});
        points.emplace_back(static_cast<double>(row.n_sites), row.gamma_min);
    }

    table.metadata = base_metadata("scaling", c);
    table.metadata["config"]["model"] = sweep.model == SweepModel::chain_1d ? "1d" : "2d";
    table.metadata["config"]["qd"] = qd_json(sweep.qd);
    table.metadata["config"]["delta"] = sweep.delta;
    table.metadata["config"]["delta_x"] = sweep.delta_x;
    table.metadata["config"]["delta_y"] = sweep.delta_y;
    table.metadata["config"]["gamma0"] = sweep.gamma0;
    table.metadata["config"]["n_min"] = n_min;
    table.metadata["config"]["n_max"] = n_max;
    table.metadata["config"]["n_step"] = n_step;

    try {
        const PowerLawFit fit = fit_power_law(points);
        table.metadata["fit"] = {{"exponent", fit.exponent},
                                 {"intercept", fit.intercept},
                                 {"r_squared", fit.r_squared},
                                 {"n_points", fit.n_points}};
    } catch (const std::exception& e) {
        table.metadata["fit_error"] = e.what();
    }

    emit(table, c, chiralwg::io::PlotKind::scaling);
    return 0;
}

int run_distribution(const CommonOpts& c, const std::string& model, const ChainSpec& chain,
                     const LatticeSpec& lattice) {
    ResultTable table;
    json meta = base_metadata("distribution", c);
    meta["config"]["model"] = model;

    if (model == "1d") {
        table.columns = {{"site", ""}, {"polarization", ""}, {"probability", "1"}};
        meta["config"]["n"] = chain.n_sites;
        meta["config"]["qd"] = qd_json(chain.qd);
        meta["config"]["delta"] = chain.delta;
        meta["config"]["gamma0"] = chain.gamma0;

        if (chain.delta == 0.0) {
            // defective limit: serve the analytic edge modes, not numerics
            const DefectiveChainModes modes = defective_chain_modes(chain);
            const IndexLayout layout = IndexLayout::chain(chain.n_sites);
            const auto pr = photonic_distribution(modes.right_edge_mode, layout);
            const auto pl = photonic_distribution(modes.left_edge_mode, layout);
            for (int s = 0; s < chain.n_sites; ++s) {
                table.append_row({static_cast<std::int64_t>(s), std::string("R"),
                                  pr.at(s, static_cast<int>(Polarization1D::R))});
            }
            for (int s = 0; s < chain.n_sites; ++s) {
                table.append_row({static_cast<std::int64_t>(s), std::string("L"),
                                  pl.at(s, static_cast<int>(Polarization1D::L))});
            }
            meta["analytic_defective_limit"] = true;
            meta["eigenvalue"] = {{"re", modes.eigenvalue.real()}, {"im", modes.eigenvalue.imag()}};
            meta["note"] = "delta = 0: degenerate edge modes from forward substitution; "
                           "R mode occupies the last site, L mode the first";
        } else {
            const auto spectrum = eigendecompose(build_chain_hamiltonian(chain));
            const auto [eps, vec] = darkest_state(spectrum);
            const IndexLayout layout = IndexLayout::chain(chain.n_sites);
            const auto dist = photonic_distribution(vec, layout);
            for (int s = 0; s < chain.n_sites; ++s) {
                for (int p = 0; p < 2; ++p) {
                    table.append_row({static_cast<std::int64_t>(s),
                                      std::string(polarization_name(static_cast<Polarization1D>(p))),
                                      dist.at(s, p)});
                }
            }
            meta["eigenvalue"] = {{"re", eps.real()}, {"im", eps.imag()}};
            meta["gamma"] = -eps.imag();
        }
        table.metadata = meta;
        emit(table, c, chiralwg::io::PlotKind::distribution1d);
        return 0;
    }

    // 2d
    table.columns = {{"ix", ""}, {"iy", ""}, {"polarization", ""}, {"probability", "1"}};
    meta["config"]["n"] = lattice.n_sites;
    meta["config"]["qd"] = qd_json(lattice.qd);
    meta["config"]["delta_x"] = lattice.delta_x;
    meta["config"]["delta_y"] = lattice.delta_y;
    meta["config"]["gamma0"] = lattice.gamma0;

    const auto spectrum = eigendecompose(build_lattice_hamiltonian(lattice));
    const auto [eps, vec] = darkest_state(spectrum);
    const IndexLayout layout = IndexLayout::lattice(lattice.n_sites);
    const auto dist = photonic_distribution(vec, layout);
    for (int iy = 0; iy < lattice.n_sites; ++iy) {
        for (int ix = 0; ix < lattice.n_sites; ++ix) {
            const int site = layout.site_index(ix, iy);
            for (int p = 0; p < 3; ++p) {
                table.append_row({static_cast<std::int64_t>(ix), static_cast<std::int64_t>(iy),
                                  std::string(polarization_name(static_cast<Polarization2D>(p))),
                                  dist.at(site, p)});
            }
        }
    }
    meta["eigenvalue"] = {{"re", eps.real()}, {"im", eps.imag()}};
    meta["gamma"] = -eps.imag();
    table.metadata = meta;
    emit(table, c, chiralwg::io::PlotKind::distribution2d);
    return 0;
}

int run_compare(const CommonOpts& c, const ChainSpec& spec, int k_points, double eta) {
    const DeviationReport report = compare_dispersions(spec, k_points, eta);

    ResultTable table;
    table.columns = {{"kd", "1"}, {"band_index", ""}, {"markov_energy", "Gamma0"},
                     {"exact_energy", "Gamma0"}, {"abs_diff", "Gamma0"}, {"matched", ""}};
    json unmatched = json::array();
    for (const auto& row : report.rows) {
        table.append_row({row.kd, static_cast<std::int64_t>(row.band), row.markov_energy,
                          row.matched ? row.exact_energy : 0.0, row.matched ? row.abs_diff : 0.0,
                          static_cast<std::int64_t>(row.matched ? 1 : 0)});
        if (!row.matched) unmatched.push_back({{"kd", row.kd}, {"band", row.band}});
    }

    table.metadata = base_metadata("compare", c);
    table.metadata["config"]["qd"] = qd_json(spec.qd);
    table.metadata["config"]["delta"] = spec.delta;
    table.metadata["config"]["gamma0"] = spec.gamma0;
    table.metadata["config"]["k_points"] = k_points;
    table.metadata["config"]["eta"] = eta;
    table.metadata["summary"] = {{"max_abs_diff", report.max_abs_diff},
                                 {"mean_abs_diff", report.mean_abs_diff},
                                 {"matched", report.matched_count},
                                 {"unmatched", report.unmatched_count}};
    table.metadata["no_exact_root"] = unmatched;

    emit(table, c, chiralwg::io::PlotKind::compare1d);
    return 0;
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"chiralwg: polariton bands, spectra and decay-rate scaling of qubit arrays "
                 "coupled to chiral waveguides"};
    app.require_subcommand(1);
    app.set_version_flag("--version", library_version);

    // shared option state, merged with --config after parsing
    struct {
        CommonOpts common;
        std::string qd = "pi";
        double delta = 0.0, delta_x = 0.0, delta_y = 0.0, gamma0 = 1.0, eta = 1e-6;
        double extent = 0.5;
        int n = 10, k_points = 201, grid = 101;
        int n_min = 10, n_max = 100, n_step = 10;
        std::string model = "1d", variant = "linear";
    } o;

    auto add_phase = [&](CLI::App* cmd) {
        cmd->add_option("--qd", o.qd, "phase qd: decimal or pi/2, pi, 2pi");
    };

    CLI::App* bands1d = app.add_subcommand("bands1d", "Markovian 1D dispersion bands");
    add_common(bands1d, o.common);
    add_phase(bands1d);
    bands1d->add_option("--delta", o.delta, "detuning (Gamma0)");
    bands1d->add_option("--gamma0", o.gamma0, "single-emitter rate");
    bands1d->add_option("--k-points", o.k_points, "grid size over (-pi, pi]");
    bands1d->add_option("--eta", o.eta, "pole guard window in kd");

    CLI::App* bands1d_exact = app.add_subcommand("bands1d-exact",
                                                 "exact transfer-matrix 1D dispersion");
    add_common(bands1d_exact, o.common);
    add_phase(bands1d_exact);
    bands1d_exact->add_option("--delta", o.delta, "detuning (Gamma0)");
    bands1d_exact->add_option("--gamma0", o.gamma0, "single-emitter rate");
    bands1d_exact->add_option("--k-points", o.k_points, "grid size over (-pi, pi]");

    CLI::App* spectrum1d = app.add_subcommand("spectrum1d", "finite-chain complex spectrum");
    add_common(spectrum1d, o.common);
    add_phase(spectrum1d);
    spectrum1d->add_option("--n", o.n, "number of sites");
    spectrum1d->add_option("--delta", o.delta, "detuning (Gamma0)");
    spectrum1d->add_option("--gamma0", o.gamma0, "single-emitter rate");

    CLI::App* bands2d = app.add_subcommand("bands2d", "2D Bloch band surfaces");
    add_common(bands2d, o.common);
    add_phase(bands2d);
    bands2d->add_option("--variant", o.variant, "linear or full")
        ->check(CLI::IsMember({"linear", "full"}));
    bands2d->add_option("--delta-x", o.delta_x, "x-network detuning (Gamma0)");
    bands2d->add_option("--delta-y", o.delta_y, "y-network detuning (Gamma0)");
    bands2d->add_option("--gamma0", o.gamma0, "single-emitter rate");
    bands2d->add_option("--grid", o.grid, "points per axis");
    bands2d->add_option("--extent", o.extent, "half-width of the kd window");
    bands2d->add_option("--eta", o.eta, "pole guard window (full variant)");

    CLI::App* spectrum2d = app.add_subcommand("spectrum2d", "finite-lattice complex spectrum");
    add_common(spectrum2d, o.common);
    add_phase(spectrum2d);
    spectrum2d->add_option("--n", o.n, "lattice side N (N x N sites)");
    spectrum2d->add_option("--delta-x", o.delta_x, "x-network detuning (Gamma0)");
    spectrum2d->add_option("--delta-y", o.delta_y, "y-network detuning (Gamma0)");
    spectrum2d->add_option("--gamma0", o.gamma0, "single-emitter rate");

    CLI::App* scaling = app.add_subcommand("scaling", "darkest decay rate vs array size");
    add_common(scaling, o.common);
    add_phase(scaling);
    scaling->add_option("--model", o.model, "1d or 2d")->check(CLI::IsMember({"1d", "2d"}));
    scaling->add_option("--delta", o.delta, "1d detuning (Gamma0)");
    scaling->add_option("--delta-x", o.delta_x, "2d x-network detuning");
    scaling->add_option("--delta-y", o.delta_y, "2d y-network detuning");
    scaling->add_option("--gamma0", o.gamma0, "single-emitter rate");
    scaling->add_option("--n-min", o.n_min, "smallest size");
    scaling->add_option("--n-max", o.n_max, "largest size");
    scaling->add_option("--n-step", o.n_step, "size increment");

    CLI::App* distribution = app.add_subcommand("distribution",
                                                "photonic distribution of the darkest state");
    add_common(distribution, o.common);
    add_phase(distribution);
    distribution->add_option("--model", o.model, "1d or 2d")->check(CLI::IsMember({"1d", "2d"}));
    distribution->add_option("--n", o.n, "sites (1d) or lattice side (2d)");
    distribution->add_option("--delta", o.delta, "1d detuning (Gamma0)");
    distribution->add_option("--delta-x", o.delta_x, "2d x-network detuning");
    distribution->add_option("--delta-y", o.delta_y, "2d y-network detuning");
    distribution->add_option("--gamma0", o.gamma0, "single-emitter rate");

    CLI::App* compare = app.add_subcommand("compare", "Markovian vs exact dispersion deviations");
    add_common(compare, o.common);
    add_phase(compare);
    compare->add_option("--delta", o.delta, "detuning (Gamma0)");
    compare->add_option("--gamma0", o.gamma0, "single-emitter rate");
    compare->add_option("--k-points", o.k_points, "grid size over (-pi, pi]");
    compare->add_option("--eta", o.eta, "pole guard window in kd");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        const json cfg = load_config(o.common.config);
        merge(cmd, cfg, "qd", o.qd);
        merge(cmd, cfg, "gamma0", o.gamma0);
        if (cmd->get_option_no_throw("--delta")) merge(cmd, cfg, "delta", o.delta);
        if (cmd->get_option_no_throw("--delta-x")) merge(cmd, cfg, "delta-x", o.delta_x);
        if (cmd->get_option_no_throw("--delta-y")) merge(cmd, cfg, "delta-y", o.delta_y);
        if (cmd->get_option_no_throw("--eta")) merge(cmd, cfg, "eta", o.eta);
        if (cmd->get_option_no_throw("--k-points")) merge(cmd, cfg, "k-points", o.k_points);
        if (cmd->get_option_no_throw("--grid")) merge(cmd, cfg, "grid", o.grid);
        if (cmd->get_option_no_throw("--extent")) merge(cmd, cfg, "extent", o.extent);
        if (cmd->get_option_no_throw("--n")) merge(cmd, cfg, "n", o.n);
        if (cmd->get_option_no_throw("--n-min")) merge(cmd, cfg, "n-min", o.n_min);
        if (cmd->get_option_no_throw("--n-max")) merge(cmd, cfg, "n-max", o.n_max);
        if (cmd->get_option_no_throw("--n-step")) merge(cmd, cfg, "n-step", o.n_step);
        if (cmd->get_option_no_throw("--model")) merge(cmd, cfg, "model", o.model);
        if (cmd->get_option_no_throw("--variant")) merge(cmd, cfg, "variant", o.variant);

        const PhaseQd qd = PhaseQd::parse(o.qd);
        const ChainSpec chain{o.n, qd, o.delta, o.gamma0};
        const LatticeSpec lattice{o.n, qd, o.delta_x, o.delta_y, o.gamma0};

        if (cmd == bands1d) {
            return run_bands1d(o.common, ChainSpec{1, qd, o.delta, o.gamma0}, o.k_points, o.eta);
        }
        if (cmd == bands1d_exact) {
            return run_bands1d_exact(o.common, ChainSpec{1, qd, o.delta, o.gamma0}, o.k_points);
        }
        if (cmd == spectrum1d) return run_spectrum1d(o.common, chain);
        if (cmd == bands2d) {
            return run_bands2d(o.common, LatticeSpec{1, qd, o.delta_x, o.delta_y, o.gamma0},
                               o.variant, o.grid, o.extent, o.eta);
        }
        if (cmd == spectrum2d) return run_spectrum2d(o.common, lattice);
        if (cmd == scaling) {
            SweepSpec sweep;
            sweep.model = o.model == "1d" ? SweepModel::chain_1d : SweepModel::lattice_2d;
            sweep.qd = qd;
            sweep.delta = o.delta;
            sweep.delta_x = o.delta_x;
            sweep.delta_y = o.delta_y;
            sweep.gamma0 = o.gamma0;
            return run_scaling(o.common, sweep, o.n_min, o.n_max, o.n_step);
        }
        if (cmd == distribution) return run_distribution(o.common, o.model, chain, lattice);
        if (cmd == compare) {
            return run_compare(o.common, ChainSpec{1, qd, o.delta, o.gamma0}, o.k_points, o.eta);
        }
        std::cerr << "chiralwg: unknown subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "chiralwg: error: " << e.what() << '\n';
        return 1;
    }
}

int main(int argc, char** argv) { return run(argc, argv); }
