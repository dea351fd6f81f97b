// svg.hpp — self-contained deterministic SVG rendering of result tables

#pragma once

#include <filesystem>
#include <string>

#include "chiralwg/table.hpp"

namespace chiralwg::io {

enum class PlotKind {
    bands1d,        // kd vs energy, one polyline per band, gaps at excluded k
    bands1d_exact,  // kd vs energy root markers
    compare1d,      // markov vs exact overlay
    scaling,        // log-log N vs gamma_min with fitted slope annotation
    distribution1d, // site vs probability per polarization
    distribution2d, // N x N heatmap per polarization
    bands2d_cuts,   // kx=0 and ky=0 dispersion cuts, three bands each
};

PlotKind parse_plot_kind(const std::string& text);

// Renders `table` into a standalone SVG. The table schema must match the plot
// kind; a mismatch throws std::invalid_argument naming the expected columns.
void render_plot(const ResultTable& table, PlotKind kind, const std::filesystem::path& path);

} // namespace chiralwg::io
