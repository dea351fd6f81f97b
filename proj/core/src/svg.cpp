// svg.cpp — minimal deterministic SVG plotting for the CLI outputs

#include "chiralwg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace chiralwg::io {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kMarginL = 72.0;
constexpr double kMarginR = 24.0;
constexpr double kMarginT = 36.0;
constexpr double kMarginB = 56.0;

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

int column_index(const ResultTable& table, const std::string& name) {
    for (size_t c = 0; c < table.columns.size(); ++c) {
        if (table.columns[c].name == name) return static_cast<int>(c);
    }
    return -1;
}

void require_columns(const ResultTable& table, const std::vector<std::string>& names,
                     const char* kind) {
    std::string missing;
    for (const auto& n : names) {
        if (column_index(table, n) < 0) missing += (missing.empty() ? "" : ", ") + n;
    }
    if (!missing.empty()) {
        std::string expected;
        for (const auto& n : names) expected += (expected.empty() ? "" : ", ") + n;
        throw std::invalid_argument(std::string("render_plot(") + kind +
                                    "): table is missing columns [" + missing +
                                    "] (expected schema: " + expected + ")");
    }
}

double as_double(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
    throw std::invalid_argument("render_plot: expected a numeric cell");
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points; // already in data space
    bool markers_only = false;
};

struct Frame {
    double x_min, x_max, y_min, y_max;
    bool log_x = false, log_y = false;

    double sx(double x) const {
        const double t = log_x ? std::log10(x) : x;
        const double lo = log_x ? std::log10(x_min) : x_min;
        const double hi = log_x ? std::log10(x_max) : x_max;
        return kMarginL + (t - lo) / (hi - lo) * (kWidth - kMarginL - kMarginR);
    }
    double sy(double y) const {
        const double t = log_y ? std::log10(y) : y;
        const double lo = log_y ? std::log10(y_min) : y_min;
        const double hi = log_y ? std::log10(y_max) : y_max;
        return kHeight - kMarginB - (t - lo) / (hi - lo) * (kHeight - kMarginT - kMarginB);
    }
};

class SvgDoc {
public:
    explicit SvgDoc(double w = kWidth, double h = kHeight) {
        out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w)
             << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h)
             << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, const std::string& stroke,
              double width = 1.0) {
        out_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
             << "\" y2=\"" << fmt(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
             << fmt(width) << "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& stroke) {
        if (pts.size() < 2) return;
        out_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& [x, y] : pts) out_ << fmt(x) << ',' << fmt(y) << ' ';
        out_ << "\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& fill) {
        out_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r)
             << "\" fill=\"" << fill << "\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill) {
        out_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w)
             << "\" height=\"" << fmt(h) << "\" fill=\"" << fill << "\"/>\n";
    }

    void text(double x, double y, const std::string& s, double size = 12.0,
              const std::string& anchor = "start") {
        out_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" font-family=\"sans-serif\""
             << " font-size=\"" << fmt(size) << "\" text-anchor=\"" << anchor << "\">" << s
             << "</text>\n";
    }

    void save(const std::filesystem::path& path) {
        out_ << "</svg>\n";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("render_plot: cannot open '" + path.string() + "'");
        f << out_.str();
        if (!f) throw std::runtime_error("render_plot: I/O failure writing '" + path.string() + "'");
    }

private:
    std::ostringstream out_;
};

std::vector<double> nice_ticks(double lo, double hi, int target = 6) {
    if (!(hi > lo)) return {lo};
    const double raw = (hi - lo) / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> ticks;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + 0.5 * step; t += step) ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
    return ticks;
}

void draw_axes(SvgDoc& doc, const Frame& f, const std::string& x_label,
               const std::string& y_label) {
    doc.line(kMarginL, kHeight - kMarginB, kWidth - kMarginR, kHeight - kMarginB, "#000000");
    doc.line(kMarginL, kMarginT, kMarginL, kHeight - kMarginB, "#000000");
    if (f.log_x) {
        for (int e = static_cast<int>(std::floor(std::log10(f.x_min)));
             e <= static_cast<int>(std::ceil(std::log10(f.x_max))); ++e) {
            const double v = std::pow(10.0, e);
            if (v < f.x_min || v > f.x_max) continue;
            const double x = f.sx(v);
            doc.line(x, kHeight - kMarginB, x, kHeight - kMarginB + 4, "#000000");
            doc.text(x, kHeight - kMarginB + 18, "1e" + std::to_string(e), 11, "middle");
        }
    } else {
        for (double t : nice_ticks(f.x_min, f.x_max)) {
            const double x = f.sx(t);
            doc.line(x, kHeight - kMarginB, x, kHeight - kMarginB + 4, "#000000");
            doc.text(x, kHeight - kMarginB + 18, fmt(t), 11, "middle");
        }
    }
    if (f.log_y) {
        for (int e = static_cast<int>(std::floor(std::log10(f.y_min)));
             e <= static_cast<int>(std::ceil(std::log10(f.y_max))); ++e) {
            const double v = std::pow(10.0, e);
            if (v < f.y_min || v > f.y_max) continue;
            const double y = f.sy(v);
            doc.line(kMarginL - 4, y, kMarginL, y, "#000000");
            doc.text(kMarginL - 8, y + 4, "1e" + std::to_string(e), 11, "end");
        }
    } else {
        for (double t : nice_ticks(f.y_min, f.y_max)) {
            const double y = f.sy(t);
            doc.line(kMarginL - 4, y, kMarginL, y, "#000000");
            doc.text(kMarginL - 8, y + 4, fmt(t), 11, "end");
        }
    }
    doc.text(0.5 * (kMarginL + kWidth - kMarginR), kHeight - 16, x_label, 13, "middle");
    doc.text(16, kMarginT - 12, y_label, 13, "start");
}

void draw_series(const std::vector<Series>& series, const std::string& x_label,
                 const std::string& y_label, bool log_log,
                 const std::filesystem::path& path,
                 std::optional<double> break_gap = std::nullopt,
                 const std::string& annotation = "") {
    Frame f;
    f.log_x = f.log_y = log_log;
    f.x_min = f.y_min = std::numeric_limits<double>::infinity();
    f.x_max = f.y_max = -std::numeric_limits<double>::infinity();
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            f.x_min = std::min(f.x_min, x);
            f.x_max = std::max(f.x_max, x);
            f.y_min = std::min(f.y_min, y);
            f.y_max = std::max(f.y_max, y);
        }
    }
    if (!std::isfinite(f.x_min)) throw std::invalid_argument("render_plot: no data points");
    if (f.x_max == f.x_min) {
        f.x_max += 1.0;
        f.x_min -= 1.0;
    }
    if (f.y_max == f.y_min) {
        f.y_max += 1.0;
        f.y_min -= log_log ? 0.0 : 1.0;
    }
    if (!log_log) {
        const double pad = 0.05 * (f.y_max - f.y_min);
        f.y_min -= pad;
        f.y_max += pad;
    }

    SvgDoc doc;
    draw_axes(doc, f, x_label, y_label);
    for (size_t i = 0; i < series.size(); ++i) {
        const std::string color = kPalette[i % 6];
        const auto& pts = series[i].points;
        if (series[i].markers_only) {
            for (const auto& [x, y] : pts) doc.circle(f.sx(x), f.sy(y), 2.0, color);
        } else {
            std::vector<std::pair<double, double>> run;
            for (size_t j = 0; j < pts.size(); ++j) {
                if (j > 0 && break_gap && pts[j].first - pts[j - 1].first > *break_gap) {
                    doc.polyline(run, color);
                    run.clear();
                }
                run.emplace_back(f.sx(pts[j].first), f.sy(pts[j].second));
            }
            doc.polyline(run, color);
        }
        doc.text(kWidth - kMarginR - 150, kMarginT + 16.0 * (static_cast<double>(i) + 1.0),
                 series[i].label, 12);
        doc.rect(kWidth - kMarginR - 168, kMarginT + 16.0 * (static_cast<double>(i) + 1.0) - 9,
                 12, 6, color);
    }
    if (!annotation.empty()) doc.text(kMarginL + 12, kMarginT + 4, annotation, 12);
    doc.save(path);
}

std::string heat_color(double t) {
    // white -> blue ramp
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(std::lround(255.0 * (1.0 - 0.85 * t)));
    const int g = static_cast<int>(std::lround(255.0 * (1.0 - 0.55 * t)));
    const int b = 255;
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

void render_bands1d(const ResultTable& table, const std::filesystem::path& path, bool markers) {
    require_columns(table, {"kd", "band_index", "energy"}, markers ? "bands1d-exact" : "bands1d");
    const int ck = column_index(table, "kd");
    const int cb = column_index(table, "band_index");
    const int ce = column_index(table, "energy");

    std::map<std::int64_t, Series> by_band;
    double min_step = std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
        const auto band = std::get<std::int64_t>(row[static_cast<size_t>(cb)]);
        auto& s = by_band[band];
        s.label = (markers ? "root " : "band ") + std::to_string(band);
        s.markers_only = markers;
        s.points.emplace_back(as_double(row[static_cast<size_t>(ck)]),
                              as_double(row[static_cast<size_t>(ce)]));
    }
    std::vector<Series> series;
    for (auto& [band, s] : by_band) {
        std::sort(s.points.begin(), s.points.end());
        for (size_t j = 1; j < s.points.size(); ++j) {
            min_step = std::min(min_step, s.points[j].first - s.points[j - 1].first);
        }
        series.push_back(std::move(s));
    }
    draw_series(series, "kd", "energy (Gamma0)", false, path,
                std::isfinite(min_step) ? std::optional<double>(2.5 * min_step) : std::nullopt);
}

void render_compare(const ResultTable& table, const std::filesystem::path& path) {
    require_columns(table, {"kd", "band_index", "markov_energy", "exact_energy", "matched"},
                    "compare1d");
    const int ck = column_index(table, "kd");
    const int cm = column_index(table, "markov_energy");
    const int ce = column_index(table, "exact_energy");
    const int cf = column_index(table, "matched");

    Series markov{"markov", {}, true};
    Series exact{"exact", {}, true};
    for (const auto& row : table.rows) {
        const double kd = as_double(row[static_cast<size_t>(ck)]);
        markov.points.emplace_back(kd, as_double(row[static_cast<size_t>(cm)]));
        if (std::get<std::int64_t>(row[static_cast<size_t>(cf)]) != 0) {
            exact.points.emplace_back(kd, as_double(row[static_cast<size_t>(ce)]));
        }
    }
    draw_series({markov, exact}, "kd", "energy (Gamma0)", false, path);
}

void render_scaling(const ResultTable& table, const std::filesystem::path& path) {
    require_columns(table, {"n_sites", "gamma_min"}, "scaling");
    const int cn = column_index(table, "n_sites");
    const int cg = column_index(table, "gamma_min");
    Series data{"darkest state", {}, true};
    for (const auto& row : table.rows) {
        const double g = as_double(row[static_cast<size_t>(cg)]);
        if (g > 0.0) data.points.emplace_back(as_double(row[static_cast<size_t>(cn)]), g);
    }
    std::string note;
    std::vector<Series> series{data};
    if (table.metadata.contains("fit") && !data.points.empty()) {
        const auto& fit = table.metadata["fit"];
        const double slope = fit.value("exponent", 0.0);
        const double intercept = fit.value("intercept", 0.0);
        note = "slope " + fmt(slope) + ", r^2 " + fmt(fit.value("r_squared", 0.0));
        Series line{"fit", {}, false};
        for (const auto& [n, g] : data.points) {
            line.points.emplace_back(n, std::exp(intercept + slope * std::log(n)));
        }
        series.push_back(std::move(line));
    }
    draw_series(series, "N", "Gamma_min (Gamma0)", true, path, std::nullopt, note);
}

void render_distribution1d(const ResultTable& table, const std::filesystem::path& path) {
    require_columns(table, {"site", "polarization", "probability"}, "distribution1d");
    const int cs = column_index(table, "site");
    const int cp = column_index(table, "polarization");
    const int cq = column_index(table, "probability");
    std::map<std::string, Series> by_pol;
    for (const auto& row : table.rows) {
        const auto& pol = std::get<std::string>(row[static_cast<size_t>(cp)]);
        auto& s = by_pol[pol];
        s.label = pol;
        s.points.emplace_back(as_double(row[static_cast<size_t>(cs)]),
                              as_double(row[static_cast<size_t>(cq)]));
    }
    std::vector<Series> series;
    for (auto& [pol, s] : by_pol) {
        std::sort(s.points.begin(), s.points.end());
        series.push_back(std::move(s));
    }
    draw_series(series, "site", "|psi|^2", false, path);
}

void render_distribution2d(const ResultTable& table, const std::filesystem::path& path) {
    require_columns(table, {"ix", "iy", "polarization", "probability"}, "distribution2d");
    const int cx = column_index(table, "ix");
    const int cy = column_index(table, "iy");
    const int cp = column_index(table, "polarization");
    const int cq = column_index(table, "probability");

    std::map<std::string, std::map<std::pair<std::int64_t, std::int64_t>, double>> panels;
    std::int64_t n = 0;
    double pmax = 0.0;
    for (const auto& row : table.rows) {
        const auto ix = std::get<std::int64_t>(row[static_cast<size_t>(cx)]);
        const auto iy = std::get<std::int64_t>(row[static_cast<size_t>(cy)]);
        const auto& pol = std::get<std::string>(row[static_cast<size_t>(cp)]);
        const double p = as_double(row[static_cast<size_t>(cq)]);
        panels[pol][{ix, iy}] = p;
        n = std::max({n, ix + 1, iy + 1});
        pmax = std::max(pmax, p);
    }
    if (n == 0) throw std::invalid_argument("render_plot(distribution2d): no data points");

    const double panel = 180.0;
    const double gap = 30.0;
    const double width = 40.0 + panels.size() * (panel + gap);
    SvgDoc doc(width, panel + 90.0);
    double x0 = 30.0;
    for (const auto& [pol, cells] : panels) {
        const double cell = panel / static_cast<double>(n);
        for (const auto& [coord, p] : cells) {
            const auto& [ix, iy] = coord;
            doc.rect(x0 + static_cast<double>(ix) * cell,
                     30.0 + (static_cast<double>(n - 1 - iy)) * cell, cell + 0.5, cell + 0.5,
                     heat_color(pmax > 0 ? p / pmax : 0.0));
        }
        doc.text(x0 + 0.5 * panel, 20.0, pol, 13, "middle");
        x0 += panel + gap;
    }
    doc.text(30.0, panel + 70.0, "cell shade: |psi|^2 / " + fmt(pmax), 12);
    doc.save(path);
}

void render_bands2d_cuts(const ResultTable& table, const std::filesystem::path& path) {
    require_columns(table, {"kx_d", "ky_d", "band1", "band2", "band3"}, "bands2d_cuts");
    const int cx = column_index(table, "kx_d");
    const int cy = column_index(table, "ky_d");
    const int cb[3] = {column_index(table, "band1"), column_index(table, "band2"),
                       column_index(table, "band3")};

    // closest axis values to zero define the two cuts
    double best_kx = std::numeric_limits<double>::infinity();
    double best_ky = std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows) {
        best_kx = std::min(best_kx, std::abs(as_double(row[static_cast<size_t>(cx)])));
        best_ky = std::min(best_ky, std::abs(as_double(row[static_cast<size_t>(cy)])));
    }

    std::vector<Series> series;
    for (int b = 0; b < 3; ++b) {
        series.push_back({"band " + std::to_string(b + 1) + " (kx=0 cut)", {}, false});
    }
    for (int b = 0; b < 3; ++b) {
        series.push_back({"band " + std::to_string(b + 1) + " (ky=0 cut)", {}, false});
    }
    for (const auto& row : table.rows) {
        const double kx = as_double(row[static_cast<size_t>(cx)]);
        const double ky = as_double(row[static_cast<size_t>(cy)]);
        if (std::abs(kx) <= best_kx + 1e-12) {
            for (int b = 0; b < 3; ++b) {
                const double v = as_double(row[static_cast<size_t>(cb[b])]);
                if (std::isfinite(v)) series[static_cast<size_t>(b)].points.emplace_back(ky, v);
            }
        }
        if (std::abs(ky) <= best_ky + 1e-12) {
            for (int b = 0; b < 3; ++b) {
                const double v = as_double(row[static_cast<size_t>(cb[b])]);
                if (std::isfinite(v)) series[static_cast<size_t>(b + 3)].points.emplace_back(kx, v);
            }
        }
    }
    for (auto& s : series) std::sort(s.points.begin(), s.points.end());
    draw_series(series, "k d along the cut", "energy (Gamma0)", false, path);
}

} // namespace

PlotKind parse_plot_kind(const std::string& text) {
    if (text == "bands1d") return PlotKind::bands1d;
    if (text == "bands1d-exact") return PlotKind::bands1d_exact;
    if (text == "compare") return PlotKind::compare1d;
    if (text == "scaling") return PlotKind::scaling;
    if (text == "distribution1d") return PlotKind::distribution1d;
    if (text == "distribution2d") return PlotKind::distribution2d;
    if (text == "bands2d-cuts") return PlotKind::bands2d_cuts;
    throw std::invalid_argument("unknown plot kind '" + text + "'");
}

void render_plot(const ResultTable& table, PlotKind kind, const std::filesystem::path& path) {
    switch (kind) {
        case PlotKind::bands1d: render_bands1d(table, path, false); break;
        case PlotKind::bands1d_exact: render_bands1d(table, path, true); break;
        case PlotKind::compare1d: render_compare(table, path); break;
        case PlotKind::scaling: render_scaling(table, path); break;
        case PlotKind::distribution1d: render_distribution1d(table, path); break;
        case PlotKind::distribution2d: render_distribution2d(table, path); break;
        case PlotKind::bands2d_cuts: render_bands2d_cuts(table, path); break;
    }
}

} // namespace chiralwg::io
