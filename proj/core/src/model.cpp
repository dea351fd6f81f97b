// model.cpp — PhaseQd parsing/reduction, spec validation, index layouts

#include "chiralwg/model.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace chiralwg {

namespace {

constexpr double two_pi = 2.0 * pi;

double reduce_phase(double qd) {
    if (!std::isfinite(qd)) {
        throw std::invalid_argument("PhaseQd: value must be finite");
    }
    double r = std::fmod(qd, two_pi);
    if (r <= 0.0) r += two_pi; // (0, 2pi]; 0 maps to 2pi
    return r;
}

std::string trimmed(std::string_view text) {
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) return {};
    return std::string(text.substr(b, e - b + 1));
}

} // namespace

PhaseQd PhaseQd::from_value(double qd) {
    return PhaseQd(reduce_phase(qd), Tag::generic);
}

PhaseQd PhaseQd::exact(Tag tag) {
    switch (tag) {
        case Tag::half_pi:  return PhaseQd(pi / 2.0, Tag::half_pi);
        case Tag::pi_exact: return PhaseQd(pi, Tag::pi_exact);
        case Tag::two_pi:   return PhaseQd(2.0 * pi, Tag::two_pi);
        default:
            throw std::invalid_argument("PhaseQd::exact: generic tag has no exact value");
    }
}

PhaseQd PhaseQd::parse(std::string_view text) {
    const std::string s = trimmed(text);
    if (s == "pi/2") return exact(Tag::half_pi);
    if (s == "pi") return exact(Tag::pi_exact);
    if (s == "2pi") return exact(Tag::two_pi);

    try {
        size_t consumed = 0;
        double v = std::stod(s, &consumed);
        if (consumed != s.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return from_value(v);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_phase: cannot parse token '" + s +
                                    "' (expected a decimal or one of pi/2, pi, 2pi)");
    }
}

std::string PhaseQd::str() const {
    switch (tag_) {
        case Tag::half_pi:  return "pi/2";
        case Tag::pi_exact: return "pi";
        case Tag::two_pi:   return "2pi";
        default: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", value_);
            return buf;
        }
    }
}

void ChainSpec::validate() const {
    if (n_sites < 1) throw std::invalid_argument("ChainSpec: n_sites must be >= 1");
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw std::invalid_argument("ChainSpec: gamma0 must be positive and finite");
    if (!std::isfinite(delta)) throw std::invalid_argument("ChainSpec: delta must be finite");
}

void LatticeSpec::validate() const {
    if (n_sites < 1) throw std::invalid_argument("LatticeSpec: n_sites must be >= 1");
    if (!(gamma0 > 0.0) || !std::isfinite(gamma0))
        throw std::invalid_argument("LatticeSpec: gamma0 must be positive and finite");
    if (!std::isfinite(delta_x) || !std::isfinite(delta_y))
        throw std::invalid_argument("LatticeSpec: detunings must be finite");
}

IndexLayout::IndexLayout(int dimensionality, int n_sites, int orbitals)
    : dimensionality_(dimensionality),
      n_sites_(n_sites),
      total_sites_(dimensionality == 1 ? n_sites : n_sites * n_sites),
      orbitals_(orbitals) {}

IndexLayout IndexLayout::chain(int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("IndexLayout: n_sites must be >= 1");
    return IndexLayout(1, n_sites, 2);
}

IndexLayout IndexLayout::lattice(int n_sites) {
    if (n_sites < 1) throw std::invalid_argument("IndexLayout: n_sites must be >= 1");
    return IndexLayout(2, n_sites, 3);
}

int IndexLayout::row_of(int site, int pol) const {
    if (site < 0 || site >= total_sites_)
        throw std::out_of_range("IndexLayout::row_of: site out of range");
    if (pol < 0 || pol >= orbitals_)
        throw std::out_of_range("IndexLayout::row_of: polarization out of range");
    return site * orbitals_ + pol;
}

std::pair<int, int> IndexLayout::site_pol_of(int row) const {
    if (row < 0 || row >= dim())
        throw std::out_of_range("IndexLayout::site_pol_of: row out of range");
    return {row / orbitals_, row % orbitals_};
}

int IndexLayout::site_index(int ix, int iy) const {
    if (dimensionality_ != 2)
        throw std::logic_error("IndexLayout::site_index: layout is not two-dimensional");
    if (ix < 0 || ix >= n_sites_ || iy < 0 || iy >= n_sites_)
        throw std::out_of_range("IndexLayout::site_index: coordinates out of range");
    return iy * n_sites_ + ix;
}

std::pair<int, int> IndexLayout::site_coords(int site) const {
    if (dimensionality_ != 2)
        throw std::logic_error("IndexLayout::site_coords: layout is not two-dimensional");
    if (site < 0 || site >= total_sites_)
        throw std::out_of_range("IndexLayout::site_coords: site out of range");
    return {site % n_sites_, site / n_sites_};
}

} // namespace chiralwg
