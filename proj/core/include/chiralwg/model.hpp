// model.hpp — Shared domain vocabulary: parameter records, unit conventions,
// index layouts and polarization bases.
//
// Units: gamma0 (the single-emitter radiative rate) is the energy unit; all
// emitted energies are shifts relative to the bare transition frequency, so
// a state's decay rate is -Im(energy).

#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>

namespace chiralwg {

using complexd = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

// Heaviside step with the half-maximum convention Theta(0) = 1/2.
inline double heaviside_half(long n) noexcept {
    if (n > 0) return 1.0;
    if (n == 0) return 0.5;
    return 0.0;
}

// ----------------------------- PhaseQd --------------------------------------

// Inter-site propagation phase qd, reduced into (0, 2pi]. The special values
// pi/2, pi and 2pi carry an exactness tag so downstream code and output
// metadata can tell a symbolic "pi" from a decimal that merely lands nearby.
class PhaseQd {
public:
    enum class Tag { generic, half_pi, pi_exact, two_pi };

    PhaseQd() : value_(pi), tag_(Tag::pi_exact) {}

    static PhaseQd from_value(double qd);
    static PhaseQd exact(Tag tag);

    // Accepts a decimal or one of "pi/2", "pi", "2pi".
    // Throws std::invalid_argument naming the offending token otherwise.
    static PhaseQd parse(std::string_view text);

    double value() const noexcept { return value_; }
    Tag tag() const noexcept { return tag_; }
    bool is_exact() const noexcept { return tag_ != Tag::generic; }

    // "pi/2", "pi", "2pi", or a full-precision decimal
    std::string str() const;

private:
    PhaseQd(double v, Tag t) : value_(v), tag_(t) {}
    double value_;
    Tag tag_;
};

// ----------------------------- Specs ----------------------------------------

// 1D chain: N emitters spaced by d over one chiral waveguide; delta is the
// half-splitting of the two linear dipole transitions, in units of gamma0.
struct ChainSpec {
    int n_sites = 1;
    PhaseQd qd{};
    double delta = 0.0;
    double gamma0 = 1.0;

    void validate() const; // throws std::invalid_argument
};

// 2D N x N square lattice over crossed chiral waveguide networks.
struct LatticeSpec {
    int n_sites = 1; // lattice side; N^2 emitters
    PhaseQd qd{};
    double delta_x = 0.0;
    double delta_y = 0.0;
    double gamma0 = 1.0;

    void validate() const;
};

// ----------------------------- Polarizations --------------------------------

// 1D circular basis locked to propagation direction.
enum class Polarization1D { R = 0, L = 1 };

// 2D on-site basis (R_yz, L_yz, x), matching the spinor ordering used by the
// Bloch matrices.
enum class Polarization2D { R_yz = 0, L_yz = 1, X = 2 };

inline const char* polarization_name(Polarization1D p) {
    return p == Polarization1D::R ? "R" : "L";
}
inline const char* polarization_name(Polarization2D p) {
    switch (p) {
        case Polarization2D::R_yz: return "R_yz";
        case Polarization2D::L_yz: return "L_yz";
        default: return "x";
    }
}

// ----------------------------- IndexLayout ----------------------------------

// Site-major, polarization-minor mapping (site, pol) <-> matrix row. With this
// stride the 1D R/L blocks are recoverable as stride-2 views.
class IndexLayout {
public:
    static IndexLayout chain(int n_sites);   // dim = 2 N
    static IndexLayout lattice(int n_sites); // dim = 3 N^2, site = iy*N + ix

    int dimensionality() const noexcept { return dimensionality_; }
    int n_sites() const noexcept { return n_sites_; }       // sites along one axis
    int total_sites() const noexcept { return total_sites_; }
    int orbitals_per_site() const noexcept { return orbitals_; }
    int dim() const noexcept { return total_sites_ * orbitals_; }

    int row_of(int site, int pol) const;
    std::pair<int, int> site_pol_of(int row) const; // (site, pol)

    // 2D helpers; ix runs along x (columns), iy along y (rows)
    int site_index(int ix, int iy) const;
    std::pair<int, int> site_coords(int site) const; // (ix, iy)

private:
    IndexLayout(int dimensionality, int n_sites, int orbitals);
    int dimensionality_;
    int n_sites_;
    int total_sites_;
    int orbitals_;
};

// ----------------------------- EnergyShift ----------------------------------

// Complex eigenenergy relative to the bare transition frequency, in units of
// gamma0. The decay rate Gamma = -Im is what every report carries.
struct EnergyShift {
    complexd value{0.0, 0.0};

    double decay_rate() const noexcept { return -value.imag(); }
    double shift() const noexcept { return value.real(); }
};

} // namespace chiralwg
