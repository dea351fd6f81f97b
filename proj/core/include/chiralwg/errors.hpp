// errors.hpp — Exception types raised by the chiralwg builders and solvers

#pragma once

#include <stdexcept>
#include <string>

namespace chiralwg {

// Requested quasi-momentum lies within the guard window of a pole of the
// Markovian Bloch Hamiltonian (cotangent or secant-type divergence).
class SingularK : public std::runtime_error {
public:
    SingularK(double kd, double nearest_pole, const std::string& what_entry)
        : std::runtime_error("singular quasi-momentum kd=" + std::to_string(kd) +
                             " (pole of " + what_entry + " at kd=" +
                             std::to_string(nearest_pole) + ")"),
          kd_(kd), nearest_pole_(nearest_pole) {}

    double kd() const noexcept { return kd_; }
    double nearest_pole() const noexcept { return nearest_pole_; }

private:
    double kd_;
    double nearest_pole_;
};

// Scatterer evaluated at a bare resonance x^2 == delta^2 where the level
// matrix diverges.
class ResonancePole : public std::runtime_error {
public:
    explicit ResonancePole(double x)
        : std::runtime_error("scatterer resonance pole at x=" + std::to_string(x) +
                             " (x^2 == delta^2)"),
          x_(x) {}

    double x() const noexcept { return x_; }

private:
    double x_;
};

// Transmission coefficient vanishes (or its denominator does); the transfer
// matrix 1/t normalization is undefined there.
class DegenerateScatterer : public std::runtime_error {
public:
    explicit DegenerateScatterer(const std::string& msg) : std::runtime_error(msg) {}
};

// Spectrum request on a matrix flagged as numerically defective (Jordan-type
// structure); callers are pointed to the analytic zero-detuning identities.
class DefectiveMatrix : public std::runtime_error {
public:
    explicit DefectiveMatrix(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace chiralwg
