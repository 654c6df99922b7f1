#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfflab {

using Complex = std::complex<double>;

// Thrown when a computation breaks down numerically (eigensolver failure,
// residual check failure) as opposed to bad input.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Root bracket does not contain a sign change.
struct BracketError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation at a point where the thermal expectation of the evolution
// operator vanishes (the spectral sum in the denominator is zero).
struct SingularPointError : std::domain_error {
    using std::domain_error::domain_error;
};

// A scan did not locate the feature it was bracketing; carries the scan
// summary so the caller can diagnose the window.
struct SearchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered list of real eigenenergies. Always sorted ascending, finite,
// nonempty; degeneracies are allowed.
struct Spectrum {
    std::vector<double> energies;
    std::string label;

    int size() const { return static_cast<int>(energies.size()); }
    double ground() const { return energies.front(); }
    double top() const { return energies.back(); }
};

// Inverse temperature, action scale, and the extensivity parameter d used
// by the renormalized analyticity bound.
struct ThermalParams {
    double beta = 1.0;
    double hbar = 1.0;
    int d = 1;

    void validate() const {
        if (!(beta > 0.0)) throw std::invalid_argument("ThermalParams: beta must be > 0");
        if (!(hbar > 0.0)) throw std::invalid_argument("ThermalParams: hbar must be > 0");
        if (d < 1) throw std::invalid_argument("ThermalParams: d must be >= 1");
    }
};

enum class GridSpacing { Linear, Log };

// Strictly increasing evaluation grid.
struct TimeGrid {
    std::vector<double> times;

    static TimeGrid linspace(double start, double stop, int count);
    static TimeGrid logspace(double start, double stop, int count);
    static TimeGrid make(double start, double stop, int count, GridSpacing spacing);

    int size() const { return static_cast<int>(times.size()); }
};

// Universal output record: SFF values over a grid, with optional exact
// log-derivative values alongside.
struct SFFSeries {
    std::vector<double> times;
    std::vector<double> values;
    std::vector<double> log_deriv;  // empty when not requested
    std::string label;

    int size() const { return static_cast<int>(times.size()); }
    bool has_log_deriv() const { return !log_deriv.empty(); }
};

}  // namespace sfflab
