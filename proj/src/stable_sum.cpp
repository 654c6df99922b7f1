#include "sfflab/stable_sum.hpp"

#include <cmath>
#include <limits>

namespace sfflab {

StabilizedSum StabilizedSum::make(Complex raw_mantissa, double raw_log_scale) {
    StabilizedSum out;
    double mag = std::abs(raw_mantissa);
    if (mag == 0.0) {
        out.mantissa = Complex(0.0, 0.0);
        out.log_scale = 0.0;
        return out;
    }
    double shift = std::floor(std::log(mag));
    out.mantissa = raw_mantissa * std::exp(-shift);
    out.log_scale = raw_log_scale + shift;
    return out;
}

double StabilizedSum::abs_log() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return log_scale + std::log(std::abs(mantissa));
}

Complex StabilizedSum::value() const {
    if (is_zero()) return Complex(0.0, 0.0);
    return mantissa * std::exp(log_scale);
}

namespace {

// Reference energy making every Boltzmann factor magnitude <= 1.
double shift_energy(const Spectrum& s, Complex w) {
    return w.real() >= 0.0 ? s.ground() : s.top();
}

}  // namespace

StabilizedSum partition_function(const Spectrum& spectrum, Complex w) {
    const double e_ref = shift_energy(spectrum, w);
    KahanSum<Complex> acc;
    for (double e : spectrum.energies) {
        acc.add(std::exp(-w * (e - e_ref)));
    }
    // value = exp(-w e_ref) * acc; the phase of the shift goes in the mantissa.
    Complex phase = std::exp(Complex(0.0, -w.imag() * e_ref));
    return StabilizedSum::make(acc.get() * phase, -w.real() * e_ref);
}

ComplexThermalStats complex_thermal_stats(const Spectrum& spectrum, Complex w) {
    const double e_ref = shift_energy(spectrum, w);
    KahanSum<Complex> z, ze, ze2;
    for (double e : spectrum.energies) {
        const double de = e - e_ref;
        const Complex b = std::exp(-w * de);
        z.add(b);
        ze.add(de * b);
        ze2.add(de * de * b);
    }
    ComplexThermalStats out;
    Complex phase = std::exp(Complex(0.0, -w.imag() * e_ref));
    out.z = StabilizedSum::make(z.get() * phase, -w.real() * e_ref);
    const Complex zs = z.get();
    if (zs == Complex(0.0, 0.0)) {
        out.singular = true;
        return out;
    }
    const Complex m1 = ze.get() / zs;   // <H - e_ref>_w
    const Complex m2 = ze2.get() / zs;  // <(H - e_ref)^2>_w
    out.mean = m1 + e_ref;
    out.var = m2 - m1 * m1;  // shift-invariant
    return out;
}

}  // namespace sfflab
