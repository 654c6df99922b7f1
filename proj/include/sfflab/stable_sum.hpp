#pragma once

#include <complex>
#include <vector>

#include "sfflab/types.hpp"

namespace sfflab {

// Compensated (Kahan) accumulator; works for double and complex<double>.
template <typename T>
class KahanSum {
  public:
    void add(T term) {
        T y = term - comp_;
        T t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    T get() const { return sum_; }

  private:
    T sum_{};
    T comp_{};
};

// Complex value kept as mantissa * exp(log_scale) so thermal sums with large
// exponents neither overflow nor underflow. |mantissa| is kept in [1, e),
// or mantissa == 0 for the zero value.
struct StabilizedSum {
    double log_scale = 0.0;
    Complex mantissa{0.0, 0.0};

    static StabilizedSum make(Complex raw_mantissa, double raw_log_scale);

    bool is_zero() const { return mantissa == Complex(0.0, 0.0); }
    // log|value|; -inf for the zero value.
    double abs_log() const;
    // mantissa * exp(log_scale); may overflow for extreme log_scale.
    Complex value() const;
};

// Z_w = sum_n exp(-w E_n) for complex w, computed after shifting by the
// ground energy (or the top energy when Re(w) < 0) so every term has
// magnitude <= 1.
StabilizedSum partition_function(const Spectrum& spectrum, Complex beta_complex);

// Thermal statistics of a spectrum at complex inverse temperature w:
// the partition sum, <H>_w and the (complex) variance <H^2>_w - <H>_w^2.
struct ComplexThermalStats {
    StabilizedSum z;
    Complex mean{};
    Complex var{};
    bool singular = false;  // partition sum vanished; mean/var meaningless
};

ComplexThermalStats complex_thermal_stats(const Spectrum& spectrum, Complex w);

}  // namespace sfflab
