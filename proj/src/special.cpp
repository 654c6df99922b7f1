#include "sfflab/special.hpp"

#include <stdexcept>

namespace sfflab {

Complex laguerre(int n, int alpha, Complex z) {
    if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
    Complex p0(1.0, 0.0);
    if (n == 0) return p0;
    Complex p1 = Complex(alpha + 1.0, 0.0) - z;
    for (int k = 1; k < n; ++k) {
        Complex p2 = ((Complex(2.0 * k + alpha + 1.0, 0.0) - z) * p1 -
                      Complex(k + alpha + 0.0, 0.0) * p0) /
                     Complex(k + 1.0, 0.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<std::vector<Complex>> laguerre_table(int n_max, int alpha_max, Complex z) {
    std::vector<std::vector<Complex>> table(alpha_max + 1);
    for (int a = 0; a <= alpha_max; ++a) {
        auto& row = table[a];
        row.resize(n_max + 1);
        row[0] = Complex(1.0, 0.0);
        if (n_max >= 1) row[1] = Complex(a + 1.0, 0.0) - z;
        for (int k = 1; k < n_max; ++k) {
            row[k + 1] = ((Complex(2.0 * k + a + 1.0, 0.0) - z) * row[k] -
                          Complex(k + a + 0.0, 0.0) * row[k - 1]) /
                         Complex(k + 1.0, 0.0);
        }
    }
    return table;
}

}  // namespace sfflab
