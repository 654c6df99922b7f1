#pragma once

#include <vector>

#include "sfflab/types.hpp"

namespace sfflab {

// Generalized Laguerre polynomial L_n^alpha(z) at complex argument, by the
// ascending three-term recurrence in n.
Complex laguerre(int n, int alpha, Complex z);

// Table L_nu^alpha(z) for alpha = 0..alpha_max, nu = 0..n_max.
// table[alpha][nu]; one recurrence pass per alpha.
std::vector<std::vector<Complex>> laguerre_table(int n_max, int alpha_max, Complex z);

}  // namespace sfflab
