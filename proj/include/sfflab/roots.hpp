#pragma once

#include <functional>

namespace sfflab {

// Root of f on [a, b] with f(a)*f(b) < 0. Brent's method with bisection
// fallback; stops when |f| <= tol or the bracket width is below
// tol * max(1, |x|). Throws BracketError when the bracket has no sign change.
double find_root_bracketed(const std::function<double(double)>& f, double a, double b,
                           double tol);

}  // namespace sfflab
