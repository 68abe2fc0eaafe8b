#pragma once

#include <functional>

namespace trimnw {

// adaptive Simpson integration with absolute tolerance
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

}  // namespace trimnw
