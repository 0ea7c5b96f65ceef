#pragma once

#include <cstdint>
#include <functional>

namespace uavgame {

struct QuadratureOptions {
    double abs_tolerance = 1e-10;
    std::int64_t max_subdivisions = 1 << 18;
};

/// Adaptive Simpson integration of f over [a, b].
/// Throws QuadratureNonConvergence if the subdivision budget is exhausted
/// before the local error estimates fall under the tolerance.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

}  // namespace uavgame
