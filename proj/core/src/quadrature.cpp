#include "uavgame/quadrature.hpp"

#include <cmath>

#include "uavgame/errors.hpp"

namespace uavgame {

namespace {

struct AdaptState {
    const std::function<double(double)>& f;
    std::int64_t budget;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive bisection with the Richardson error estimate
// |S_left + S_right - S| / 15.
double adapt(AdaptState& st, double a, double b, double fa, double fm, double fb,
             double whole, double tol) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double err = left + right - whole;
    if (std::abs(err) <= 15.0 * tol) {
        return left + right + err / 15.0;
    }
    if (--st.budget <= 0) {
        throw QuadratureNonConvergence("subdivision cap reached before tolerance");
    }
    return adapt(st, a, m, fa, flm, fm, left, 0.5 * tol) +
           adapt(st, m, b, fm, frm, fb, right, 0.5 * tol);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (a == b) return 0.0;
    AdaptState st{f, opts.max_subdivisions};
    const double fa = f(a);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = simpson(fa, fm, fb, b - a);
    return adapt(st, a, b, fa, fm, fb, whole, opts.abs_tolerance);
}

}  // namespace uavgame
