#pragma once

#include <cmath>
#include <stdexcept>

namespace fnls {

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <class F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw QuadratureError("adaptive_simpson: recursion depth exhausted");
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction; tol is absolute.
template <class F>
double adaptive_simpson(F f, double a, double b, double tol, int max_depth = 48) {
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// int_0^infty z^p e^{-z} dz for p > 0, truncated where the tail is below the
// requested tolerance. Agrees with Gamma(p+1).
inline double gamma_tail_integral(double p, double tol = 1e-13) {
    if (!(p > 0.0)) throw std::domain_error("gamma_tail_integral: requires p > 0");
    // tail int_Z^inf z^p e^{-z} <= 2 Z^p e^{-Z} once Z >= 2p; Z = 60 covers p <= 8.
    const double Z = 60.0;
    auto f = [p](double z) { return std::pow(z, p) * std::exp(-z); };
    return adaptive_simpson(f, 0.0, Z, tol);
}

}  // namespace fnls
