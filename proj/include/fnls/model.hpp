#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "fnls/fft.hpp"
#include "fnls/grid.hpp"

namespace fnls {

// Model parameters of the fractional NLS profile system: fractional order s,
// nonlinearity exponent sigma, and the two Lagrange multipliers (lambda1 is
// the frequency, lambda2 the wave speed). classical_limit admits s = 1 for
// regression against the classical NLS ground state; the admissibility window
// is otherwise 1/2 < s < 1.
struct ModelParams {
    double s = 0.75;
    double sigma = 1.0;
    double lambda1 = 1.0;
    double lambda2 = 0.0;
    bool classical_limit = false;
};

// Critical speed c(lambda1) = 2s (lambda1/(2s-1))^{(2s-1)/(2s)}: admissible
// wave speeds satisfy |lambda2| < c(lambda1), which is exactly the condition
// for min_xi lambda_minus(xi) > 0.
inline double speed_bound(double s, double lambda1) {
    if (!(s > 0.5) || !(s <= 1.0))
        throw std::domain_error("speed_bound: requires 1/2 < s <= 1");
    if (!(lambda1 > 0.0))
        throw std::domain_error("speed_bound: requires lambda1 > 0");
    return 2.0 * s * std::pow(lambda1 / (2.0 * s - 1.0), (2.0 * s - 1.0) / (2.0 * s));
}

struct Validation {
    bool admissible = false;
    std::string reason;
};

inline Validation validate(const ModelParams& p) {
    const bool s_ok = (p.s > 0.5 && p.s < 1.0) || (p.classical_limit && p.s == 1.0);
    if (!s_ok) {
        if (p.s == 1.0)
            return {false, "s = 1 requires the classical_limit flag"};
        return {false, "s out of range: need 1/2 < s < 1, got s = " + std::to_string(p.s)};
    }
    if (!(p.sigma > 0.0))
        return {false, "sigma must be positive, got " + std::to_string(p.sigma)};
    if (!(p.lambda1 > 0.0))
        return {false, "lambda1 must be positive, got " + std::to_string(p.lambda1)};
    const double c = speed_bound(p.s, p.lambda1);
    if (!(std::abs(p.lambda2) < c))
        return {false, "speed bound violated: |lambda2| = " + std::to_string(std::abs(p.lambda2)) +
                           " >= c(lambda1) = " + std::to_string(c)};
    return {true, {}};
}

inline void require_admissible(const ModelParams& p) {
    const Validation v = validate(p);
    if (!v.admissible) throw std::invalid_argument("inadmissible parameters: " + v.reason);
}

// Q^(xi) = [[lambda1 + |xi|^{2s}, -i lambda2 xi], [i lambda2 xi, lambda1 + |xi|^{2s}]],
// Hermitian with eigenvalues lambda_pm(xi) = |xi|^{2s} + lambda1 +- lambda2 xi
// and determinant lambda = lambda_plus * lambda_minus.
struct SymbolValue {
    double q11 = 0.0;
    std::complex<double> q12;
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double det = 0.0;
};

inline SymbolValue symbol_at(const ModelParams& p, double xi) {
    SymbolValue s;
    const double a = p.lambda1 + std::pow(std::abs(xi), 2.0 * p.s);
    const double b = p.lambda2 * xi;
    s.q11 = a;
    s.q12 = std::complex<double>(0.0, -b);
    s.lambda_plus = a + b;
    s.lambda_minus = a - b;
    s.det = s.lambda_plus * s.lambda_minus;
    return s;
}

// 2x2 complex matrix, row-major entries.
struct Mat2c {
    std::complex<double> a11, a12, a21, a22;
};

// K^ = Q^{-1}: k^11 = k^22 = (lambda1 + |xi|^{2s})/lambda(xi),
// k^12 = conj(k^21) = i xi lambda2 / lambda(xi).
inline Mat2c inverse_symbol_at(const ModelParams& p, double xi) {
    const SymbolValue s = symbol_at(p, xi);
    const double d = s.det;
    const std::complex<double> diag(s.q11 / d, 0.0);
    const std::complex<double> off(0.0, p.lambda2 * xi / d);
    return {diag, off, std::conj(off), diag};
}

// G(v, w) = (v^2 + w^2)^sigma (v, w).
inline std::pair<double, double> nonlinearity(const ModelParams& p, double v, double w) {
    const double r2 = v * v + w * w;
    const double f = (r2 == 0.0) ? 0.0 : std::pow(r2, p.sigma);
    return {f * v, f * w};
}

inline ProfilePair nonlinearity(const ModelParams& p, const ProfilePair& z) {
    ProfilePair g(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        const auto [g1, g2] = nonlinearity(p, z.v[j], z.w[j]);
        g.v[j] = g1;
        g.w[j] = g2;
    }
    return g;
}

// Symmetry-group action G_{(alpha,beta)}: rotation by alpha in the (v,w) plane
// composed with translation by beta. The translation is a spectral phase
// shift, exact for the trigonometric interpolant; at the unpaired Nyquist
// mode the phase e^{-i xi beta} is replaced by its even part cos(xi beta)
// to keep the output real.
inline ProfilePair group_action(double alpha, double beta, const ProfilePair& z,
                                const Grid& grid) {
    const std::size_t n = z.size();
    if (static_cast<int>(n) != grid.N)
        throw std::invalid_argument("group_action: profile size does not match grid");
    ProfilePair shifted = z;
    if (beta != 0.0) {
        Fft fft(n);
        std::vector<std::complex<double>> vh(n), wh(n);
        fft.forward_real(z.v, vh);
        fft.forward_real(z.w, wh);
        for (std::size_t k = 0; k < n; ++k) {
            const double ph = grid.xi[k] * beta;
            const std::complex<double> factor =
                (static_cast<int>(k) == grid.nyquist_index())
                    ? std::complex<double>(std::cos(ph), 0.0)
                    : std::exp(std::complex<double>(0.0, -ph));
            vh[k] *= factor;
            wh[k] *= factor;
        }
        std::vector<std::complex<double>> vt(n), wt(n);
        fft.inverse(vh, vt);
        fft.inverse(wh, wt);
        for (std::size_t j = 0; j < n; ++j) {
            shifted.v[j] = vt[j].real();
            shifted.w[j] = wt[j].real();
        }
    }
    const double c = std::cos(alpha), s = std::sin(alpha);
    ProfilePair out(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.v[j] = c * shifted.v[j] - s * shifted.w[j];
        out.w[j] = s * shifted.v[j] + c * shifted.w[j];
    }
    return out;
}

}  // namespace fnls
