#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fnls/fft.hpp"
#include "fnls/grid.hpp"
#include "fnls/model.hpp"

namespace fnls {

// Raised when a matrix multiplier produces an output whose imaginary residue
// exceeds the reality threshold, i.e. the supplied symbol does not have the
// even-diagonal / odd-off-diagonal Hermitian structure.
class SymbolStructureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kRealityThreshold = 1e-10;

namespace detail {

// Symbol value at the unpaired Nyquist mode: even part (S(xi) + S(-xi))/2,
// the standard symmetric treatment that preserves reality of the output.
template <class SymbolFn>
Mat2c symbol_for_mode(SymbolFn&& symbol, const Grid& grid, int k) {
    const double xi = grid.xi[k];
    Mat2c s = symbol(xi);
    if (k == grid.nyquist_index()) {
        const Mat2c r = symbol(-xi);
        s.a11 = 0.5 * (s.a11 + r.a11);
        s.a12 = 0.5 * (s.a12 + r.a12);
        s.a21 = 0.5 * (s.a21 + r.a21);
        s.a22 = 0.5 * (s.a22 + r.a22);
    }
    return s;
}

}  // namespace detail

// Applies a 2x2 matrix Fourier multiplier mode-by-mode: the transform of the
// output equals symbol(xi_k) applied to the transform of (v, w). The output
// must come out real (up to roundoff); its imaginary residue is measured
// against the data scale and then discarded.
template <class SymbolFn>
ProfilePair apply_multiplier(const Grid& grid, SymbolFn&& symbol, const ProfilePair& u) {
    const int n = grid.N;
    if (static_cast<int>(u.size()) != n)
        throw std::invalid_argument("apply_multiplier: profile size does not match grid");
    Fft fft(n);
    std::vector<std::complex<double>> vh(n), wh(n);
    fft.forward_real(u.v, vh);
    fft.forward_real(u.w, wh);
    for (int k = 0; k < n; ++k) {
        const Mat2c s = detail::symbol_for_mode(symbol, grid, k);
        const std::complex<double> a = vh[k], b = wh[k];
        vh[k] = s.a11 * a + s.a12 * b;
        wh[k] = s.a21 * a + s.a22 * b;
    }
    std::vector<std::complex<double>> vt(n), wt(n);
    fft.inverse(vh, vt);
    fft.inverse(wh, wt);
    ProfilePair out(n);
    double imag_max = 0.0, scale = 0.0;
    for (int j = 0; j < n; ++j) {
        out.v[j] = vt[j].real();
        out.w[j] = wt[j].real();
        imag_max = std::max({imag_max, std::abs(vt[j].imag()), std::abs(wt[j].imag())});
        scale = std::max({scale, std::abs(out.v[j]), std::abs(out.w[j])});
    }
    scale = std::max({scale, sup_norm(u), 1e-300});
    if (imag_max > kRealityThreshold * scale)
        throw SymbolStructureError("apply_multiplier: output lost reality (residue " +
                                   std::to_string(imag_max / scale) + ")");
    return out;
}

// (-d_xx)^s f via the |xi|^{2s} multiplier; the xi = 0 mode is annihilated.
inline std::vector<double> fractional_laplacian(const Grid& grid, double s,
                                                const std::vector<double>& f) {
    if (!(s > 0.0) || !(s <= 1.0))
        throw std::domain_error("fractional_laplacian: requires 0 < s <= 1");
    if (static_cast<int>(f.size()) != grid.N)
        throw std::invalid_argument("fractional_laplacian: size mismatch");
    const int n = grid.N;
    Fft fft(n);
    std::vector<std::complex<double>> fh(n);
    fft.forward_real(f, fh);
    for (int k = 0; k < n; ++k) fh[k] *= std::pow(std::abs(grid.xi[k]), 2.0 * s);
    std::vector<std::complex<double>> ft(n);
    fft.inverse(fh, ft);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = ft[j].real();
    return out;
}

// First spectral derivative (i*xi multiplier, Nyquist zeroed).
inline std::vector<double> spectral_derivative(const Grid& grid, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != grid.N)
        throw std::invalid_argument("spectral_derivative: size mismatch");
    const int n = grid.N;
    Fft fft(n);
    std::vector<std::complex<double>> fh(n);
    fft.forward_real(f, fh);
    for (int k = 0; k < n; ++k) {
        const double xi = (k == grid.nyquist_index()) ? 0.0 : grid.xi[k];
        fh[k] *= std::complex<double>(0.0, xi);
    }
    std::vector<std::complex<double>> ft(n);
    fft.inverse(fh, ft);
    std::vector<double> out(n);
    for (int j = 0; j < n; ++j) out[j] = ft[j].real();
    return out;
}

// Discretization of Q^ on a grid: diagonal a_k = lambda1 + |xi_k|^{2s} and
// off-diagonal coefficient b_k = lambda2 * xi_k with b zeroed at the Nyquist
// mode. The inverse below is the exact per-mode matrix inverse of this
// discrete symbol, so that the pair satisfies K_d Q_d = I on every mode --
// in particular a discrete Petviashvili fixed point has zero residual.
struct DiscreteSymbol {
    std::vector<double> a;  // diagonal
    std::vector<double> b;  // off-diagonal: entries (-i b, +i b)

    static DiscreteSymbol build(const ModelParams& p, const Grid& grid) {
        DiscreteSymbol d;
        d.a.resize(grid.N);
        d.b.resize(grid.N);
        for (int k = 0; k < grid.N; ++k) {
            d.a[k] = p.lambda1 + std::pow(std::abs(grid.xi[k]), 2.0 * p.s);
            d.b[k] = (k == grid.nyquist_index()) ? 0.0 : p.lambda2 * grid.xi[k];
        }
        return d;
    }

    // (vh, wh) <- Q_d (vh, wh), in place.
    void apply_forward(std::vector<std::complex<double>>& vh,
                       std::vector<std::complex<double>>& wh) const {
        const std::complex<double> i(0.0, 1.0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            const std::complex<double> v0 = vh[k], w0 = wh[k];
            vh[k] = a[k] * v0 - i * b[k] * w0;
            wh[k] = i * b[k] * v0 + a[k] * w0;
        }
    }

    // (vh, wh) <- Q_d^{-1} (vh, wh), in place.
    void apply_inverse(std::vector<std::complex<double>>& vh,
                       std::vector<std::complex<double>>& wh) const {
        const std::complex<double> i(0.0, 1.0);
        for (std::size_t k = 0; k < a.size(); ++k) {
            const double det = a[k] * a[k] - b[k] * b[k];
            const std::complex<double> v0 = vh[k], w0 = wh[k];
            vh[k] = (a[k] * v0 + i * b[k] * w0) / det;
            wh[k] = (-i * b[k] * v0 + a[k] * w0) / det;
        }
    }
};

// <Qz, z> computed spectrally: (h/N) sum_k conj(zh_k)^T Q_d(xi_k) zh_k.
// Strictly positive for z != 0 under admissibility (Q is definite positive).
inline double inner_q(const ModelParams& p, const Grid& grid, const ProfilePair& z) {
    require_admissible(p);
    if (static_cast<int>(z.size()) != grid.N)
        throw std::invalid_argument("inner_q: profile size does not match grid");
    const int n = grid.N;
    Fft fft(n);
    std::vector<std::complex<double>> vh(n), wh(n);
    fft.forward_real(z.v, vh);
    fft.forward_real(z.w, wh);
    const DiscreteSymbol d = DiscreteSymbol::build(p, grid);
    const std::complex<double> i(0.0, 1.0);
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
        const std::complex<double> qv = d.a[k] * vh[k] - i * d.b[k] * wh[k];
        const std::complex<double> qw = i * d.b[k] * vh[k] + d.a[k] * wh[k];
        acc += (std::conj(vh[k]) * qv + std::conj(wh[k]) * qw).real();
    }
    return acc * grid.h / n;
}

// <G(z), z> = trapezoid of (v^2 + w^2)^{sigma+1}; nonnegative, zero iff z = 0.
inline double inner_g(const ModelParams& p, const Grid& grid, const ProfilePair& z) {
    if (static_cast<int>(z.size()) != grid.N)
        throw std::invalid_argument("inner_g: profile size does not match grid");
    double acc = 0.0;
    for (int j = 0; j < grid.N; ++j) {
        const double r2 = z.v[j] * z.v[j] + z.w[j] * z.w[j];
        acc += (r2 == 0.0) ? 0.0 : std::pow(r2, p.sigma + 1.0);
    }
    return acc * grid.h;
}

// Trapezoid rule on the periodic grid (all nodes weighted h).
inline double trapezoid(const Grid& grid, const std::vector<double>& f) {
    double acc = 0.0;
    for (double y : f) acc += y;
    return acc * grid.h;
}

inline double norm_l2(const Grid& grid, const ProfilePair& z) {
    double acc = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j)
        acc += z.v[j] * z.v[j] + z.w[j] * z.w[j];
    return std::sqrt(acc * grid.h);
}

}  // namespace fnls
