#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fnls {

// Periodic collocation grid on (-L, L]: nodes x_j = -L + 2*L*j/N and
// frequencies xi_k = pi*k/L stored in FFT index order
// (k = 0, 1, ..., N/2-1, -N/2, ..., -1).
struct Grid {
    double L = 0.0;
    int N = 0;
    double h = 0.0;
    std::vector<double> x;
    std::vector<double> xi;

    int nyquist_index() const { return N / 2; }
    int center_index() const { return N / 2; }  // node at x = 0
};

inline Grid make_grid(double L, int N) {
    if (!(L > 0.0)) throw std::invalid_argument("make_grid: L must be positive");
    if (N < 16) throw std::invalid_argument("make_grid: N must be at least 16");
    if (N % 2 != 0) throw std::invalid_argument("make_grid: N must be even");
    Grid g;
    g.L = L;
    g.N = N;
    g.h = 2.0 * L / N;
    g.x.resize(N);
    g.xi.resize(N);
    const double dxi = std::numbers::pi / L;
    for (int j = 0; j < N; ++j) {
        g.x[j] = -L + g.h * j;
        const int k = (j < N / 2) ? j : j - N;
        g.xi[j] = dxi * k;
    }
    return g;
}

// Real field pair (v, w) sampled on a grid; u = v + i*w.
struct ProfilePair {
    std::vector<double> v;
    std::vector<double> w;

    ProfilePair() = default;
    explicit ProfilePair(std::size_t n) : v(n, 0.0), w(n, 0.0) {}
    ProfilePair(std::vector<double> v_, std::vector<double> w_)
        : v(std::move(v_)), w(std::move(w_)) {
        if (v.size() != w.size())
            throw std::invalid_argument("ProfilePair: component sizes differ");
    }

    std::size_t size() const { return v.size(); }
};

// Amplitude floor below which the phase is reported as 0 (atan2 of roundoff).
inline constexpr double kThetaFloor = 1e-14;

inline std::vector<double> rho(const ProfilePair& z) {
    std::vector<double> r(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) r[j] = std::hypot(z.v[j], z.w[j]);
    return r;
}

inline std::vector<double> theta(const ProfilePair& z, double floor = kThetaFloor) {
    std::vector<double> t(z.size(), 0.0);
    for (std::size_t j = 0; j < z.size(); ++j)
        if (std::hypot(z.v[j], z.w[j]) > floor) t[j] = std::atan2(z.w[j], z.v[j]);
    return t;
}

inline double sup_norm(const ProfilePair& z) {
    double m = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j)
        m = std::max({m, std::abs(z.v[j]), std::abs(z.w[j])});
    return m;
}

}  // namespace fnls
