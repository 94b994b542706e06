#pragma once

#include <complex>
#include <cstddef>
#include <mutex>
#include <span>
#include <stdexcept>
#include <vector>

#include <fftw3.h>

namespace fnls {

// FFTW's planner (create/destroy) is not thread-safe; execution on distinct
// buffers is. Every plan operation in this library goes through this mutex.
inline std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

// One-dimensional complex transform of fixed size with owned, aligned buffers.
// Forward is unnormalized, X_k = sum_j x_j e^{-2*pi*i*j*k/n}; inverse carries
// the 1/n factor so that inverse(forward(x)) == x.
class Fft {
public:
    explicit Fft(std::size_t n) : n_(n) {
        if (n_ == 0) throw std::invalid_argument("Fft: size must be positive");
        in_ = fftw_alloc_complex(n_);
        out_ = fftw_alloc_complex(n_);
        if (!in_ || !out_) {
            fftw_free(in_);
            fftw_free(out_);
            throw std::bad_alloc();
        }
        std::lock_guard lock(fftw_planner_mutex());
        fwd_ = fftw_plan_dft_1d(static_cast<int>(n_), in_, out_, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(static_cast<int>(n_), in_, out_, FFTW_BACKWARD, FFTW_ESTIMATE);
    }

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    ~Fft() {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
        fftw_free(in_);
        fftw_free(out_);
    }

    std::size_t size() const { return n_; }

    void forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out) {
        check(in.size(), out.size());
        load(in);
        fftw_execute(fwd_);
        store(out, 1.0);
    }

    void forward_real(std::span<const double> in, std::span<std::complex<double>> out) {
        check(in.size(), out.size());
        for (std::size_t j = 0; j < n_; ++j) {
            in_[j][0] = in[j];
            in_[j][1] = 0.0;
        }
        fftw_execute(fwd_);
        store(out, 1.0);
    }

    void inverse(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out) {
        check(in.size(), out.size());
        load(in);
        fftw_execute(bwd_);
        store(out, 1.0 / static_cast<double>(n_));
    }

private:
    void check(std::size_t nin, std::size_t nout) const {
        if (nin != n_ || nout != n_)
            throw std::invalid_argument("Fft: span size does not match plan size");
    }

    void load(std::span<const std::complex<double>> in) {
        for (std::size_t j = 0; j < n_; ++j) {
            in_[j][0] = in[j].real();
            in_[j][1] = in[j].imag();
        }
    }

    void store(std::span<std::complex<double>> out, double scale) {
        for (std::size_t j = 0; j < n_; ++j)
            out[j] = std::complex<double>(out_[j][0] * scale, out_[j][1] * scale);
    }

    std::size_t n_;
    fftw_complex* in_;
    fftw_complex* out_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

}  // namespace fnls
