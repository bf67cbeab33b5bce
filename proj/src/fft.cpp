#include "tlab/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace tlab {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

FftPlan::FftPlan(std::size_t n) : n_(n)
{
    if (!is_power_of_two(n)) throw std::invalid_argument("FftPlan: size must be a power of two");
    while ((std::size_t{1} << log2n_) < n_) ++log2n_;

    bitrev_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t r = 0, v = i;
        for (unsigned b = 0; b < log2n_; ++b) {
            r = (r << 1) | (v & 1);
            v >>= 1;
        }
        bitrev_[i] = r;
    }

    twiddle_.resize(n_ > 1 ? n_ - 1 : 0);
    const double pi = std::acos(-1.0);
    for (std::size_t half = 1; half < n_; half *= 2) {
        for (std::size_t j = 0; j < half; ++j) {
            const double ang = -pi * static_cast<double>(j) / static_cast<double>(half);
            twiddle_[half - 1 + j] = cplx(std::cos(ang), std::sin(ang));
        }
    }
}

void FftPlan::transform(cplx* data, bool inv, Exec e) const
{
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(n_);

    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const std::size_t r = bitrev_[static_cast<std::size_t>(i)];
            if (static_cast<std::size_t>(i) < r) std::swap(data[i], data[r]);
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const std::size_t r = bitrev_[static_cast<std::size_t>(i)];
            if (static_cast<std::size_t>(i) < r) std::swap(data[i], data[r]);
        }
    }

    for (std::size_t half = 1; half < n_; half *= 2) {
        const cplx* w = twiddle_.data() + (half - 1);
        const std::ptrdiff_t nbf = n / 2; // independent butterflies per stage
        if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::ptrdiff_t b = 0; b < nbf; ++b) {
                const std::size_t j = static_cast<std::size_t>(b) % half;
                const std::size_t block = static_cast<std::size_t>(b) / half;
                const std::size_t i0 = block * 2 * half + j;
                const std::size_t i1 = i0 + half;
                const cplx wj = inv ? std::conj(w[j]) : w[j];
                const cplx t = wj * data[i1];
                data[i1] = data[i0] - t;
                data[i0] += t;
            }
        } else {
            for (std::ptrdiff_t b = 0; b < nbf; ++b) {
                const std::size_t j = static_cast<std::size_t>(b) % half;
                const std::size_t block = static_cast<std::size_t>(b) / half;
                const std::size_t i0 = block * 2 * half + j;
                const std::size_t i1 = i0 + half;
                const cplx wj = inv ? std::conj(w[j]) : w[j];
                const cplx t = wj * data[i1];
                data[i1] = data[i0] - t;
                data[i0] += t;
            }
        }
    }

    if (inv) {
        const double s = 1.0 / static_cast<double>(n_);
        if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= s;
        } else {
            for (std::ptrdiff_t i = 0; i < n; ++i) data[i] *= s;
        }
    }
}

void FftPlan::forward(cplx* data, Exec e) const { transform(data, false, e); }
void FftPlan::inverse(cplx* data, Exec e) const { transform(data, true, e); }

} // namespace tlab
