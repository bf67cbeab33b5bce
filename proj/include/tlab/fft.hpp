#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tlab/parallel.hpp"

namespace tlab {

using cplx = std::complex<double>;

// Iterative radix-2 FFT with cached bit-reversal table and twiddle factors.
// Grids in this project are powers of two by contract, so a dedicated
// transform keeps the round trip exact to rounding and the kernels free of
// external state. Forward sign convention: X_k = sum_j x_j exp(-2*pi*i*j*k/N).
// inverse() applies the opposite sign and the 1/N factor, so
// inverse(forward(x)) == x up to rounding.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const { return n_; }

    void forward(cplx* data, Exec e = parallel::default_exec()) const;
    void inverse(cplx* data, Exec e = parallel::default_exec()) const;

private:
    void transform(cplx* data, bool inv, Exec e) const;

    std::size_t n_ = 0;
    unsigned log2n_ = 0;
    std::vector<std::size_t> bitrev_;
    // Twiddles for all stages concatenated; stage with half-length h starts
    // at offset h-1 and holds h entries exp(-i*pi*j/h), j in [0,h).
    std::vector<cplx> twiddle_;
};

bool is_power_of_two(std::size_t n);

} // namespace tlab
