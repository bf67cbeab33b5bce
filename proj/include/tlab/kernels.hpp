#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "tlab/fft.hpp"
#include "tlab/parallel.hpp"

// Data-parallel inner loops of the propagator and the observable reductions.
// Every kernel has a serial reference implementation and an OpenMP one with
// identical arithmetic; tests assert they agree bit for bit and the bench
// tool compares their throughput.

namespace tlab::kernels {

// psi[i] *= f[i]
void apply_factors(cplx* psi, const cplx* f, std::size_t n, Exec e = parallel::default_exec());

// psi[i] *= exp(i * scale * v[i])
void apply_vphase(cplx* psi, const double* v, double scale, std::size_t n,
                  Exec e = parallel::default_exec());

// Probability and spin cross terms removed by one absorber-mask application,
// split by which edge region removed them. For scalar states only n_up and
// the up-component cross terms are meaningful.
struct MaskTally {
    double n_up = 0.0;
    double n_dn = 0.0;
    double re_ud = 0.0;
    double im_ud = 0.0;

    MaskTally& operator+=(const MaskTally& o)
    {
        n_up += o.n_up;
        n_dn += o.n_dn;
        re_ud += o.re_ud;
        im_ud += o.im_ud;
        return *this;
    }
};

// Applies mask to psi_up (and psi_dn when non-null) and accumulates what was
// removed, weighted by dx, over [0, left_end) into `left` and [right_begin, n)
// into `right`. Mask must be 1 outside those ranges.
void apply_mask_tally(cplx* psi_up, cplx* psi_dn, const double* mask, std::size_t n,
                      std::size_t left_end, std::size_t right_begin, double dx, MaskTally& left,
                      MaskTally& right, Exec e = parallel::default_exec());

// Deterministic fixed-block reduction: partial sums are formed per block of
// parallel::reduction_block consecutive indices and combined in block order,
// so serial and parallel execution give the same rounding.
template <class F>
double block_sum(std::size_t n, Exec e, F&& term)
{
    const std::size_t bs = parallel::reduction_block;
    const std::size_t nb = n == 0 ? 0 : (n + bs - 1) / bs;
    std::vector<double> partial(nb, 0.0);

    const auto body = [&](std::size_t b) {
        const std::size_t lo = b * bs;
        const std::size_t hi = lo + bs < n ? lo + bs : n;
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    };

    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b)
            body(static_cast<std::size_t>(b));
    } else {
        for (std::size_t b = 0; b < nb; ++b) body(b);
    }

    double total = 0.0;
    for (std::size_t b = 0; b < nb; ++b) total += partial[b];
    return total;
}

template <class F>
cplx block_sum_cplx(std::size_t n, Exec e, F&& term)
{
    const std::size_t bs = parallel::reduction_block;
    const std::size_t nb = n == 0 ? 0 : (n + bs - 1) / bs;
    std::vector<cplx> partial(nb, cplx{0.0, 0.0});

    const auto body = [&](std::size_t b) {
        const std::size_t lo = b * bs;
        const std::size_t hi = lo + bs < n ? lo + bs : n;
        cplx s{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) s += term(i);
        partial[b] = s;
    };

    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b)
            body(static_cast<std::size_t>(b));
    } else {
        for (std::size_t b = 0; b < nb; ++b) body(b);
    }

    cplx total{0.0, 0.0};
    for (std::size_t b = 0; b < nb; ++b) total += partial[b];
    return total;
}

} // namespace tlab::kernels
