#include "tlab/kernels.hpp"

#include <cmath>

namespace tlab::kernels {

void apply_factors(cplx* psi, const cplx* f, std::size_t n, Exec e)
{
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < sn; ++i) psi[i] *= f[i];
    } else {
        for (std::ptrdiff_t i = 0; i < sn; ++i) psi[i] *= f[i];
    }
}

void apply_vphase(cplx* psi, const double* v, double scale, std::size_t n, Exec e)
{
    const std::ptrdiff_t sn = static_cast<std::ptrdiff_t>(n);
    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < sn; ++i) {
            const double a = scale * v[i];
            psi[i] *= cplx(std::cos(a), std::sin(a));
        }
    } else {
        for (std::ptrdiff_t i = 0; i < sn; ++i) {
            const double a = scale * v[i];
            psi[i] *= cplx(std::cos(a), std::sin(a));
        }
    }
}

namespace {

// One mask block: applies the mask on [lo,hi) and returns the removed weight.
MaskTally mask_block(cplx* up, cplx* dn, const double* mask, std::size_t lo, std::size_t hi,
                     double dx)
{
    MaskTally t;
    for (std::size_t i = lo; i < hi; ++i) {
        const double m = mask[i];
        const double loss = (1.0 - m * m) * dx;
        const cplx a = up[i];
        t.n_up += loss * std::norm(a);
        if (dn) {
            const cplx b = dn[i];
            t.n_dn += loss * std::norm(b);
            const cplx cross = std::conj(a) * b;
            t.re_ud += loss * cross.real();
            t.im_ud += loss * cross.imag();
            dn[i] = b * m;
        }
        up[i] = a * m;
    }
    return t;
}

MaskTally mask_range(cplx* up, cplx* dn, const double* mask, std::size_t lo, std::size_t hi,
                     double dx, Exec e)
{
    const std::size_t bs = parallel::reduction_block;
    const std::size_t len = hi - lo;
    const std::size_t nb = len == 0 ? 0 : (len + bs - 1) / bs;
    std::vector<MaskTally> partial(nb);

    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nb); ++b) {
            const std::size_t blo = lo + static_cast<std::size_t>(b) * bs;
            const std::size_t bhi = blo + bs < hi ? blo + bs : hi;
            partial[static_cast<std::size_t>(b)] = mask_block(up, dn, mask, blo, bhi, dx);
        }
    } else {
        for (std::size_t b = 0; b < nb; ++b) {
            const std::size_t blo = lo + b * bs;
            const std::size_t bhi = blo + bs < hi ? blo + bs : hi;
            partial[b] = mask_block(up, dn, mask, blo, bhi, dx);
        }
    }

    MaskTally total;
    for (const auto& p : partial) total += p;
    return total;
}

} // namespace

void apply_mask_tally(cplx* psi_up, cplx* psi_dn, const double* mask, std::size_t n,
                      std::size_t left_end, std::size_t right_begin, double dx, MaskTally& left,
                      MaskTally& right, Exec e)
{
    left += mask_range(psi_up, psi_dn, mask, 0, left_end, dx, e);
    right += mask_range(psi_up, psi_dn, mask, right_begin, n, dx, e);
}

} // namespace tlab::kernels
