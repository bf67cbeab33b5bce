#pragma once

#include <iosfwd>
#include <vector>

#include "tlab/grid.hpp"
#include "tlab/kernels.hpp"

namespace tlab {

struct Observables {
    double norm2 = 0.0;
    double mean_x = 0.0;
    double var_x = 0.0;
    double mean_p = 0.0;
    double kinetic_energy = 0.0; // spectral <p^2/2m>, hbar = m = 1
};

struct WaveFunction {
    Grid grid;
    std::vector<cplx> amp;

    explicit WaveFunction(const Grid& g) : grid(g), amp(g.n(), cplx{0.0, 0.0}) {}

    double norm2(Exec e = parallel::default_exec()) const;
    void normalize();

    // Largest |amp| at the first/last grid point relative to max |amp|;
    // stays below 1e-8 in valid runs (absorber contract).
    double boundary_residual() const;
};

struct SpinorWaveFunction {
    Grid grid;
    std::vector<cplx> up;
    std::vector<cplx> dn;

    explicit SpinorWaveFunction(const Grid& g)
        : grid(g), up(g.n(), cplx{0.0, 0.0}), dn(g.n(), cplx{0.0, 0.0})
    {
    }

    // Spin-1/2 state polarized along +x with spatial profile psi.
    static SpinorWaveFunction polarized_x(const WaveFunction& psi);

    double norm2(Exec e = parallel::default_exec()) const;

    // <sigma_x>, <sigma_y>, <sigma_z>, unnormalized (integrals over x).
    double sx_raw(Exec e = parallel::default_exec()) const;
    double sy_raw(Exec e = parallel::default_exec()) const;
    double sz_raw(Exec e = parallel::default_exec()) const;
};

// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2)) exp(i k0 x).
// Rejects packets whose bandwidth would fold over the Nyquist wavenumber.
WaveFunction gaussian_packet(const Grid& g, double x0, double sigma, double k0);

Observables observables(const WaveFunction& psi, Exec e = parallel::default_exec());

// Probability in [a, b) with boundaries snapped to the nearest grid point.
double region_probability(const WaveFunction& psi, double a, double b,
                          Exec e = parallel::default_exec());

// Momentum-space density |psi~(k)|^2 on the FFT-ordered k grid.
std::vector<double> momentum_density(const WaveFunction& psi, Exec e = parallel::default_exec());

// Plain-text dump: header line with grid metadata, then "x re_psi im_psi".
void dump_wavefunction(std::ostream& os, const WaveFunction& psi);

} // namespace tlab
