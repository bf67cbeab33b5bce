#include "tlab/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace tlab {

double WaveFunction::norm2(Exec e) const
{
    const double dx = grid.dx();
    const cplx* a = amp.data();
    return kernels::block_sum(amp.size(), e, [a, dx](std::size_t i) { return std::norm(a[i]) * dx; });
}

void WaveFunction::normalize()
{
    const double n2 = norm2();
    if (!(n2 > 0.0)) throw std::runtime_error("cannot normalize a zero wavefunction");
    const double s = 1.0 / std::sqrt(n2);
    for (auto& z : amp) z *= s;
}

double WaveFunction::boundary_residual() const
{
    double mx = 0.0;
    for (const auto& z : amp) mx = std::max(mx, std::abs(z));
    if (mx == 0.0) return 0.0;
    return std::max(std::abs(amp.front()), std::abs(amp.back())) / mx;
}

SpinorWaveFunction SpinorWaveFunction::polarized_x(const WaveFunction& psi)
{
    SpinorWaveFunction s(psi.grid);
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < psi.amp.size(); ++i) {
        s.up[i] = psi.amp[i] * r;
        s.dn[i] = psi.amp[i] * r;
    }
    return s;
}

double SpinorWaveFunction::norm2(Exec e) const
{
    const double dx = grid.dx();
    const cplx* u = up.data();
    const cplx* d = dn.data();
    return kernels::block_sum(up.size(), e, [u, d, dx](std::size_t i) {
        return (std::norm(u[i]) + std::norm(d[i])) * dx;
    });
}

double SpinorWaveFunction::sx_raw(Exec e) const
{
    const double dx = grid.dx();
    const cplx* u = up.data();
    const cplx* d = dn.data();
    const cplx s = kernels::block_sum_cplx(up.size(), e, [u, d](std::size_t i) {
        return std::conj(u[i]) * d[i];
    });
    return 2.0 * s.real() * dx;
}

double SpinorWaveFunction::sy_raw(Exec e) const
{
    const double dx = grid.dx();
    const cplx* u = up.data();
    const cplx* d = dn.data();
    const cplx s = kernels::block_sum_cplx(up.size(), e, [u, d](std::size_t i) {
        return std::conj(u[i]) * d[i];
    });
    return 2.0 * s.imag() * dx;
}

double SpinorWaveFunction::sz_raw(Exec e) const
{
    const double dx = grid.dx();
    const cplx* u = up.data();
    const cplx* d = dn.data();
    return kernels::block_sum(up.size(), e, [u, d, dx](std::size_t i) {
        return (std::norm(u[i]) - std::norm(d[i])) * dx;
    });
}

WaveFunction gaussian_packet(const Grid& g, double x0, double sigma, double k0)
{
    if (x0 < g.x_min() || x0 > g.x_max())
        throw std::invalid_argument("gaussian_packet: x0 outside grid");
    if (sigma < 4.0 * g.dx())
        throw std::invalid_argument("gaussian_packet: sigma must be at least 4 grid spacings");
    if (std::abs(k0) + 3.0 / sigma >= g.k_max())
        throw std::invalid_argument("gaussian_packet: bandwidth exceeds the Nyquist wavenumber");

    WaveFunction psi(g);
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double d = g.x(i) - x0;
        const double env = std::exp(-d * d / (4.0 * sigma * sigma));
        const double ph = k0 * g.x(i);
        psi.amp[i] = env * cplx(std::cos(ph), std::sin(ph));
    }
    psi.normalize();
    return psi;
}

Observables observables(const WaveFunction& psi, Exec e)
{
    Observables out;
    const Grid& g = psi.grid;
    const double dx = g.dx();
    const std::size_t n = g.n();
    const cplx* a = psi.amp.data();

    out.norm2 = psi.norm2(e);
    if (!(out.norm2 > 0.0)) return out;

    const double x0 = g.x_min();
    out.mean_x = kernels::block_sum(n, e, [a, dx, x0](std::size_t i) {
                     return (x0 + static_cast<double>(i) * dx) * std::norm(a[i]) * dx;
                 }) /
                 out.norm2;
    const double mx = out.mean_x;
    out.var_x = kernels::block_sum(n, e, [a, dx, x0, mx](std::size_t i) {
                    const double d = x0 + static_cast<double>(i) * dx - mx;
                    return d * d * std::norm(a[i]) * dx;
                }) /
                out.norm2;

    std::vector<cplx> spec(psi.amp);
    g.plan().forward(spec.data(), e);
    const double w = dx / static_cast<double>(n); // Parseval weight
    const cplx* s = spec.data();
    double p1 = 0.0, p2 = 0.0;
    p1 = kernels::block_sum(n, e, [s, &g, w](std::size_t i) { return g.k(i) * std::norm(s[i]) * w; });
    p2 = kernels::block_sum(n, e, [s, &g, w](std::size_t i) {
        const double k = g.k(i);
        return 0.5 * k * k * std::norm(s[i]) * w;
    });
    out.mean_p = p1 / out.norm2;
    out.kinetic_energy = p2 / out.norm2;
    return out;
}

double region_probability(const WaveFunction& psi, double a, double b, Exec e)
{
    if (!(a < b)) throw std::invalid_argument("region_probability requires a < b");
    const Grid& g = psi.grid;
    const std::size_t ia = g.index_of(a);
    const std::size_t ib = g.index_of(b);
    const double dx = g.dx();
    const cplx* p = psi.amp.data() + ia;
    const double num =
        kernels::block_sum(ib - ia, e, [p, dx](std::size_t i) { return std::norm(p[i]) * dx; });
    return num / psi.norm2(e);
}

std::vector<double> momentum_density(const WaveFunction& psi, Exec e)
{
    const Grid& g = psi.grid;
    std::vector<cplx> spec(psi.amp);
    g.plan().forward(spec.data(), e);
    const double w = g.dx() / static_cast<double>(g.n());
    std::vector<double> out(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) out[i] = std::norm(spec[i]) * w / g.dk();
    return out;
}

void dump_wavefunction(std::ostream& os, const WaveFunction& psi)
{
    const Grid& g = psi.grid;
    os << "# grid x_min=" << g.x_min() << " x_max=" << g.x_max() << " n=" << g.n() << "\n";
    os << "# x re_psi im_psi\n";
    os.precision(17);
    for (std::size_t i = 0; i < g.n(); ++i)
        os << g.x(i) << " " << psi.amp[i].real() << " " << psi.amp[i].imag() << "\n";
}

} // namespace tlab
