#include "tlab/potentials.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace tlab {

std::string shape_name(Shape s)
{
    switch (s) {
    case Shape::Rectangular: return "rectangular";
    case Shape::Gaussian: return "gaussian";
    case Shape::LinearVee: return "linear_vee";
    case Shape::Harmonic: return "harmonic";
    case Shape::UniformGradient: return "uniform_gradient";
    }
    return "unknown";
}

double PotentialTerm::center_at(double t) const
{
    if (drift == 0.0) return center;
    const double t_ref = std::isfinite(window.t_on) ? window.t_on : 0.0;
    return center + drift * (t - t_ref);
}

double PotentialTerm::value(double x, double t) const
{
    if (!window.contains(t)) return 0.0;
    const double c = center_at(t);
    switch (shape) {
    case Shape::Rectangular:
        return (x >= c - 0.5 * width && x < c + 0.5 * width) ? height : 0.0;
    case Shape::Gaussian: {
        const double u = (x - c) / waist;
        return height * std::exp(-2.0 * u * u);
    }
    case Shape::LinearVee: return slope * std::abs(x - c);
    case Shape::Harmonic: {
        const double d = x - c;
        return 0.5 * omega2 * d * d;
    }
    case Shape::UniformGradient: return slope * (x - c);
    }
    return 0.0;
}

double PotentialSchedule::value(double x, double t) const
{
    double v = 0.0;
    for (const auto& term : terms) v += term.value(x, t);
    return v;
}

double PotentialSchedule::sample(const Grid& g, double t, std::span<double> v, Exec e) const
{
    if (v.size() != g.n()) throw std::invalid_argument("potential sample span size mismatch");
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.n());
    double vmax = 0.0;
    if (e == Exec::Par) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(max : vmax)
#endif
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const double val = value(g.x(static_cast<std::size_t>(i)), t);
            v[static_cast<std::size_t>(i)] = val;
            vmax = std::max(vmax, std::abs(val));
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const double val = value(g.x(static_cast<std::size_t>(i)), t);
            v[static_cast<std::size_t>(i)] = val;
            vmax = std::max(vmax, std::abs(val));
        }
    }
    return vmax;
}

bool PotentialSchedule::is_static() const
{
    for (const auto& term : terms)
        if (!term.window.is_always() || term.drift != 0.0) return false;
    return true;
}

double LarmorField::coupling(double x, double t) const
{
    if (!window.contains(t)) return 0.0;
    if (x < a || x >= b) return 0.0;
    double env = 1.0;
    if (gaussian_envelope) {
        const double c = 0.5 * (a + b);
        const double w = 0.5 * (b - a);
        const double u = (x - c) / w;
        env = std::exp(-2.0 * u * u);
    }
    return 0.5 * sign * omega_L * env;
}

double LocalWell::omega_eff() const { return curvature > 0.0 ? std::sqrt(curvature) : 0.0; }

double LocalWell::secular_period() const
{
    const double w = omega_eff();
    return w > 0.0 ? 2.0 * std::acos(-1.0) / w : 0.0;
}

namespace {

// Golden-section minimization of f on [lo, hi] to tolerance tol.
double golden_min(const std::function<double(double)>& f, double lo, double hi, double tol)
{
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

LocalWell local_minimum_of(const std::function<double(double)>& v, double a, double b)
{
    if (!(a < b)) throw std::invalid_argument("local_minimum: empty search interval");
    constexpr int n_scan = 8192;
    constexpr double tol = 1e-6;
    const double h = (b - a) / n_scan;

    std::vector<double> vals(n_scan + 1);
    for (int i = 0; i <= n_scan; ++i) vals[i] = v(a + i * h);

    LocalWell best;
    for (int i = 1; i < n_scan; ++i) {
        if (!(vals[i] <= vals[i - 1] && vals[i] <= vals[i + 1])) continue;
        if (vals[i] == vals[i - 1] && vals[i] == vals[i + 1]) continue; // flat stretch

        LocalWell w;
        w.x_min = golden_min(v, a + (i - 1) * h, a + (i + 1) * h, tol);
        w.v_min = v(w.x_min);

        // rim on each side: first local maximum walking outward, or the
        // interval edge if the potential rises monotonically to it
        int l = i;
        while (l > 0 && vals[l - 1] >= vals[l] - 1e-15) --l;
        if (l == 0) {
            w.rim_left_x = a;
            w.rim_left_v = vals[0];
        } else {
            w.rim_left_x = golden_min([&](double x) { return -v(x); }, a + (l - 1) * h,
                                      a + (l + 1) * h, tol);
            w.rim_left_v = v(w.rim_left_x);
        }
        int r = i;
        while (r < n_scan && vals[r + 1] >= vals[r] - 1e-15) ++r;
        if (r == n_scan) {
            w.rim_right_x = b;
            w.rim_right_v = vals[n_scan];
        } else {
            w.rim_right_x = golden_min([&](double x) { return -v(x); }, a + (r - 1) * h,
                                       a + (r + 1) * h, tol);
            w.rim_right_v = v(w.rim_right_x);
        }

        w.barrier_top = std::min(w.rim_left_v, w.rim_right_v);
        w.depth = w.barrier_top - w.v_min;
        if (w.depth <= 0.0) continue;

        const double hc = std::max(1e-4, 4.0 * tol);
        w.curvature = (v(w.x_min + hc) - 2.0 * w.v_min + v(w.x_min - hc)) / (hc * hc);
        w.found = true;
        if (!best.found || w.depth > best.depth) best = w;
    }
    return best;
}

LocalWell local_minimum(const PotentialSchedule& schedule, double t, double a, double b)
{
    return local_minimum_of([&](double x) { return schedule.value(x, t); }, a, b);
}

} // namespace tlab
