#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tlab/grid.hpp"

namespace tlab {

struct TimeWindow {
    double t_on = -std::numeric_limits<double>::infinity();
    double t_off = std::numeric_limits<double>::infinity();

    static TimeWindow always() { return {}; }
    bool contains(double t) const { return t >= t_on && t < t_off; }
    bool is_always() const
    {
        return t_on == -std::numeric_limits<double>::infinity() &&
               t_off == std::numeric_limits<double>::infinity();
    }
};

enum class Shape { Rectangular, Gaussian, LinearVee, Harmonic, UniformGradient };

std::string shape_name(Shape s);

// One additive term of V(x, t). Parameters are internal units.
//   rectangular: height inside [center - width/2, center + width/2)
//   gaussian:    height * exp(-2 (x-c)^2 / waist^2), c = center + drift*(t - t_ref)
//   linear_vee:  slope * |x - center|
//   harmonic:    0.5 * omega2 * (x - center)^2
//   uniform_gradient: slope * (x - center)
struct PotentialTerm {
    Shape shape = Shape::Gaussian;
    double height = 0.0;
    double center = 0.0;
    double width = 0.0;  // rectangular full width
    double waist = 0.0;  // gaussian 1/e^2 half-width-at-amplitude convention, see value()
    double slope = 0.0;  // vee and gradient
    double omega2 = 0.0; // harmonic
    double drift = 0.0;  // center velocity while the window is active
    TimeWindow window = TimeWindow::always();

    double value(double x, double t) const;
    double center_at(double t) const;
};

struct PotentialSchedule {
    std::vector<PotentialTerm> terms;

    double value(double x, double t) const;

    // Fills v[j] = V(x_j, t); returns max |V| over the grid.
    double sample(const Grid& g, double t, std::span<double> v,
                  Exec e = parallel::default_exec()) const;

    // True when V does not depend on t (no finite windows, no drift).
    bool is_static() const;
};

// Weak Larmor measurement field: sigma_z coupling of strength
// sign * omega_L / 2, confined to [a, b) (optionally with a Gaussian
// envelope) and to a time window.
struct LarmorField {
    double a = 0.0;
    double b = 0.0;
    double omega_L = 0.0;
    double sign = 1.0;
    TimeWindow window = TimeWindow::always();
    bool gaussian_envelope = false; // envelope exp(-2 (x-c)^2/w^2) on [a,b)

    // coupling added to the up component (subtracted from down) at (x, t)
    double coupling(double x, double t) const;
};

// Local potential minimum with the rims that enclose it.
struct LocalWell {
    bool found = false;
    double x_min = 0.0;
    double v_min = 0.0;
    double depth = 0.0;       // min(rim_left, rim_right) - v_min
    double barrier_top = 0.0; // the lower of the two rims
    double rim_left_x = 0.0, rim_left_v = 0.0;
    double rim_right_x = 0.0, rim_right_v = 0.0;
    double curvature = 0.0; // d2V/dx2 at x_min (central difference)

    double omega_eff() const; // sqrt(curvature), 0 if curvature <= 0
    double secular_period() const;
};

// Deterministic scan over [a, b] refined by golden-section to 1e-6 length
// units. When several interior minima exist the deepest one is returned.
// Returns found = false when the interval has no interior minimum.
LocalWell local_minimum(const PotentialSchedule& schedule, double t, double a, double b);

// Same search against an arbitrary callable.
LocalWell local_minimum_of(const std::function<double(double)>& v, double a, double b);

} // namespace tlab
