#include "tlab/grid.hpp"

#include <cmath>

namespace tlab {

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points)
{
    if (!(x_max > x_min)) throw GridError("grid requires x_max > x_min");
    if (!is_power_of_two(n_) || n_ < 256)
        throw GridError("grid size must be a power of two >= 256");
    dx_ = (x_max_ - x_min_) / static_cast<double>(n_);
    dk_ = 2.0 * std::acos(-1.0) / (static_cast<double>(n_) * dx_);
    plan_ = std::make_shared<FftPlan>(n_);
}

double Grid::k_max() const { return std::acos(-1.0) / dx_; }

std::size_t Grid::index_of(double x) const
{
    const double r = std::round((x - x_min_) / dx_);
    if (r <= 0.0) return 0;
    if (r >= static_cast<double>(n_)) return n_;
    return static_cast<std::size_t>(r);
}

} // namespace tlab
