#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>

#include "tlab/fft.hpp"

namespace tlab {

// Uniform 1D spatial grid with its conjugate momentum grid. Power-of-two
// sizes only; the FFT plan is created once per grid and shared by copies.
class Grid {
public:
    Grid(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t n() const { return n_; }
    double dx() const { return dx_; }
    double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx_; }

    // FFT-ordered wavenumber: non-negative for i < n/2, negative above.
    double k(std::size_t i) const
    {
        const auto half = n_ / 2;
        const double m = i < half ? static_cast<double>(i)
                                  : static_cast<double>(i) - static_cast<double>(n_);
        return m * dk_;
    }
    double dk() const { return dk_; }
    double k_max() const;

    // Nearest grid index to position x, clamped to [0, n].
    std::size_t index_of(double x) const;

    const FftPlan& plan() const { return *plan_; }

    bool same_as(const Grid& o) const
    {
        return n_ == o.n_ && x_min_ == o.x_min_ && x_max_ == o.x_max_;
    }

private:
    double x_min_, x_max_, dx_, dk_;
    std::size_t n_;
    std::shared_ptr<const FftPlan> plan_;
};

class GridError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tlab
