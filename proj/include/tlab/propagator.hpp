#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tlab/potentials.hpp"
#include "tlab/wavefunction.hpp"

namespace tlab {

class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct AbsorberSpec {
    enum class Kind { None, Mask } kind = Kind::None;
    double width = 0.0;    // absorbing zone at each grid edge
    double strength = 1.0; // decay rate scale of the cos^2 ramp

    static AbsorberSpec none() { return {}; }
    static AbsorberSpec mask(double width, double strength)
    {
        return {Kind::Mask, width, strength};
    }
};

struct PropagatorConfig {
    double dt = 1e-3;
    AbsorberSpec absorber = AbsorberSpec::none();
    int record_stride = 16;
    // optional region whose probability is tracked as P_well
    std::optional<std::pair<double, double>> well_region;
};

struct TrajectoryPoint {
    double t = 0.0;
    double norm2 = 0.0;
    double mean_x = 0.0;
    double var_x = 0.0;
    double p_well = 0.0;
    double absorbed_left = 0.0;
    double absorbed_right = 0.0;
    double sx = 0.0, sy = 0.0, sz = 0.0; // spinor runs only
};

struct EvolveResult {
    std::vector<TrajectoryPoint> trace;
    WaveFunction psi; // final state
    double absorbed_left = 0.0;
    double absorbed_right = 0.0;
};

struct SpinorEvolveResult {
    std::vector<TrajectoryPoint> trace;
    SpinorWaveFunction psi;
    double absorbed_left = 0.0;
    double absorbed_right = 0.0;
    // spin-resolved absorbed flux; the operational transmitted/reflected
    // subensembles of a run with absorbers on
    kernels::MaskTally left_tally;
    kernels::MaskTally right_tally;
};

// Spin expectations of an absorbed-flux tally (empty tallies give zeros).
struct SubensembleSpin {
    double weight = 0.0; // probability in the subensemble
    double sx = 0.0, sy = 0.0, sz = 0.0;
};
SubensembleSpin subensemble_spin(const kernels::MaskTally& t);

// Strang-split spectral step, potential evaluated at the step midpoint time;
// second order in dt, norm-conserving with the absorber off.
EvolveResult evolve(const WaveFunction& psi0, const PotentialSchedule& schedule,
                    const PropagatorConfig& cfg, double t0, double t1,
                    Exec e = parallel::default_exec());

SpinorEvolveResult evolve_spinor(const SpinorWaveFunction& psi0,
                                 const PotentialSchedule& schedule,
                                 const std::vector<LarmorField>& fields,
                                 const PropagatorConfig& cfg, double t0, double t1,
                                 Exec e = parallel::default_exec());

struct RelaxResult {
    WaveFunction psi;
    double energy = 0.0;
    double kinetic = 0.0;
    int iterations = 0;
    double residual = 0.0; // last |dE| between iterations
    bool converged = false;
};

// Imaginary-time relaxation to the ground state of a sampled potential,
// renormalizing every step, until |dE| < tol between iterations.
RelaxResult relax_ground_state(const Grid& g, const std::vector<double>& v, double dtau,
                               double tol = 1e-10, int max_iter = 200000,
                               std::optional<double> x0_guess = std::nullopt,
                               Exec e = parallel::default_exec());

struct DecayFit {
    double rate = 0.0;     // 1/time
    double residual = 0.0; // rms deviation of ln(survival) from the line fit
    bool exponential = false;
    bool window_reached = false; // survival actually dropped to the fit floor
    std::vector<std::pair<double, double>> survival; // (t, P_well)
};

// Tunnelling decay of a state prepared in a local well: evolves with the
// absorber on, fits ln P_well(t) over the window where P_well is in
// [fit_floor, fit_ceiling] (defaults 0.5 / 0.9 of the initial value).
DecayFit decay_rate(const WaveFunction& psi0, const PotentialSchedule& schedule,
                    const PropagatorConfig& cfg, double t_obs,
                    std::pair<double, double> well_region, double fit_ceiling = 0.9,
                    double fit_floor = 0.5, Exec e = parallel::default_exec());

// residual threshold below which a decay fit counts as exponential
inline constexpr double decay_fit_residual_threshold = 0.02;

} // namespace tlab
