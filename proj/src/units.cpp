#include "tlab/units.hpp"

#include <cmath>

namespace tlab {

std::string dimension_name(Dimension d)
{
    switch (d) {
    case Dimension::Length: return "length";
    case Dimension::Time: return "time";
    case Dimension::Energy: return "energy";
    case Dimension::Velocity: return "velocity";
    case Dimension::Temperature: return "temperature";
    case Dimension::Frequency: return "frequency";
    case Dimension::EnergyPerLength: return "energy/length";
    case Dimension::Dimensionless: return "dimensionless";
    }
    return "unknown";
}

Quantity Quantity::operator+(const Quantity& o) const
{
    if (dimension != o.dimension)
        throw UnitError("quantity arithmetic between " + dimension_name(dimension) + " and " +
                        dimension_name(o.dimension));
    return {value + o.value, dimension};
}

Quantity Quantity::operator-(const Quantity& o) const
{
    if (dimension != o.dimension)
        throw UnitError("quantity arithmetic between " + dimension_name(dimension) + " and " +
                        dimension_name(o.dimension));
    return {value - o.value, dimension};
}

UnitSystem::UnitSystem(double mass_kg, double length_unit_m)
    : mass_kg_(mass_kg), length_m_(length_unit_m)
{
    if (mass_kg_ <= 0.0 || length_m_ <= 0.0)
        throw UnitError("unit system requires positive mass and length unit");
    time_s_ = mass_kg_ * length_m_ * length_m_ / constants::hbar;
    energy_j_ = constants::hbar / time_s_;
}

double UnitSystem::to_internal(double si_value, Dimension d) const
{
    switch (d) {
    case Dimension::Length: return si_value / length_m_;
    case Dimension::Time: return si_value / time_s_;
    case Dimension::Energy: return si_value / energy_j_;
    case Dimension::Velocity: return si_value / velocity_unit_ms();
    case Dimension::Temperature: return si_value * constants::k_boltzmann / energy_j_;
    case Dimension::Frequency: return si_value * time_s_;
    case Dimension::EnergyPerLength: return si_value * length_m_ / energy_j_;
    case Dimension::Dimensionless: return si_value;
    }
    throw UnitError("unknown dimension in to_internal");
}

double UnitSystem::to_internal(const Quantity& q) const { return to_internal(q.value, q.dimension); }

double UnitSystem::from_internal(double internal_value, Dimension d) const
{
    switch (d) {
    case Dimension::Length: return internal_value * length_m_;
    case Dimension::Time: return internal_value * time_s_;
    case Dimension::Energy: return internal_value * energy_j_;
    case Dimension::Velocity: return internal_value * velocity_unit_ms();
    case Dimension::Temperature: return internal_value * energy_j_ / constants::k_boltzmann;
    case Dimension::Frequency: return internal_value / time_s_;
    case Dimension::EnergyPerLength: return internal_value * energy_j_ / length_m_;
    case Dimension::Dimensionless: return internal_value;
    }
    throw UnitError("unknown dimension in from_internal");
}

double UnitSystem::thermal_de_broglie_m(double temperature_k, DeBroglieConvention c) const
{
    if (!(temperature_k > 0.0)) throw UnitError("thermal de Broglie wavelength requires T > 0");
    const double kt = constants::k_boltzmann * temperature_k;
    switch (c) {
    case DeBroglieConvention::HOverMvRms: {
        const double v_rms = std::sqrt(kt / mass_kg_);
        return constants::planck_h / (mass_kg_ * v_rms);
    }
    case DeBroglieConvention::ThermalStandard: {
        const double pi = std::acos(-1.0);
        return constants::planck_h / std::sqrt(2.0 * pi * mass_kg_ * kt);
    }
    }
    throw UnitError("unknown de Broglie convention");
}

double UnitSystem::gradient_si_from_tesla_per_m(double tesla_per_m,
                                                double moment_bohr_magnetons) const
{
    return tesla_per_m * moment_bohr_magnetons * constants::bohr_magneton; // J/m
}

} // namespace tlab
