#include "randg/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace randg {

void ModelParameters::validate(const CellGeometry& geometry) const {
  geometry.validate();
  kinetics.validate();
  for (int s = 0; s < kNumSpecies; ++s) {
    if (!(diffusivity[s] > 0.0)) {
      throw std::invalid_argument(std::string("ModelParameters: diffusivity of ") +
                                  species_label(s) + " must be positive");
    }
    if (!(permeability[s] >= 0.0)) {
      throw std::invalid_argument(std::string("ModelParameters: permeability of ") +
                                  species_label(s) + " must be nonnegative");
    }
  }
  if (!(advection_speed >= 0.0)) {
    throw std::invalid_argument("ModelParameters: advection_speed must be nonnegative");
  }
  if (!(advection_margin > 0.0)) {
    throw std::invalid_argument("ModelParameters: advection_margin must be positive");
  }
  if (2.0 * advection_margin >= 0.5 * (geometry.cell_radius - geometry.nucleus_radius)) {
    throw std::invalid_argument("ModelParameters: advection_margin too large for the cytoplasm");
  }
  if (!(membrane_diffusivity_factor > 0.0)) {
    throw std::invalid_argument("ModelParameters: membrane_diffusivity_factor must be positive");
  }
  if (!(initial.cargo_band_width > 0.0) ||
      initial.cargo_band_width > geometry.cell_radius - geometry.nucleus_radius) {
    throw std::invalid_argument("ModelParameters: cargo band must lie inside the cytoplasm");
  }
}

namespace {

// Cubic smoothstep ramp: 0 for t <= 0, 1 for t >= 1.
double ramp(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * (3.0 - 2.0 * t);
}

}  // namespace

Vec2 advection_field(const Vec2& x, int species, const ModelParameters& params,
                     const CellGeometry& geometry) {
  if (species != kReceptorCargo || !params.advection_enabled || params.advection_speed == 0.0) {
    return Vec2::Zero();
  }
  const Vec2 rel = x - geometry.center;
  const double r = rel.norm();
  const double a = geometry.nucleus_radius;
  const double R = geometry.cell_radius;
  const double delta = params.advection_margin;
  if (r <= a + delta || r >= R - delta) return Vec2::Zero();

  // chi ramps 0 -> 1 over [delta, 2 delta] from either membrane.
  double chi = ramp((r - a - delta) / delta) * ramp((R - delta - r) / delta);
  if (chi == 0.0) return Vec2::Zero();
  return -(params.advection_speed * chi / r) * rel;
}

double diffusivity_at(const Vec2& x, int species, const ModelParameters& params,
                      const CellGeometry& geometry) {
  double d = params.diffusivity[species];
  if (params.membrane_diffusivity_factor != 1.0) {
    double r = (x - geometry.center).norm();
    if (r >= geometry.cell_radius - params.membrane_layer_width) {
      d *= params.membrane_diffusivity_factor;
    }
  }
  return d;
}

double water_viscosity(double temperature_kelvin) {
  // Vogel equation for liquid water; 1.0016e-3 Pa s at 293.15 K.
  return 2.414e-5 * std::pow(10.0, 247.8 / (temperature_kelvin - 140.0));
}

double stokes_einstein_diffusivity(double stokes_radius_nm, double viscosity_ratio,
                                   double temperature_kelvin) {
  if (!(stokes_radius_nm > 0.0)) {
    throw std::invalid_argument("stokes_einstein_diffusivity: radius must be positive");
  }
  if (!(viscosity_ratio > 0.0)) {
    throw std::invalid_argument("stokes_einstein_diffusivity: viscosity ratio must be positive");
  }
  constexpr double k_boltzmann = 1.380649e-23;  // J/K
  const double eta = viscosity_ratio * water_viscosity(temperature_kelvin);
  const double radius_m = stokes_radius_nm * 1e-9;
  const double d_m2_per_s =
      k_boltzmann * temperature_kelvin / (6.0 * std::numbers::pi * eta * radius_m);
  return d_m2_per_s * 1e12;  // m^2/s -> um^2/s
}

double initial_value(const Vec2& x, int species, const InitialConditions& ics,
                     const CellGeometry& geometry) {
  const SpeciesInitial& ic = ics.species[species];
  if (ic.amplitude == 0.0) return 0.0;

  const double r = (x - geometry.center).norm();
  const double a = geometry.nucleus_radius;
  const double R = geometry.cell_radius;
  const bool in_nucleus = r < a;
  if ((ic.compartment == Compartment::Nucleus) != in_nucleus) return 0.0;

  switch (ic.profile) {
    case IcProfile::Uniform:
      return ic.amplitude;
    case IcProfile::PeripheralBand:
      return (r >= R - ics.cargo_band_width) ? ic.amplitude : 0.0;
  }
  return 0.0;
}

StateVector build_initial_state(const DgSpace& space, const InitialConditions& ics) {
  const CellGeometry& geometry = space.mesh().geometry();
  if (!(ics.cargo_band_width > 0.0) ||
      ics.cargo_band_width > geometry.cell_radius - geometry.nucleus_radius) {
    throw std::invalid_argument("build_initial_state: cargo band extends outside the cytoplasm");
  }
  StateVector u(space.n_total_dofs());
  for (int s = 0; s < space.n_species(); ++s) {
    auto f = [&, s](const Vec2& x) { return initial_value(x, s, ics, geometry); };
    space.species_block(u, s) = space.interpolate_scalar(f);
  }
  return u;
}

}  // namespace randg
