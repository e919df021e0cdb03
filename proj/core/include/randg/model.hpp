#pragma once

#include <array>

#include "randg/dg_space.hpp"
#include "randg/geometry.hpp"
#include "randg/kinetics.hpp"

namespace randg {

enum class IcProfile { Uniform, PeripheralBand };

struct SpeciesInitial {
  Compartment compartment = Compartment::Cytoplasm;
  IcProfile profile = IcProfile::Uniform;
  double amplitude = 0.0;  // uM
};

/// Resting-cell initial state: Ran pools and free receptor uniform in the
/// cytoplasm, activated cargo in a peripheral band at the plasma membrane,
/// complexes and all nuclear concentrations zero.
struct InitialConditions {
  std::array<SpeciesInitial, kNumSpecies> species = {{
      {Compartment::Cytoplasm, IcProfile::Uniform, 3.0},        // Rt
      {Compartment::Cytoplasm, IcProfile::Uniform, 3.0},        // Rd
      {Compartment::Cytoplasm, IcProfile::PeripheralBand, 8.0}, // C
      {Compartment::Cytoplasm, IcProfile::Uniform, 4.0},        // T
      {Compartment::Cytoplasm, IcProfile::Uniform, 0.0},        // Tr
      {Compartment::Cytoplasm, IcProfile::Uniform, 0.0},        // Tc
  }};
  double cargo_band_width = 2.0;  // um, band against the plasma membrane
};

/// All physical parameters of the transport model. Defaults are the values
/// used throughout: diffusivities computed at 20 C with cytoplasm viscosity
/// five times that of water, NPC permeabilities fitted from compartmental
/// studies, and dynein advection of the cargo-receptor complex at 1 um/s
/// directed at the nucleus.
struct ModelParameters {
  std::array<double, kNumSpecies> diffusivity = {22.0, 20.0, 18.2, 14.0, 14.0, 12.4};  // um^2/s
  std::array<double, kNumSpecies> permeability = {0.0, 3.73, 0.0, 1.87, 1.87, 1.87};   // um/s

  bool advection_enabled = true;
  double advection_speed = 1.0;   // um/s
  double advection_margin = 0.5;  // um, cutoff margin at both membranes

  // Optional near-membrane diffusivity multiplier (protein crowding slows
  // diffusion close to the plasma membrane). 1.0 disables the correction.
  double membrane_diffusivity_factor = 1.0;
  double membrane_layer_width = 1.0;  // um

  KineticConstants kinetics;
  InitialConditions initial;

  void validate(const CellGeometry& geometry) const;
};

/// Advection velocity of species s at point x (um/s). Only the
/// cargo-receptor complex is transported: the field points from x toward the
/// nucleus center with magnitude v * chi(x), where chi is a smooth cutoff
/// equal to 1 in the bulk cytoplasm and 0 within `advection_margin` of both
/// the nuclear envelope and the plasma membrane (and everywhere outside the
/// cytoplasm). The field is continuous on the whole cell.
Vec2 advection_field(const Vec2& x, int species, const ModelParameters& params,
                     const CellGeometry& geometry);

/// Per-point diffusivity of species s, including the optional near-membrane
/// correction factor.
double diffusivity_at(const Vec2& x, int species, const ModelParameters& params,
                      const CellGeometry& geometry);

/// Viscosity of water in Pa s at temperature T (Vogel correlation).
double water_viscosity(double temperature_kelvin);

/// Stokes-Einstein diffusivity D = kT / (6 pi eta R_s) in um^2/s, with eta =
/// viscosity_ratio * water viscosity at the given temperature and R_s in nm.
/// Throws std::invalid_argument for non-positive radius or ratio.
double stokes_einstein_diffusivity(double stokes_radius_nm, double viscosity_ratio,
                                   double temperature_kelvin);

/// Pointwise initial value of species s at x.
double initial_value(const Vec2& x, int species, const InitialConditions& ics,
                     const CellGeometry& geometry);

/// L2 projection of the initial conditions onto the DG space. Throws if the
/// cargo band does not fit inside the cytoplasm.
StateVector build_initial_state(const DgSpace& space, const InitialConditions& ics);

}  // namespace randg
