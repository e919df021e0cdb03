#include "randg/kinetics.hpp"

#include <cmath>
#include <stdexcept>

namespace randg {

const char* species_label(int s) {
  static const char* labels[kNumSpecies] = {"Rt", "Rd", "C", "T", "Tr", "Tc"};
  if (s < 0 || s >= kNumSpecies) throw std::invalid_argument("species_label: bad index");
  return labels[s];
}

ReactionLocus reaction_locus(Reaction r) {
  switch (r) {
    case Reaction::M1: return ReactionLocus::CytoplasmOnly;
    case Reaction::M2: return ReactionLocus::NucleusOnly;
    case Reaction::R1: return ReactionLocus::Both;
    case Reaction::RMinus1: return ReactionLocus::Both;
    case Reaction::R2: return ReactionLocus::CytoplasmOnly;
    case Reaction::R3: return ReactionLocus::NucleusOnly;
  }
  throw std::invalid_argument("reaction_locus: bad reaction");
}

bool reaction_active(Reaction r, Compartment c) {
  switch (reaction_locus(r)) {
    case ReactionLocus::Both: return true;
    case ReactionLocus::CytoplasmOnly: return c == Compartment::Cytoplasm;
    case ReactionLocus::NucleusOnly: return c == Compartment::Nucleus;
  }
  return false;
}

void KineticConstants::validate() const {
  const double vals[] = {q_cat1, K_M1, q_cat2, K_M2, k1, k_minus1, k2, k3, rangap, rcc1};
  for (double v : vals) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("KineticConstants: all constants must be positive and finite");
    }
  }
}

namespace {

double clamp_conc(double x) {
  if (std::isnan(x)) throw std::invalid_argument("kinetics: NaN concentration");
  return x > 0.0 ? x : 0.0;
}

double mm_rate(double x, double q_cat, double enzyme, double k_m) {
  x = clamp_conc(x);
  return q_cat * enzyme * x / (k_m + x);
}

double mm_rate_derivative(double x, double q_cat, double enzyme, double k_m) {
  if (std::isnan(x)) throw std::invalid_argument("kinetics: NaN concentration");
  if (x < 0.0) return 0.0;  // clamped region
  double denom = k_m + x;
  return q_cat * enzyme * k_m / (denom * denom);
}

}  // namespace

double rate_m1(double rangtp, const KineticConstants& k) {
  return mm_rate(rangtp, k.q_cat1, k.rangap, k.K_M1);
}

double rate_m2(double rangdp, const KineticConstants& k) {
  return mm_rate(rangdp, k.q_cat2, k.rcc1, k.K_M2);
}

double rate_mass_action(double constant, double conc_a) {
  return constant * clamp_conc(conc_a);
}

double rate_mass_action(double constant, double conc_a, double conc_b) {
  return constant * clamp_conc(conc_a) * clamp_conc(conc_b);
}

SpeciesVec reaction_source(const SpeciesVec& u, Compartment c, const KineticConstants& k) {
  const double rt = u[kRanGtp], rd = u[kRanGdp], cc = u[kCargo], t = u[kReceptor],
               tr = u[kReceptorRanGtp], tc = u[kReceptorCargo];

  const double r1 = rate_mass_action(k.k1, rt, t);
  const double rm1 = rate_mass_action(k.k_minus1, tr);

  SpeciesVec f = SpeciesVec::Zero();
  if (c == Compartment::Cytoplasm) {
    const double m1 = rate_m1(rt, k);
    const double r2 = rate_mass_action(k.k2, cc, t);
    f[kRanGtp] = -m1 - r1 + rm1;
    f[kRanGdp] = m1;
    f[kCargo] = -r2;
    f[kReceptor] = -r1 + rm1 - r2;
    f[kReceptorRanGtp] = r1 - rm1;
    f[kReceptorCargo] = r2;
  } else {
    const double m2 = rate_m2(rd, k);
    const double r3 = rate_mass_action(k.k3, rt, tc);
    f[kRanGtp] = m2 - r1 + rm1 - r3;
    f[kRanGdp] = -m2;
    f[kCargo] = r3;
    f[kReceptor] = -r1 + rm1;
    f[kReceptorRanGtp] = r1 - rm1 + r3;
    f[kReceptorCargo] = -r3;
  }
  return f;
}

SpeciesMat reaction_jacobian(const SpeciesVec& u, Compartment c, const KineticConstants& k) {
  auto d = [](double x) {  // derivative factor of the clamp
    if (std::isnan(x)) throw std::invalid_argument("kinetics: NaN concentration");
    return x < 0.0 ? 0.0 : 1.0;
  };
  auto pos = [](double x) { return x > 0.0 ? x : 0.0; };

  const double rt = u[kRanGtp], rd = u[kRanGdp], cc = u[kCargo], t = u[kReceptor],
               tr = u[kReceptorRanGtp], tc = u[kReceptorCargo];
  (void)rd;
  (void)tr;

  // d r1 / d rt, d r1 / d t, etc., with the clamp's one-sided derivative.
  const double dr1_drt = k.k1 * d(rt) * pos(t);
  const double dr1_dt = k.k1 * pos(rt) * d(t);
  const double drm1_dtr = k.k_minus1 * d(u[kReceptorRanGtp]);

  SpeciesMat J = SpeciesMat::Zero();
  if (c == Compartment::Cytoplasm) {
    const double dm1 = mm_rate_derivative(rt, k.q_cat1, k.rangap, k.K_M1);
    const double dr2_dc = k.k2 * d(cc) * pos(t);
    const double dr2_dt = k.k2 * pos(cc) * d(t);

    J(kRanGtp, kRanGtp) = -dm1 - dr1_drt;
    J(kRanGtp, kReceptor) = -dr1_dt;
    J(kRanGtp, kReceptorRanGtp) = drm1_dtr;

    J(kRanGdp, kRanGtp) = dm1;

    J(kCargo, kCargo) = -dr2_dc;
    J(kCargo, kReceptor) = -dr2_dt;

    J(kReceptor, kRanGtp) = -dr1_drt;
    J(kReceptor, kCargo) = -dr2_dc;
    J(kReceptor, kReceptor) = -dr1_dt - dr2_dt;
    J(kReceptor, kReceptorRanGtp) = drm1_dtr;

    J(kReceptorRanGtp, kRanGtp) = dr1_drt;
    J(kReceptorRanGtp, kReceptor) = dr1_dt;
    J(kReceptorRanGtp, kReceptorRanGtp) = -drm1_dtr;

    J(kReceptorCargo, kCargo) = dr2_dc;
    J(kReceptorCargo, kReceptor) = dr2_dt;
  } else {
    const double dm2 = mm_rate_derivative(u[kRanGdp], k.q_cat2, k.rcc1, k.K_M2);
    const double dr3_drt = k.k3 * d(rt) * pos(tc);
    const double dr3_dtc = k.k3 * pos(rt) * d(tc);

    J(kRanGtp, kRanGtp) = -dr1_drt - dr3_drt;
    J(kRanGtp, kRanGdp) = dm2;
    J(kRanGtp, kReceptor) = -dr1_dt;
    J(kRanGtp, kReceptorRanGtp) = drm1_dtr;
    J(kRanGtp, kReceptorCargo) = -dr3_dtc;

    J(kRanGdp, kRanGdp) = -dm2;

    J(kCargo, kRanGtp) = dr3_drt;
    J(kCargo, kReceptorCargo) = dr3_dtc;

    J(kReceptor, kRanGtp) = -dr1_drt;
    J(kReceptor, kReceptor) = -dr1_dt;
    J(kReceptor, kReceptorRanGtp) = drm1_dtr;

    J(kReceptorRanGtp, kRanGtp) = dr1_drt + dr3_drt;
    J(kReceptorRanGtp, kReceptor) = dr1_dt;
    J(kReceptorRanGtp, kReceptorRanGtp) = -drm1_dtr;
    J(kReceptorRanGtp, kReceptorCargo) = dr3_dtc;

    J(kReceptorCargo, kRanGtp) = -dr3_drt;
    J(kReceptorCargo, kReceptorCargo) = -dr3_dtc;
  }
  return J;
}

}  // namespace randg
