#pragma once

#include <array>

#include <Eigen/Dense>

namespace randg {

/// Species of the Ran import network, in state-vector order. This order is a
/// layout contract shared by the PDE state, the compartment ODE reduction and
/// every file format.
enum Species : int {
  kRanGtp = 0,          // Rt
  kRanGdp = 1,          // Rd, NTF2-bound pool
  kCargo = 2,           // C
  kReceptor = 3,        // T
  kReceptorRanGtp = 4,  // Tr
  kReceptorCargo = 5,   // Tc
};
inline constexpr int kNumSpecies = 6;

/// Short species labels used in file headers: Rt Rd C T Tr Tc.
const char* species_label(int s);

enum class Compartment { Cytoplasm, Nucleus };

/// Where each reaction runs. RanGAP hydrolysis is cytoplasmic, RCC1 exchange
/// nuclear, receptor-RanGTP binding runs everywhere, cargo pickup is
/// cytoplasmic and RanGTP-mediated cargo release nuclear.
enum class Reaction { M1, M2, R1, RMinus1, R2, R3 };
enum class ReactionLocus { CytoplasmOnly, NucleusOnly, Both };
ReactionLocus reaction_locus(Reaction r);
bool reaction_active(Reaction r, Compartment c);

/// Kinetic constants. Rates in 1/s, second-order constants in 1/(uM s),
/// Michaelis constants and enzyme concentrations in uM.
struct KineticConstants {
  double q_cat1 = 20.1;   // RanGAP turnover
  double K_M1 = 0.7;
  double q_cat2 = 8.0;    // RCC1 turnover
  double K_M2 = 1.1;
  double k1 = 0.1;        // Rt + T -> Tr
  double k_minus1 = 0.3;  // Tr -> Rt + T
  double k2 = 0.15;       // C + T -> Tc
  double k3 = 0.1;        // Rt + Tc -> Tr + C
  double rangap = 0.5;    // enzyme concentrations, held constant
  double rcc1 = 0.7;

  void validate() const;  // throws std::invalid_argument unless all positive
};

using SpeciesVec = Eigen::Matrix<double, kNumSpecies, 1>;
using SpeciesMat = Eigen::Matrix<double, kNumSpecies, kNumSpecies>;

/// Michaelis-Menten rate of RanGTP hydrolysis by RanGAP (uM/s). Negative
/// concentrations are clamped to zero; NaN input throws.
double rate_m1(double rangtp, const KineticConstants& k);

/// Michaelis-Menten rate of nucleotide exchange by RCC1 (uM/s).
double rate_m2(double rangdp, const KineticConstants& k);

/// Mass-action rates: first order k*a, second order k*a*b.
double rate_mass_action(double constant, double conc_a);
double rate_mass_action(double constant, double conc_a, double conc_b);

/// Reaction source f(u) for one compartment (uM/s). The lumped totals
/// Rt+Rd+Tr, C+Tc and T+Tr+Tc have identically zero source in both
/// compartments.
SpeciesVec reaction_source(const SpeciesVec& u, Compartment c, const KineticConstants& k);

/// Analytic Jacobian of reaction_source (1/s). At clamped (negative) inputs
/// the one-sided derivative of the clamped rate is used.
SpeciesMat reaction_jacobian(const SpeciesVec& u, Compartment c, const KineticConstants& k);

}  // namespace randg
