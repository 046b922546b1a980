#pragma once

#include "ebnoise/nc_result.hpp"

namespace ebnoise {

/// Closed-form analysis of the generalized amplitude-damping family Psi_{p,gamma}.
/// Formulas are stated for gamma <= 1/2; the mu_c and n_c entry points reflect
/// gamma > 1/2 through gamma -> 1 - gamma (S1 conjugation leaves both invariant).
namespace gad {

/// mu(Psi; rho0) for rho0 = (1 + vz sigma_z)/2, clamped to [0, 1]. gamma <= 1/2.
double mu_vs_vz(double p, double gamma, double vz);

/// Interior minimiser of mu_vs_vz over vz. Requires p <= pbar(gamma).
double vbar(double p, double gamma);

/// Threshold below which the optimal rho0 is interior (gamma <= 1/2).
double pbar(double gamma);

/// Branch threshold of the two-step closed form (gamma <= 1/2).
double pbarbar(double gamma);

double mu_c(double p, double gamma);

/// mu_c of Psi o Psi.
double mu_c_squared(double p, double gamma);

/// Lower edge of the region where Psi^n is entanglement breaking.
double p_n(double gamma, int n);

/// Smallest n with p >= p_n(gamma). On gamma in {0, 1} with p < 1 the result is
/// ExceedsCap flagged divergent (p_n == 1 for every n).
NcResult n_c(double p, double gamma, int cap);

/// Lower boundary in p of the region where (Psi o S1)^2 is entanglement breaking.
/// Requires 0 < gamma < 1; tends to (sqrt(5) - 1)/2 as gamma -> 0.
double amend_boundary_s1(double gamma);

/// Membership in the S1-amendable band amend_boundary_s1(gamma) <= p < p_n(gamma, 2),
/// where Psi o S1 has order 2 and the S1 filter restores the order of Psi.
bool in_s1_amendable_region(double p, double gamma);

struct RegionPoint {
  double p;
  double gamma;
  NcResult n_c;
};

RegionPoint region_point(double p, double gamma, int cap);

}  // namespace gad
}  // namespace ebnoise
