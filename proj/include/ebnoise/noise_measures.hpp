#pragma once

#include <vector>

#include "ebnoise/nc_result.hpp"
#include "ebnoise/qubit_channels.hpp"

namespace ebnoise {

inline constexpr int kDefaultCap = 64;

struct MuOptions {
  /// Bisection bracket width on mu.
  double tol = 1e-6;
  int restarts = 3;
  double simplex_tol = 1e-4;
  double initial_step = 0.2;
};

/// Smallest mu making (1 - mu) Phi + mu Phi_dep^{rho0} entanglement breaking, by
/// bisection on the separability of the noisy Choi state. Result lies in
/// [threshold, threshold + tol].
double mu_given_rho0(const Channel& c, const Mat2c& rho0, double tol = 1e-6);

/// Same bisection on a precomputed Choi matrix.
double mu_given_rho0_choi(const HermitianMat4& choi_matrix, const Mat2c& rho0, double tol);

struct MuSearchResult {
  double mu_c = 0.0;
  Vec3 rho0 = Vec3::Zero();
  /// max - min over the simplex restarts.
  double restart_spread = 0.0;
  bool restart_disagreement = false;
};

/// Start points of the generic search: Bloch-ball centre, six poles on the
/// sphere, eight cube corners and twelve edge midpoints at radius 0.7.
std::vector<Vec3> bloch_start_points();

/// Generic route: minimum of mu_given_rho0 over the Bloch ball by multistart
/// Nelder-Mead. Representation-agnostic; the oracle for every closed form.
MuSearchResult mu_c_search(const Channel& c, const MuOptions& options = {});

/// max{0, (||T||_1 - 1) / ||T||_1}.
double mu_c_unital(const UnitalChannel& c);

/// Closed forms for unital and GAD input, generic search otherwise.
double mu_c(const Channel& c, const MuOptions& options = {});

/// d / (1 + d), d >= 2.
double mu_c_upper_bound(int d);

/// Phi^n is entanglement breaking. Unital input uses ||T^n||_1 <= 1.
bool ebn_member(const Channel& c, int n);

/// Smallest n <= cap with Phi in EB^n. Unital: trace norms of T^n; GAD: closed
/// form (divergence certified on the amplitude-damping edges); otherwise iteration.
NcResult n_c(const Channel& c, int cap = kDefaultCap);

/// Brute force: compose in Kraus form and test Choi separability at every step.
NcResult n_c_by_iteration(const Channel& c, int cap = kDefaultCap);

struct NoiseReport {
  double mu_c = 0.0;
  NcResult n_c = NcResult::exceeds_cap(kDefaultCap);
  /// Entry i is EB^(i+1) membership, i = 0..cap-1.
  std::vector<bool> ebn;
  bool restart_disagreement = false;
};

NoiseReport analyze(const Channel& c, int cap = kDefaultCap, const MuOptions& options = {});

}  // namespace ebnoise
