#pragma once

#include "ebnoise/numerics.hpp"
#include "ebnoise/qubit_channels.hpp"

namespace ebnoise {

inline constexpr double kSeparabilityTol = 1e-10;

/// Validated two-qubit state: Hermitian, unit trace and PSD within tolerance.
class ChoiState {
 public:
  explicit ChoiState(const HermitianMat4& g, double tolerance = kSeparabilityTol);
  const HermitianMat4& g() const { return g_; }
  double tolerance() const { return tolerance_; }

 private:
  HermitianMat4 g_;
  double tolerance_;
};

struct PptWitness {
  double min_pt_eigenvalue;
  double pt_determinant;
};

PptWitness ppt_witness(const ChoiState& s);

/// Peres-Horodecki decision: min eigenvalue of the partial transpose >= -tol.
/// The boundary counts as separable.
bool is_separable(const ChoiState& s, double tol = kSeparabilityTol);

/// (1 - mu) Gamma_Phi + mu rho0 (x) 1/2.
ChoiState noisy_choi(const Channel& c, const Mat2c& rho0, double mu);

/// Same mixture from a precomputed Choi matrix; no validation.
HermitianMat4 noisy_choi_matrix(const HermitianMat4& choi_matrix, const Mat2c& rho0, double mu);

/// (1 - mu) psi+ + mu 1/4.
ChoiState werner_state(double mu);

/// Unital input: ||T||_1 <= 1 + 1e-10. Otherwise separability of the Choi state.
bool is_eb(const Channel& c);

/// Choi-separability route for every representation (unital input must be CP).
bool is_eb_by_choi(const Channel& c);

}  // namespace ebnoise
