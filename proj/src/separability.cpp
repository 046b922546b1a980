#include "ebnoise/separability.hpp"

#include <cmath>
#include <string>

#include "ebnoise/errors.hpp"

namespace ebnoise {

ChoiState::ChoiState(const HermitianMat4& g, double tolerance) : tolerance_(tolerance) {
  if (hermiticity_defect(g) > tolerance) throw InvariantError("state is not Hermitian");
  g_ = 0.5 * (g + g.adjoint());
  if (std::abs(g_.trace() - 1.0) > tolerance) throw InvariantError("state trace differs from 1");
  const double lmin = min_eigenvalue(g_);
  if (lmin < -tolerance) {
    throw InvariantError("state is not positive semidefinite (min eigenvalue " +
                         std::to_string(lmin) + ")");
  }
}

PptWitness ppt_witness(const ChoiState& s) {
  const HermitianMat4 pt = partial_transpose(s.g());
  return {min_eigenvalue(pt), hermitian_determinant(pt)};
}

bool is_separable(const ChoiState& s, double tol) {
  return min_eigenvalue(partial_transpose(s.g())) >= -tol;
}

HermitianMat4 noisy_choi_matrix(const HermitianMat4& choi_matrix, const Mat2c& rho0, double mu) {
  HermitianMat4 noise = HermitianMat4::Zero();
  for (int a = 0; a < 2; ++a)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b = 0; b < 2; ++b) noise(2 * a + b, 2 * a2 + b) = 0.5 * rho0(a, a2);
  return (1.0 - mu) * choi_matrix + mu * noise;
}

ChoiState noisy_choi(const Channel& c, const Mat2c& rho0, double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw InvariantError("mixing probability must lie in [0, 1]");
  require_density_matrix(rho0);
  return ChoiState(noisy_choi_matrix(choi(c), rho0, mu));
}

ChoiState werner_state(double mu) {
  return noisy_choi(UnitalChannel(RealMat3::Identity()), 0.5 * Mat2c::Identity(), mu);
}

bool is_eb(const Channel& c) {
  if (const auto* u = std::get_if<UnitalChannel>(&c)) return trace_norm(u->t()) <= 1.0 + 1e-10;
  return is_separable(ChoiState(choi(c)));
}

bool is_eb_by_choi(const Channel& c) { return is_separable(ChoiState(choi(c))); }

}  // namespace ebnoise
