#pragma once

#include <array>
#include <variant>
#include <vector>

#include "ebnoise/numerics.hpp"

namespace ebnoise {

/// Pauli matrix sigma_j, j = 0..3 with sigma_0 the identity.
Mat2c pauli(int j);

/// Point of the Bloch ball, rho = (1 + v.sigma) / 2.
class BlochVector {
 public:
  BlochVector() : v_(Vec3::Zero()) {}
  explicit BlochVector(const Vec3& v);
  const Vec3& v() const { return v_; }

 private:
  Vec3 v_;
};

Mat2c density_from_bloch(const Vec3& v);
Vec3 bloch_from_density(const Mat2c& rho);

/// Throws InvariantError unless rho is Hermitian, unit trace and PSD within tol.
void require_density_matrix(const Mat2c& rho, double tol = 1e-10);

/// Unital qubit channel through its Bloch-space action v -> T v.
class UnitalChannel {
 public:
  /// Requires the contraction condition T^T T <= 1 (largest eigenvalue <= 1 + 1e-10).
  explicit UnitalChannel(const RealMat3& t);
  const RealMat3& t() const { return t_; }

  /// Complete positivity: the signed canonical triple lies in the tetrahedron
  /// |l1 +- l2| <= |1 +- l3|. T^T T <= 1 alone does not imply it.
  bool completely_positive(double tol = 1e-10) const;

 private:
  RealMat3 t_;
};

/// Generalized amplitude damping parameters.
struct GadParams {
  GadParams(double p, double gamma);
  double p;
  double gamma;
};

class KrausChannel {
 public:
  /// Requires sum_i E_i^dagger E_i = 1 within 1e-10 entrywise.
  explicit KrausChannel(std::vector<Mat2c> ops);
  const std::vector<Mat2c>& ops() const { return ops_; }
  /// Largest entry of |sum E^dagger E - 1|.
  double completeness_defect() const;

 private:
  std::vector<Mat2c> ops_;
};

using Channel = std::variant<UnitalChannel, GadParams, KrausChannel>;

BlochVector apply_unital(const UnitalChannel& c, const BlochVector& v);

/// Bloch matrix of c1 o c2 is T1 T2.
UnitalChannel compose_unital(const UnitalChannel& c1, const UnitalChannel& c2);

KrausChannel gad_kraus(const GadParams& g);

Mat2c apply_kraus(const KrausChannel& c, const Mat2c& rho);

/// Action on a density matrix in any representation.
Mat2c apply(const Channel& c, const Mat2c& rho);

/// Gamma = (Phi (x) I)[psi+], channel on the first factor, psi+ = (|00> + |11>)/sqrt(2).
HermitianMat4 choi(const Channel& c);

/// Kraus operators sqrt(2 lambda) * reshape(v) for every Choi eigenpair with lambda > 1e-12.
KrausChannel kraus_from_choi(const HermitianMat4& g);

/// At most four operators, rebuilt from the Choi eigendecomposition.
KrausChannel prune_kraus(const KrausChannel& c);

/// Kraus form of any representation. Unital input must be completely positive.
KrausChannel to_kraus(const Channel& c);

/// outer o inner. Unital pairs stay unital; anything else becomes a pruned Kraus list.
Channel compose(const Channel& outer, const Channel& inner);

/// n-fold self composition, n >= 1.
Channel channel_power(const Channel& c, int n);

/// p = M^-1 (1, l1, l2, l3) such that Phi_lambda = sum_i p_i S_i with S_i[rho] = sigma_i rho sigma_i.
std::array<double, 4> pauli_decompose(const Vec3& lambda);

KrausChannel unitary_channel(const Mat2c& u);

/// R_ij = Tr(sigma_i U sigma_j U^dagger) / 2.
RealMat3 rotation_from_unitary(const Mat2c& u);

/// SU(2) element whose Bloch action is the proper rotation r.
Mat2c unitary_from_rotation(const RealMat3& r);

/// Unitary channel with Bloch rotation r (det +1).
UnitalChannel rotation_channel(const RealMat3& r);

}  // namespace ebnoise
