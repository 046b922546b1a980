#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace ebnoise {

using RealMat3 = Eigen::Matrix3d;
using HermitianMat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;
using Mat2c = Eigen::Matrix2cd;
using cplx = std::complex<double>;

/// Sum of singular values.
double trace_norm(const RealMat3& m);

/// Singular values in descending order.
Vec3 singular_values(const RealMat3& m);

struct PolarDecomposition {
  RealMat3 orthogonal;
  RealMat3 psd;
};

/// m = orthogonal * psd with psd = sqrt(m^T m). For rank-deficient input the
/// orthogonal factor is U V^T from the SVD m = U S V^T.
PolarDecomposition polar_decompose(const RealMat3& m);

struct CanonicalDecomposition {
  RealMat3 o1;
  Vec3 d;
  RealMat3 o2;
};

/// m = o1 * diag(d) * o2 with o1, o2 proper rotations. |d| is descending; when
/// det(m) < 0 the negative sign sits on the smallest-magnitude entry.
CanonicalDecomposition canonical_decompose(const RealMat3& m);

/// Transpose of the second factor of the 2 (x) 2 tensor structure.
/// Index convention: row = 2 * a + b with a the first factor.
HermitianMat4 partial_transpose(const HermitianMat4& g);

/// Largest entry of |g - g^dagger|.
double hermiticity_defect(const HermitianMat4& g);

/// Eigenvalues ascending. Throws InvariantError when g is not Hermitian within 1e-12.
std::array<double, 4> hermitian_eigenvalues(const HermitianMat4& g);

/// Smallest eigenvalue; same contract as hermitian_eigenvalues.
double min_eigenvalue(const HermitianMat4& g);

/// Real determinant of a Hermitian matrix.
double hermitian_determinant(const HermitianMat4& g);

}  // namespace ebnoise
