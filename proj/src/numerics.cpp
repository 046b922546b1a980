#include "ebnoise/numerics.hpp"

#include <cmath>

#include "ebnoise/errors.hpp"

namespace ebnoise {

namespace {

constexpr double kHermitianTol = 1e-12;

Eigen::JacobiSVD<RealMat3> full_svd(const RealMat3& m) {
  return Eigen::JacobiSVD<RealMat3>(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
}

void require_hermitian(const HermitianMat4& g) {
  const double defect = hermiticity_defect(g);
  if (!(defect <= kHermitianTol)) {
    throw InvariantError("matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
}

}  // namespace

Vec3 singular_values(const RealMat3& m) {
  return Eigen::JacobiSVD<RealMat3>(m).singularValues();
}

double trace_norm(const RealMat3& m) { return singular_values(m).sum(); }

PolarDecomposition polar_decompose(const RealMat3& m) {
  const auto svd = full_svd(m);
  const RealMat3& u = svd.matrixU();
  const RealMat3& v = svd.matrixV();
  PolarDecomposition out;
  out.orthogonal = u * v.transpose();
  out.psd = v * svd.singularValues().asDiagonal() * v.transpose();
  out.psd = 0.5 * (out.psd + out.psd.transpose()).eval();
  return out;
}

CanonicalDecomposition canonical_decompose(const RealMat3& m) {
  const auto svd = full_svd(m);
  RealMat3 u = svd.matrixU();
  RealMat3 v = svd.matrixV();
  Vec3 d = svd.singularValues();
  // A reflection in either factor moves onto the last (smallest) diagonal entry.
  if (u.determinant() < 0.0) {
    u.col(2) *= -1.0;
    d(2) = -d(2);
  }
  if (v.determinant() < 0.0) {
    v.col(2) *= -1.0;
    d(2) = -d(2);
  }
  return {u, d, v.transpose()};
}

HermitianMat4 partial_transpose(const HermitianMat4& g) {
  HermitianMat4 out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2) out(2 * a + b, 2 * a2 + b2) = g(2 * a + b2, 2 * a2 + b);
  return out;
}

double hermiticity_defect(const HermitianMat4& g) {
  return (g - g.adjoint()).cwiseAbs().maxCoeff();
}

std::array<double, 4> hermitian_eigenvalues(const HermitianMat4& g) {
  require_hermitian(g);
  const HermitianMat4 sym = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<HermitianMat4> es(sym, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

double min_eigenvalue(const HermitianMat4& g) { return hermitian_eigenvalues(g)[0]; }

double hermitian_determinant(const HermitianMat4& g) {
  require_hermitian(g);
  return g.determinant().real();
}

}  // namespace ebnoise
