#pragma once

#include <Eigen/Dense>

#include "ebnoise/nc_result.hpp"

namespace ebnoise::gaussian {

using Mat2 = Eigen::Matrix2d;
using Vec2 = Eigen::Vector2d;

/// Symplectic form [[0, 1], [-1, 0]]; units hbar = 1, vacuum variance 1/2.
Mat2 symplectic_form();

/// One-mode Gaussian channel acting on Weyl operators as
/// W(z) -> W(K z) exp(i l.z - z^T beta z / 2).
class GaussianChannel {
 public:
  /// Requires beta symmetric and beta -+ (i/2)(Delta - K^T Delta K) >= 0 within
  /// 1e-10 times max(1, max|beta_ij|, sum K_ij^2).
  GaussianChannel(const Mat2& k, const Vec2& l, const Mat2& beta);
  const Mat2& k() const { return k_; }
  const Vec2& l() const { return l_; }
  const Mat2& beta() const { return beta_; }

 private:
  Mat2 k_;
  Vec2 l_;
  Mat2 beta_;
};

/// Smallest eigenvalue of beta - (i/2)(Delta - K^T Delta K); >= 0 for CPT maps.
double cpt_margin(const Mat2& k, const Mat2& beta);

enum class Family { Attenuation, Amplification };

/// Isotropic attenuation (0 < k < 1) or amplification (k > 1) with added noise N0 >= 0.
struct IsoChannel {
  IsoChannel(Family family, double k, double n0);
  Family family;
  double k;
  double n0;
};

const char* family_name(Family f);

/// K = k 1, l = 0, beta = (N0 + |1 - k^2| / 2) 1.
GaussianChannel to_triplet(const IsoChannel& c);

/// c2 o c1: K = K1 K2, l = K2^T l1 + l2, beta = K2^T beta1 K2 + beta2.
GaussianChannel compose_gaussian(const GaussianChannel& c1, const GaussianChannel& c2);

/// n-fold self composition, n >= 1.
GaussianChannel gaussian_power(const GaussianChannel& c, int n);

/// Scalar split criterion on the isotropic family: N0 >= k^2 (attenuation),
/// N0 >= 1 (amplification). Boundary inclusive.
bool is_eb_iso(const IsoChannel& c);

/// Sufficient test for the split beta = alpha + nu with the isotropic ansatz
/// alpha = a 1: feasible iff lambda_min(beta - (i/2) K^T Delta K) >= 1/2.
/// Exact for K proportional to the identity and isotropic beta. tol is scaled
/// like the CPT tolerance.
bool is_eb_split(const GaussianChannel& c, double tol = 1e-12);

/// Smallest n with N0 >= k^{2n} / sum_{j<n} k^{2j}; N0 = 0 gives ExceedsCap.
NcResult n_c_attenuation(double k, double n0, int cap);

/// Smallest n with N0 >= 1 / sum_{j<n} k^{2j}; N0 = 0 gives ExceedsCap.
NcResult n_c_amplification(double k, double n0, int cap);

NcResult n_c_iso(const IsoChannel& c, int cap);

/// Iterate compose_gaussian and apply is_eb_split at each step.
NcResult n_c_by_iteration(const IsoChannel& c, int cap);

/// Lower N0 boundary of the EB^n region for the family.
double ebn_lower_boundary(Family f, double k, int n);

}  // namespace ebnoise::gaussian
