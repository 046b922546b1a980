#include "ebnoise/gaussian1m.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "ebnoise/errors.hpp"

namespace ebnoise::gaussian {

namespace {

constexpr double kBoundaryTol = 1e-12;

using Mat2c = Eigen::Matrix2cd;

double min_eig_hermitian(const Mat2c& m) {
  Eigen::SelfAdjointEigenSolver<Mat2c> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double geometric_sum(double k, int terms) {
  double sum = 0.0;
  double term = 1.0;
  for (int j = 0; j < terms; ++j) {
    sum += term;
    term *= k * k;
  }
  return sum;
}

// absolute tolerances are applied on this scale so that long compositions of
// amplifiers (beta ~ k^(2n)) keep their rounding inside the tolerance
double magnitude(const Mat2& k, const Mat2& beta) {
  return std::max({1.0, beta.cwiseAbs().maxCoeff(), k.cwiseAbs2().sum()});
}

void require_cap(int cap) {
  if (cap < 1) throw InvariantError("cap must be >= 1");
}

}  // namespace

Mat2 symplectic_form() {
  Mat2 d;
  d << 0, 1, -1, 0;
  return d;
}

double cpt_margin(const Mat2& k, const Mat2& beta) {
  const Mat2 delta = symplectic_form();
  const Mat2 sigma = delta - k.transpose() * delta * k;
  // beta + (i/2) sigma is the complex conjugate of beta - (i/2) sigma: same spectrum
  const Mat2c m = beta.cast<std::complex<double>>() - std::complex<double>(0.0, 0.5) * sigma.cast<std::complex<double>>();
  return min_eig_hermitian(m);
}

GaussianChannel::GaussianChannel(const Mat2& k, const Vec2& l, const Mat2& beta)
    : k_(k), l_(l), beta_(beta) {
  if (!k.allFinite() || !l.allFinite() || !beta.allFinite()) {
    throw InvariantError("Gaussian channel parameters must be finite");
  }
  if (std::abs(beta(0, 1) - beta(1, 0)) > 1e-12) throw InvariantError("beta must be symmetric");
  if (cpt_margin(k, beta) < -1e-10 * magnitude(k, beta)) throw InvariantError("Gaussian triplet violates complete positivity");
}

IsoChannel::IsoChannel(Family family_, double k_, double n0_) : family(family_), k(k_), n0(n0_) {
  if (!std::isfinite(k) || !std::isfinite(n0) || n0 < 0.0) throw InvariantError("N0 must be finite and >= 0");
  if (family == Family::Attenuation && !(k > 0.0 && k < 1.0)) {
    throw InvariantError("attenuation requires 0 < k < 1");
  }
  if (family == Family::Amplification && !(k > 1.0)) throw InvariantError("amplification requires k > 1");
}

const char* family_name(Family f) { return f == Family::Attenuation ? "attenuation" : "amplification"; }

GaussianChannel to_triplet(const IsoChannel& c) {
  const double b = c.n0 + std::abs(1.0 - c.k * c.k) / 2.0;
  return GaussianChannel(c.k * Mat2::Identity(), Vec2::Zero(), b * Mat2::Identity());
}

GaussianChannel compose_gaussian(const GaussianChannel& c1, const GaussianChannel& c2) {
  return GaussianChannel(c1.k() * c2.k(), c2.k().transpose() * c1.l() + c2.l(),
                         c2.k().transpose() * c1.beta() * c2.k() + c2.beta());
}

GaussianChannel gaussian_power(const GaussianChannel& c, int n) {
  if (n < 1) throw InvariantError("power requires n >= 1");
  GaussianChannel acc = c;
  for (int i = 1; i < n; ++i) acc = compose_gaussian(acc, c);
  return acc;
}

bool is_eb_iso(const IsoChannel& c) {
  const double b = c.n0 + std::abs(1.0 - c.k * c.k) / 2.0;
  return b >= (1.0 + c.k * c.k) / 2.0 - kBoundaryTol;
}

bool is_eb_split(const GaussianChannel& c, double tol) {
  const Mat2 delta = symplectic_form();
  const Mat2 s = c.k().transpose() * delta * c.k();
  const Mat2c m = c.beta().cast<std::complex<double>>() - std::complex<double>(0.0, 0.5) * s.cast<std::complex<double>>();
  return min_eig_hermitian(m) >= 0.5 - tol * magnitude(c.k(), c.beta());
}

double ebn_lower_boundary(Family f, double k, int n) {
  if (n < 1) throw InvariantError("order must be >= 1");
  const double sum = geometric_sum(k, n);
  if (f == Family::Attenuation) return std::pow(k, 2 * n) / sum;
  return 1.0 / sum;
}

NcResult n_c_attenuation(double k, double n0, int cap) {
  const IsoChannel c(Family::Attenuation, k, n0);
  require_cap(cap);
  if (c.n0 == 0.0) return NcResult::exceeds_cap(cap);
  for (int n = 1; n <= cap; ++n) {
    if (n0 >= ebn_lower_boundary(Family::Attenuation, k, n) - kBoundaryTol) return NcResult::finite(n);
  }
  return NcResult::exceeds_cap(cap);
}

NcResult n_c_amplification(double k, double n0, int cap) {
  const IsoChannel c(Family::Amplification, k, n0);
  require_cap(cap);
  if (c.n0 == 0.0) return NcResult::exceeds_cap(cap);
  for (int n = 1; n <= cap; ++n) {
    if (n0 >= ebn_lower_boundary(Family::Amplification, k, n) - kBoundaryTol) return NcResult::finite(n);
  }
  return NcResult::exceeds_cap(cap);
}

NcResult n_c_iso(const IsoChannel& c, int cap) {
  return c.family == Family::Attenuation ? n_c_attenuation(c.k, c.n0, cap)
                                          : n_c_amplification(c.k, c.n0, cap);
}

NcResult n_c_by_iteration(const IsoChannel& c, int cap) {
  require_cap(cap);
  const GaussianChannel base = to_triplet(c);
  GaussianChannel acc = base;
  for (int n = 1; n <= cap; ++n) {
    if (is_eb_split(acc)) return NcResult::finite(n);
    acc = compose_gaussian(acc, base);
  }
  return NcResult::exceeds_cap(cap);
}

}  // namespace ebnoise::gaussian
