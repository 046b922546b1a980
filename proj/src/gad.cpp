#include "ebnoise/gad.hpp"

#include <algorithm>
#include <cmath>

#include "ebnoise/errors.hpp"

namespace ebnoise::gad {

namespace {

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw InvariantError(std::string(what) + " must lie in [0, 1]");
}

void require_lower_half(double gamma) {
  require_unit(gamma, "gamma");
  if (gamma > 0.5) throw InvariantError("closed form requires gamma <= 1/2; reflect first");
}

double reflect(double gamma) { return gamma > 0.5 ? 1.0 - gamma : gamma; }

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

// Radicand guard for exact-zero discriminants on boundary curves.
double guarded_sqrt(double x) {
  if (x < 0.0 && x >= -1e-12) return 0.0;
  return std::sqrt(x);
}

}  // namespace

double mu_vs_vz(double p, double gamma, double vz) {
  require_unit(p, "p");
  require_lower_half(gamma);
  if (!(vz >= -1.0 && vz <= 1.0)) throw InvariantError("vz must lie in [-1, 1]");
  const double g = gamma;
  const double w = vz - 2.0 * g + 1.0;
  const double radicand = p * p * w * w + 4.0 * p * (vz * vz - 1.0) - 4.0 * vz * vz + 4.0;
  const double num =
      p * (4.0 * p * (g - 1.0) * g - 2.0 * g * vz + vz - 3.0) + 4.0 - guarded_sqrt(radicand);
  const double den = 4.0 * p * p * (g - 1.0) * g + 2.0 * p * (-2.0 * vz * g + vz - 1.0) + vz * vz + 3.0;
  return clamp_unit(num / den);
}

double pbar(double gamma) {
  require_lower_half(gamma);
  const double g = gamma;
  return (std::sqrt(4.0 * g * g - 8.0 * g + 5.0) - 1.0) / (2.0 * (1.0 - g) * (1.0 - g));
}

double pbarbar(double gamma) {
  require_lower_half(gamma);
  const double g = gamma;
  return (std::sqrt(4.0 * g * g - 8.0 * g + 5.0) + 2.0 * g - 3.0) / (2.0 * (g - 1.0));
}

double vbar(double p, double gamma) {
  require_unit(p, "p");
  if (p > pbar(gamma)) throw InvariantError("vbar requires p <= pbar(gamma)");
  return p * (p + 2.0 * std::sqrt(1.0 - p)) * (1.0 - 2.0 * gamma) / (4.0 - p * (p + 4.0));
}

double mu_c(double p, double gamma) {
  require_unit(p, "p");
  require_unit(gamma, "gamma");
  const double g = reflect(gamma);
  if (p <= pbar(g)) {
    return clamp_unit((p * p + 3.0 * p + 2.0 * std::sqrt(1.0 - p) - 4.0) / (p * p + 2.0 * p - 3.0));
  }
  return clamp_unit((p * (p * (g - 1.0) * g - 1.0) + 1.0) / (p * g * (p * (g - 1.0) - 1.0) + 1.0));
}

double mu_c_squared(double p, double gamma) {
  require_unit(p, "p");
  require_unit(gamma, "gamma");
  const double g = reflect(gamma);
  if (p <= pbarbar(g)) return clamp_unit((p * p - 4.0 * p + 2.0) / (p * p - 4.0 * p + 3.0));
  const double q = (p - 2.0) * p;
  return clamp_unit((q * (q * (g - 1.0) * g + 1.0) + 1.0) / (q * g * (q * (g - 1.0) + 1.0) + 1.0));
}

double p_n(double gamma, int n) {
  require_unit(gamma, "gamma");
  if (n < 1) throw InvariantError("p_n requires n >= 1");
  const double inner = 1.0 - 2.0 / (1.0 + std::sqrt(1.0 + 4.0 * gamma * (1.0 - gamma)));
  return 1.0 - std::pow(std::max(inner, 0.0), 1.0 / n);
}

NcResult n_c(double p, double gamma, int cap) {
  require_unit(p, "p");
  require_unit(gamma, "gamma");
  if (cap < 1) throw InvariantError("cap must be positive");
  if ((gamma == 0.0 || gamma == 1.0) && p < 1.0) return NcResult::exceeds_cap(cap, true);
  for (int n = 1; n <= cap; ++n) {
    if (p >= p_n(gamma, n)) return NcResult::finite(n);
  }
  return NcResult::exceeds_cap(cap);
}

double amend_boundary_s1(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvariantError("S1 boundary is singular at gamma = 0 and gamma = 1");
  }
  const double g = gamma;
  const double s = 4.0 * (1.0 - g) * g;
  const double t = (1.0 - 2.0 * std::sqrt(1.0 - 4.0 * (g - 1.0) * g)) * (1.0 - 2.0 * g) * (1.0 - 2.0 * g);
  return (-std::sqrt(s + 1.0) + std::sqrt(t + 1.0) + 1.0) / s;
}

bool in_s1_amendable_region(double p, double gamma) {
  if (gamma <= 0.0 || gamma >= 1.0) {
    const double limit = (std::sqrt(5.0) - 1.0) / 2.0;
    return p >= limit && p < 1.0;
  }
  return p >= amend_boundary_s1(gamma) && p < p_n(gamma, 2);
}

RegionPoint region_point(double p, double gamma, int cap) { return {p, gamma, n_c(p, gamma, cap)}; }

}  // namespace ebnoise::gad
