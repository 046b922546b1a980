#include "ebnoise/noise_measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ebnoise/errors.hpp"
#include "ebnoise/gad.hpp"
#include "ebnoise/optimize.hpp"
#include "ebnoise/separability.hpp"

namespace ebnoise {

namespace {

bool separable_matrix(const HermitianMat4& g) {
  return min_eigenvalue(partial_transpose(g)) >= -kSeparabilityTol;
}

Vec3 project_to_ball(std::span<const double> x) {
  Vec3 v(x[0], x[1], x[2]);
  const double n = v.norm();
  return n > 1.0 ? Vec3(v / n) : v;
}

constexpr double kRestartDisagreement = 1e-3;

}  // namespace

double mu_given_rho0_choi(const HermitianMat4& choi_matrix, const Mat2c& rho0, double tol) {
  if (!(tol > 0.0 && tol <= 1e-3)) throw InvariantError("bisection tolerance must lie in (0, 1e-3]");
  if (separable_matrix(choi_matrix)) return 0.0;
  double lo = 0.0;
  double hi = 1.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (separable_matrix(noisy_choi_matrix(choi_matrix, rho0, mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double mu_given_rho0(const Channel& c, const Mat2c& rho0, double tol) {
  require_density_matrix(rho0);
  const ChoiState state(choi(c));
  return mu_given_rho0_choi(state.g(), rho0, tol);
}

std::vector<Vec3> bloch_start_points() {
  std::vector<Vec3> pts;
  pts.emplace_back(Vec3::Zero());
  for (int axis = 0; axis < 3; ++axis)
    for (double s : {1.0, -1.0}) {
      Vec3 v = Vec3::Zero();
      v(axis) = s;
      pts.push_back(v);
    }
  const double corner = 0.7 / std::sqrt(3.0);
  for (double x : {1.0, -1.0})
    for (double y : {1.0, -1.0})
      for (double z : {1.0, -1.0}) pts.emplace_back(corner * x, corner * y, corner * z);
  const double edge = 0.7 / std::sqrt(2.0);
  for (int zero_axis = 0; zero_axis < 3; ++zero_axis)
    for (double s1 : {1.0, -1.0})
      for (double s2 : {1.0, -1.0}) {
        Vec3 v = Vec3::Zero();
        const int a = (zero_axis + 1) % 3;
        const int b = (zero_axis + 2) % 3;
        v(a) = edge * s1;
        v(b) = edge * s2;
        pts.push_back(v);
      }
  return pts;
}

MuSearchResult mu_c_search(const Channel& c, const MuOptions& options) {
  const ChoiState state(choi(c));
  const HermitianMat4& g = state.g();
  MuSearchResult out;
  if (separable_matrix(g)) return out;

  auto value_at = [&](const Vec3& v) {
    return mu_given_rho0_choi(g, density_from_bloch(v), options.tol);
  };

  const auto starts = bloch_start_points();
  std::vector<double> start_values(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) start_values[i] = value_at(starts[i]);

  // restarts from the best grid points, ties broken by enumeration order
  std::vector<std::size_t> order(starts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return start_values[a] < start_values[b]; });

  const Objective objective = [&](std::span<const double> x) { return value_at(project_to_ball(x)); };
  SimplexOptions simplex;
  simplex.initial_step = options.initial_step;
  simplex.size_tol = options.simplex_tol;

  out.mu_c = start_values[order[0]];
  out.rho0 = starts[order[0]];
  double worst = -1.0;
  double best = 2.0;
  const int restarts = std::max(1, std::min<int>(options.restarts, static_cast<int>(starts.size())));
  for (int r = 0; r < restarts; ++r) {
    const Vec3& s = starts[order[r]];
    const SimplexResult res = minimize_simplex(objective, {s(0), s(1), s(2)}, simplex);
    const double v = std::min(res.value, start_values[order[r]]);
    worst = std::max(worst, v);
    best = std::min(best, v);
    if (res.value < out.mu_c) {
      out.mu_c = res.value;
      out.rho0 = project_to_ball(res.x);
    }
  }
  out.restart_spread = worst - best;
  out.restart_disagreement = out.restart_spread > kRestartDisagreement;
  return out;
}

double mu_c_unital(const UnitalChannel& c) {
  const double norm = trace_norm(c.t());
  return std::max(0.0, (norm - 1.0) / norm);
}

double mu_c(const Channel& c, const MuOptions& options) {
  if (const auto* u = std::get_if<UnitalChannel>(&c)) return mu_c_unital(*u);
  if (const auto* g = std::get_if<GadParams>(&c)) return gad::mu_c(g->p, g->gamma);
  return mu_c_search(c, options).mu_c;
}

double mu_c_upper_bound(int d) {
  if (d < 2) throw InvariantError("dimension must be >= 2");
  return static_cast<double>(d) / (1.0 + d);
}

bool ebn_member(const Channel& c, int n) {
  if (n < 1) throw InvariantError("EB^n membership requires n >= 1");
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    RealMat3 t = RealMat3::Identity();
    for (int i = 0; i < n; ++i) t = t * u->t();
    return trace_norm(t) <= 1.0 + 1e-10;
  }
  return is_eb(channel_power(c, n));
}

NcResult n_c(const Channel& c, int cap) {
  if (cap < 1) throw InvariantError("cap must be >= 1");
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    RealMat3 t = u->t();
    for (int n = 1; n <= cap; ++n) {
      if (trace_norm(t) <= 1.0 + 1e-10) return NcResult::finite(n);
      t = t * u->t();
    }
    return NcResult::exceeds_cap(cap);
  }
  if (const auto* g = std::get_if<GadParams>(&c)) return gad::n_c(g->p, g->gamma, cap);
  return n_c_by_iteration(c, cap);
}

NcResult n_c_by_iteration(const Channel& c, int cap) {
  if (cap < 1) throw InvariantError("cap must be >= 1");
  const Channel base = std::holds_alternative<GadParams>(c) ? Channel(to_kraus(c)) : c;
  Channel acc = base;
  for (int n = 1; n <= cap; ++n) {
    if (is_eb_by_choi(acc)) return NcResult::finite(n);
    if (n < cap) acc = compose(base, acc);
  }
  return NcResult::exceeds_cap(cap);
}

NoiseReport analyze(const Channel& c, int cap, const MuOptions& options) {
  NoiseReport report;
  if (std::holds_alternative<KrausChannel>(c)) {
    const MuSearchResult search = mu_c_search(c, options);
    report.mu_c = search.mu_c;
    report.restart_disagreement = search.restart_disagreement;
  } else {
    report.mu_c = mu_c(c, options);
  }
  report.n_c = n_c(c, cap);
  report.ebn.assign(cap, false);
  if (report.n_c.is_finite()) {
    // EB^n is contained in EB^m for m >= n
    for (int i = report.n_c.value(); i <= cap; ++i) report.ebn[i - 1] = true;
  }
  return report;
}

}  // namespace ebnoise
