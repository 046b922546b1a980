#include "ebnoise/amendable.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "ebnoise/errors.hpp"
#include "ebnoise/gad.hpp"
#include "ebnoise/optimize.hpp"
#include "ebnoise/parallel.hpp"
#include "ebnoise/separability.hpp"

namespace ebnoise {

namespace {

using std::numbers::pi;

RealMat3 rot_z(double a) {
  RealMat3 r;
  r << std::cos(a), -std::sin(a), 0, std::sin(a), std::cos(a), 0, 0, 0, 1;
  return r;
}

RealMat3 rot_y(double a) {
  RealMat3 r;
  r << std::cos(a), 0, std::sin(a), 0, 1, 0, -std::sin(a), 0, std::cos(a);
  return r;
}

Mat2c half_turn(int j) {
  // exp(-i pi/4 sigma_j)
  const double c = std::cos(pi / 4.0);
  return c * pauli(0) - cplx(0.0, 1.0) * std::sin(pi / 4.0) * pauli(j);
}

// Signed margin of (f o c)^m: negative once the m-th power stops being entanglement breaking.
double eb_margin(const Channel& fc, int m) {
  const Channel power = channel_power(fc, m);
  if (const auto* u = std::get_if<UnitalChannel>(&power)) return 1.0 - trace_norm(u->t());
  return min_eigenvalue(partial_transpose(choi(power)));
}

}  // namespace

FilterCandidate FilterCandidate::pauli(int j) {
  if (j < 1 || j > 3) throw InvariantError("Pauli filter index must be 1..3");
  RealMat3 r = -RealMat3::Identity();
  r(j - 1, j - 1) = 1.0;
  const FilterKind kinds[] = {FilterKind::PauliS1, FilterKind::PauliS2, FilterKind::PauliS3};
  return FilterCandidate(kinds[j - 1], r, {});
}

FilterCandidate FilterCandidate::r2r1() {
  return FilterCandidate(FilterKind::RotationPairR2R1,
                         rotation_from_unitary(half_turn(2) * half_turn(1)), {});
}

FilterCandidate FilterCandidate::euler(double alpha, double beta, double theta) {
  return FilterCandidate(FilterKind::Euler, rot_z(alpha) * rot_y(beta) * rot_z(theta),
                         {alpha, beta, theta});
}

FilterCandidate FilterCandidate::orthogonal(const RealMat3& o) {
  if (!o.allFinite() || (o * o.transpose() - RealMat3::Identity()).cwiseAbs().maxCoeff() > 1e-10 ||
      std::abs(std::abs(o.determinant()) - 1.0) > 1e-10) {
    throw InvariantError("orthogonal filter must satisfy O O^T = 1 and det = +-1");
  }
  std::vector<double> entries;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) entries.push_back(o(i, j));
  return FilterCandidate(FilterKind::Orthogonal, o, std::move(entries));
}

bool FilterCandidate::is_proper() const { return bloch_.determinant() > 0.0; }

Channel FilterCandidate::channel() const { return UnitalChannel(bloch_); }

std::string FilterCandidate::kind_name() const {
  switch (kind_) {
    case FilterKind::PauliS1: return "S1";
    case FilterKind::PauliS2: return "S2";
    case FilterKind::PauliS3: return "S3";
    case FilterKind::RotationPairR2R1: return "R2R1";
    case FilterKind::Euler: return "euler";
    case FilterKind::Orthogonal: return "orthogonal";
  }
  return "unknown";
}

std::optional<FilterKind> filter_kind_from_name(const std::string& name) {
  if (name == "S1" || name == "s1") return FilterKind::PauliS1;
  if (name == "S2" || name == "s2") return FilterKind::PauliS2;
  if (name == "S3" || name == "s3") return FilterKind::PauliS3;
  if (name == "R2R1" || name == "r2r1") return FilterKind::RotationPairR2R1;
  if (name == "euler") return FilterKind::Euler;
  if (name == "orthogonal") return FilterKind::Orthogonal;
  return std::nullopt;
}

bool is_amendable2(const Channel& c, const FilterCandidate& f) {
  if (!ebn_member(c, 2)) return false;
  return !is_eb(compose(c, compose(f.channel(), c)));
}

NcResult amend_order(const Channel& c, const FilterCandidate& f, int cap) {
  return n_c(compose(f.channel(), c), cap);
}

AmendReport search_filter(const Channel& c, int cap, int budget, unsigned seed) {
  if (budget < 1) throw InvariantError("search budget must be >= 1");
  const NcResult base = n_c(c, cap);

  std::vector<FilterCandidate> named = {FilterCandidate::pauli(1), FilterCandidate::pauli(2),
                                        FilterCandidate::pauli(3), FilterCandidate::r2r1()};
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    named.push_back(FilterCandidate::orthogonal(polar_decompose(u->t()).orthogonal.transpose()));
  }

  const int per_axis = std::max(1, static_cast<int>(std::floor(std::cbrt(static_cast<double>(budget)) + 1e-9)));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double jitter[3] = {unit(rng), unit(rng), unit(rng)};
  std::vector<FilterCandidate> grid;
  grid.reserve(static_cast<std::size_t>(per_axis) * per_axis * per_axis);
  for (int i = 0; i < per_axis; ++i)
    for (int j = 0; j < per_axis; ++j)
      for (int k = 0; k < per_axis; ++k) {
        grid.push_back(FilterCandidate::euler(2.0 * pi * (i + jitter[0]) / per_axis,
                                              pi * (j + jitter[1]) / per_axis,
                                              2.0 * pi * (k + jitter[2]) / per_axis));
      }

  std::vector<FilterCandidate> all = named;
  all.insert(all.end(), grid.begin(), grid.end());
  const auto orders = parallel_map(all.size(), [&](std::size_t i) { return amend_order(c, all[i], cap); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (order_greater(orders[i], orders[best])) best = i;
  }
  FilterCandidate best_filter = all[best];
  NcResult best_order = orders[best];

  // refine around the best Euler grid point on a continuous surrogate
  std::size_t best_grid = named.size();
  for (std::size_t i = named.size() + 1; i < all.size(); ++i) {
    if (order_greater(orders[i], orders[best_grid])) best_grid = i;
  }
  if (best_order.is_finite() && orders[best_grid].is_finite()) {
    const int m = best_order.value();
    const auto& start = all[best_grid].params();
    const Objective surrogate = [&](std::span<const double> x) {
      const FilterCandidate f = FilterCandidate::euler(x[0], x[1], x[2]);
      return eb_margin(compose(f.channel(), c), m);
    };
    SimplexOptions opts;
    opts.initial_step = pi / per_axis / 2.0;
    opts.size_tol = 1e-4;
    opts.max_iterations = 400;
    const SimplexResult res = minimize_simplex(surrogate, start, opts);
    const FilterCandidate refined = FilterCandidate::euler(res.x[0], res.x[1], res.x[2]);
    const NcResult refined_order = amend_order(c, refined, cap);
    if (order_greater(refined_order, best_order)) {
      best_filter = refined;
      best_order = refined_order;
    }
  }
  return AmendReport{base, best_order, best_filter, order_greater(best_order, base)};
}

GadAmendability gad_amendability(double p, double gamma, int cap, int euler_budget) {
  GadAmendability out;
  const NcResult own = gad::n_c(p, gamma, cap);
  if (own.is_finite() && own.value() <= 2) return out;
  const Channel psi = gad_kraus(GadParams(p, gamma));
  auto works = [&](const FilterCandidate& u) { return ebn_member(compose(psi, u.channel()), 2); };
  for (const auto& u : {FilterCandidate::pauli(1), FilterCandidate::pauli(2), FilterCandidate::pauli(3),
                        FilterCandidate::r2r1()}) {
    if (works(u)) {
      out.amendable = true;
      out.filter = u;
      return out;
    }
  }
  if (euler_budget > 0) {
    const int per_axis = std::max(1, static_cast<int>(std::floor(std::cbrt(static_cast<double>(euler_budget)) + 1e-9)));
    for (int i = 0; i < per_axis; ++i)
      for (int j = 0; j < per_axis; ++j)
        for (int k = 0; k < per_axis; ++k) {
          const auto u = FilterCandidate::euler(2.0 * pi * (i + 0.5) / per_axis, pi * (j + 0.5) / per_axis,
                                                2.0 * pi * (k + 0.5) / per_axis);
          if (works(u)) {
            out.amendable = true;
            out.filter = u;
            return out;
          }
        }
  }
  return out;
}

}  // namespace ebnoise
