// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "ebnoise/amendable.hpp"
#include "ebnoise/fixtures.hpp"
#include "ebnoise/gad.hpp"
#include "ebnoise/gaussian1m.hpp"
#include "ebnoise/noise_measures.hpp"
#include "ebnoise/separability.hpp"
#include "oracles.hpp"

using namespace ebnoise;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int failures = 0;

void report(int id, const char* name, const std::function<void(Outcome&)>& body) {
  Outcome o;
  body(o);
  std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double tn_power(const RealMat3& t, int n) { return trace_norm(oracle::matrix_power(t, n)); }

// every mu_c evaluated by the random suites, for the upper bound
double largest_mu = 0.0;

double track(double mu) {
  largest_mu = std::max(largest_mu, mu);
  return mu;
}

bool same_order(const NcResult& a, const NcResult& b) {
  return a.is_finite() == b.is_finite() && (!a.is_finite() || a.value() == b.value());
}

std::string capture(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  *status = pclose(pipe);
  return out;
}

void criterion1(Outcome& o) {
  using namespace fixtures;
  struct Row {
    const char* name;
    double expected, computed, tol;
  };
  const Row rows[] = {
      {"|L|", 1.73, trace_norm(lambda_order3()), 1e-9},
      {"|L^2|", 1.0329, tn_power(lambda_order3(), 2), 1e-4},
      {"|L^3|", 0.6389, tn_power(lambda_order3(), 3), 1e-3},
      {"|T^2|", 0.98, tn_power(order2_example(), 2), 1e-9},
      {"|Tbar^2|", 1.0065, tn_power(order2_mixture(), 2), 1e-4},
      {"|T^3|", 0.9908, tn_power(order3_example(), 3), 1e-3},
      {"|Tbar^3|", 1.0269, tn_power(order3_mixture(), 3), 1e-2},
  };
  for (const auto& r : rows) {
    o.check(std::abs(r.computed - r.expected) <= r.tol, std::string(r.name) + " = " + fmt(r.computed));
    o.detail << r.name << "=" << fmt(r.computed) << " ";
  }
}

void criterion2(Outcome& o) {
  const double mu = mu_given_rho0(Channel(unitary_channel(Mat2c::Identity())), Mat2c::Identity() / 2.0, 1e-7);
  o.check(std::abs(mu - 2.0 / 3.0) <= 1e-5, "mu(I; 1/2) = " + fmt(mu));
  o.detail << "mu(I;1/2)=" << fmt(mu);
}

void criterion3(Outcome& o) {
  std::mt19937_64 rng(1003);
  double worst = 0.0;
  for (int it = 0; it < 200; ++it) {
    const UnitalChannel c(oracle::random_cp_unital(rng));
    const double closed = track(mu_c_unital(c));
    const double generic = track(mu_c_search(Channel(c)).mu_c);
    worst = std::max(worst, std::abs(closed - generic));
  }
  o.check(worst <= 1e-3, "max deviation " + fmt(worst));
  o.detail << "200 channels, max |closed - generic| = " << fmt(worst);
}

void criterion4(Outcome& o) {
  std::mt19937_64 rng(1004);
  double worst_unitary = 0.0;
  for (int it = 0; it < 20; ++it) {
    const Mat2c u = oracle::random_unitary(rng);
    const double mu = track(mu_c_search(Channel(unitary_channel(u))).mu_c);
    worst_unitary = std::max(worst_unitary, std::abs(mu - 2.0 / 3.0));
  }
  for (int it = 0; it < 50; ++it) track(mu_c_search(Channel(KrausChannel(oracle::random_kraus(rng, 1 + it % 4)))).mu_c);
  o.check(largest_mu <= 2.0 / 3.0 + 1e-6, "largest mu_c " + fmt(largest_mu));
  o.check(worst_unitary <= 1e-5, "unitary deviation " + fmt(worst_unitary));
  o.detail << "largest mu_c over random suites " << fmt(largest_mu) << ", unitary max |mu_c - 2/3| "
           << fmt(worst_unitary);
}

void criterion5(Outcome& o) {
  const NcResult lam = n_c(Channel(UnitalChannel(fixtures::lambda_order3())));
  const NcResult t = n_c(Channel(UnitalChannel(fixtures::order2_example())));
  o.check(lam == NcResult::finite(3), "n_c(Lambda) = " + to_string(lam));
  o.check(t == NcResult::finite(2), "n_c(T) = " + to_string(t));
  std::mt19937_64 rng(1005);
  for (int it = 0; it < 10; ++it) {
    const Mat2c u = oracle::random_unitary(rng);
    o.check(!n_c(Channel(rotation_channel(rotation_from_unitary(u)))).is_finite(), "unitary n_c finite");
    o.check(!n_c(Channel(unitary_channel(u)), 8).is_finite(), "unitary Kraus n_c finite");
  }
  int violations = 0;
  for (int it = 0; it < 200; ++it) {
    const RealMat3 m = oracle::random_cp_unital(rng);
    violations += order_greater(n_c(Channel(UnitalChannel(m))), n_c(Channel(UnitalChannel(polar_decompose(m).psd))));
  }
  o.check(violations == 0, std::to_string(violations) + " Holder violations");
  o.detail << "n_c(Lambda)=" << to_string(lam) << " n_c(T)=" << to_string(t)
           << " unitaries exceed cap, Holder violations " << violations << "/200";
}

void criterion6(Outcome& o) {
  using namespace fixtures;
  auto member = [](const RealMat3& m, int n) { return ebn_member(Channel(UnitalChannel(m)), n); };
  o.check(member(order2_example(), 2) && member(order2_example().transpose(), 2), "EB2 pair membership");
  o.check(!member(order2_mixture(), 2), "EB2 mixture membership");
  o.check(member(order3_example(), 3) && member(order3_example().transpose(), 3), "EB3 pair membership");
  o.check(!member(order3_mixture(), 3), "EB3 mixture membership");
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int failures_polar = 0;
  for (int n : {2, 3}) {
    auto draw = [&]() {
      for (;;) {
        const RealMat3 r = oracle::random_rotation(rng);
        const RealMat3 m = r * Eigen::Vector3d(unit(rng), unit(rng), unit(rng)).asDiagonal() * r.transpose();
        if (member(m, n)) return m;
      }
    };
    for (int it = 0; it < 100; ++it) {
      const RealMat3 a = draw();
      const RealMat3 b = draw();
      const double p = unit(rng);
      failures_polar += !member(p * a + (1 - p) * b, n);
    }
  }
  o.check(failures_polar == 0, std::to_string(failures_polar) + " polar mixtures left EB^n");
  o.detail << "witness pairs reproduced, polar mixtures outside EB^n " << failures_polar << "/200";
}

void criterion7(Outcome& o) {
  double worst_generic = 0.0;
  double worst_vz = 0.0;
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 20; ++j) {
      const double p = i / 39.0;
      const double g = 0.5 * j / 19.0;
      const double closed = gad::mu_c(p, g);
      const double generic = track(mu_c_search(Channel(gad_kraus(GadParams(p, g)))).mu_c);
      worst_generic = std::max(worst_generic, std::abs(closed - generic));
      double best = 2.0;
      for (int k = 0; k <= 20000; ++k) best = std::min(best, gad::mu_vs_vz(p, g, -1.0 + k / 10000.0));
      worst_vz = std::max(worst_vz, std::abs(best - closed));
    }
  const double r2 = std::sqrt(2.0);
  const double z1 = gad::mu_c(2.0 * (r2 - 1.0), 0.5);
  const double z2 = gad::mu_c_squared(2.0 - r2, 0.5);
  double worst_identity = 0.0;
  for (int j = 0; j < 20; ++j) {
    const double g = 0.5 * j / 19.0;
    worst_identity = std::max(worst_identity, std::abs(gad::mu_c(gad::pbar(g), g) - gad::mu_c_squared(gad::pbarbar(g), g)));
  }
  o.check(worst_generic <= 1e-3, "generic deviation " + fmt(worst_generic));
  o.check(worst_vz <= 1e-4, "v_z minimum deviation " + fmt(worst_vz));
  o.check(std::abs(z1) <= 1e-6 && std::abs(z2) <= 1e-6, "vanishing points " + fmt(z1) + " " + fmt(z2));
  o.check(worst_identity <= 1e-9, "cross identity " + fmt(worst_identity));
  o.detail << "max |closed - generic| " << fmt(worst_generic) << ", max |min_vz - closed| " << fmt(worst_vz)
           << ", zeros " << fmt(z1) << " " << fmt(z2) << ", identity " << fmt(worst_identity);
}

void criterion8(Outcome& o) {
  int disagreements = 0;
  int compared = 0;
  int undecidable = 0;
  for (int i = 0; i < 25; ++i)
    for (int j = 0; j < 25; ++j) {
      const double p = i / 24.0;
      const double g = j / 24.0;
      bool near = false;
      for (int n = 1; n <= 8; ++n) near |= std::abs(p - gad::p_n(g, n)) <= 1e-6;
      if (near) continue;
      // PT margin of some power inside the PPT tolerance: iteration cannot decide
      const auto ops = oracle::gad_kraus(p, g);
      for (int n = 1; n <= 8; ++n) {
        auto power = [&](const oracle::Mat2& x) {
          oracle::Mat2 y = x;
          for (int k = 0; k < n; ++k) y = oracle::apply_kraus(ops, y);
          return y;
        };
        near |= std::abs(oracle::min_eigenvalue<4>(oracle::partial_transpose_second(oracle::choi(power)))) <= 1e-9;
      }
      if (near) {
        ++undecidable;
        continue;
      }
      ++compared;
      disagreements += !same_order(gad::n_c(p, g, 8), n_c_by_iteration(Channel(gad_kraus(GadParams(p, g))), 8));
    }
  double worst_sym = 0.0;
  for (int j = 0; j <= 100; ++j)
    for (int n = 1; n <= 10; ++n) worst_sym = std::max(worst_sym, std::abs(gad::p_n(j / 100.0, n) - gad::p_n(1.0 - j / 100.0, n)));
  o.check(disagreements == 0, std::to_string(disagreements) + " disagreements");
  o.check(worst_sym <= 1e-12, "p_n asymmetry " + fmt(worst_sym));
  o.detail << disagreements << "/" << compared << " disagreements (" << undecidable << " cells within PPT tolerance skipped), max |p_n(g) - p_n(1-g)| " << fmt(worst_sym);
}

void criterion9(Outcome& o) {
  const Channel phi = UnitalChannel(fixtures::order2_example());
  const auto f = FilterCandidate::orthogonal(fixtures::axis_swap().transpose());
  const NcResult base = n_c(phi);
  const NcResult filtered = amend_order(phi, f);
  o.check(base == NcResult::finite(2) && filtered == NcResult::finite(3),
          "fixture orders " + to_string(base) + " -> " + to_string(filtered));

  int region = 0;
  int missed = 0;
  for (int i = 0; i < 60; ++i)
    for (int j = 0; j < 60; ++j) {
      const double p = (i + 0.5) / 60.0;
      const double g = (j + 0.5) / 60.0;
      if (!gad::in_s1_amendable_region(p, g)) continue;
      ++region;
      missed += !gad_amendability(p, g).amendable;
    }
  const double miss_rate = region ? static_cast<double>(missed) / region : 1.0;
  o.check(region > 0 && miss_rate <= 0.02, "coverage miss rate " + fmt(miss_rate));

  const double limit = gad::amend_boundary_s1(1e-6);
  o.check(std::abs(limit - (std::sqrt(5.0) - 1.0) / 2.0) <= 1e-3, "gamma -> 0 limit " + fmt(limit));

  MuOptions fine;
  fine.tol = 1e-7;
  double worst_excess = -1.0;
  const std::pair<FilterCandidate, double> configs[] = {{FilterCandidate::pauli(1), 0.1},
                                                        {FilterCandidate::r2r1(), 0.4}};
  for (const auto& [u, g] : configs) {
    for (int i = 0; i <= 20; ++i) {
      const double p = i / 20.0;
      const Channel psi = gad_kraus(GadParams(p, g));
      const double filtered_mu = track(mu_c_search(compose(psi, compose(u.channel(), psi)), fine).mu_c);
      const double squared_mu = track(mu_c_search(compose(psi, psi), fine).mu_c);
      worst_excess = std::max(worst_excess, filtered_mu - squared_mu);
    }
  }
  o.check(worst_excess <= 1e-6, "Psi U Psi exceeds Psi^2 by " + fmt(worst_excess));
  o.detail << "fixture 2 -> 3, S1 region cells " << region << " missed " << missed << ", limit " << fmt(limit)
           << ", max mu_c(PUP) - mu_c(P^2) " << fmt(worst_excess);
}

void criterion10(Outcome& o) {
  using namespace gaussian;
  int mismatches = 0;
  for (Family f : {Family::Attenuation, Family::Amplification})
    for (int i = 0; i < 50; ++i)
      for (int j = 0; j < 50; ++j) {
        const double k = f == Family::Attenuation ? 0.02 + 0.96 * i / 49.0 : 1.02 + 2.0 * i / 49.0;
        const double n0 = 1.2 * (j + 1) / 50.0;
        const IsoChannel c(f, k, n0);
        mismatches += !(n_c_iso(c, 16) == n_c_by_iteration(c, 16));
      }
  int boundary_failures = 0;
  for (int i = 1; i < 20; ++i) {
    const double k = i / 20.0;
    const double ka = 1.0 + i / 10.0;
    boundary_failures += !(n_c_attenuation(k, k * k, 64) == NcResult::finite(1));
    boundary_failures += !(n_c_attenuation(k, std::pow(k, 4) / (1 + k * k), 64) == NcResult::finite(2));
    boundary_failures += !(n_c_amplification(ka, 1.0, 64) == NcResult::finite(1));
    boundary_failures += !(n_c_amplification(ka, 1.0 / (1 + ka * ka), 64) == NcResult::finite(2));
    boundary_failures += !is_eb_iso(IsoChannel(Family::Attenuation, k, k * k));
    boundary_failures += is_eb_iso(IsoChannel(Family::Attenuation, k, k * k * (1 - 1e-9)));
  }
  o.check(mismatches == 0, std::to_string(mismatches) + " grid mismatches");
  o.check(boundary_failures == 0, std::to_string(boundary_failures) + " boundary failures");
  o.detail << "grid mismatches " << mismatches << "/5000, boundary failures " << boundary_failures;
}

void criterion11(Outcome& o) {
  std::mt19937_64 rng(1011);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int convexity_failures = 0;
  for (int it = 0; it < 100; ++it) {
    const Channel c = KrausChannel(oracle::random_kraus(rng, 1 + it % 3));
    const int m = 2 + it % 2;
    std::vector<double> w(m);
    double total = 0.0;
    for (auto& x : w) total += (x = unit(rng));
    Vec3 mixed = Vec3::Zero();
    double rhs = 0.0;
    for (int i = 0; i < m; ++i) {
      const Vec3 v = oracle::random_bloch(rng);
      mixed += w[i] / total * v;
      rhs += w[i] / total * mu_given_rho0(c, density_from_bloch(v));
    }
    convexity_failures += mu_given_rho0(c, density_from_bloch(mixed)) > rhs + 1e-6;
  }

  double worst_recon = 0.0;
  for (int it = 0; it < 100; ++it) {
    const Vec3 l = oracle::random_cp_triple(rng);
    const auto p = pauli_decompose(l);
    const RealMat3 lambda = l.asDiagonal();
    for (int b = 0; b < 4; ++b) {
      const Mat2c s = oracle::pauli(b);
      Mat2c mixed = Mat2c::Zero();
      for (int i = 0; i < 4; ++i) mixed += p[i] * oracle::pauli(i) * s * oracle::pauli(i);
      const Mat2c target = oracle::apply_unital(lambda, s);
      worst_recon = std::max(worst_recon, (mixed - target).cwiseAbs().maxCoeff());
    }
  }

  int lower_failures = 0;
  int upper_failures = 0;
  for (int it = 0; it < 100; ++it) {
    const RealMat3 t1 = oracle::random_cp_unital(rng);
    const RealMat3 t2 = oracle::random_cp_unital(rng);
    const double p = unit(rng);
    const double m1 = track(mu_c(Channel(UnitalChannel(t1))));
    const double m2 = track(mu_c(Channel(UnitalChannel(t2))));
    const double mix = track(mu_c(Channel(UnitalChannel(p * t1 + (1 - p) * t2))));
    const double bar = (p * m1 / (1 - m1) + (1 - p) * m2 / (1 - m2)) / (p / (1 - m1) + (1 - p) / (1 - m2));
    lower_failures += mix < std::min(m1, m2) - 1e-9;
    upper_failures += mix > bar + 1e-9;
  }
  o.check(convexity_failures == 0, std::to_string(convexity_failures) + " rho0-convexity failures");
  o.check(worst_recon <= 1e-12, "Pauli reconstruction error " + fmt(worst_recon));
  o.check(lower_failures == 0, std::to_string(lower_failures) + " ensembles below min_j mu_j");
  o.check(upper_failures == 0, std::to_string(upper_failures) + " ensembles above mu_bar");
  o.detail << "rho0 convexity failures " << convexity_failures << "/100, reconstruction error " << fmt(worst_recon)
           << ", lower bound failures " << lower_failures << "/100, upper bound failures " << upper_failures << "/100";
}

void criterion12(Outcome& o) {
  const std::string cli = EBNOISE_CLI_PATH;
  const std::string amend_doc = R"('{"kind":"unital","t":[0,0.5,0,0.73,0,0,0,0,0.5]}')";
  const std::string cmds[] = {
      cli + " sweep fig3 --steps 40",
      cli + " sweep fig1 --steps 60",
      cli + " sweep fig4 --steps 6 --filter r2r1",
      cli + " amend " + amend_doc + " --budget 1000 --seed 42",
      cli + " amend '{\"kind\":\"gad\",\"p\":0.5,\"gamma\":0.2}' --budget 216 --seed 7 --cap 16",
  };
  for (const auto& cmd : cmds) {
    int s1 = 0;
    int s2 = 0;
    const std::string a = capture(cmd, &s1);
    const std::string b = capture(cmd, &s2);
    o.check(s1 == 0 && s2 == 0 && !a.empty(), "command failed: " + cmd);
    o.check(a == b, "outputs differ: " + cmd);
  }
  o.detail << "5 commands run twice, outputs compared byte for byte";
}

}  // namespace

int main() {
  report(1, "trace-norm fixtures", criterion1);
  report(2, "Werner threshold by PPT bisection", criterion2);
  report(3, "unital closed form vs generic search", criterion3);
  report(4, "upper bound 2/3", criterion4);
  report(5, "n_c fixtures and Holder bound", criterion5);
  report(6, "non-convexity witnesses and polar closure", criterion6);
  report(7, "GAD closed forms vs oracle", criterion7);
  report(8, "GAD region map vs Choi iteration", criterion8);
  report(9, "amendability", criterion9);
  report(10, "Gaussian n_c", criterion10);
  report(11, "convexity properties and Pauli reconstruction", criterion11);
  report(12, "determinism of sweep and amend", criterion12);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
