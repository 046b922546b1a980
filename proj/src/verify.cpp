#include "ebnoise/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>

#include "ebnoise/amendable.hpp"
#include "ebnoise/fixtures.hpp"
#include "ebnoise/gad.hpp"
#include "ebnoise/gaussian1m.hpp"
#include "ebnoise/noise_measures.hpp"

namespace ebnoise {

namespace {

std::string g6(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

class Table {
 public:
  void number(std::string name, double expected, double computed, double tol, std::string ref) {
    rows_.push_back({std::move(name), g6(expected), g6(computed), g6(tol),
                     std::abs(expected - computed) <= tol, std::move(ref)});
  }
  void exact(std::string name, const std::string& expected, const std::string& computed, std::string ref) {
    rows_.push_back({std::move(name), expected, computed, "exact", expected == computed, std::move(ref)});
  }
  void above(std::string name, double bound, double computed, std::string ref) {
    rows_.push_back({std::move(name), "> " + g6(bound), g6(computed), "strict", computed > bound, std::move(ref)});
  }
  std::vector<VerifyRow> take() { return std::move(rows_); }

 private:
  std::vector<VerifyRow> rows_;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

double tn_power(const RealMat3& t, int n) {
  RealMat3 p = RealMat3::Identity();
  for (int i = 0; i < n; ++i) p = p * t;
  return trace_norm(p);
}

}  // namespace

std::vector<VerifyRow> verify_fixtures() {
  using namespace fixtures;
  Table t;
  const RealMat3 lam = lambda_order3();
  const RealMat3 tt = order2_example();
  const RealMat3 tbar = order2_mixture();
  const RealMat3 t3 = order3_example();
  const RealMat3 t3bar = order3_mixture();

  t.number("trace-norm Lambda", 1.73, trace_norm(lam), 1e-9, "trace norm of the order-3 polar example");
  t.number("trace-norm Lambda^2", 1.0329, tn_power(lam, 2), 1e-4, "order-3 polar example, second power");
  t.number("trace-norm Lambda^3", 0.6389, tn_power(lam, 3), 1e-3, "order-3 polar example, third power");
  t.number("trace-norm T^2", 0.98, tn_power(tt, 2), 1e-9, "rotated order-2 example, second power");
  t.number("trace-norm Tbar^2", 1.0065, tn_power(tbar, 2), 1e-4, "mixture of the order-2 pair");
  t.number("trace-norm T^3 (EB3 pair)", 0.9908, tn_power(t3, 3), 1e-3, "rotated order-3 example, third power");
  t.number("trace-norm Tbar^3 (EB3 pair)", 1.0269, tn_power(t3bar, 3), 1e-2, "mixture of the order-3 pair");
  t.above("EB3 non-convexity", 1.0, tn_power(t3bar, 3), "mixture of two EB3 channels leaves EB3");

  const Channel id = UnitalChannel(RealMat3::Identity());
  t.number("werner threshold", 2.0 / 3.0, mu_given_rho0(id, Mat2c::Identity() / 2.0, 1e-7), 1e-5,
           "identity channel mixed with white noise, PPT bisection");
  t.number("mu_c upper bound d=2", 2.0 / 3.0, mu_c_upper_bound(2), 1e-12, "d/(1+d)");
  t.number("mu_c rotated order-2 example", 0.73 / 1.73, mu_c(UnitalChannel(tt)), 1e-4,
           "(|T|_1 - 1)/|T|_1 for unital channels");

  t.exact("n_c Lambda", "3", to_string(n_c(UnitalChannel(lam))), "order-3 polar example");
  t.exact("n_c T", "2", to_string(n_c(UnitalChannel(tt))), "rotated order-2 example");
  t.exact("n_c unitary", "exceeds_cap", to_string(n_c(rotation_channel(RealMat3::Identity()))),
          "unitary channels never break entanglement");

  t.exact("EB2 pair: T in EB2", "true", yes_no(ebn_member(UnitalChannel(tt), 2)), "order-2 pair");
  t.exact("EB2 pair: T^T in EB2", "true", yes_no(ebn_member(UnitalChannel(tt.transpose()), 2)), "order-2 pair");
  t.exact("EB2 pair: mixture not in EB2", "false", yes_no(ebn_member(UnitalChannel(tbar), 2)),
          "EB2 is not convex");
  t.exact("EB3 pair: T in EB3", "true", yes_no(ebn_member(UnitalChannel(t3), 3)), "order-3 pair");
  t.exact("EB3 pair: T^T in EB3", "true", yes_no(ebn_member(UnitalChannel(t3.transpose()), 3)), "order-3 pair");
  t.exact("EB3 pair: mixture not in EB3", "false", yes_no(ebn_member(UnitalChannel(t3bar), 3)),
          "EB3 is not convex");

  const Channel phi = UnitalChannel(tt);
  const auto f = FilterCandidate::orthogonal(axis_swap().transpose());
  t.exact("amend: base order", "2", to_string(n_c(phi)), "filtering the rotated order-2 example");
  t.exact("amend: filtered order", "3", to_string(amend_order(phi, f)), "undoing the rotation restores order 3");
  t.exact("amend: order-2 test", "true", yes_no(is_amendable2(phi, f)), "Phi o O^T o Phi is not EB");

  const double r2 = std::sqrt(2.0);
  t.number("pbar(1/2)", 2.0 * (r2 - 1.0), gad::pbar(0.5), 1e-12, "GAD minimizer switch point");
  t.number("pbarbar(1/2)", 2.0 - r2, gad::pbarbar(0.5), 1e-12, "GAD squared minimizer switch point");
  t.number("p_1(1/2)", 2.0 * (r2 - 1.0), gad::p_n(0.5, 1), 1e-12, "GAD order-1 boundary");
  t.number("mu_c GAD vanishing point", 0.0, gad::mu_c(2.0 * (r2 - 1.0), 0.5), 1e-6, "Psi at (2(sqrt2-1), 1/2)");
  t.number("mu_c GAD^2 vanishing point", 0.0, gad::mu_c_squared(2.0 - r2, 0.5), 1e-6, "Psi^2 at (2-sqrt2, 1/2)");
  t.number("mu_c GAD identity limit", 2.0 / 3.0, gad::mu_c(0.0, 0.3), 1e-12, "p = 0 is the identity");
  t.exact("n_c GAD amplitude damping", "exceeds_cap", to_string(gad::n_c(0.5, 0.0, kDefaultCap)),
          "amplitude damping never becomes EB");
  t.number("S1 boundary limit", (std::sqrt(5.0) - 1.0) / 2.0, gad::amend_boundary_s1(1e-6), 1e-3,
           "amendable region meets the gamma = 0 axis");

  using gaussian::Family;
  t.exact("attenuation n=1 boundary", "1", to_string(gaussian::n_c_attenuation(0.5, 0.25, kDefaultCap)),
          "N0 = k^2");
  t.exact("attenuation n=2 boundary", "2", to_string(gaussian::n_c_attenuation(0.5, 0.05, kDefaultCap)),
          "N0 = k^4/(1+k^2)");
  t.exact("amplification n=1 boundary", "1", to_string(gaussian::n_c_amplification(r2, 1.0, kDefaultCap)),
          "N0 = 1");
  t.exact("amplification n=2 boundary", "2",
          to_string(gaussian::n_c_amplification(r2, 1.0 / 3.0, kDefaultCap)), "N0 = 1/(1+k^2)");
  return t.take();
}

bool print_verify_table(const std::vector<VerifyRow>& rows, std::ostream& out) {
  bool all = true;
  char line[512];
  std::snprintf(line, sizeof line, "%-34s %-12s %-12s %-8s %-5s %s\n", "fixture", "expected", "computed", "tol",
                "result", "reference");
  out << line;
  for (const auto& r : rows) {
    all = all && r.pass;
    std::snprintf(line, sizeof line, "%-34s %-12s %-12s %-8s %-5s  %s\n", r.name.c_str(), r.expected.c_str(),
                  r.computed.c_str(), r.tolerance.c_str(), r.pass ? "PASS" : "FAIL", r.reference.c_str());
    out << line;
  }
  return all;
}

}  // namespace ebnoise
