#include "ebnoise/sweep.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <vector>

#include "ebnoise/amendable.hpp"
#include "ebnoise/errors.hpp"
#include "ebnoise/gad.hpp"
#include "ebnoise/gaussian1m.hpp"
#include "ebnoise/parallel.hpp"

namespace ebnoise {

namespace {

double fixed_or(const SweepSpec& s, const std::string& key, double fallback) {
  const auto it = s.fixed.find(key);
  return it == s.fixed.end() ? fallback : it->second;
}

std::string nc_cell(const NcResult& r) { return to_string(r); }

FilterCandidate fig4_filter(const std::string& name) {
  if (name == "S1") return FilterCandidate::pauli(1);
  if (name == "R2R1") return FilterCandidate::r2r1();
  throw InvariantError("fig4 filter must be S1 or R2R1, got " + name);
}

std::string fig1_cell(double l1, double l2, double l3, int cap) {
  const Eigen::Vector3d lambda(l1, l2, l3);
  const bool cp = std::abs(l1 + l2) <= std::abs(1 + l3) + 1e-12 && std::abs(l1 - l2) <= std::abs(1 - l3) + 1e-12;
  if (!cp) return "not_cpt";
  return nc_cell(n_c(UnitalChannel(RealMat3(lambda.asDiagonal())), cap));
}

std::string fig5_cell(double k, double n0, int cap, const char** family) {
  const auto f = k < 1.0 ? gaussian::Family::Attenuation : gaussian::Family::Amplification;
  *family = gaussian::family_name(f);
  return nc_cell(gaussian::n_c_iso(gaussian::IsoChannel(f, k, n0), cap));
}

}  // namespace

std::optional<Figure> figure_from_name(const std::string& name) {
  if (name == "fig1") return Figure::Fig1;
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig2-inset") return Figure::Fig2Inset;
  if (name == "fig3") return Figure::Fig3;
  if (name == "fig4") return Figure::Fig4;
  if (name == "fig5") return Figure::Fig5;
  return std::nullopt;
}

std::string figure_name(Figure f) {
  switch (f) {
    case Figure::Fig1: return "fig1";
    case Figure::Fig2: return "fig2";
    case Figure::Fig2Inset: return "fig2-inset";
    case Figure::Fig3: return "fig3";
    case Figure::Fig4: return "fig4";
    case Figure::Fig5: return "fig5";
  }
  return "";
}

std::string figure_header(Figure f) {
  switch (f) {
    case Figure::Fig1: return "lambda1,lambda2,ebn_order";
    case Figure::Fig2: return "p,gamma,n_c";
    case Figure::Fig2Inset: return "p,mu_c,mu_c_sq";
    case Figure::Fig3: return "p,gamma,amendable,filter_kind";
    case Figure::Fig4: return "p,mu_c_sq,mu_c_filtered";
    case Figure::Fig5: return "k,n0,family,n_c";
  }
  return "";
}

SweepSpec default_sweep(Figure f) {
  SweepSpec s;
  s.figure = f;
  switch (f) {
    case Figure::Fig1:
      s.x = {-1.0, 1.0, 200};
      s.y = Axis{-1.0, 1.0, 200};
      s.fixed["lambda3"] = 0.5;
      break;
    case Figure::Fig2:
    case Figure::Fig3:
      s.x = {0.0, 1.0, 200};
      s.y = Axis{0.0, 1.0, 200};
      break;
    case Figure::Fig2Inset:
      s.x = {0.0, 1.0, 200};
      s.fixed["gamma"] = 1.0 / 3.0;
      break;
    case Figure::Fig4:
      s.x = {0.0, 1.0, 200};
      break;
    case Figure::Fig5:
      s.x = {0.02, 3.0, 200};
      s.y = Axis{0.0, 1.5, 200};
      break;
  }
  return s;
}

void validate(const SweepSpec& s) {
  auto check_axis = [](const Axis& a, const char* name) {
    if (a.steps < 2) throw InvariantError(std::string(name) + " axis needs at least 2 steps");
    if (!(a.min < a.max)) throw InvariantError(std::string(name) + " axis needs min < max");
  };
  check_axis(s.x, "x");
  const bool two_d = s.figure == Figure::Fig1 || s.figure == Figure::Fig2 || s.figure == Figure::Fig3 ||
                     s.figure == Figure::Fig5;
  if (two_d && !s.y) throw InvariantError(figure_name(s.figure) + " needs a second axis");
  if (s.y) check_axis(*s.y, "y");
  if (s.cap < 1) throw InvariantError("cap must be positive");
  const auto in_unit = [](const Axis& a) { return a.min >= 0.0 && a.max <= 1.0; };
  switch (s.figure) {
    case Figure::Fig1: {
      const double l3 = fixed_or(s, "lambda3", 0.5);
      if (std::abs(l3) > 1.0) throw InvariantError("lambda3 must lie in [-1, 1]");
      if (s.x.min < -1.0 || s.x.max > 1.0 || s.y->min < -1.0 || s.y->max > 1.0) {
        throw InvariantError("fig1 axes must lie in [-1, 1]");
      }
      break;
    }
    case Figure::Fig2:
    case Figure::Fig3:
      if (!in_unit(s.x) || !in_unit(*s.y)) throw InvariantError("p and gamma axes must lie in [0, 1]");
      break;
    case Figure::Fig2Inset:
    case Figure::Fig4: {
      const double g = fixed_or(s, "gamma", 1.0 / 3.0);
      if (!in_unit(s.x) || g < 0.0 || g > 1.0) throw InvariantError("p and gamma must lie in [0, 1]");
      if (s.figure == Figure::Fig4) fig4_filter(s.filter);
      break;
    }
    case Figure::Fig5:
      if (s.x.min <= 0.0 || s.y->min < 0.0) throw InvariantError("fig5 needs k > 0 and n0 >= 0");
      break;
  }
}

std::string format_shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string run_sweep(const SweepSpec& s) {
  validate(s);
  const auto f = format_shortest;
  std::vector<std::string> rows;
  switch (s.figure) {
    case Figure::Fig1: {
      const double l3 = fixed_or(s, "lambda3", 0.5);
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        std::string out;
        const double l1 = s.x.at(static_cast<int>(i));
        for (int j = 0; j < s.y->steps; ++j) {
          const double l2 = s.y->at(j);
          out += f(l1) + "," + f(l2) + "," + fig1_cell(l1, l2, l3, s.cap) + "\n";
        }
        return out;
      });
      break;
    }
    case Figure::Fig2:
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        std::string out;
        const double p = s.x.at(static_cast<int>(i));
        for (int j = 0; j < s.y->steps; ++j) {
          const double g = s.y->at(j);
          out += f(p) + "," + f(g) + "," + nc_cell(gad::n_c(p, g, s.cap)) + "\n";
        }
        return out;
      });
      break;
    case Figure::Fig2Inset: {
      const double g = fixed_or(s, "gamma", 1.0 / 3.0);
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        const double p = s.x.at(static_cast<int>(i));
        return f(p) + "," + f(gad::mu_c(p, g)) + "," + f(gad::mu_c_squared(p, g)) + "\n";
      });
      break;
    }
    case Figure::Fig3:
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        std::string out;
        const double p = s.x.at(static_cast<int>(i));
        for (int j = 0; j < s.y->steps; ++j) {
          const double g = s.y->at(j);
          const auto a = gad_amendability(p, g, s.cap, s.budget);
          out += f(p) + "," + f(g) + "," + (a.amendable ? "true" : "false") + "," +
                 (a.filter ? a.filter->kind_name() : std::string("none")) + "\n";
        }
        return out;
      });
      break;
    case Figure::Fig4: {
      const FilterCandidate u = fig4_filter(s.filter);
      const double g = fixed_or(s, "gamma", s.filter == "R2R1" ? 0.4 : 0.1);
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        const double p = s.x.at(static_cast<int>(i));
        const Channel psi = gad_kraus(GadParams(p, g));
        const double filtered = mu_c(compose(psi, compose(u.channel(), psi)));
        return f(p) + "," + f(gad::mu_c_squared(p, g)) + "," + f(filtered) + "\n";
      });
      break;
    }
    case Figure::Fig5:
      rows = parallel_map(s.x.steps, [&](std::size_t i) {
        std::string out;
        const double k = s.x.at(static_cast<int>(i));
        if (k == 1.0) return out;
        for (int j = 0; j < s.y->steps; ++j) {
          const double n0 = s.y->at(j);
          const char* family = "";
          const std::string nc = fig5_cell(k, n0, s.cap, &family);
          out += f(k) + "," + f(n0) + "," + family + "," + nc + "\n";
        }
        return out;
      });
      break;
  }
  std::string doc = figure_header(s.figure) + "\n";
  for (const auto& r : rows) doc += r;
  return doc;
}

}  // namespace ebnoise
