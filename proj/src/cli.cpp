#include "ebnoise/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ebnoise/amendable.hpp"
#include "ebnoise/errors.hpp"
#include "ebnoise/serialization.hpp"
#include "ebnoise/sweep.hpp"
#include "ebnoise/verify.hpp"

namespace ebnoise {

namespace {

struct AnalyzeArgs {
  std::string channel;
  int cap = kDefaultCap;
  double tol = 1e-6;
};

struct AmendArgs {
  std::string channel;
  int cap = kDefaultCap;
  int budget = 1000;
  unsigned seed = 42;
};

struct SweepArgs {
  std::string figure;
  std::string out;
  int cap = kDefaultCap;
  int budget = 0;
  std::optional<double> gamma;
  std::optional<double> lambda3;
  std::string filter = "s1";
  std::vector<double> x;
  std::vector<double> y;
  std::optional<int> steps;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const json doc = parse_json(read_channel_argument(a.channel));
  if (a.cap < 1) throw InvariantError("cap must be positive");
  if (is_gaussian_document(doc)) {
    const auto c = iso_from_json(doc);
    json r = iso_to_json(c);
    r["n_c"] = nc_to_json(gaussian::n_c_iso(c, a.cap));
    r["cap"] = a.cap;
    r["eb"] = gaussian::is_eb_iso(c);
    out << r.dump() << "\n";
    return kExitOk;
  }
  MuOptions opts;
  opts.tol = a.tol;
  const Channel c = channel_from_json(doc);
  out << report_to_json(analyze(c, a.cap, opts), a.cap).dump() << "\n";
  return kExitOk;
}

int cmd_amend(const AmendArgs& a, std::ostream& out) {
  const json doc = parse_json(read_channel_argument(a.channel));
  if (a.cap < 1) throw InvariantError("cap must be positive");
  if (a.budget < 1) throw InvariantError("budget must be positive");
  const Channel c = channel_from_json(doc);
  out << amend_to_json(search_filter(c, a.cap, a.budget, a.seed)).dump() << "\n";
  return kExitOk;
}

Axis axis_from(const std::vector<double>& v, Axis fallback, const char* name) {
  if (v.empty()) return fallback;
  if (v.size() != 3) throw ParseError(std::string("--") + name + " takes MIN MAX STEPS");
  const double steps = v[2];
  if (steps != std::floor(steps)) throw ParseError(std::string("--") + name + " steps must be an integer");
  return Axis{v[0], v[1], static_cast<int>(steps)};
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto fig = figure_from_name(a.figure);
  if (!fig) throw ParseError("unknown figure \"" + a.figure + "\"");
  SweepSpec s = default_sweep(*fig);
  s.x = axis_from(a.x, s.x, "x");
  if (s.y) s.y = axis_from(a.y, *s.y, "y");
  if (a.steps) {
    s.x.steps = *a.steps;
    if (s.y) s.y->steps = *a.steps;
  }
  s.cap = a.cap;
  s.budget = a.budget;
  if (a.gamma) s.fixed["gamma"] = *a.gamma;
  if (a.lambda3) s.fixed["lambda3"] = *a.lambda3;
  if (a.filter == "s1" || a.filter == "S1") {
    s.filter = "S1";
  } else if (a.filter == "r2r1" || a.filter == "R2R1") {
    s.filter = "R2R1";
  } else {
    throw ParseError("--filter must be s1 or r2r1");
  }
  const std::string csv = run_sweep(s);
  if (a.out.empty() || a.out == "-") {
    out << csv;
    return kExitOk;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw IoError("cannot open " + a.out + " for writing");
  file << csv;
  file.close();
  if (!file) throw IoError("failed writing " + a.out);
  return kExitOk;
}

}  // namespace

std::string read_channel_argument(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ostringstream buf;
  if (arg == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(arg, std::ios::binary);
  if (!file) throw IoError("cannot read " + arg);
  buf << file.rdbuf();
  return buf.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement-breaking noise measures for qubit and one-mode Gaussian channels"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "mu_c, n_c and EB^n flags of one channel");
  analyze->add_option("channel", analyze_args.channel, "channel JSON, file path, or - for stdin")->required();
  analyze->add_option("--cap", analyze_args.cap, "largest power tested")->capture_default_str();
  analyze->add_option("--tol", analyze_args.tol, "bisection tolerance")->capture_default_str();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "CSV data for a figure");
  sweep->add_option("figure", sweep_args.figure, "fig1 fig2 fig2-inset fig3 fig4 fig5")->required();
  sweep->add_option("--out", sweep_args.out, "output file (default stdout)");
  sweep->add_option("--cap", sweep_args.cap, "largest power tested")->capture_default_str();
  sweep->add_option("--budget", sweep_args.budget, "Euler filters tried per fig3 cell")->capture_default_str();
  sweep->add_option("--gamma", sweep_args.gamma, "fixed gamma for fig2-inset and fig4");
  sweep->add_option("--lambda3", sweep_args.lambda3, "fixed lambda3 for fig1");
  sweep->add_option("--filter", sweep_args.filter, "fig4 filter: s1 or r2r1")->capture_default_str();
  sweep->add_option("--x", sweep_args.x, "first axis MIN MAX STEPS")->expected(3);
  sweep->add_option("--y", sweep_args.y, "second axis MIN MAX STEPS")->expected(3);
  sweep->add_option("--steps", sweep_args.steps, "grid steps on every axis");

  auto* verify = app.add_subcommand("verify", "check every published fixture");

  AmendArgs amend_args;
  auto* amend = app.add_subcommand("amend", "search for an order-raising unitary filter");
  amend->add_option("channel", amend_args.channel, "channel JSON, file path, or - for stdin")->required();
  amend->add_option("--cap", amend_args.cap, "largest power tested")->capture_default_str();
  amend->add_option("--budget", amend_args.budget, "Euler grid points")->capture_default_str();
  amend->add_option("--seed", amend_args.seed, "grid jitter seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out);
    if (*sweep) return cmd_sweep(sweep_args, out);
    if (*amend) return cmd_amend(amend_args, out);
    if (*verify) return print_verify_table(verify_fixtures(), out) ? kExitOk : kExitVerifyFail;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InvariantError& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitParse;
}

}  // namespace ebnoise
