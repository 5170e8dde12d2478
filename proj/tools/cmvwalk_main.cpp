// Command-line surface over the cmvwalk library: direct simulation,
// spectral measures, closed-form limit distributions, and the verification
// suites.  CSV/JSON output is deterministic; files are written to a
// temporary path and renamed on success.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "cmvwalk/cmv.hpp"
#include "cmvwalk/coin.hpp"
#include "cmvwalk/errors.hpp"
#include "cmvwalk/limits.hpp"
#include "cmvwalk/spectral.hpp"
#include "cmvwalk/types.hpp"
#include "cmvwalk/verify.hpp"
#include "cmvwalk/walk.hpp"

namespace {

using cmvwalk::cx;
using cmvwalk::WalkType;

constexpr int kExitConfig = 2;
constexpr int kExitTruncation = 3;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cmvwalk::Error("cannot open output file " + tmp);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

WalkType parse_walk_type(const std::string& s) {
  if (s == "1" || s == "I" || s == "i") return WalkType::I;
  if (s == "2" || s == "II" || s == "ii") return WalkType::II;
  throw cmvwalk::Error("walk type must be 1/I or 2/II");
}

cx parse_complex(const std::string& s) {
  std::stringstream ss(s);
  double re = 0, im = 0;
  char comma = 0;
  ss >> re;
  if (!ss) throw cmvwalk::Error("bad complex literal '" + s + "'");
  if (ss >> comma) {
    if (comma != ',' || !(ss >> im))
      throw cmvwalk::Error("bad complex literal '" + s + "'");
  }
  return {re, im};
}

// --init accepts "a,b" (real pair) or "are,aim,bre,bim".
std::pair<cx, cx> parse_init(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
  if (v.size() == 2) return {cx(v[0], 0), cx(v[1], 0)};
  if (v.size() == 4) return {cx(v[0], v[1]), cx(v[2], v[3])};
  throw cmvwalk::Error("--init needs 2 or 4 comma-separated numbers");
}

struct CommonOpts {
  std::string walk_type = "1";
  std::string coin_spec;
  std::string param;  // direct Verblunsky scalar, bypassing the coin
  double gamma = 0.0;
  bool degrees = false;
  std::string output;

  double angle(double v) const { return degrees ? v * cmvwalk::pi / 180.0 : v; }

  /// Verblunsky scalar for the selected family, from --param or the coin.
  cx family_param(WalkType type) const {
    if (!param.empty()) return parse_complex(param);
    if (coin_spec.empty()) throw cmvwalk::Error("need --coin or --param");
    const auto p =
        cmvwalk::extract_params(cmvwalk::parse_coin_spec(coin_spec), angle(gamma));
    return type == WalkType::I ? p.a : p.b;
  }
};

int cmd_simulate(const CommonOpts& opts, const std::string& init_spec,
                 double delta, std::size_t steps) {
  const WalkType type = parse_walk_type(opts.walk_type);
  const cmvwalk::QuantumCoin coin = cmvwalk::parse_coin_spec(opts.coin_spec);
  const double gamma = opts.angle(opts.gamma);
  cmvwalk::WalkState state =
      type == WalkType::I
          ? [&] {
              auto [a0, b0] = parse_init(init_spec);
              return cmvwalk::WalkState::type_i_origin(a0, b0, steps + 2);
            }()
          : cmvwalk::WalkState::type_ii_origin(opts.angle(delta), steps + 2);
  state = cmvwalk::evolve(state, coin, gamma, steps);
  const auto p = cmvwalk::distribution(state);
  std::string out = "x,probability\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != 0.0) out += std::to_string(x) + "," + fmt12(p[x]) + "\n";
  write_output(opts.output, out);
  return 0;
}

int cmd_spectrum(const CommonOpts& opts, int samples) {
  const WalkType type = parse_walk_type(opts.walk_type);
  const cx alpha = opts.family_param(type);
  const auto mu = cmvwalk::spectral::measure(type, alpha, samples);
  nlohmann::ordered_json j;
  j["ac"] = nlohmann::ordered_json::array();
  for (const auto& s : mu.ac) j["ac"].push_back({{"theta", s.theta}, {"w", s.w}});
  j["atoms"] = nlohmann::ordered_json::array();
  for (const auto& a : mu.atoms)
    j["atoms"].push_back({{"theta", a.theta}, {"mass", a.mass}});
  j["total_mass"] = mu.total_mass;
  write_output(opts.output, j.dump(2) + "\n");
  return 0;
}

int cmd_limit(const CommonOpts& opts, const std::string& init_spec,
              std::size_t xmax, bool cesaro, bool tree_mode, int tree_kappa,
              const std::string& tree_case) {
  cmvwalk::limits::LimitDistribution dist;
  if (tree_mode) {
    const auto c = tree_case == "A" || tree_case == "a"
                       ? cmvwalk::limits::TreeCase::A
                       : cmvwalk::limits::TreeCase::B;
    dist = cmvwalk::limits::tree_limit(tree_kappa, c, xmax);
  } else {
    const WalkType type = parse_walk_type(opts.walk_type);
    const cx alpha = opts.family_param(type);
    if (type == WalkType::I) {
      auto [a0, b0] = parse_init(init_spec);
      double phi = 0.0;
      if (!opts.coin_spec.empty())
        phi = cmvwalk::extract_params(cmvwalk::parse_coin_spec(opts.coin_spec),
                                      opts.angle(opts.gamma))
                  .phi;
      dist = cmvwalk::limits::limit_dist_i(alpha, phi, a0, b0, xmax);
    } else {
      dist = cmvwalk::limits::limit_dist_ii(alpha, xmax);
    }
  }
  const double scale = cesaro && dist.parity_resolved ? 0.5 : 1.0;
  std::string out = "x,probability\n";
  for (std::size_t x = 0; x < dist.p.size(); ++x)
    out += std::to_string(x) + "," + fmt12(scale * dist.p[x]) + "\n";
  out += "# escape_mass," + fmt12(dist.escape_mass) + "\n";
  if (dist.parity_resolved)
    out += std::string("# parity,matching-subsequence; cesaro_scale,") +
           (cesaro ? "applied" : "0.5") + "\n";
  write_output(opts.output, out);
  return 0;
}

int cmd_verify(const std::string& suite, std::optional<double> tol) {
  const auto results = cmvwalk::checks::run_suite(suite, tol);
  int failures = 0;
  std::printf("%-24s %-6s %12s %12s %8s  %s\n", "check", "status", "worst",
              "tolerance", "time", "detail");
  for (const auto& r : results) {
    if (!r.passed) ++failures;
    std::printf("%-24s %-6s %12.3e %12.3e %7.2fs  %s\n", r.name.c_str(),
                r.passed ? "PASS" : "FAIL", r.worst, r.tolerance, r.seconds,
                r.detail.c_str());
  }
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Half-line coined quantum walks via CMV spectral analysis"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string init_spec = "1,0";
  double delta = 0.0;
  std::size_t steps = 100, xmax = 10;
  int samples = 64;
  bool cesaro = false;
  int tree_kappa = 0;
  std::string tree_case = "B";
  std::string suite = "all";
  double tol = -1.0;

  auto add_common = [&](CLI::App* cmd, bool with_coin) {
    cmd->add_option("--walk-type", opts.walk_type, "1/I or 2/II");
    if (with_coin) {
      cmd->add_option("--coin", opts.coin_spec,
                      "hadamard | real:<a> | matrix:re,im;re,im;re,im;re,im");
      cmd->add_option("--gamma", opts.gamma, "Type II reflection phase");
    }
    cmd->add_flag("--degrees", opts.degrees, "interpret angles in degrees");
    cmd->add_option("--output,-o", opts.output, "output file (default stdout)");
  };

  auto* sim = app.add_subcommand("simulate", "evolve the walk and emit P(X_t=x)");
  add_common(sim, true);
  sim->add_option("--init", init_spec, "Type I coin state a,b (or re,im,re,im)");
  sim->add_option("--delta", delta, "Type II initial phase");
  sim->add_option("--steps", steps, "number of time steps")->required();

  auto* spec = app.add_subcommand("spectrum", "emit the spectral measure as JSON");
  add_common(spec, true);
  spec->add_option("--param", opts.param, "family parameter re[,im] (bypasses --coin)");
  spec->add_option("--samples", samples, "density samples per quadrature panel");

  auto* lim = app.add_subcommand("limit", "closed-form limit distribution as CSV");
  add_common(lim, true);
  lim->add_option("--param", opts.param, "family parameter re[,im]");
  lim->add_option("--init", init_spec, "Type I coin state");
  lim->add_option("--xmax", xmax, "largest site to emit");
  lim->add_flag("--cesaro", cesaro, "emit time-averaged (halved) Type II values");
  lim->add_option("--tree", tree_kappa, "tree degree kappa (enables tree mode)");
  lim->add_option("--case", tree_case, "tree case A or B");

  auto* tree = app.add_subcommand("tree", "kappa-regular tree limit distribution");
  tree->add_option("--kappa", tree_kappa, "tree degree")->required();
  tree->add_option("--case", tree_case, "A or B");
  tree->add_option("--xmax", xmax, "largest site to emit");
  tree->add_flag("--cesaro", cesaro, "emit time-averaged values");
  tree->add_option("--output,-o", opts.output, "output file (default stdout)");

  auto* ver = app.add_subcommand("verify", "run cross-module verification suites");
  ver->add_option("--suite", suite,
                  "conjugation|eigen|normalization|moments|oracle|boundary|"
                  "caratheodory|rotation|all");
  ver->add_option("--tol", tol, "override the primary tolerance");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(opts, init_spec, delta, steps);
    if (spec->parsed()) return cmd_spectrum(opts, samples);
    if (lim->parsed())
      return cmd_limit(opts, init_spec, xmax, cesaro, tree_kappa != 0,
                       tree_kappa, tree_case);
    if (tree->parsed()) {
      CommonOpts topts;
      topts.output = opts.output;
      return cmd_limit(topts, init_spec, xmax, cesaro, true, tree_kappa,
                       tree_case);
    }
    if (ver->parsed())
      return cmd_verify(suite, tol > 0 ? std::optional<double>(tol) : std::nullopt);
  } catch (const cmvwalk::TruncationOverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTruncation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
