#include "cmvwalk/coin.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "cmvwalk/errors.hpp"

namespace cmvwalk {

QuantumCoin QuantumCoin::hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {cx(s, 0), cx(s, 0), cx(s, 0), cx(-s, 0)};
}

QuantumCoin QuantumCoin::from_verblunsky(cx alpha) {
  if (std::abs(alpha) >= 1.0)
    throw InvalidVerblunskyError("|alpha| must be < 1");
  const double r = std::sqrt(1.0 - std::norm(alpha));
  return {cx(r, 0), -alpha, std::conj(alpha), cx(r, 0)};
}

double unitarity_deviation(const QuantumCoin& c) {
  // Gram matrix of the acting matrix's columns.
  const cx g00 = std::conj(c.c_rr) * c.c_rr + std::conj(c.c_lr) * c.c_lr;
  const cx g01 = std::conj(c.c_rr) * c.c_rl + std::conj(c.c_lr) * c.c_ll;
  const cx g11 = std::conj(c.c_rl) * c.c_rl + std::conj(c.c_ll) * c.c_ll;
  double dev = std::abs(g00 - 1.0);
  dev = std::max(dev, std::abs(g01));
  dev = std::max(dev, std::abs(g11 - 1.0));
  return dev;
}

void validate(const QuantumCoin& coin) {
  const double dev = unitarity_deviation(coin);
  if (dev > 1e-12) throw NonUnitaryError(dev);
}

CoinParams extract_params(const QuantumCoin& coin, double gamma) {
  validate(coin);
  CoinParams p;
  p.gamma = gamma;
  p.rho = std::abs(coin.c_rr);
  if (p.rho < 1e-12)
    throw DegenerateCoinError("|c_rr| = 0: sigma_r, sigma_l undefined");
  p.sigma_r = std::arg(coin.c_rr);
  p.sigma_l = std::arg(coin.c_ll);
  p.Delta = coin.c_rr * coin.c_ll - coin.c_rl * coin.c_lr;
  p.Delta_half = unit(0.5 * (p.sigma_r + p.sigma_l));
  p.a = std::conj(coin.c_lr) * p.Delta_half;
  p.b = std::conj(coin.c_lr) * p.Delta * unit(-gamma);
  p.phi = 0.5 * (p.sigma_r - p.sigma_l);
  p.psi = p.sigma_r - gamma;
  return p;
}

namespace {

std::vector<double> parse_reals(const std::string& s, char sep) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) {
    std::size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw Error("bad number in coin spec: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

QuantumCoin parse_coin_spec(const std::string& spec) {
  if (spec == "hadamard") return QuantumCoin::hadamard();
  if (spec == "identity") return QuantumCoin::identity();
  if (spec.rfind("real:", 0) == 0) {
    const double alpha = std::stod(spec.substr(5));
    if (std::abs(alpha) >= 1.0) throw Error("real:<alpha> needs |alpha| < 1");
    return QuantumCoin::from_verblunsky(cx(alpha, 0.0));
  }
  if (spec.rfind("matrix:", 0) == 0) {
    std::vector<double> flat;
    std::stringstream ss(spec.substr(7));
    std::string entry;
    while (std::getline(ss, entry, ';')) {
      auto pair = parse_reals(entry, ',');
      if (pair.size() != 2) throw Error("matrix entry needs <re>,<im>");
      flat.insert(flat.end(), pair.begin(), pair.end());
    }
    if (flat.size() != 8) throw Error("matrix:... needs four re,im entries");
    QuantumCoin c{cx(flat[0], flat[1]), cx(flat[2], flat[3]),
                  cx(flat[4], flat[5]), cx(flat[6], flat[7])};
    validate(c);
    return c;
  }
  throw Error("unknown coin spec '" + spec +
              "' (expected hadamard | real:<a> | matrix:...)");
}

}  // namespace cmvwalk
