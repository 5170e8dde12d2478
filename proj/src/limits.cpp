#include "cmvwalk/limits.hpp"

#include <cmath>

#include "cmvwalk/errors.hpp"
#include "cmvwalk/laurent.hpp"
#include "cmvwalk/spectral.hpp"

namespace cmvwalk {
namespace limits {

double LimitDistribution::total() const {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

double nu_i(cx a) {
  const double re = a.real(), im = a.imag();
  if (re == 0.0) return 0.0;
  const double rho = std::sqrt(1.0 - std::norm(a));
  const double sgn = re > 0.0 ? 1.0 : -1.0;
  return sgn / rho * (std::sqrt(1.0 - im * im) - std::abs(re));
}

double nu_ii(cx b) { return std::sqrt(1.0 - std::norm(b)) / std::abs(1.0 + b); }

double m_of_b(cx b) { return spectral::m_of_b(b); }

LimitDistribution limit_dist_i(cx a, double phi, cx alpha0, cx beta0,
                               std::size_t xmax) {
  if (std::abs(std::norm(alpha0) + std::norm(beta0) - 1.0) > 1e-9)
    throw Error("initial coin state must be normalized");
  LimitDistribution d;
  d.walk_type = WalkType::I;
  d.parity_resolved = false;
  d.p.assign(xmax + 1, 0.0);
  d.escape_mass = 1.0;
  const double re = a.real(), im = a.imag();
  if (re == 0.0) return d;
  const double nu = nu_i(a);
  const double overlap =
      std::norm(alpha0 * unit(0.5 * phi) + beta0 * unit(-0.5 * phi) * nu);
  const double prefac = re * re / (1.0 - im * im) * overlap * (1.0 + nu * nu);
  double geo = 1.0;
  for (std::size_t x = 0; x <= xmax; ++x) {
    d.p[x] = prefac * geo;
    geo *= nu * nu;
  }
  d.escape_mass = 1.0 - prefac / (1.0 - nu * nu);
  return d;
}

bool localized_i(cx a, double phi, cx alpha0, cx beta0) {
  if (std::abs(a.real()) <= 1e-12) return false;
  const double nu = nu_i(a);
  return std::abs(alpha0 * unit(0.5 * phi) + beta0 * unit(-0.5 * phi) * nu) >
         1e-12;
}

LimitDistribution limit_dist_ii(cx b, std::size_t xmax) {
  LimitDistribution d;
  d.walk_type = WalkType::II;
  d.parity_resolved = true;
  d.p.assign(xmax + 1, 0.0);
  d.escape_mass = 1.0;
  const double m = m_of_b(b);
  if (m == 0.0) return d;
  const double nu = nu_ii(b);
  const double nu2 = nu * nu;  // in (0,1) exactly when M(b) > 0
  d.p[0] = m * m;
  double geo = nu2;
  for (std::size_t x = 1; x <= xmax; ++x) {
    d.p[x] = m * m * (1.0 + 1.0 / nu2) * geo;
    geo *= nu2;
  }
  d.escape_mass = 1.0 - m * m * 2.0 / (1.0 - nu2);
  return d;
}

bool localized_ii(cx b) {
  const double x = b.real(), y = b.imag();
  return (x + 0.5) * (x + 0.5) + y * y > 0.25 + 1e-12;
}

double tree_atom_total(int kappa, TreeCase c) {
  if (kappa < 2) throw Error("tree requires kappa >= 2");
  if (c == TreeCase::A) return 0.0;
  return static_cast<double>(kappa - 2) / static_cast<double>(kappa - 1);
}

LimitDistribution tree_limit(int kappa, TreeCase c, std::size_t xmax) {
  if (kappa < 2) throw Error("tree requires kappa >= 2");
  const double base = -1.0 + 2.0 / kappa;
  const cx b = c == TreeCase::A ? cx(base, 0) : cx(-base, 0);
  return limit_dist_ii(b, xmax);
}

std::array<cx, 4> asymptotic_passage(std::size_t k, WalkType type,
                                     const QuantumCoin& coin, double gamma) {
  const CoinParams p = extract_params(coin, gamma);
  const cx param = type == WalkType::I ? p.a : p.b;
  const auto atom_list = spectral::atoms(type, param);
  if (atom_list.empty())
    throw NoAtomError("no point mass; the asymptotic block vanishes");

  std::array<cx, 4> block{};
  if (type == WalkType::I) {
    const spectral::Atom atom = atom_list.front();
    const cx z0 = unit(atom.theta);
    // Xi entry (d1,d2) ~ m0 x_{d2}(z0) conj(x_{2k+d1}(z0)) e^{i(s2-s1)phi/2}.
    const cx v[2] = {laurent::x_hat(0, z0, p.a), laurent::x_hat(1, z0, p.a)};
    const cx u[2] = {laurent::x_hat(2 * k, z0, p.a),
                     laurent::x_hat(2 * k + 1, z0, p.a)};
    const double s[2] = {1.0, -1.0};
    for (int d1 = 0; d1 < 2; ++d1)
      for (int d2 = 0; d2 < 2; ++d2)
        block[2 * d1 + d2] = atom.mass * v[d2] * std::conj(u[d1]) *
                             unit(0.5 * (s[d2] - s[d1]) * p.phi);
    return block;
  }
  // Type II: the two antipodal atoms carry equal mass; at matching parity
  // their sum is the total mass times the block at either atom.
  const double total = 2.0 * atom_list.front().mass;
  const cx z0 = unit(atom_list.front().theta);
  if (k >= 1)
    block[1] = total * std::conj(laurent::chi(2 * k - 1, z0, p.b)) * unit(-p.psi);
  block[3] = total * std::conj(laurent::chi(2 * k, z0, p.b));
  return block;
}

}  // namespace limits
}  // namespace cmvwalk
