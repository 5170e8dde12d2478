#include "cmvwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cmvwalk/errors.hpp"
#include "cmvwalk/laurent.hpp"

namespace cmvwalk {
namespace spectral {

namespace {

double rho_of(cx alpha) {
  if (std::abs(alpha) >= 1.0)
    throw InvalidVerblunskyError("family parameter must satisfy |alpha| < 1");
  return std::sqrt(std::max(0.0, 1.0 - std::norm(alpha)));
}

// Density denominator: |sin(theta) + Im a| (family I) or
// |Im((1+b) e^{i theta})| (family II).  Strictly positive inside the band.
double density_denom(double theta, WalkType family, cx alpha) {
  if (family == WalkType::I) return std::abs(std::sin(theta) + alpha.imag());
  const cx v = (alpha + 1.0) * unit(theta);
  return std::abs(v.imag());
}

// Root of R^2 = d^2 + 4|alpha|^2 selected so that (s - T)/(2 rho) is the
// characteristic root of modulus >= 1.
cx dominant_selector(cx z, cx alpha) {
  const cx d = z - 1.0 / z;
  const cx s = z + 1.0 / z;
  const cx root = std::sqrt(d * d + 4.0 * std::norm(alpha));
  return std::abs(s - root) >= std::abs(s + root) ? root : -root;
}

struct GaussLegendre {
  std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

const GaussLegendre& gl_rule(int n) {
  static std::map<int, GaussLegendre> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussLegendre g;
  g.x.resize(n);
  g.w.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    g.x[i] = -z;
    g.x[n - 1 - i] = z;
    g.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    g.w[n - 1 - i] = g.w[i];
  }
  return cache.emplace(n, std::move(g)).first->second;
}

struct BandGrid {
  std::vector<double> theta;
  std::vector<double> weight;  // includes w(theta) d(theta) / (2 pi)
};

// Nodes of the band quadrature in the substituted variable
// cos(theta) = rho sin(u).  The substitution absorbs the sqrt(rho^2-cos^2)
// factor (= rho cos u) and keeps the integrand smooth even when the
// density denominator vanishes at a band edge.
BandGrid band_grid(WalkType family, cx alpha, int n_per_panel) {
  const double rho = rho_of(alpha);
  const GaussLegendre& gl = gl_rule(n_per_panel);
  BandGrid grid;
  grid.theta.reserve(4 * n_per_panel);
  grid.weight.reserve(4 * n_per_panel);
  const double ulims[3] = {-0.5 * pi, 0.0, 0.5 * pi};
  for (int arc = 0; arc < 2; ++arc) {
    const double sign = arc == 0 ? 1.0 : -1.0;
    for (int panel = 0; panel < 2; ++panel) {
      const double mid = 0.5 * (ulims[panel] + ulims[panel + 1]);
      const double half = 0.5 * (ulims[panel + 1] - ulims[panel]);
      for (int i = 0; i < n_per_panel; ++i) {
        const double u = mid + half * gl.x[i];
        const double su = std::sin(u), cu = std::cos(u);
        const double theta = sign * std::acos(rho * su);
        const double jac = rho * cu / std::sqrt(1.0 - rho * rho * su * su);
        const double numer = rho * cu;  // sqrt(rho^2 - cos^2 theta)
        grid.theta.push_back(theta);
        grid.weight.push_back(gl.w[i] * half * jac * numer /
                              density_denom(theta, family, alpha) / (2.0 * pi));
      }
    }
  }
  return grid;
}

constexpr int kFirstNodes = 16;
constexpr int kMaxNodes = 8192;
constexpr double kStabilityTol = 1e-9;

// Laurent values x_0..x_jmax (family I) or chi_0..chi_jmax (family II) at a
// point of the unit circle.
std::vector<cx> family_values(WalkType family, cx alpha, cx z,
                              std::size_t jmax) {
  std::vector<cx> vals(jmax + 1);
  for (std::size_t j = 0; j <= jmax; ++j)
    vals[j] = family == WalkType::I ? laurent::x_hat(j, z, alpha)
                                    : laurent::chi(j, z, alpha);
  return vals;
}

cx moment_payload(WalkType family, const std::vector<cx>& vals, std::size_t l,
                  std::size_t m) {
  return family == WalkType::I ? vals[l] * std::conj(vals[m])
                               : std::conj(vals[l]) * vals[m];
}

}  // namespace

cx caratheodory_i(cx z, cx a) {
  rho_of(a);
  if (z == cx(0, 0)) return {1, 0};
  const cx d = z - 1.0 / z;
  const cx T = dominant_selector(z, a);
  const cx F = (T - 2.0 * a.real()) / (d + cx(0, 2.0 * a.imag()));
  if (std::abs(z) < 1.0 && F.real() < -1e-9)
    throw BranchFailureError("caratheodory_i: no positive-real-part branch");
  return F;
}

cx caratheodory_ii(cx z, cx b) {
  rho_of(b);
  if (z == cx(0, 0)) return {1, 0};
  const cx d = z - 1.0 / z;
  const cx T = dominant_selector(z, b);
  const cx circ = b * z + std::conj(b) / z;
  const cx F = (d - b * z + std::conj(b) / z) / (T + circ);
  if (std::abs(z) < 1.0 && F.real() < -1e-9)
    throw BranchFailureError("caratheodory_ii: no positive-real-part branch");
  return F;
}

cx caratheodory(WalkType family, cx z, cx alpha) {
  return family == WalkType::I ? caratheodory_i(z, alpha)
                               : caratheodory_ii(z, alpha);
}

cx caratheodory_ratio(WalkType family, cx z, cx alpha, std::size_t order) {
  if (z == cx(0, 0)) throw Error("caratheodory_ratio needs z != 0");
  const double rho = rho_of(alpha);
  const cx d = z - 1.0 / z;
  const cx s = z + 1.0 / z;
  const cx root = std::sqrt(d * d + 4.0 * std::norm(alpha));
  cx lam_dom = (s - root) / (2.0 * rho);
  cx lam_sub = (s + root) / (2.0 * rho);
  if (std::abs(lam_sub) > std::abs(lam_dom)) std::swap(lam_dom, lam_sub);
  if (std::abs(lam_dom - lam_sub) < 1e-14)
    throw DegenerateRootsError("ratio at degenerate roots; perturb z");
  const cx q = lam_sub / lam_dom;

  auto coeffs = [&](cx u) {
    const cx denom = lam_dom - lam_sub;
    return std::pair<cx, cx>{(u - lam_sub) / denom, (lam_dom - u) / denom};
  };

  std::size_t n = 0;
  cx u_plain, u_tilde;
  if (family == WalkType::I) {
    if (order % 2 == 0) ++order;  // odd-j subsequence converges to F
    n = (order + 1) / 2;
    u_plain = (1.0 / z - alpha) / rho;
    u_tilde = (1.0 / z + alpha) / rho;
  } else {
    if (order % 2 == 1) ++order;  // even-j subsequence converges to F
    n = order / 2;
    u_plain = (1.0 / z - alpha * z) / rho;
    u_tilde = (1.0 / z + alpha * z) / rho;
  }
  cx qn(1, 0);
  for (std::size_t i = 0; i < n; ++i) qn *= q;
  const auto [bd, bs] = coeffs(u_plain);
  const auto [td, ts] = coeffs(u_tilde);
  return (td + ts * qn) / (bd + bs * qn);
}

double ac_density(double theta, WalkType family, cx alpha) {
  const double rho = rho_of(alpha);
  const double c = std::cos(theta);
  if (std::abs(c) >= rho)
    throw OutsideSupportError("theta outside the a.c. band");
  return std::sqrt(rho * rho - c * c) / density_denom(theta, family, alpha);
}

double m_of_b(cx b) {
  rho_of(b);
  const double s = std::norm(b) + b.real();
  const double sgn = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  const cx onep = 1.0 + b;
  return (1.0 + sgn) * std::abs(s / (onep * onep));
}

std::vector<Atom> atoms(WalkType family, cx alpha) {
  rho_of(alpha);
  std::vector<Atom> out;
  if (family == WalkType::I) {
    const double mass =
        std::abs(alpha.real()) / std::sqrt(1.0 - alpha.imag() * alpha.imag());
    if (mass < 1e-8) return out;
    double theta0 = std::asin(-alpha.imag()) + 0.0;  // normalize -0.0
    if (alpha.real() < 0.0) theta0 = wrap_angle(pi - theta0);
    out.push_back({theta0, mass});
    return out;
  }
  const double total = m_of_b(alpha);
  if (0.5 * total < 1e-8) return out;
  const double theta0 = wrap_angle(-std::arg(1.0 + alpha));
  out.push_back({theta0, 0.5 * total});
  out.push_back({wrap_angle(theta0 + pi), 0.5 * total});
  std::sort(out.begin(), out.end(),
            [](const Atom& l, const Atom& r) { return l.theta < r.theta; });
  return out;
}

double atom_mass_radial(double theta0, WalkType family, cx alpha) {
  auto m_at = [&](double eps) {
    return 0.5 * eps * caratheodory(family, (1.0 - eps) * unit(theta0), alpha);
  };
  const cx m0 = m_at(1e-3), m1 = m_at(1e-4), m2 = m_at(1e-5);
  const cx u1 = (10.0 * m1 - m0) / 9.0;
  const cx u2 = (10.0 * m2 - m1) / 9.0;
  const cx mstar = (100.0 * u2 - u1) / 99.0;
  const double mass = mstar.real();
  if (mass < 1e-8) throw NoAtomError("radial limit below the atom threshold");
  return mass;
}

cx band_average(WalkType family, cx alpha,
                const std::function<cx(double)>& payload) {
  cx prev(0, 0);
  bool have_prev = false;
  for (int n = kFirstNodes; n <= kMaxNodes; n *= 2) {
    const BandGrid grid = band_grid(family, alpha, n);
    cx acc(0, 0);
    for (std::size_t i = 0; i < grid.theta.size(); ++i)
      acc += grid.weight[i] * payload(grid.theta[i]);
    if (have_prev && std::abs(acc - prev) <= kStabilityTol) return acc;
    prev = acc;
    have_prev = true;
  }
  throw QuadratureError("band quadrature did not stabilize");
}

double ac_mass(WalkType family, cx alpha) {
  return band_average(family, alpha, [](double) { return cx(1, 0); }).real();
}

cx moment_integral(std::size_t t, std::size_t l, std::size_t m,
                   WalkType family, cx alpha) {
  const cx ac = band_average(family, alpha, [&](double theta) {
    const cx z = unit(theta);
    const cx vl = family == WalkType::I ? laurent::x_hat(l, z, alpha)
                                        : laurent::chi(l, z, alpha);
    const cx vm = family == WalkType::I ? laurent::x_hat(m, z, alpha)
                                        : laurent::chi(m, z, alpha);
    const cx prod = family == WalkType::I ? vl * std::conj(vm)
                                          : std::conj(vl) * vm;
    return unit(t * theta) * prod;
  });
  cx point(0, 0);
  for (const Atom& atom : atoms(family, alpha)) {
    const cx z0 = unit(atom.theta);
    const std::vector<cx> vals = family_values(family, alpha, z0, std::max(l, m));
    point += atom.mass * unit(t * atom.theta) * moment_payload(family, vals, l, m);
  }
  return ac + point;
}

std::vector<cx> moment_table(WalkType family, cx alpha, std::size_t tmax,
                             std::size_t jmax) {
  const std::size_t stride = jmax + 1;
  const std::size_t count = (tmax + 1) * stride * stride;

  auto accumulate = [&](int n) {
    const BandGrid grid = band_grid(family, alpha, n);
    std::vector<cx> acc(count, cx(0, 0));
    for (std::size_t i = 0; i < grid.theta.size(); ++i) {
      const double theta = grid.theta[i];
      const double wgt = grid.weight[i];
      const std::vector<cx> vals = family_values(family, alpha, unit(theta), jmax);
      for (std::size_t t = 0; t <= tmax; ++t) {
        const cx zt = wgt * unit(t * theta);
        for (std::size_t l = 0; l <= jmax; ++l)
          for (std::size_t m = 0; m <= jmax; ++m)
            acc[t * stride * stride + l * stride + m] +=
                zt * moment_payload(family, vals, l, m);
      }
    }
    return acc;
  };

  std::vector<cx> prev;
  for (int n = kFirstNodes; n <= kMaxNodes; n *= 2) {
    std::vector<cx> cur = accumulate(n);
    if (!prev.empty()) {
      double diff = 0.0;
      for (std::size_t i = 0; i < count; ++i)
        diff = std::max(diff, std::abs(cur[i] - prev[i]));
      if (diff <= kStabilityTol) {
        for (const Atom& atom : atoms(family, alpha)) {
          const std::vector<cx> vals =
              family_values(family, alpha, unit(atom.theta), jmax);
          for (std::size_t t = 0; t <= tmax; ++t) {
            const cx zt = atom.mass * unit(t * atom.theta);
            for (std::size_t l = 0; l <= jmax; ++l)
              for (std::size_t m = 0; m <= jmax; ++m)
                cur[t * stride * stride + l * stride + m] +=
                    zt * moment_payload(family, vals, l, m);
          }
        }
        return cur;
      }
    }
    prev = std::move(cur);
  }
  throw QuadratureError("moment quadrature did not stabilize");
}

SpectralMeasure measure(WalkType family, cx alpha, int samples_per_panel) {
  SpectralMeasure mu;
  mu.family = family;
  mu.alpha = alpha;
  const BandGrid grid = band_grid(family, alpha, samples_per_panel);
  mu.ac.reserve(grid.theta.size());
  for (double theta : grid.theta)
    mu.ac.push_back({theta, ac_density(theta, family, alpha)});
  std::sort(mu.ac.begin(), mu.ac.end(),
            [](const AcSample& l, const AcSample& r) { return l.theta < r.theta; });
  mu.atoms = atoms(family, alpha);
  mu.total_mass = ac_mass(family, alpha);
  for (const Atom& a : mu.atoms) mu.total_mass += a.mass;
  return mu;
}

}  // namespace spectral
}  // namespace cmvwalk
