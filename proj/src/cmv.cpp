#include "cmvwalk/cmv.hpp"

#include <algorithm>
#include <cmath>

#include "cmvwalk/errors.hpp"

namespace cmvwalk {

VerblunskySeq VerblunskySeq::null_odd(cx a) {
  if (std::abs(a) >= 1.0) throw InvalidVerblunskyError("|a| must be < 1");
  return VerblunskySeq(Kind::null_odd, a, 0.0, {});
}

VerblunskySeq VerblunskySeq::null_even(cx b) {
  if (std::abs(b) >= 1.0) throw InvalidVerblunskyError("|b| must be < 1");
  return VerblunskySeq(Kind::null_even, b, 0.0, {});
}

VerblunskySeq VerblunskySeq::from_list(std::vector<cx> alphas) {
  for (const cx& a : alphas)
    if (std::abs(a) >= 1.0)
      throw InvalidVerblunskyError("|alpha_j| must be < 1");
  return VerblunskySeq(Kind::list, cx(0, 0), 0.0, std::move(alphas));
}

VerblunskySeq VerblunskySeq::rotated(double w) const {
  VerblunskySeq s = *this;
  s.twist_ += w;
  return s;
}

VerblunskySeq VerblunskySeq::negated() const {
  VerblunskySeq s = *this;
  s.param_ = -s.param_;
  for (cx& a : s.list_) a = -a;
  return s;
}

cx VerblunskySeq::alpha(std::size_t j) const {
  cx base(0, 0);
  switch (kind_) {
    case Kind::null_odd:
      base = (j % 2 == 0) ? param_ : cx(0, 0);
      break;
    case Kind::null_even:
      base = (j % 2 == 1) ? param_ : cx(0, 0);
      break;
    case Kind::list:
      if (j >= list_.size())
        throw InvalidVerblunskyError("explicit sequence too short");
      base = list_[j];
      break;
  }
  if (base == cx(0, 0)) return base;
  return base * unit(static_cast<double>(j + 1) * twist_);
}

double VerblunskySeq::rho(std::size_t j) const {
  return std::sqrt(std::max(0.0, 1.0 - std::norm(alpha(j))));
}

CmvMatrix::CmvMatrix(VerblunskySeq seq, std::size_t n)
    : seq_(std::move(seq)), n_(n) {
  if (n_ < 6) throw Error("CMV truncation needs N >= 6");
  alpha_.resize(n_ + 3);
  rho_.resize(n_ + 3);
  alpha_[0] = cx(-1, 0);  // alpha_{-1}
  rho_[0] = 0.0;
  for (std::size_t j = 0; j + 1 < alpha_.size(); ++j) {
    alpha_[j + 1] = seq_.alpha(j);
    rho_[j + 1] = seq_.rho(j);
  }
}

cx CmvMatrix::al(long j) const { return alpha_[static_cast<std::size_t>(j + 1)]; }
double CmvMatrix::rh(long j) const { return rho_[static_cast<std::size_t>(j + 1)]; }

cx CmvMatrix::entry(std::size_t i, std::size_t j) const {
  // Uniform two-row band pattern; with alpha_{-1} = -1 the first two rows
  // need no special casing.
  const long k = static_cast<long>(i / 2);
  const long jj = static_cast<long>(j);
  if (jj < 2 * k - 1 || jj > 2 * k + 2) return {0, 0};
  if (i % 2 == 0) {
    if (jj == 2 * k - 1) return rh(2 * k - 1) * std::conj(al(2 * k));
    if (jj == 2 * k) return -al(2 * k - 1) * std::conj(al(2 * k));
    if (jj == 2 * k + 1) return rh(2 * k) * std::conj(al(2 * k + 1));
    return cx(rh(2 * k) * rh(2 * k + 1), 0);
  }
  if (jj == 2 * k - 1) return cx(rh(2 * k - 1) * rh(2 * k), 0);
  if (jj == 2 * k) return -al(2 * k - 1) * rh(2 * k);
  if (jj == 2 * k + 1) return -al(2 * k) * std::conj(al(2 * k + 1));
  return -al(2 * k) * rh(2 * k + 1);
}

std::vector<cx> CmvMatrix::apply(std::span<const cx> v) const {
  if (v.size() != n_) throw DimensionMismatchError("apply: len(v) != N");
  std::vector<cx> out(n_, cx(0, 0));
  for (std::size_t i = 0; i < n_; ++i) {
    const long k = static_cast<long>(i / 2);
    cx acc(0, 0);
    for (long jj = std::max(0L, 2 * k - 1);
         jj <= std::min(static_cast<long>(n_) - 1, 2 * k + 2); ++jj)
      acc += entry(i, static_cast<std::size_t>(jj)) * v[static_cast<std::size_t>(jj)];
    out[i] = acc;
  }
  return out;
}

cx CmvMatrix::power_entry(std::size_t t, std::size_t l, std::size_t m) const {
  if (l + t >= n_ || m + t >= n_)
    throw TruncationOverflowError("power_entry: l, m must be < N - t");
  std::vector<cx> v(n_, cx(0, 0));
  v[m] = cx(1, 0);
  for (std::size_t s = 0; s < t; ++s) v = apply(v);
  return v[l];
}

DenseMatrix CmvMatrix::dense() const {
  DenseMatrix d(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) d.at(i, j) = entry(i, j);
  return d;
}

VerblunskySeq walk_verblunsky(const CoinParams& p, WalkType type) {
  if (type == WalkType::I)
    return VerblunskySeq::null_odd(p.a).rotated(-0.5 * (p.sigma_r + p.sigma_l));
  return VerblunskySeq::null_even(p.b).rotated(p.gamma -
                                               0.5 * (p.sigma_r + p.sigma_l));
}

DenseMatrix walk_matrix(const QuantumCoin& coin, double gamma, WalkType type,
                        std::size_t n) {
  const CoinParams p = extract_params(coin, gamma);
  const CmvMatrix c(walk_verblunsky(p, type), n);
  std::vector<cx> lambda(n);
  if (type == WalkType::I) {
    for (std::size_t i = 0; i < n; ++i) {
      const double k = static_cast<double>((i + 1) / 2);
      lambda[i] = (i % 2 == 0) ? unit(k * p.sigma_r) : unit(-k * p.sigma_l);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double k = static_cast<double>(i / 2);
      lambda[i] = (i % 2 == 0) ? unit(-k * (p.sigma_l - gamma))
                               : unit(k * (p.sigma_r - gamma));
    }
  }
  const cx front = type == WalkType::II ? unit(gamma) : cx(1, 0);
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const cx e = type == WalkType::I ? c.entry(j, i) : c.entry(i, j);
      m.at(i, j) = front * lambda[i] * e * std::conj(lambda[j]);
    }
  return m;
}

namespace {

// alpha/rho with the alpha_{-1} = -1 boundary convention.
cx seq_al(const VerblunskySeq& s, long j) {
  return j < 0 ? cx(-1, 0) : s.alpha(static_cast<std::size_t>(j));
}
double seq_rh(const VerblunskySeq& s, long j) {
  return j < 0 ? 0.0 : s.rho(static_cast<std::size_t>(j));
}

}  // namespace

ScaledSequence laurent_eigenvector(const VerblunskySeq& seq, cx z,
                                   std::size_t jmax) {
  if (z == cx(0, 0)) throw Error("laurent_eigenvector needs z != 0");
  ScaledSequence out;
  out.value.reserve(jmax + 2);
  out.value.push_back(cx(1, 0));  // x_0
  cx xm1(0, 0), x0(1, 0);         // (x_{2k-1}, x_{2k}) rolling pair
  double log_scale = 0.0;
  for (long k = 0; out.value.size() <= jmax; ++k) {
    // Rows 2k and 2k+1 of (C - z)x = 0 determine (x_{2k+1}, x_{2k+2}).
    const cx a2km1 = seq_al(seq, 2 * k - 1), a2k = seq_al(seq, 2 * k),
             a2kp1 = seq_al(seq, 2 * k + 1);
    const double r2km1 = seq_rh(seq, 2 * k - 1), r2k = seq_rh(seq, 2 * k),
                 r2kp1 = seq_rh(seq, 2 * k + 1);
    const cx rhs1 = z * x0 - r2km1 * std::conj(a2k) * xm1 +
                    a2km1 * std::conj(a2k) * x0;
    const cx rhs2 = r2km1 * r2k * xm1 - a2km1 * r2k * x0;
    const cx A = r2k * std::conj(a2kp1);
    const cx B = cx(r2k * r2kp1, 0);
    const cx C = z + a2k * std::conj(a2kp1);
    const cx D = a2k * r2kp1;
    const cx det = A * D - B * C;  // = -rho_{2k} rho_{2k+1} z
    cx x1 = (rhs1 * D - B * rhs2) / det;
    cx x2 = (A * rhs2 - C * rhs1) / det;
    out.value.push_back(x1);
    if (out.value.size() <= jmax) out.value.push_back(x2);
    const double mag = std::max(std::abs(x1), std::abs(x2));
    if (mag > 1e120) {
      const double s = 1.0 / mag;
      x1 *= s;
      x2 *= s;
      for (cx& v : out.value) v *= s;
      log_scale += std::log(mag);
    }
    xm1 = x1;
    x0 = x2;
  }
  out.value.resize(jmax + 1);
  out.log_scale = log_scale;
  return out;
}

cx generic_caratheodory(const VerblunskySeq& seq, cx z, std::size_t order) {
  if (order % 2 == 0) ++order;
  const ScaledSequence plain = laurent_eigenvector(seq, z, order);
  const ScaledSequence tilde = laurent_eigenvector(seq.negated(), z, order);
  const cx num = tilde.value[order];
  const cx den = plain.value[order];
  return (num / den) * std::exp(tilde.log_scale - plain.log_scale);
}

double locate_atom(const VerblunskySeq& seq) {
  if (seq.kind() == VerblunskySeq::Kind::list)
    throw Error("atom location supported for the closed-form families only");
  const double rho = std::sqrt(1.0 - std::norm(seq.parameter()));
  const double w = seq.twist();
  const double r = 1.0 - 1e-6;
  const std::size_t order = 81;

  // The twist alpha_j -> alpha_j e^{i(j+1)w} rotates the measure by -w,
  // so the a.c. band of the twisted family is {|cos(theta + w)| < rho}.
  auto off_band = [&](double theta) {
    return std::abs(std::cos(theta + w)) > rho + 0.02;
  };
  auto height = [&](double theta) {
    return std::abs(generic_caratheodory(seq, r * unit(theta), order));
  };

  const int grid = 8192;
  double best_theta = 0.0, best = -1.0;
  bool found = false;
  for (int i = 0; i < grid; ++i) {
    const double theta = -pi + (2.0 * pi * (i + 0.5)) / grid;
    if (!off_band(theta)) continue;
    const double h = height(theta);
    if (h > best) {
      best = h;
      best_theta = theta;
      found = true;
    }
  }
  if (!found) throw NoAtomError("no point mass detected");

  // Golden-section refinement of the peak.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = best_theta - 2.0 * pi / grid, hi = best_theta + 2.0 * pi / grid;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = height(x1), f2 = height(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = height(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = height(x1);
    }
  }
  const double theta_hat = wrap_angle(0.5 * (lo + hi));

  // A genuine point mass makes (1-r)/2 |F| stable in r; band-edge
  // background decays as r -> 1.
  auto mass_at = [&](double rr) {
    return 0.5 * (1.0 - rr) *
           std::abs(generic_caratheodory(seq, rr * unit(theta_hat), order));
  };
  const double m_far = mass_at(1.0 - 1e-4);
  const double m_near = mass_at(1.0 - 1e-6);
  if (m_near < 1e-6 || m_near < 0.8 * m_far)
    throw NoAtomError("no point mass detected");
  return theta_hat;
}

}  // namespace cmvwalk
