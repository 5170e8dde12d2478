#include "cmvwalk/laurent.hpp"

#include <cmath>

#include "cmvwalk/errors.hpp"

namespace cmvwalk {
namespace laurent {

namespace {

cx pow_int(cx base, std::size_t n) {
  cx acc(1, 0);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

LambdaPair roots_or_throw(cx z, cx alpha) {
  const LambdaPair lp = lambda_pm(z, alpha);
  if (lp.sign == 0 || std::abs(lp.plus - lp.minus) < 1e-14)
    throw DegenerateRootsError("band-edge degenerate roots; perturb z");
  return lp;
}

}  // namespace

BranchContext branch_context(cx z, cx alpha) {
  BranchContext b;
  b.z = z;
  b.rho = std::sqrt(std::max(0.0, 1.0 - std::norm(alpha)));
  const double im = std::imag(unit(-std::abs(std::acos(b.rho))) * z);
  b.sign = im > 0.0 ? 1 : (im < 0.0 ? -1 : 0);
  return b;
}

LambdaPair lambda_pm(cx z, cx alpha) {
  const BranchContext b = branch_context(z, alpha);
  const cx d = z - 1.0 / z;
  const cx root = std::sqrt(d * d + 4.0 * std::norm(alpha));
  const cx s = z + 1.0 / z;
  const cx sel = static_cast<double>(b.sign) * root;
  return {(s - sel) / (2.0 * b.rho), (s + sel) / (2.0 * b.rho), b.sign};
}

cx x_hat(std::size_t j, cx z, cx a) {
  if (j == 0) return {1, 0};
  if (j % 2 == 0) return std::conj(x_hat(j - 1, 1.0 / std::conj(z), a));
  const std::size_t n = (j + 1) / 2;
  const LambdaPair lp = roots_or_throw(z, a);
  const double rho = std::sqrt(1.0 - std::norm(a));
  const cx u = (1.0 / z - a) / rho;
  const cx bp = (u - lp.minus) / (lp.plus - lp.minus);
  const cx bm = (lp.plus - u) / (lp.plus - lp.minus);
  return bp * pow_int(lp.plus, n) + bm * pow_int(lp.minus, n);
}

cx chi(std::size_t j, cx z, cx b) {
  if (j == 0) return {1, 0};
  const LambdaPair lp = roots_or_throw(z, b);
  const double rho = std::sqrt(1.0 - std::norm(b));
  const cx denom = lp.plus - lp.minus;
  if (j % 2 == 0) {
    const std::size_t n = j / 2;
    const cx u = (1.0 / z - b * z) / rho;
    const cx bp = (u - lp.minus) / denom;
    const cx bm = (lp.plus - u) / denom;
    return bp * pow_int(lp.plus, n) + bm * pow_int(lp.minus, n);
  }
  const std::size_t n = (j - 1) / 2;
  const cx u = (z - std::conj(b) / z) / rho;
  const cx bp = z * (u - lp.minus) / denom;
  const cx bm = z * (lp.plus - u) / denom;
  return bp * pow_int(lp.plus, n) + bm * pow_int(lp.minus, n);
}

cx x_hat_tilde(std::size_t j, cx z, cx a) { return x_hat(j, z, -a); }

cx chi_tilde(std::size_t j, cx z, cx b) { return chi(j, z, -b); }

}  // namespace laurent
}  // namespace cmvwalk
