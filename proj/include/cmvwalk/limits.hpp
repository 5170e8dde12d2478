#ifndef CMVWALK_LIMITS_HPP
#define CMVWALK_LIMITS_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cmvwalk/coin.hpp"
#include "cmvwalk/types.hpp"

namespace cmvwalk {
namespace limits {

/// Closed-form limit of P(X_t = x).  For Type II the values hold along the
/// parity-matching subsequence (x + t even); parity_resolved records that,
/// and the Cesaro (time-averaged) value is half of each entry.
struct LimitDistribution {
  WalkType walk_type = WalkType::I;
  bool parity_resolved = false;
  std::vector<double> p;  ///< index = site x, 0..xmax
  double escape_mass = 0.0;

  double total() const;
};

enum class TreeCase { A, B };

/// Geometric decay rate of the Type I limit:
/// nu = sgn(Re a)/rho * (sqrt(1 - Im^2 a) - |Re a|); 0 when Re a = 0.
double nu_i(cx a);

/// Type II decay rate nu = sqrt(1-|b|^2)/|1+b|.  Less than 1 exactly on
/// the localization region |b|^2 + Re b > 0.
double nu_ii(cx b);

/// Total point mass of the null-even family (same M(b) as spectral::m_of_b).
double m_of_b(cx b);

LimitDistribution limit_dist_i(cx a, double phi, cx alpha0, cx beta0,
                               std::size_t xmax);

/// True iff Re a != 0 and alpha0 e^{i phi/2} + beta0 e^{-i phi/2} nu(a) != 0
/// (moduli compared against 1e-12).
bool localized_i(cx a, double phi, cx alpha0, cx beta0);

/// p(0) = M(b)^2, p(x) = M(b)^2 (1 + 1/nu^2) nu^{2x} for x >= 1, on the
/// matching-parity subsequence; identically zero when M(b) = 0.  The
/// initial phase delta never enters.
LimitDistribution limit_dist_ii(cx b, std::size_t xmax);

/// True iff (Re b + 1/2)^2 + (Im b)^2 > 1/4 (threshold 1e-12).
bool localized_ii(cx b);

/// Total atom mass of the kappa-regular tree reduction:
/// 0 for case A, (kappa-2)/(kappa-1) for case B.  The limit probability at
/// the origin is its square.
double tree_atom_total(int kappa, TreeCase c);

/// Distance-from-root limit distribution on the kappa-regular tree,
/// realized as limit_dist_ii with b = -1+2/kappa (A) or 1-2/kappa (B).
LimitDistribution tree_limit(int kappa, TreeCase c, std::size_t xmax);

/// Atom-sum passage block of Xi_{k,0}(t) with the global phase
/// (Delta^{1/2})^t e^{i k phi} (and the atom phase z0^t) stripped; Type II
/// values are the matching-parity ones.  Entry moduli are the meaningful
/// content.  Throws NoAtomError when the spectral measure has no atoms.
std::array<cx, 4> asymptotic_passage(std::size_t k, WalkType type,
                                     const QuantumCoin& coin, double gamma);

}  // namespace limits
}  // namespace cmvwalk

#endif
