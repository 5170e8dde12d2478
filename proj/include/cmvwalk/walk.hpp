#ifndef CMVWALK_WALK_HPP
#define CMVWALK_WALK_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "cmvwalk/coin.hpp"
#include "cmvwalk/types.hpp"

namespace cmvwalk {

/// State of a half-line walk as a dense amplitude vector over the basis
/// enumeration:
///   Type I : (0,S)<->0, (0,L)<->1, (k,R)<->2k, (k,L)<->2k+1   (k>=1)
///   Type II: (0,L)<->0, (k,R)<->2k-1, (k,L)<->2k              (k>=1)
/// The last two retained indices form a guard band that evolution must
/// never populate (finite propagation speed makes truncation exact).
struct WalkState {
  WalkType type = WalkType::I;
  std::vector<cx> amp;

  /// Type I initial state a0|0,S> + b0|0,L>; |a0|^2+|b0|^2 must be 1.
  static WalkState type_i_origin(cx a0, cx b0, std::size_t sites);
  /// Type II initial state e^{i delta}|0,L>.
  static WalkState type_ii_origin(double delta, std::size_t sites);

  double norm() const;
  std::size_t dim() const { return amp.size(); }
  /// Largest site index representable in this truncation.
  std::size_t max_site() const;
};

/// Passage block Xi_{x,y}(t): entry (d1,d2) is <x,d1|W^t|y,d2> in the
/// {R,L} direction basis (the Type I origin uses S in the R slot; the
/// Type II origin has no R slot and those entries are zero).
struct PassageWeight {
  std::size_t x = 0, y = 0, t = 0;
  std::array<cx, 4> block{};  // row-major (R,R),(R,L),(L,R),(L,L)

  cx at(int d1, int d2) const { return block[2 * d1 + d2]; }  // 0=R, 1=L
};

/// One application of the evolution operator.  Throws
/// TruncationOverflowError if the guard band is reached.
WalkState step(const WalkState& state, const QuantumCoin& coin, double gamma);

WalkState evolve(const WalkState& state, const QuantumCoin& coin, double gamma,
                 std::size_t steps);

/// P(x) = sum over direction components at site x of |amplitude|^2.
std::vector<double> distribution(const WalkState& state);

PassageWeight passage_weight(std::size_t x, std::size_t y, std::size_t t,
                             WalkType type, const QuantumCoin& coin,
                             double gamma);

/// Dense N x N matrix representation of the evolution operator, built by
/// stepping basis vectors in a larger ambient space (all entries exact).
DenseMatrix walk_operator(WalkType type, const QuantumCoin& coin, double gamma,
                          std::size_t n);

}  // namespace cmvwalk

#endif
