#ifndef CMVWALK_CMV_HPP
#define CMVWALK_CMV_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "cmvwalk/coin.hpp"
#include "cmvwalk/types.hpp"

namespace cmvwalk {

/// Verblunsky coefficient sequence alpha_0, alpha_1, ... with |alpha_j| < 1.
/// The two closed-form families are
///   null_odd(a)  = (a, 0, a, 0, ...)
///   null_even(b) = (0, b, 0, b, ...)
/// and every sequence carries a rotation twist w acting as
/// alpha_j -> alpha_j e^{i(j+1)w}, the coefficient map of a rigid rotation
/// of the orthogonality measure by -w (atoms move from theta_0 to
/// theta_0 - w).
class VerblunskySeq {
 public:
  enum class Kind { null_odd, null_even, list };

  static VerblunskySeq null_odd(cx a);
  static VerblunskySeq null_even(cx b);
  static VerblunskySeq from_list(std::vector<cx> alphas);

  /// alpha_j -> alpha_j e^{i(j+1)w} on top of any existing twist.
  VerblunskySeq rotated(double w) const;
  /// alpha_j -> -alpha_j (the second-kind partner used by ratio limits).
  VerblunskySeq negated() const;

  cx alpha(std::size_t j) const;
  double rho(std::size_t j) const;

  Kind kind() const { return kind_; }
  cx parameter() const { return param_; }
  double twist() const { return twist_; }

 private:
  VerblunskySeq(Kind k, cx p, double w, std::vector<cx> list)
      : kind_(k), param_(p), twist_(w), list_(std::move(list)) {}

  Kind kind_;
  cx param_;
  double twist_ = 0.0;
  std::vector<cx> list_;
};

/// N x N truncation of the five-diagonal CMV matrix of a Verblunsky
/// sequence.  Rows are realized lazily from the band pattern; the last two
/// rows of the truncation are not unitary and tests mask indices within 4
/// of the cut.
class CmvMatrix {
 public:
  CmvMatrix(VerblunskySeq seq, std::size_t n);

  std::size_t size() const { return n_; }
  const VerblunskySeq& verblunsky() const { return seq_; }

  /// Entry (i, j) of the semi-infinite matrix (exact for all i, j < N).
  cx entry(std::size_t i, std::size_t j) const;

  /// Banded product C*v; throws DimensionMismatchError if len(v) != N.
  std::vector<cx> apply(std::span<const cx> v) const;

  /// (C^t)_{l,m} via t banded applications to e_m.  Requires l, m < N - t.
  cx power_entry(std::size_t t, std::size_t l, std::size_t m) const;

  DenseMatrix dense() const;

 private:
  // alpha with the boundary convention alpha_{-1} = -1, rho_{-1} = 0,
  // which makes the first two rows instances of the generic pattern.
  cx al(long j) const;
  double rh(long j) const;

  VerblunskySeq seq_;
  std::size_t n_;
  std::vector<cx> alpha_;   // alpha_{-1} .. alpha_{n}
  std::vector<double> rho_;
};

/// The Verblunsky sequence whose CMV matrix is conjugate to the walk
/// operator: a twisted null-odd family for Type I, null-even for Type II.
VerblunskySeq walk_verblunsky(const CoinParams& params, WalkType type);

/// Lambda * (transpose C) * Lambda^* (Type I) or
/// e^{i gamma} Lambda * C * Lambda^* (Type II); equals walk_operator()
/// entrywise away from the truncation cut.
DenseMatrix walk_matrix(const QuantumCoin& coin, double gamma, WalkType type,
                        std::size_t n);

/// Laurent polynomial values x_0(z)..x_jmax(z) for an arbitrary Verblunsky
/// sequence, obtained by solving C x = z x forward in 2x2 blocks.
/// Values are scaled by e^{log_scale} to avoid overflow.
struct ScaledSequence {
  std::vector<cx> value;
  double log_scale = 0.0;
};
ScaledSequence laurent_eigenvector(const VerblunskySeq& seq, cx z,
                                   std::size_t jmax);

/// Ratio-limit Caratheodory estimate x~_order(z)/x_order(z) for an
/// arbitrary sequence (order is snapped to odd).
cx generic_caratheodory(const VerblunskySeq& seq, cx z, std::size_t order);

/// Locates the point mass of a (possibly rotated) null_odd/null_even
/// family by maximizing |F| just inside the unit circle, searching off the
/// rotated a.c. band.  Returns the atom angle in (-pi, pi].
double locate_atom(const VerblunskySeq& seq);

}  // namespace cmvwalk

#endif
