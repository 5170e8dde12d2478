#ifndef CMVWALK_COIN_HPP
#define CMVWALK_COIN_HPP

#include <string>

#include "cmvwalk/types.hpp"

namespace cmvwalk {

/// A 2x2 unitary coin.  Entries are stored in the acting convention: the
/// matrix [[c_rr, c_rl], [c_lr, c_ll]] maps an incoming direction vector
/// [R; L] to the outgoing one, i.e. c_xy is the amplitude for an incoming
/// y-mover to leave as an x-mover.  This is the order fixed by the
/// evolution rules; see README for the CLI string form.
struct QuantumCoin {
  cx c_rr{1.0, 0.0};
  cx c_rl{0.0, 0.0};
  cx c_lr{0.0, 0.0};
  cx c_ll{1.0, 0.0};

  static QuantumCoin identity() { return {}; }
  static QuantumCoin hadamard();

  /// The determinant-1 coin with c_rr = c_ll = sqrt(1-|alpha|^2),
  /// c_rl = -alpha, c_lr = conj(alpha).  Its Verblunsky scalar is alpha
  /// itself: extract_params(from_verblunsky(alpha)).a == alpha.
  static QuantumCoin from_verblunsky(cx alpha);
};

/// Scalar parameters derived from a coin (and the Type II reflection
/// phase gamma).  All angles are in the principal range (-pi, pi].
struct CoinParams {
  double rho = 0.0;      ///< |c_rr| = |c_ll|
  double sigma_r = 0.0;  ///< arg(c_rr)
  double sigma_l = 0.0;  ///< arg(c_ll)
  cx Delta;              ///< det of the coin, e^{i(sigma_r+sigma_l)}
  cx Delta_half;         ///< canonical square root e^{i(sigma_r+sigma_l)/2}
  cx a;                  ///< conj(c_lr) * Delta^{1/2}   (Type I scalar)
  cx b;                  ///< conj(c_lr) * Delta * e^{-i gamma} (Type II)
  double phi = 0.0;      ///< (sigma_r - sigma_l)/2
  double psi = 0.0;      ///< sigma_r - gamma
  double gamma = 0.0;
};

/// Throws NonUnitaryError unless the coin is unitary to 1e-12.
void validate(const QuantumCoin& coin);

/// Largest entry of |U^H U - I| for the acting matrix.
double unitarity_deviation(const QuantumCoin& coin);

/// Derives all scalar parameters.  Deterministic; throws DegenerateCoinError
/// when |c_rr| = 0 (the phases sigma_r, sigma_l are then undefined).
/// A vanishing c_lr is fine and gives a = b = 0.
CoinParams extract_params(const QuantumCoin& coin, double gamma);

/// Parses the CLI coin grammar:
///   hadamard | real:<alpha> | matrix:<re>,<im>;<re>,<im>;<re>,<im>;<re>,<im>
/// matrix entries are row-major in the acting convention
/// (c_rr, c_rl, c_lr, c_ll).  Throws Error on malformed input.
QuantumCoin parse_coin_spec(const std::string& spec);

}  // namespace cmvwalk

#endif
