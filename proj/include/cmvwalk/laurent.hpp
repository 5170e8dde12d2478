#ifndef CMVWALK_LAURENT_HPP
#define CMVWALK_LAURENT_HPP

#include "cmvwalk/types.hpp"

namespace cmvwalk {
namespace laurent {

/// Branch data for the characteristic roots at z: sign is
/// sgn(Im(e^{-i|arccos rho|} z)) with sgn(0) = 0, and rho = sqrt(1-|alpha|^2).
struct BranchContext {
  cx z;
  double rho = 0.0;
  int sign = 0;
};

BranchContext branch_context(cx z, cx alpha);

struct LambdaPair {
  cx plus;
  cx minus;
  int sign = 0;
};

/// lambda_{+-}(z) = (z + 1/z -+ sign * sqrt((z - 1/z)^2 + 4|alpha|^2)) / (2 rho).
/// Their product is 1 wherever the sign selector is nonzero.
LambdaPair lambda_pm(cx z, cx alpha);

/// Orthonormal Laurent polynomials of the null-odd family (a, 0, a, ...):
/// x_0 = 1, x_{2n-1}(z) = B_+ lambda_+^n + B_- lambda_-^n,
/// x_{2n}(z) = conj(x_{2n-1}(1/conj(z))).
/// Throws DegenerateRootsError at band edges (callers perturb z).
cx x_hat(std::size_t j, cx z, cx a);

/// Null-even family (0, b, 0, b, ...): chi_0 = 1,
/// chi_{2n} = B^e_+ lambda_+^n + B^e_- lambda_-^n,
/// chi_{2n+1} = B^o_+ lambda_+^n + B^o_- lambda_-^n.
cx chi(std::size_t j, cx z, cx b);

/// Second-kind partners: the same families with the parameter negated.
cx x_hat_tilde(std::size_t j, cx z, cx a);
cx chi_tilde(std::size_t j, cx z, cx b);

}  // namespace laurent
}  // namespace cmvwalk

#endif
