#ifndef CMVWALK_ERRORS_HPP
#define CMVWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cmvwalk {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The 2x2 coin failed the unitarity check; `deviation` is the largest
/// entry of |U^H U - I|.
struct NonUnitaryError : Error {
  explicit NonUnitaryError(double dev)
      : Error("coin is not unitary, Gram deviation " + std::to_string(dev)),
        deviation(dev) {}
  double deviation;
};

struct DegenerateCoinError : Error {
  using Error::Error;
};

struct TruncationOverflowError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

struct InvalidVerblunskyError : Error {
  using Error::Error;
};

/// lambda_+ and lambda_- coincide (band edge) or the sign selector is 0;
/// callers perturb the evaluation point.
struct DegenerateRootsError : Error {
  using Error::Error;
};

struct BranchFailureError : Error {
  using Error::Error;
};

struct OutsideSupportError : Error {
  using Error::Error;
};

struct NoAtomError : Error {
  using Error::Error;
};

struct QuadratureError : Error {
  using Error::Error;
};

}  // namespace cmvwalk

#endif
