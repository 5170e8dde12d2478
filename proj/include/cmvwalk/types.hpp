#ifndef CMVWALK_TYPES_HPP
#define CMVWALK_TYPES_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

namespace cmvwalk {

using cx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;

/// The two half-line walk models: Type I has a self-loop state |0,S> at the
/// origin, Type II reflects |0,L> -> e^{i gamma}|1,R>.  The same tags select
/// the associated spectral family (null-odd / null-even Verblunsky sequence).
enum class WalkType { I = 1, II = 2 };

inline cx unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

/// Wrap an angle to the principal range (-pi, pi], matching std::arg.
inline double wrap_angle(double theta) {
  double r = std::remainder(theta, 2.0 * pi);
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

/// Dense complex matrix, row-major.  Only used at diagnostic scale (the
/// conjugation tests realize walk operators up to dimension ~128).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  cx& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cx& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<cx> data_;
};

}  // namespace cmvwalk

#endif
