#ifndef CMVWALK_SPECTRAL_HPP
#define CMVWALK_SPECTRAL_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "cmvwalk/types.hpp"

namespace cmvwalk {
namespace spectral {

struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

struct AcSample {
  double theta = 0.0;
  double w = 0.0;
};

/// Spectral measure of a closed-form family: absolutely continuous density
/// samples on the band {theta : |cos theta| < rho} plus a finite atom list.
struct SpectralMeasure {
  WalkType family = WalkType::I;
  cx alpha;
  std::vector<AcSample> ac;
  std::vector<Atom> atoms;
  double total_mass = 0.0;
};

/// Closed-form Caratheodory function of the null-odd family.  The square
/// root branch is fixed pointwise by selecting the characteristic root of
/// modulus >= 1, which is the unique choice matching the ratio limit and
/// giving F(0) = 1, Re F > 0.
cx caratheodory_i(cx z, cx a);

/// Null-even analogue; same root-selection rule.  (The naive principal
/// branch fails the F(0) = 1 normalization, so the ratio limit is the
/// branch authority; see caratheodory_ratio.)
cx caratheodory_ii(cx z, cx b);

cx caratheodory(WalkType family, cx z, cx alpha);

/// Finite-order ratio x~_j(z)/x_j(z) (family I) or chi~_j/chi_j (family II),
/// evaluated in overflow-safe ratio form.  The order is snapped to the
/// parity along which the ratio converges to F (odd for I, even for II);
/// the opposite parity converges to -F.
cx caratheodory_ratio(WalkType family, cx z, cx alpha, std::size_t order);

/// a.c. density w(theta) on the open band; throws OutsideSupportError.
double ac_density(double theta, WalkType family, cx alpha);

/// Closed-form point masses.  Family I: a single atom of mass
/// |Re a|/sqrt(1-Im^2 a) at arcsin(-Im a) for Re a > 0, at
/// pi - arcsin(-Im a) for Re a < 0; none when Re a = 0.  Family II: two
/// antipodal atoms at -arg(1+b) and -arg(1+b)+pi, each of mass M(b)/2.
std::vector<Atom> atoms(WalkType family, cx alpha);

/// Total mass M(b) = {1 + sgn(|b|^2 + Re b)} |(|b|^2 + Re b)/(1+b)^2|.
double m_of_b(cx b);

/// Numeric radial limit lim (1-r)/2 * F(r e^{i theta0}) with Richardson
/// extrapolation over r = 1-1e-3, 1-1e-4, 1-1e-5.  Throws NoAtomError when
/// the limit is below 1e-8.
double atom_mass_radial(double theta0, WalkType family, cx alpha);

/// (1/2pi) integral of w over the band, by composite Gauss-Legendre in the
/// substituted variable cos(theta) = rho sin(u) with node doubling to 1e-9
/// stability.  Throws QuadratureError on non-convergence.
double ac_mass(WalkType family, cx alpha);

/// (1/2pi) integral of payload(theta) * w(theta) over the band.
cx band_average(WalkType family, cx alpha, const std::function<cx(double)>& payload);

/// Moment integral of z^t x_l conj(x_m) (family I; family II uses
/// conj(chi_l) chi_m) over the full measure (a.c. + atoms).  Equals the
/// banded matrix power (C^t)_{l,m}.
cx moment_integral(std::size_t t, std::size_t l, std::size_t m,
                   WalkType family, cx alpha);

/// All moments for t <= tmax, l,m <= jmax in one quadrature pass.
/// Layout: [t * (jmax+1)^2 + l * (jmax+1) + m].
std::vector<cx> moment_table(WalkType family, cx alpha, std::size_t tmax,
                             std::size_t jmax);

/// Full measure for serialization: density samples on the quadrature grid
/// (samples_per_panel Gauss-Legendre nodes on each of the four panels),
/// atoms, and the quadrature total mass.
SpectralMeasure measure(WalkType family, cx alpha, int samples_per_panel = 64);

}  // namespace spectral
}  // namespace cmvwalk

#endif
