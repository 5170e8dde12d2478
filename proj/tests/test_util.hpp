#ifndef CMVWALK_TEST_UTIL_HPP
#define CMVWALK_TEST_UTIL_HPP

#include <random>

#include "cmvwalk/coin.hpp"
#include "cmvwalk/types.hpp"

namespace testutil {

using cmvwalk::cx;

inline cmvwalk::QuantumCoin random_coin(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-cmvwalk::pi, cmvwalk::pi);
  std::uniform_real_distribution<double> mix(0.2, 1.37);
  const double sr = angle(rng), sl = angle(rng), tau = angle(rng);
  const double th = mix(rng);
  cmvwalk::QuantumCoin c;
  c.c_rr = std::cos(th) * cmvwalk::unit(sr);
  c.c_ll = std::cos(th) * cmvwalk::unit(sl);
  c.c_lr = std::sin(th) * cmvwalk::unit(tau);
  c.c_rl = -cmvwalk::unit(sr + sl) * std::conj(c.c_lr);
  return c;
}

inline double cdist(cx a, cx b) { return std::abs(a - b); }

}  // namespace testutil

#endif
