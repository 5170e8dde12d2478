#include <doctest.h>

#include <random>

#include "cmvwalk/errors.hpp"
#include "cmvwalk/walk.hpp"
#include "test_util.hpp"

using namespace cmvwalk;

TEST_SUITE("walk") {

TEST_CASE("deterministic right mover when c_lr = 0") {
  const QuantumCoin coin = QuantumCoin::from_verblunsky(cx(0, 0));
  WalkState s = WalkState::type_ii_origin(0.0, 12);
  s = evolve(s, coin, 0.0, 9);
  const auto p = distribution(s);
  CHECK(p[9] == doctest::Approx(1.0));
  for (std::size_t x = 0; x < 9; ++x) CHECK(p[x] == 0.0);
}

TEST_CASE("one hadamard step from the self loop") {
  WalkState s = WalkState::type_i_origin(cx(1, 0), cx(0, 0), 4);
  s = step(s, QuantumCoin::hadamard(), 0.0);
  const auto p = distribution(s);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));
}

TEST_CASE("distribution of a basis state and total mass") {
  WalkState s = WalkState::type_ii_origin(0.4, 44);
  auto p = distribution(s);
  CHECK(p[0] == doctest::Approx(1.0));

  std::mt19937_64 rng(11);
  const QuantumCoin coin = testutil::random_coin(rng);
  s = evolve(s, coin, 0.8, 40);
  p = distribution(s);
  double total = 0.0;
  for (double v : p) total += v;
  CHECK(std::abs(total - 1.0) < 1e-10);
}

TEST_CASE("norm is preserved for long evolutions") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 3; ++trial) {
    const QuantumCoin coin = testutil::random_coin(rng);
    WalkState s1 = WalkState::type_i_origin(cx(0.6, 0), cx(0, 0.8), 1003);
    s1 = evolve(s1, coin, 0.0, 1000);
    CHECK(std::abs(s1.norm() - 1.0) < 1e-10);
    WalkState s2 = WalkState::type_ii_origin(1.1, 1003);
    s2 = evolve(s2, coin, 0.5, 1000);
    CHECK(std::abs(s2.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("evolve composes like a semigroup") {
  std::mt19937_64 rng(13);
  const QuantumCoin coin = testutil::random_coin(rng);
  const WalkState s0 = WalkState::type_i_origin(cx(1, 0), cx(0, 0), 40);
  const WalkState once = evolve(s0, coin, 0.0, 25);
  const WalkState twice = evolve(evolve(s0, coin, 0.0, 11), coin, 0.0, 14);
  double worst = 0.0;
  for (std::size_t i = 0; i < once.dim(); ++i)
    worst = std::max(worst, std::abs(once.amp[i] - twice.amp[i]));
  CHECK(worst < 1e-12);
  const WalkState zero = evolve(s0, coin, 0.0, 0);
  for (std::size_t i = 0; i < s0.dim(); ++i) CHECK(zero.amp[i] == s0.amp[i]);
}

TEST_CASE("truncation overflow is detected") {
  const QuantumCoin coin = QuantumCoin::from_verblunsky(cx(0, 0));
  WalkState s = WalkState::type_ii_origin(0.0, 6);
  CHECK_THROWS_AS(evolve(s, coin, 0.0, 12), TruncationOverflowError);
}

TEST_CASE("type II parity is exact") {
  std::mt19937_64 rng(14);
  const QuantumCoin coin = testutil::random_coin(rng);
  WalkState s = WalkState::type_ii_origin(0.0, 60);
  for (std::size_t t = 1; t <= 50; ++t) {
    s = step(s, coin, 0.7);
    const auto p = distribution(s);
    for (std::size_t x = 0; x < p.size(); ++x)
      if ((x + t) % 2 == 1) CHECK(p[x] == 0.0);
  }
}

TEST_CASE("passage blocks at t = 0") {
  const QuantumCoin coin = QuantumCoin::hadamard();
  const PassageWeight same = passage_weight(3, 3, 0, WalkType::I, coin, 0.0);
  CHECK(same.at(0, 0) == cx(1, 0));
  CHECK(same.at(1, 1) == cx(1, 0));
  CHECK(same.at(0, 1) == cx(0, 0));
  const PassageWeight off = passage_weight(2, 5, 0, WalkType::I, coin, 0.0);
  for (const cx& v : off.block) CHECK(v == cx(0, 0));
  // Type II origin has no R slot.
  const PassageWeight origin = passage_weight(0, 0, 0, WalkType::II, coin, 0.0);
  CHECK(origin.at(1, 1) == cx(1, 0));
  CHECK(origin.at(0, 0) == cx(0, 0));
}

TEST_CASE("initial states are validated") {
  CHECK_THROWS_AS(WalkState::type_i_origin(cx(1, 0), cx(1, 0), 8), Error);
}

}  // TEST_SUITE
