#include <doctest.h>

#include <random>

#include "cmvwalk/cmv.hpp"
#include "cmvwalk/errors.hpp"
#include "cmvwalk/spectral.hpp"
#include "cmvwalk/walk.hpp"
#include "test_util.hpp"

using namespace cmvwalk;
using testutil::cdist;

TEST_SUITE("cmv") {

TEST_CASE("zero coefficients give the shift-like pattern") {
  const CmvMatrix c(VerblunskySeq::from_list(std::vector<cx>(10, cx(0, 0))), 6);
  const cx row0[6] = {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {0, 0}, {0, 0}};
  const cx row1[6] = {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}};
  for (std::size_t j = 0; j < 6; ++j) {
    CHECK(cdist(c.entry(0, j), row0[j]) < 1e-15);
    CHECK(cdist(c.entry(1, j), row1[j]) < 1e-15);
  }
  // applying to e_2 reproduces column 2 = (rho0 rho1, ...) of the shift
  std::vector<cx> e2(6, cx(0, 0));
  e2[2] = cx(1, 0);
  const auto col = c.apply(e2);
  CHECK(cdist(col[0], cx(1, 0)) < 1e-15);
  for (std::size_t i = 1; i < 6; ++i) CHECK(std::abs(col[i]) < 1e-15);
}

TEST_CASE("null-odd and null-even first rows") {
  const CmvMatrix codd(VerblunskySeq::null_odd(cx(0.6, 0)), 6);
  CHECK(cdist(codd.entry(0, 0), cx(0.6, 0)) < 1e-15);
  CHECK(cdist(codd.entry(0, 1), cx(0, 0)) < 1e-15);
  CHECK(cdist(codd.entry(0, 2), cx(0.8, 0)) < 1e-15);
  const CmvMatrix cev(VerblunskySeq::null_even(cx(1.0 / 3.0, 0)), 6);
  CHECK(cdist(cev.entry(0, 0), cx(0, 0)) < 1e-15);
  CHECK(cdist(cev.entry(0, 1), cx(1.0 / 3.0, 0)) < 1e-15);
  CHECK(cdist(cev.entry(0, 2), cx(std::sqrt(8.0) / 3.0, 0)) < 1e-12);
}

TEST_CASE("apply to e0 gives the first column") {
  const CmvMatrix c(VerblunskySeq::null_odd(cx(0.3, 0.4)), 8);
  std::vector<cx> e0(8, cx(0, 0));
  e0[0] = cx(1, 0);
  const auto col = c.apply(e0);
  CHECK(cdist(col[0], std::conj(cx(0.3, 0.4))) < 1e-15);
  CHECK(cdist(col[1], cx(std::sqrt(0.75), 0)) < 1e-12);
  for (std::size_t i = 2; i < 8; ++i) CHECK(std::abs(col[i]) < 1e-15);
}

TEST_CASE("band unitarity away from the cut") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  const std::size_t n = 48;
  const CmvMatrix c(VerblunskySeq::null_odd(cx(0.6, 0)), n);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<cx> v(n, cx(0, 0));
    double norm2 = 0.0;
    for (std::size_t i = 2; i + 6 < n; ++i) {
      v[i] = cx(U(rng), U(rng));
      norm2 += std::norm(v[i]);
    }
    const auto w = c.apply(v);
    double wnorm2 = 0.0;
    for (const cx& x : w) wnorm2 += std::norm(x);
    CHECK(std::abs(std::sqrt(wnorm2) - std::sqrt(norm2)) < 1e-12);
  }
}

TEST_CASE("power entries") {
  const CmvMatrix c(VerblunskySeq::null_even(cx(0.2, 0.3)), 32);
  CHECK(cdist(c.power_entry(0, 3, 3), cx(1, 0)) < 1e-15);
  CHECK(cdist(c.power_entry(0, 3, 5), cx(0, 0)) < 1e-15);
  for (std::size_t l = 0; l < 4; ++l)
    for (std::size_t m = 0; m < 4; ++m)
      CHECK(cdist(c.power_entry(1, l, m), c.entry(l, m)) < 1e-15);
  CHECK_THROWS_AS(c.power_entry(30, 5, 5), TruncationOverflowError);
}

TEST_CASE("apply validates dimensions") {
  const CmvMatrix c(VerblunskySeq::null_odd(cx(0.5, 0)), 8);
  std::vector<cx> v(7);
  CHECK_THROWS_AS(c.apply(v), DimensionMismatchError);
}

TEST_CASE("invalid coefficients are rejected") {
  CHECK_THROWS_AS(VerblunskySeq::null_odd(cx(1.0, 0)), InvalidVerblunskyError);
  CHECK_THROWS_AS(VerblunskySeq::from_list({cx(0.2, 0), cx(0, 1.3)}),
                  InvalidVerblunskyError);
}

TEST_CASE("rotation acts on coefficients") {
  const VerblunskySeq seq = VerblunskySeq::null_odd(cx(0.6, 0));
  const VerblunskySeq same = seq.rotated(0.0);
  CHECK(cdist(same.alpha(0), seq.alpha(0)) < 1e-15);
  const VerblunskySeq rot = seq.rotated(pi / 3.0);
  CHECK(cdist(rot.alpha(0), 0.6 * unit(pi / 3.0)) < 1e-15);
  CHECK(std::abs(rot.alpha(1)) < 1e-15);
  CHECK(cdist(rot.alpha(2), 0.6 * unit(pi)) < 1e-15);
}

TEST_CASE("walk operator equals the conjugated CMV matrix") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> angle(-pi, pi);
  const std::size_t n = 128;  // 64 sites
  for (int trial = 0; trial < 6; ++trial) {
    const QuantumCoin coin = testutil::random_coin(rng);
    const double gamma = angle(rng);
    for (WalkType type : {WalkType::I, WalkType::II}) {
      const DenseMatrix w = walk_operator(type, coin, gamma, n);
      const DenseMatrix m = walk_matrix(coin, gamma, type, n);
      double worst = 0.0;
      for (std::size_t i = 0; i + 4 < n; ++i)
        for (std::size_t j = 0; j + 4 < n; ++j)
          worst = std::max(worst, std::abs(w.at(i, j) - m.at(i, j)));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("hadamard conjugation holds at the argument-range boundary") {
  // sigma_l = arg(-1/sqrt 2) = pi exercises the principal-range edge
  const QuantumCoin coin = QuantumCoin::hadamard();
  for (double gamma : {0.0, 1.2}) {
    for (WalkType type : {WalkType::I, WalkType::II}) {
      const DenseMatrix w = walk_operator(type, coin, gamma, 32);
      const DenseMatrix m = walk_matrix(coin, gamma, type, 32);
      for (std::size_t i = 0; i + 4 < 32; ++i)
        for (std::size_t j = 0; j + 4 < 32; ++j)
          CHECK(cdist(w.at(i, j), m.at(i, j)) < 1e-12);
    }
  }
}

TEST_CASE("real canonical coin maps to the plain transposed matrix") {
  const QuantumCoin coin = QuantumCoin::from_verblunsky(cx(0.6, 0));
  const std::size_t n = 16;
  const DenseMatrix w = walk_operator(WalkType::I, coin, 0.0, n);
  const CmvMatrix c(VerblunskySeq::null_odd(cx(0.6, 0)), n);
  for (std::size_t i = 0; i + 4 < n; ++i)
    for (std::size_t j = 0; j + 4 < n; ++j)
      CHECK(cdist(w.at(i, j), c.entry(j, i)) < 1e-15);
}

TEST_CASE("diagonal coin walk is a phase-twisted shift") {
  QuantumCoin diag{unit(0.4), cx(0, 0), cx(0, 0), unit(0.9)};
  const DenseMatrix w = walk_operator(WalkType::II, diag, 0.2, 20);
  const DenseMatrix m = walk_matrix(diag, 0.2, WalkType::II, 20);
  for (std::size_t i = 0; i + 4 < 20; ++i)
    for (std::size_t j = 0; j + 4 < 20; ++j) {
      CHECK(cdist(w.at(i, j), m.at(i, j)) < 1e-13);
      // one nonzero of unit modulus per masked column: a twisted shift
      if (std::abs(w.at(i, j)) > 1e-14)
        CHECK(std::abs(std::abs(w.at(i, j)) - 1.0) < 1e-13);
    }
}

TEST_CASE("generic ratio matches the closed-form family") {
  const VerblunskySeq seq = VerblunskySeq::null_odd(cx(0.3, 0.4));
  for (cx z : {cx(0.4, 0.1), cx(-0.3, 0.5), cx(0.1, -0.6)}) {
    const cx generic = generic_caratheodory(seq, z, 61);
    const cx closed = spectral::caratheodory_i(z, cx(0.3, 0.4));
    CHECK(cdist(generic, closed) < 1e-9);
  }
}

TEST_CASE("rotated family atom moves by minus the twist") {
  const VerblunskySeq seq = VerblunskySeq::null_odd(cx(0.6, 0));
  const double theta0 = locate_atom(seq);
  CHECK(std::abs(theta0) < 1e-9);
  for (double w : {pi / 3.0, -0.7}) {
    const double theta = locate_atom(seq.rotated(w));
    CHECK(std::abs(wrap_angle(theta - theta0 + w)) < 1e-8);
  }
}

TEST_CASE("no atom detected for a family without point mass") {
  CHECK_THROWS_AS(locate_atom(VerblunskySeq::null_odd(cx(0, 0.5))),
                  NoAtomError);
}

}  // TEST_SUITE
