#include "cmvwalk/walk.hpp"

#include <cmath>

#include "cmvwalk/errors.hpp"

namespace cmvwalk {

namespace {

constexpr double kGuardTol = 1e-12;

std::size_t dim_for_sites(WalkType type, std::size_t sites) {
  // Type I: indices 0..2*sites+1; Type II: 0..2*sites.
  return type == WalkType::I ? 2 * (sites + 1) : 2 * sites + 1;
}

}  // namespace

WalkState WalkState::type_i_origin(cx a0, cx b0, std::size_t sites) {
  const double n2 = std::norm(a0) + std::norm(b0);
  if (std::abs(n2 - 1.0) > 1e-9)
    throw Error("Type I initial state must be normalized");
  WalkState s;
  s.type = WalkType::I;
  s.amp.assign(dim_for_sites(WalkType::I, sites), cx(0, 0));
  s.amp[0] = a0;
  s.amp[1] = b0;
  return s;
}

WalkState WalkState::type_ii_origin(double delta, std::size_t sites) {
  WalkState s;
  s.type = WalkType::II;
  s.amp.assign(dim_for_sites(WalkType::II, sites), cx(0, 0));
  s.amp[0] = unit(delta);
  return s;
}

double WalkState::norm() const {
  double n2 = 0.0;
  for (const cx& v : amp) n2 += std::norm(v);
  return std::sqrt(n2);
}

std::size_t WalkState::max_site() const {
  return type == WalkType::I ? dim() / 2 - 1 : dim() / 2;
}

WalkState step(const WalkState& state, const QuantumCoin& coin, double gamma) {
  const std::size_t n = state.dim();
  WalkState out;
  out.type = state.type;
  out.amp.assign(n, cx(0, 0));

  auto scatter = [&](std::size_t target, cx value) {
    if (value == cx(0, 0)) return;
    if (target >= n)
      throw TruncationOverflowError("walk support reached the truncation");
    out.amp[target] += value;
  };

  if (state.type == WalkType::I) {
    for (std::size_t i = 0; i < n; ++i) {
      const cx u = state.amp[i];
      if (u == cx(0, 0)) continue;
      if (i == 0) {  // (0,S): behaves as a right-mover bouncing into itself
        scatter(2, coin.c_rr * u);
        scatter(0, coin.c_lr * u);
      } else if (i == 1) {  // (0,L): left bounce enters the self loop
        scatter(2, coin.c_rl * u);
        scatter(0, coin.c_ll * u);
      } else if (i % 2 == 0) {  // (x,R), x = i/2 >= 1
        scatter(i + 2, coin.c_rr * u);
        scatter(i - 1, coin.c_lr * u);  // (x-1,L) <-> 2x-1
      } else {  // (x,L), x = (i-1)/2 >= 1
        scatter(i + 1, coin.c_rl * u);  // (x+1,R) <-> 2x+2
        scatter(i - 2, coin.c_ll * u);  // (x-1,L)
      }
    }
  } else {
    const cx reflect = unit(gamma);
    for (std::size_t i = 0; i < n; ++i) {
      const cx u = state.amp[i];
      if (u == cx(0, 0)) continue;
      if (i == 0) {  // (0,L) -> e^{i gamma} (1,R)
        scatter(1, reflect * u);
      } else if (i % 2 == 1) {  // (x,R), x = (i+1)/2
        scatter(i + 2, coin.c_rr * u);
        scatter(i - 1, coin.c_lr * u);  // (x-1,L) <-> 2x-2
      } else {  // (x,L), x = i/2 >= 1
        scatter(i + 1, coin.c_rl * u);  // (x+1,R) <-> 2x+1
        scatter(i - 2, coin.c_ll * u);
      }
    }
  }

  if (n >= 2 &&
      (std::abs(out.amp[n - 1]) > kGuardTol || std::abs(out.amp[n - 2]) > kGuardTol))
    throw TruncationOverflowError("walk support entered the guard band");
  return out;
}

WalkState evolve(const WalkState& state, const QuantumCoin& coin, double gamma,
                 std::size_t steps) {
  WalkState s = state;
  for (std::size_t i = 0; i < steps; ++i) s = step(s, coin, gamma);
  return s;
}

std::vector<double> distribution(const WalkState& state) {
  std::vector<double> p(state.max_site() + 1, 0.0);
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const std::size_t site =
        state.type == WalkType::I ? i / 2 : (i + 1) / 2;
    p[site] += std::norm(state.amp[i]);
  }
  return p;
}

namespace {

// Basis index of (site, direction); direction 0=R, 1=L.  Returns npos for
// labels absent from the basis (Type II (0,R)).
constexpr std::size_t kNoIndex = static_cast<std::size_t>(-1);

std::size_t basis_index(WalkType type, std::size_t site, int dir) {
  if (type == WalkType::I) return 2 * site + static_cast<std::size_t>(dir);
  if (site == 0) return dir == 1 ? 0 : kNoIndex;
  return 2 * site - 1 + static_cast<std::size_t>(dir);
}

}  // namespace

PassageWeight passage_weight(std::size_t x, std::size_t y, std::size_t t,
                             WalkType type, const QuantumCoin& coin,
                             double gamma) {
  const std::size_t sites = std::max(x, y) + t + 2;
  PassageWeight pw;
  pw.x = x;
  pw.y = y;
  pw.t = t;
  for (int d2 = 0; d2 < 2; ++d2) {
    const std::size_t j = basis_index(type, y, d2);
    if (j == kNoIndex) continue;
    WalkState s;
    s.type = type;
    s.amp.assign(dim_for_sites(type, sites), cx(0, 0));
    s.amp[j] = cx(1, 0);
    s = evolve(s, coin, gamma, t);
    for (int d1 = 0; d1 < 2; ++d1) {
      const std::size_t i = basis_index(type, x, d1);
      if (i == kNoIndex) continue;
      pw.block[2 * d1 + d2] = s.amp[i];
    }
  }
  return pw;
}

DenseMatrix walk_operator(WalkType type, const QuantumCoin& coin, double gamma,
                          std::size_t n) {
  const std::size_t ambient = n + 6;
  DenseMatrix m(n);
  for (std::size_t j = 0; j < n; ++j) {
    WalkState s;
    s.type = type;
    s.amp.assign(ambient, cx(0, 0));
    s.amp[j] = cx(1, 0);
    s = step(s, coin, gamma);
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = s.amp[i];
  }
  return m;
}

}  // namespace cmvwalk
