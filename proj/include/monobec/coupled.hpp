#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <utility>

#include "monobec/errors.hpp"
#include "monobec/grid.hpp"

namespace monobec {

/// Result of one outward integration of the coupled stationary system.
/// Fields are valid up to (and including) diverged_at when it is set; nodes
/// past the divergence point are zero-filled.
///
/// tail_sign encodes how the trajectory left the decaying regime:
///   +1  psi started growing again (or hit the amplitude cap) while positive,
///   -1  psi crossed zero.
/// For an attractive contact term a runaway tail is eventually bent back
/// through zero, so "grows while still positive" is the robust stand-in for
/// divergence to +infinity; the two coincide for c >= 0.
struct CoupledOutcome {
  RadialField psi;
  RadialField w;
  std::optional<std::size_t> diverged_at;
  int tail_sign = +1;
};

namespace detail {

constexpr double rebound_slack = 1e-14;

/// Events shared by the outward integrators. Returns true when the march
/// should stop at node `i`.
struct TailClassifier {
  double cap;        // amplitude bound, relative to launch scale
  double prev;       // psi at the previous node
  bool started = false;

  // outputs
  std::optional<std::size_t> stop_at;
  int tail_sign = +1;

  bool step(std::size_t i, double value) {
    if (!std::isfinite(value)) {
      stop_at = i;
      tail_sign = +1;
      return true;
    }
    if (value <= 0.0) {
      stop_at = i;
      tail_sign = -1;
      return true;
    }
    if (value > cap || (started && value > prev * (1.0 + rebound_slack))) {
      stop_at = i;
      tail_sign = +1;
      return true;
    }
    prev = value;
    started = true;
    return false;
  }
};

}  // namespace detail

/// Integrate the coupled system outward from the origin:
///   psi'' + (2/r) psi' = [g^2 r^2 + 8 pi c psi^2 + W] psi,
///   W''   + (2/r) W'   = 8 pi psi^2,
/// with psi(0) = psi0, psi'(0) = 0, W(0) = w0, W'(0) = 0. The first node is
/// filled from the small-r series (O(r^4) coefficients), classic RK4 does the
/// rest. W absorbs the eigenvalue: W = V_g - eps up to the constant fixed by w0.
inline CoupledOutcome integrate_coupled(double c, double g, double psi0, double w0,
                                        const RadialGrid& grid) {
  grid.validate();
  if (psi0 < 0.0)
    throw std::invalid_argument("integrate_coupled: psi0 must be >= 0");
  if (!std::isfinite(psi0) || !std::isfinite(w0))
    throw std::invalid_argument("integrate_coupled: non-finite start values");

  CoupledOutcome out{RadialField(grid), RadialField(grid), std::nullopt, +1};
  const std::size_t n = grid.n;
  const double h = grid.h();
  const double pi = std::numbers::pi;

  out.psi[0] = psi0;
  out.w[0] = w0;
  if (psi0 == 0.0) {  // exact fixed point: nothing couples
    for (std::size_t i = 1; i < n; ++i) out.w[i] = w0;
    return out;
  }

  // Small-r series: psi = psi0 + a2 r^2 + a4 r^4, W = w0 + b2 r^2 + b4 r^4.
  const double g0 = w0 + 8.0 * pi * c * psi0 * psi0;
  const double a2 = g0 * psi0 / 6.0;
  const double b2 = 4.0 * pi / 3.0 * psi0 * psi0;
  const double a4 =
      (psi0 * (g * g + 16.0 * pi * c * psi0 * a2 + b2) + a2 * g0) / 20.0;
  const double b4 = 4.0 * pi / 5.0 * psi0 * a2;

  double psi = psi0 + a2 * h * h + a4 * h * h * h * h;
  double p = 2.0 * a2 * h + 4.0 * a4 * h * h * h;
  double w = w0 + b2 * h * h + b4 * h * h * h * h;
  double q = 2.0 * b2 * h + 4.0 * b4 * h * h * h;

  detail::TailClassifier tc;
  tc.cap = 1e4 * psi0;
  tc.prev = psi0;
  tc.started = true;

  auto finish = [&](std::size_t stop) {
    if (stop <= 3 && !std::isfinite(out.psi[stop]))
      throw step_size_error("integrate_coupled: overflow within 3 nodes, grid too coarse");
    out.diverged_at = tc.stop_at;
    out.tail_sign = tc.tail_sign;
  };

  out.psi[1] = psi;
  out.w[1] = w;
  if (tc.step(1, psi)) {
    finish(1);
    return out;
  }

  using State = std::array<double, 4>;  // psi, psi', W, W'
  auto rhs = [&](double r, const State& y) -> State {
    const double src = 8.0 * pi * y[0] * y[0];
    const double pot = g * g * r * r + c * src + y[2];
    return {y[1], pot * y[0] - 2.0 / r * y[1], y[3], src - 2.0 / r * y[3]};
  };

  State y{psi, p, w, q};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double r = grid.r(i);
    const State k1 = rhs(r, y);
    State t;
    for (int j = 0; j < 4; ++j) t[j] = y[j] + 0.5 * h * k1[j];
    const State k2 = rhs(r + 0.5 * h, t);
    for (int j = 0; j < 4; ++j) t[j] = y[j] + 0.5 * h * k2[j];
    const State k3 = rhs(r + 0.5 * h, t);
    for (int j = 0; j < 4; ++j) t[j] = y[j] + h * k3[j];
    const State k4 = rhs(r + h, t);
    for (int j = 0; j < 4; ++j)
      y[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);

    out.psi[i + 1] = y[0];
    out.w[i + 1] = y[2];
    if (tc.step(i + 1, y[0])) {
      finish(i + 1);
      return out;
    }
  }
  return out;  // reached r_max still decaying and positive
}

/// Outward integration of the orbital equation alone against a frozen
/// potential-minus-eigenvalue profile w(r):
///   psi'' + (2/r) psi' = [g^2 r^2 + 8 pi c psi^2 + w(r)] psi.
/// The march starts at node 1 with caller-supplied values (so singular
/// potentials like -2/r can be launched from their own series expansion).
struct FixedWOutcome {
  RadialField psi;
  std::optional<std::size_t> diverged_at;
  int tail_sign = +1;
};

template <typename WFn>
FixedWOutcome integrate_fixed_w(WFn&& w_of_r, double c, double g,
                                const RadialGrid& grid, double psi_node0,
                                double psi_node1, double dpsi_node1) {
  grid.validate();
  FixedWOutcome out{RadialField(grid), std::nullopt, +1};
  const std::size_t n = grid.n;
  const double h = grid.h();
  const double pi = std::numbers::pi;

  out.psi[0] = psi_node0;
  out.psi[1] = psi_node1;

  detail::TailClassifier tc;
  tc.cap = 1e4 * std::max(std::abs(psi_node0), std::abs(psi_node1));
  tc.prev = psi_node0;
  tc.started = true;
  if (tc.step(1, psi_node1)) {
    out.diverged_at = tc.stop_at;
    out.tail_sign = tc.tail_sign;
    return out;
  }

  using State = std::array<double, 2>;
  auto rhs = [&](double r, const State& y) -> State {
    const double pot = g * g * r * r + 8.0 * pi * c * y[0] * y[0] + w_of_r(r);
    return {y[1], pot * y[0] - 2.0 / r * y[1]};
  };

  State y{psi_node1, dpsi_node1};
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double r = grid.r(i);
    const State k1 = rhs(r, y);
    State t{y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]};
    const State k2 = rhs(r + 0.5 * h, t);
    t = {y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]};
    const State k3 = rhs(r + 0.5 * h, t);
    t = {y[0] + h * k3[0], y[1] + h * k3[1]};
    const State k4 = rhs(r + h, t);
    y[0] += h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y[1] += h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);

    out.psi[i + 1] = y[0];
    if (tc.step(i + 1, y[0])) {
      out.diverged_at = tc.stop_at;
      out.tail_sign = tc.tail_sign;
      return out;
    }
  }
  return out;
}

}  // namespace monobec
