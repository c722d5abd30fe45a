#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace monobec {

/// Uniform radial grid on [0, r_max] with n nodes (node 0 at the origin).
struct RadialGrid {
  double r_max = 40.0;
  std::size_t n = 8001;

  RadialGrid() = default;
  RadialGrid(double r_max_, std::size_t n_) : r_max(r_max_), n(n_) { validate(); }

  double h() const { return r_max / static_cast<double>(n - 1); }
  double r(std::size_t i) const { return h() * static_cast<double>(i); }

  void validate() const {
    if (!(r_max > 0.0) || n < 8)
      throw std::invalid_argument("RadialGrid: need r_max > 0 and n >= 8");
  }

  bool operator==(const RadialGrid& o) const { return r_max == o.r_max && n == o.n; }
};

/// Scalar field sampled on a RadialGrid.
struct RadialField {
  RadialGrid grid;
  std::vector<double> values;

  RadialField() = default;
  explicit RadialField(const RadialGrid& g) : grid(g), values(g.n, 0.0) {}
  RadialField(const RadialGrid& g, std::vector<double> v)
      : grid(g), values(std::move(v)) {
    if (values.size() != grid.n)
      throw std::invalid_argument("RadialField: value count != grid.n");
  }

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t i) const { return values[i]; }
  double& operator[](std::size_t i) { return values[i]; }
};

/// Sample fn(r) on every node of g.
template <typename F>
RadialField make_field(const RadialGrid& g, F&& fn) {
  RadialField f(g);
  for (std::size_t i = 0; i < g.n; ++i) f.values[i] = fn(g.r(i));
  return f;
}

}  // namespace monobec
