#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numeric>

namespace ovt {

struct NelderMeadOptions {
  int max_iterations = 500;
  /// Stop when every vertex is within this distance of the best one
  /// (per coordinate) ...
  double x_tolerance = 1e-7;
  /// ... and the objective spread is below this.
  double f_tolerance = 1e-15;
  /// Initial simplex: each coordinate perturbed by this fraction of its
  /// value (or by `zero_step` when the coordinate is zero).
  double step_fraction = 0.05;
  double zero_step = 0.00025;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = 0.0;
  int iterations = 0;
  bool tolerance_reached = false;
};

/// Downhill simplex minimisation with the standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). The objective
/// may return +inf to reject infeasible points.
template <std::size_t N, typename F>
NelderMeadResult<N> nelder_mead(F&& objective, const std::array<double, N>& start,
                                const NelderMeadOptions& options = {}) {
  using Point = std::array<double, N>;
  constexpr std::size_t kVertices = N + 1;

  std::array<Point, kVertices> simplex;
  std::array<double, kVertices> values;
  simplex[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    Point p = start;
    p[i] = p[i] != 0.0 ? p[i] * (1.0 + options.step_fraction) : options.zero_step;
    simplex[i + 1] = p;
  }
  for (std::size_t i = 0; i < kVertices; ++i) values[i] = objective(simplex[i]);

  std::array<std::size_t, kVertices> order;
  auto sort = [&] {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::array<Point, kVertices> s;
    std::array<double, kVertices> v;
    for (std::size_t i = 0; i < kVertices; ++i) {
      s[i] = simplex[order[i]];
      v[i] = values[order[i]];
    }
    simplex = s;
    values = v;
  };
  auto converged = [&] {
    double fspread = 0.0;
    double xspread = 0.0;
    for (std::size_t i = 1; i < kVertices; ++i) {
      if (!std::isfinite(values[i])) return false;
      fspread = std::max(fspread, std::abs(values[i] - values[0]));
      for (std::size_t j = 0; j < N; ++j) {
        xspread = std::max(xspread, std::abs(simplex[i][j] - simplex[0][j]));
      }
    }
    return fspread <= options.f_tolerance && xspread <= options.x_tolerance;
  };
  auto along = [](const Point& from, const Point& to, double t) {
    Point p;
    for (std::size_t j = 0; j < N; ++j) p[j] = from[j] + t * (to[j] - from[j]);
    return p;
  };

  NelderMeadResult<N> result;
  sort();
  int iteration = 0;
  while (iteration < options.max_iterations) {
    if (converged()) {
      result.tolerance_reached = true;
      break;
    }
    ++iteration;

    Point centroid{};
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) centroid[j] += simplex[i][j] / static_cast<double>(N);
    }
    const Point& worst = simplex[N];

    Point reflected = along(centroid, worst, -1.0);
    double f_reflected = objective(reflected);
    if (f_reflected < values[0]) {
      Point expanded = along(centroid, worst, -2.0);
      double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[N] = expanded;
        values[N] = f_expanded;
      } else {
        simplex[N] = reflected;
        values[N] = f_reflected;
      }
    } else if (f_reflected < values[N - 1]) {
      simplex[N] = reflected;
      values[N] = f_reflected;
    } else {
      bool outside = f_reflected < values[N];
      Point contracted = outside ? along(centroid, worst, -0.5) : along(centroid, worst, 0.5);
      double f_contracted = objective(contracted);
      if (f_contracted < (outside ? f_reflected : values[N])) {
        simplex[N] = contracted;
        values[N] = f_contracted;
      } else {
        for (std::size_t i = 1; i < kVertices; ++i) {
          simplex[i] = along(simplex[0], simplex[i], 0.5);
          values[i] = objective(simplex[i]);
        }
      }
    }
    sort();
  }
  if (!result.tolerance_reached && converged()) result.tolerance_reached = true;
  result.x = simplex[0];
  result.value = values[0];
  result.iterations = iteration;
  return result;
}

}  // namespace ovt
