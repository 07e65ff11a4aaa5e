#pragma once

#include <array>
#include <cmath>
#include <span>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace rotorqm::detail {

/// Composite 32-point Gauss-Legendre over each [breaks[i], breaks[i+1]], panel count per
/// segment doubled until every component changes by less than `rel_tol` (relative to the
/// component's magnitude, or to `floor` when that is larger).
template <std::size_t K, class F>
std::array<double, K> composite_gauss(F&& f, std::span<const double> breaks, double rel_tol,
                                      std::array<double, K> floor = {}) {
  using rule = boost::math::quadrature::gauss<double, 32>;
  const auto& nodes = rule::abscissa();
  const auto& weights = rule::weights();

  auto pass = [&](int panels) {
    std::array<double, K> total{};
    for (std::size_t seg = 0; seg + 1 < breaks.size(); ++seg) {
      const double a = breaks[seg];
      const double width = (breaks[seg + 1] - a) / panels;
      for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double half = 0.5 * width;
        const double mid = lo + half;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
          const double dx = half * nodes[i];
          // Boost stores x = 0 once for odd rules; 32 is even, so every node is paired.
          const auto left = f(mid - dx);
          const auto right = f(mid + dx);
          for (std::size_t k = 0; k < K; ++k) total[k] += weights[i] * half * (left[k] + right[k]);
        }
      }
    }
    return total;
  };

  auto previous = pass(1);
  for (int panels = 2; panels <= (1 << 14); panels *= 2) {
    const auto current = pass(panels);
    bool converged = true;
    for (std::size_t k = 0; k < K; ++k) {
      const double scale = std::max(std::abs(current[k]), floor[k]);
      if (std::abs(current[k] - previous[k]) > rel_tol * scale) converged = false;
    }
    if (converged) return current;
    previous = current;
  }
  return previous;
}

}  // namespace rotorqm::detail
