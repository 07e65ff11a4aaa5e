#pragma once

// Classical Sagnac timing in a rotating frame, plus the semiclassical canonical momentum
// and momentum-circulation phase.
//
// Proper time is reported in seconds: dtau = gamma dt + omega r^2 / (c^2 gamma) dphi.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rotorqm/types.hpp"

namespace rotorqm::classical {

/// gamma = sqrt(1 - omega^2 r^2 / c^2). Throws SUPERLUMINAL_RIM unless |omega| r < c.
double gamma_factor(const RotatingFrame& frame, double r);

/// Proper-time interval accumulated at radius r over global interval dt and angle dphi.
double proper_time(const RotatingFrame& frame, double r, double delta_t_global,
                   double delta_phi);

/// Global-time durations of two signals sent around a closed path.
struct TimingResult {
  double t_cw = 0.0;   ///< traversal with increasing phi
  double t_ccw = 0.0;  ///< traversal with decreasing phi
  double delta_t = 0.0;  ///< t_ccw - t_cw, evaluated directly (not by subtracting the durations)
  std::vector<double> gamma_profile;
};

/// Exact circle result delta_t = 4 pi omega r^2 / (c^2 gamma^2). The per-direction
/// durations assume signals with proper speed c (light in vacuum).
TimingResult roundtrip_delta_t(const RotatingFrame& frame, double r);

/// Leading-order area law 4 omega A / c^2. Requires area > 0.
double leading_order_delta_t(const RotatingFrame& frame, double area);

struct ClassicalSignal {
  double frequency = 0.0;  ///< Hz, > 0
};

/// 2 pi nu delta_t.
double classical_sagnac_phase(const ClassicalSignal& signal, double delta_t);

/// Closed path r(phi) encircling the origin, phi spanning exactly 2 pi.
///
/// Either analytic (a callable r(phi)) or sampled; sampled paths are interpolated with a
/// periodic cubic spline.
class ClosedPath {
 public:
  static ClosedPath circle(double radius, int samples = 64);
  static ClosedPath from_function(std::function<double(double)> radius_of_phi,
                                  int samples = 256, double phi_start = 0.0);
  /// `phi` strictly increasing with phi.back() - phi.front() == 2 pi and r closed.
  static ClosedPath from_samples(std::vector<double> phi, std::vector<double> r);

  std::span<const double> phi() const noexcept { return phi_; }
  std::span<const double> r() const noexcept { return r_; }
  bool analytic() const noexcept { return static_cast<bool>(radius_fn_); }
  double phi_start() const noexcept { return phi_.front(); }
  double max_radius() const noexcept;

  double radius_at(double phi) const;
  double radius_slope_at(double phi) const;

  /// Breakpoints the quadrature must respect (spline knots, or just the endpoints).
  std::vector<double> breakpoints() const;

 private:
  ClosedPath() = default;
  void validate() const;
  void build_spline();
  std::size_t interval_of(double phi) const;
  double wrap(double phi) const;

  std::vector<double> phi_;
  std::vector<double> r_;
  std::vector<double> second_;  // spline second derivatives at the knots
  std::function<double(double)> radius_fn_;
};

/// A = (1/2) closed-integral r^2 dphi.
double enclosed_area(const ClosedPath& path);

/// Sagnac delay along an arbitrary closed path, by quadrature of the dphi term in each
/// direction: delta_t = 2 closed-integral omega r^2 / (c^2 gamma^2) dphi.
TimingResult path_delta_t(const RotatingFrame& frame, const ClosedPath& path);

struct PathTraceRow {
  double phi;
  double r;
  double dT_contribution;  ///< s; the rows sum to delta_t
};

/// Uniform-in-phi audit trace of the delta_t integrand (periodic trapezoid weights).
std::vector<PathTraceRow> path_trace(const RotatingFrame& frame, const ClosedPath& path,
                                     int samples);

struct Velocity {
  double r_dot = 0.0;    ///< m/s
  double phi_dot = 0.0;  ///< rad/s
  double z_dot = 0.0;    ///< m/s
};

struct CanonicalMomentum {
  double p_r = 0.0;
  double p_phi = 0.0;
  double p_z = 0.0;
};

/// P = m v + m omega x r in the orthonormal cylindrical basis, at r = frame.radius unless
/// `r` is given.
CanonicalMomentum canonical_momentum(const RotatingFrame& frame, const Particle& particle,
                                     const Velocity& velocity,
                                     std::optional<double> r = std::nullopt);

/// Circulation of the canonical momentum for counter-propagating particles on the frame
/// circle: 4 m omega pi R0^2 / hbar (signed).
double circulation_phase(const RotatingFrame& frame, const Particle& particle);

}  // namespace rotorqm::classical
