#include "rotorqm/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "quadrature.hpp"
#include "rotorqm/constants.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/precision.hpp"

namespace rotorqm::classical {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kClosureTol = 1e-12;

}  // namespace

double gamma_factor(const RotatingFrame& frame, double r) {
  const double beta = frame.omega * r / kConstants.c;
  if (!(std::abs(beta) < 1.0)) {
    throw Error(ErrorCode::SuperluminalRim,
                "|omega| r = " + std::to_string(std::abs(frame.omega * r)) + " m/s is not below c");
  }
  return std::sqrt(1.0 - beta * beta);
}

double proper_time(const RotatingFrame& frame, double r, double delta_t_global,
                   double delta_phi) {
  const double g = gamma_factor(frame, r);
  const double c2 = kConstants.c * kConstants.c;
  return g * delta_t_global + frame.omega * r * r / (c2 * g) * delta_phi;
}

TimingResult roundtrip_delta_t(const RotatingFrame& frame, double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::NonpositiveRadius, "circle radius must be positive");
  const double g = gamma_factor(frame, r);
  const double c = kConstants.c;
  const double g2 = g * g;
  // Equal proper durations in both directions fix the global-time split.
  const double common = kTwoPi * r / (c * g2);
  const double sweep = kTwoPi * frame.omega * r * r / (c * c * g2);
  TimingResult out;
  out.t_cw = common - sweep;
  out.t_ccw = common + sweep;
  out.delta_t = 4.0 * kPi * frame.omega * r * r / (c * c * g2);
  out.gamma_profile = {g};
  return out;
}

double leading_order_delta_t(const RotatingFrame& frame, double area) {
  if (!(area > 0.0)) throw Error(ErrorCode::InvalidArgument, "enclosed area must be positive");
  return 4.0 * frame.omega * area / (kConstants.c * kConstants.c);
}

double classical_sagnac_phase(const ClassicalSignal& signal, double delta_t) {
  if (!(signal.frequency > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "signal frequency must be positive");
  }
  return kTwoPi * signal.frequency * delta_t;
}

// ---- ClosedPath ----

ClosedPath ClosedPath::circle(double radius, int samples) {
  return from_function([radius](double) { return radius; }, samples);
}

ClosedPath ClosedPath::from_function(std::function<double(double)> radius_of_phi, int samples,
                                     double phi_start) {
  if (samples < 4) throw Error(ErrorCode::InvalidArgument, "need at least 4 path samples");
  ClosedPath p;
  p.radius_fn_ = std::move(radius_of_phi);
  p.phi_.resize(static_cast<std::size_t>(samples) + 1);
  p.r_.resize(p.phi_.size());
  for (int i = 0; i <= samples; ++i) {
    const double phi = i == samples ? phi_start + kTwoPi : phi_start + kTwoPi * i / samples;
    p.phi_[static_cast<std::size_t>(i)] = phi;
    p.r_[static_cast<std::size_t>(i)] = p.radius_fn_(phi);
  }
  p.validate();
  return p;
}

ClosedPath ClosedPath::from_samples(std::vector<double> phi, std::vector<double> r) {
  if (phi.size() != r.size() || phi.size() < 4) {
    throw Error(ErrorCode::InvalidArgument, "need matching phi/r samples, at least 4");
  }
  ClosedPath p;
  p.phi_ = std::move(phi);
  p.r_ = std::move(r);
  p.validate();
  p.build_spline();
  return p;
}

void ClosedPath::validate() const {
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (!(r_[i] > 0.0) || !std::isfinite(r_[i])) {
      throw Error(ErrorCode::DegeneratePath, "path radius must stay positive and finite");
    }
    if (i > 0 && !(phi_[i] > phi_[i - 1])) {
      throw Error(ErrorCode::OpenPath, "path angles must be strictly increasing");
    }
  }
  if (std::abs(phi_.back() - phi_.front() - kTwoPi) > kClosureTol * kTwoPi) {
    throw Error(ErrorCode::OpenPath, "path angles must span exactly 2 pi");
  }
  if (std::abs(r_.back() - r_.front()) > kClosureTol * max_radius()) {
    throw Error(ErrorCode::OpenPath, "path does not close: r(start) != r(end)");
  }
}

double ClosedPath::max_radius() const noexcept { return *std::max_element(r_.begin(), r_.end()); }

// Periodic cubic spline; the cyclic tridiagonal system is solved with Sherman-Morrison.
void ClosedPath::build_spline() {
  const std::size_t n = phi_.size() - 1;  // intervals == unknowns
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = phi_[i + 1] - phi_[i];

  std::vector<double> sub(n), diag(n), sup(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    sub[i] = h[prev];
    diag[i] = 2.0 * (h[prev] + h[i]);
    sup[i] = h[i];
    const double next_y = r_[i + 1];
    const double prev_y = i == 0 ? r_[n - 1] : r_[i - 1];
    rhs[i] = 6.0 * ((next_y - r_[i]) / h[i] - (r_[i] - prev_y) / h[prev]);
  }

  auto thomas = [&](std::vector<double> b, std::vector<double> d) {
    // Solves the non-cyclic tridiagonal system with diagonal b and right-hand side d.
    std::vector<double> c(n);
    c[0] = sup[0] / b[0];
    d[0] /= b[0];
    for (std::size_t i = 1; i < n; ++i) {
      const double m = b[i] - sub[i] * c[i - 1];
      c[i] = sup[i] / m;
      d[i] = (d[i] - sub[i] * d[i - 1]) / m;
    }
    for (std::size_t i = n - 1; i-- > 0;) d[i] -= c[i] * d[i + 1];
    return d;
  };

  // Corner entries: A[0][n-1] = sub[0], A[n-1][0] = sup[n-1].
  const double gamma = -diag[0];
  std::vector<double> b = diag;
  b[0] -= gamma;
  b[n - 1] -= sub[0] * sup[n - 1] / gamma;
  std::vector<double> u(n, 0.0);
  u[0] = gamma;
  u[n - 1] = sup[n - 1];
  const auto x = thomas(b, rhs);
  const auto z = thomas(b, u);
  const double v0 = 1.0;
  const double vn = sub[0] / gamma;
  const double factor = (v0 * x[0] + vn * x[n - 1]) / (1.0 + v0 * z[0] + vn * z[n - 1]);

  second_.resize(n + 1);
  for (std::size_t i = 0; i < n; ++i) second_[i] = x[i] - factor * z[i];
  second_[n] = second_[0];
}

double ClosedPath::wrap(double phi) const {
  const double span = phi_.back() - phi_.front();
  double t = std::fmod(phi - phi_.front(), span);
  if (t < 0.0) t += span;
  return phi_.front() + t;
}

std::size_t ClosedPath::interval_of(double phi) const {
  auto it = std::upper_bound(phi_.begin(), phi_.end(), phi);
  std::size_t i = it == phi_.begin() ? 0 : static_cast<std::size_t>(it - phi_.begin()) - 1;
  return std::min(i, phi_.size() - 2);
}

double ClosedPath::radius_at(double phi) const {
  if (radius_fn_) return radius_fn_(phi);
  const double x = wrap(phi);
  const std::size_t i = interval_of(x);
  const double h = phi_[i + 1] - phi_[i];
  const double a = (phi_[i + 1] - x) / h;
  const double b = (x - phi_[i]) / h;
  return a * r_[i] + b * r_[i + 1] +
         ((a * a * a - a) * second_[i] + (b * b * b - b) * second_[i + 1]) * h * h / 6.0;
}

double ClosedPath::radius_slope_at(double phi) const {
  if (radius_fn_) {
    const double step = 1e-6;
    return (radius_fn_(phi + step) - radius_fn_(phi - step)) / (2.0 * step);
  }
  const double x = wrap(phi);
  const std::size_t i = interval_of(x);
  const double h = phi_[i + 1] - phi_[i];
  const double a = (phi_[i + 1] - x) / h;
  const double b = (x - phi_[i]) / h;
  return (r_[i + 1] - r_[i]) / h +
         (-(3.0 * a * a - 1.0) * second_[i] + (3.0 * b * b - 1.0) * second_[i + 1]) * h / 6.0;
}

std::vector<double> ClosedPath::breakpoints() const {
  if (radius_fn_) return {phi_.front(), phi_.back()};
  return phi_;
}

double enclosed_area(const ClosedPath& path) {
  const auto breaks = path.breakpoints();
  const auto result = detail::composite_gauss<1>(
      [&](double phi) {
        const double r = path.radius_at(phi);
        return std::array<double, 1>{0.5 * r * r};
      },
      breaks, precision().quadrature_rel_tol);
  return result[0];
}

TimingResult path_delta_t(const RotatingFrame& frame, const ClosedPath& path) {
  gamma_factor(frame, path.max_radius());
  const double c = kConstants.c;
  const double c2 = c * c;
  const auto breaks = path.breakpoints();
  // [0]: sweep integral of omega r^2 / (c^2 gamma^2); [1]: proper-length term dl / (c gamma).
  const auto sums = detail::composite_gauss<2>(
      [&](double phi) {
        const double r = path.radius_at(phi);
        const double g = gamma_factor(frame, r);
        const double g2 = g * g;
        const double slope = path.radius_slope_at(phi);
        const double dl = std::sqrt(slope * slope + r * r / g2);
        return std::array<double, 2>{frame.omega * r * r / (c2 * g2), dl / (c * g)};
      },
      breaks, precision().quadrature_rel_tol);

  TimingResult out;
  out.t_cw = sums[1] - sums[0];
  out.t_ccw = sums[1] + sums[0];
  out.delta_t = 2.0 * sums[0];
  out.gamma_profile.reserve(path.r().size());
  for (double r : path.r()) out.gamma_profile.push_back(gamma_factor(frame, r));
  return out;
}

std::vector<PathTraceRow> path_trace(const RotatingFrame& frame, const ClosedPath& path,
                                     int samples) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "trace needs at least one sample");
  const double c2 = kConstants.c * kConstants.c;
  const double weight = kTwoPi / samples;
  std::vector<PathTraceRow> rows;
  rows.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double phi = path.phi_start() + weight * i;
    const double r = path.radius_at(phi);
    const double g = gamma_factor(frame, r);
    rows.push_back({phi, r, 2.0 * frame.omega * r * r / (c2 * g * g) * weight});
  }
  return rows;
}

CanonicalMomentum canonical_momentum(const RotatingFrame& frame, const Particle& particle,
                                     const Velocity& velocity, std::optional<double> r) {
  validate_particle(particle);
  const double radius = r.value_or(frame.radius);
  const double m = particle.mass;
  return {m * velocity.r_dot, m * radius * (velocity.phi_dot + frame.omega), m * velocity.z_dot};
}

double circulation_phase(const RotatingFrame& frame, const Particle& particle) {
  validate_particle(particle);
  const double r = validate_frame(frame).frame.radius;
  return 4.0 * particle.mass * frame.omega * kPi * r * r / kConstants.hbar;
}

}  // namespace rotorqm::classical
