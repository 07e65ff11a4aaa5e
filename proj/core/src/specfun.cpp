#include "rotorqm/specfun.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

#include "rotorqm/constants.hpp"
#include "rotorqm/error.hpp"
#include "rotorqm/precision.hpp"

namespace rotorqm::specfun {

namespace {

struct Neighbours {
  double below;   // J_{n-1}(x)
  double value;   // J_n(x)
  double above;   // J_{n+1}(x)
};

// Ascending series; only used for x <= 1 where every term is smaller than the last.
double series_j(int n, double x) {
  const double half = 0.5 * x;
  double term = 1.0;
  for (int i = 1; i <= n; ++i) term *= half / i;
  double sum = term;
  const double h2 = half * half;
  for (int k = 1; k < 60; ++k) {
    term *= -h2 / (static_cast<double>(k) * (k + n));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller backward recurrence from well above max(n, x), normalized by
// J_0 + 2 sum_k J_{2k} = 1. Returns J_{n-1}, J_n, J_{n+1} for n >= 1.
Neighbours miller(int n, double x) {
  const double top = std::max(static_cast<double>(n + 1), x);
  const int start = 2 * ((static_cast<int>(top) + 24 + static_cast<int>(10.0 * std::cbrt(top))) / 2);
  constexpr double kHuge = 1e250;
  constexpr double kRescale = 1e-250;

  double next = 0.0;       // J_{k+1}
  double current = 1e-30;  // J_k, k = start
  double norm = 0.0;
  Neighbours out{0.0, 0.0, 0.0};
  for (int k = start; k >= 1; --k) {
    const double lower = 2.0 * k / x * current - next;  // J_{k-1}
    next = current;
    current = lower;
    const int order = k - 1;
    if (order == n + 1) out.above = current;
    if (order == n) out.value = current;
    if (order == n - 1) out.below = current;
    if (order > 0 && order % 2 == 0) norm += 2.0 * current;
    if (std::abs(current) > kHuge) {
      current *= kRescale;
      next *= kRescale;
      norm *= kRescale;
      out.above *= kRescale;
      out.value *= kRescale;
      out.below *= kRescale;
    }
  }
  norm += current;
  return {out.below / norm, out.value / norm, out.above / norm};
}

void check_order(int n, int limit) {
  if (std::abs(n) > limit) {
    throw Error(ErrorCode::OrderOutOfRange,
                "Bessel order " + std::to_string(n) + " outside |n| <= " + std::to_string(limit));
  }
}

void check_argument(double x) {
  if (!(x >= 0.0)) {
    throw Error(ErrorCode::NegativeArgument, "Bessel argument must be >= 0");
  }
}

// J_n for n >= 0 without range checks; n may reach kMaxOrder + 1.
double j_nonneg(int n, double x) {
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x <= 1.0) return series_j(n, x);
  return miller(n, x).value;
}

double jprime_nonneg(int n, double x) {
  if (n == 0) return -j_nonneg(1, x);
  if (x == 0.0) return n == 1 ? 0.5 : 0.0;
  if (x <= 1.0) return 0.5 * (series_j(n - 1, x) - series_j(n + 1, x));
  const auto nb = miller(n, x);
  return 0.5 * (nb.below - nb.above);
}

double parity(int n) { return (n % 2 == 0) ? 1.0 : -1.0; }

// ---- zeros ----

struct Eval {
  double f;
  double df;
};

Eval eval_target(int n, ZeroKind kind, double x) {
  const double jp = jprime_nonneg(n, x);
  if (kind == ZeroKind::FunctionZero) return {j_nonneg(n, x), jp};
  // J_n'' from Bessel's equation.
  const double j = j_nonneg(n, x);
  const double nn = static_cast<double>(n) * n;
  return {jp, -jp / x - (1.0 - nn / (x * x)) * j};
}

// McMahon's large-zero expansion, first two terms.
double mcmahon_guess(int n, ZeroKind kind, int s) {
  const double mu = 4.0 * n * n;
  if (kind == ZeroKind::FunctionZero) {
    const double beta = (s + 0.5 * n - 0.25) * kPi;
    return beta - (mu - 1.0) / (8.0 * beta);
  }
  const double beta = (s + 0.5 * n - 0.75) * kPi;
  return beta - (mu + 3.0) / (8.0 * beta);
}

double refine(int n, ZeroKind kind, int s, double lo, double hi, double f_lo) {
  // Bisect to a narrow bracket, then bracket-safeguarded Newton.
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = eval_target(n, kind, mid).f;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double guess = mcmahon_guess(n, kind, s);
  double x = (guess > lo && guess < hi) ? guess : 0.5 * (lo + hi);
  const double tol = precision().root_rel_tol;
  for (int iter = 0; iter < 60; ++iter) {
    const Eval e = eval_target(n, kind, x);
    if (e.f == 0.0) return x;
    if ((e.f < 0.0) == (f_lo < 0.0)) {
      lo = x;
      f_lo = e.f;
    } else {
      hi = x;
    }
    double next = x - e.f / e.df;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::abs(next - x);
    x = next;
    if (step <= tol * x || hi - lo <= tol * x) break;
  }
  return x;
}

std::vector<double> compute_zeros(int n, ZeroKind kind, int count) {
  constexpr double kStep = 0.25;
  // No zero lies below these starting points: j_{n,1} > n and j'_{n,1} > n for n >= 1,
  // and J_0, J_0' = -J_1 keep their sign on (0, 2.4).
  const double start = n == 0 ? 0.5 : static_cast<double>(n);
  std::vector<double> zeros;
  zeros.reserve(count);
  double a = start;
  double fa = eval_target(n, kind, a).f;
  for (long k = 1; static_cast<int>(zeros.size()) < count; ++k) {
    const double b = start + k * kStep;
    const double fb = eval_target(n, kind, b).f;
    if (fb == 0.0) {
      // Grid point landed on a simple root; the sign flips past it.
      zeros.push_back(b);
      a = b;
      fa = -fa;
      continue;
    }
    if ((fa < 0.0) != (fb < 0.0)) {
      zeros.push_back(refine(n, kind, static_cast<int>(zeros.size()) + 1, a, b, fa));
    }
    a = b;
    fa = fb;
  }
  return zeros;
}

std::atomic<bool> g_cache_enabled{true};
std::shared_mutex g_cache_mutex;
std::map<std::pair<int, ZeroKind>, std::vector<double>> g_cache;

std::vector<double> zeros_for(int n, ZeroKind kind, int count) {
  const auto key = std::make_pair(n, kind);
  if (g_cache_enabled.load()) {
    std::shared_lock lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end() &&
                                     static_cast<int>(it->second.size()) >= count) {
      return {it->second.begin(), it->second.begin() + count};
    }
  }
  if (!g_cache_enabled.load()) return compute_zeros(n, kind, count);
  // The scan is sequential, so a full table agrees with any shorter one on its prefix.
  auto zeros = compute_zeros(n, kind, kMaxZeroIndex);
  {
    std::unique_lock lock(g_cache_mutex);
    auto& slot = g_cache[key];
    if (slot.size() < zeros.size()) slot = zeros;
  }
  return {zeros.begin(), zeros.begin() + count};
}

void check_index(int s) {
  if (s < 1 || s > kMaxZeroIndex) {
    throw Error(ErrorCode::IndexOutOfRange,
                "zero index " + std::to_string(s) + " outside 1.." + std::to_string(kMaxZeroIndex));
  }
}

}  // namespace

double bessel_j(int n, double x) {
  check_order(n, kMaxOrder);
  check_argument(x);
  const double v = j_nonneg(std::abs(n), x);
  return n < 0 ? parity(n) * v : v;
}

double bessel_j_prime(int n, double x) {
  check_order(n, kMaxOrder);
  check_argument(x);
  const double v = jprime_nonneg(std::abs(n), x);
  return n < 0 ? parity(n) * v : v;
}

double BesselZeroTable::root(int s) const {
  if (s < 1 || s > static_cast<int>(zeros.size())) {
    throw Error(ErrorCode::IndexOutOfRange, "zero index " + std::to_string(s) + " not in table");
  }
  return zeros[static_cast<std::size_t>(s - 1)];
}

BesselZeroTable zero_table(int n, ZeroKind kind, int count) {
  check_order(n, kMaxOrder);
  if (count < 0 || count > kMaxZeroIndex) {
    throw Error(ErrorCode::IndexOutOfRange, "zero count outside 0.." + std::to_string(kMaxZeroIndex));
  }
  const int order = std::abs(n);
  return {order, kind, count == 0 ? std::vector<double>{} : zeros_for(order, kind, count)};
}

double bessel_zero(int n, int s) {
  check_index(s);
  return zero_table(n, ZeroKind::FunctionZero, s).zeros.back();
}

double bessel_prime_zero(int n, int s) {
  check_index(s);
  return zero_table(n, ZeroKind::DerivativeZero, s).zeros.back();
}

void set_zero_cache_enabled(bool enabled) { g_cache_enabled.store(enabled); }
bool zero_cache_enabled() { return g_cache_enabled.load(); }

void clear_zero_cache() {
  std::unique_lock lock(g_cache_mutex);
  g_cache.clear();
}

}  // namespace rotorqm::specfun
