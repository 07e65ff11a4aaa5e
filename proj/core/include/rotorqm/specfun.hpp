#pragma once

// Integer-order Bessel functions of the first kind and their positive zeros.

#include <vector>

namespace rotorqm::specfun {

inline constexpr int kMaxOrder = 50;
inline constexpr int kMaxZeroIndex = 200;

/// J_n(x) for |n| <= 50, x >= 0. Absolute error below 1e-12 for x <= 100.
double bessel_j(int n, double x);

/// J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2.
double bessel_j_prime(int n, double x);

enum class ZeroKind { FunctionZero, DerivativeZero };

/// Positive roots of J_n (FunctionZero) or J_n' (DerivativeZero), s = 1, 2, ...
/// Negative orders reduce to |n|. x = 0 is never counted as a zero of J_0'.
struct BesselZeroTable {
  int order = 0;
  ZeroKind kind = ZeroKind::FunctionZero;
  std::vector<double> zeros;

  /// One-based access; throws INDEX_OUT_OF_RANGE.
  double root(int s) const;
};

BesselZeroTable zero_table(int n, ZeroKind kind, int count);

/// s-th positive zero j_{n,s} of J_n, 1 <= s <= 200.
double bessel_zero(int n, int s);

/// s-th positive zero j'_{n,s} of J_n', 1 <= s <= 200.
double bessel_prime_zero(int n, int s);

// Zero tables are memoized per (|n|, kind). Results are identical with the cache off.
void set_zero_cache_enabled(bool enabled);
bool zero_cache_enabled();
void clear_zero_cache();

}  // namespace rotorqm::specfun
