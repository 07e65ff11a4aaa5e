#pragma once

// Multiprecision reference for J_n and its zeros: the ascending power series summed in
// 50-digit decimal arithmetic, roots bracketed on a fixed grid and bisected. Shares no
// code with the library's recurrence-based evaluator.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <vector>

namespace rotorqm::oracle {

using Real = boost::multiprecision::cpp_dec_float_50;

inline Real series_j(int n, const Real& x) {
  if (n < 0) return (n % 2 == 0 ? 1 : -1) * series_j(-n, x);
  const Real half = x / 2;
  Real term = 1;
  for (int i = 1; i <= n; ++i) term *= half / i;
  const Real q = half * half;
  const Real tiny = Real("1e-45");
  Real sum = term;
  for (int k = 1;; ++k) {
    term *= -q / (k * (k + n));
    sum += term;
    if (k > x && abs(term) < tiny) break;
  }
  return sum;
}

inline Real series_j_prime(int n, const Real& x) {
  if (n == 0) return -series_j(1, x);
  return (series_j(n - 1, x) - series_j(n + 1, x)) / 2;
}

/// First `count` positive zeros of J_n (derivative = false) or J_n', to bracket width `width`.
inline std::vector<double> series_zeros(int n, bool derivative, int count, double width = 1e-15) {
  auto f = [&](const Real& x) { return derivative ? series_j_prime(n, x) : series_j(n, x); };
  std::vector<double> out;
  const Real step("0.125");
  // Every positive zero of J_n and J_n' lies above n, and J_0' is excluded at x = 0.
  Real a = n == 0 ? Real("0.0625") : Real(n);
  bool neg_a = f(a) < 0;
  while (static_cast<int>(out.size()) < count) {
    Real b = a + step;
    const bool neg_b = f(b) < 0;
    if (neg_a != neg_b) {
      Real lo = a, hi = b;
      while (hi - lo > width) {
        const Real mid = (lo + hi) / 2;
        if ((f(mid) < 0) == neg_a) lo = mid; else hi = mid;
      }
      out.push_back(static_cast<double>((lo + hi) / 2));
    }
    a = b;
    neg_a = neg_b;
  }
  return out;
}

}  // namespace rotorqm::oracle
