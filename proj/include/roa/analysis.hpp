#ifndef ROA_ANALYSIS_HPP
#define ROA_ANALYSIS_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

// Exact ranking counts and the asymptotic growth constant.  All counting is
// done in arbitrary precision; the real-valued side states its tolerances.

namespace roa::analysis {

using BigCount = boost::multiprecision::cpp_int;

inline BigCount big_binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  BigCount r = 1;
  for (int i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

inline BigCount big_pow(BigCount base, int e) {
  BigCount r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// number of functions from a t-element set onto an m-element set,
// by inclusion-exclusion over the missed targets
inline BigCount surjections(int t, int m) {
  if (t < 0 || m < 0) throw std::invalid_argument("surjections: negative argument");
  BigCount total = 0;
  for (int j = 0; j <= m; ++j) {
    BigCount term = big_binom(m, j) * big_pow(m - j, t);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  if (total < 0) return 0;
  return total;
}

// count of rank vectors over n-1 states with ranks in [0, 2m-1] and every
// odd rank attained: choose the odd-ranked positions, map them onto the m
// odd ranks, fill the rest with even ranks
inline BigCount L_formula(int n, int m) {
  if (n <= 1) throw std::invalid_argument("L_formula: n > 1 required");
  if (m < 1 || m >= n) throw std::invalid_argument("L_formula: 1 <= m < n required");
  BigCount total = 0;
  for (int t = m; t <= n - 1; ++t)
    total += big_binom(n - 1, t) * surjections(t, m) * big_pow(m, n - 1 - t);
  return total;
}

// smallest argmax over m
inline std::pair<int, BigCount> L_max(int n) {
  if (n <= 1) throw std::invalid_argument("L_max: n > 1 required");
  int best_m = 1;
  BigCount best = L_formula(n, 1);
  for (int m = 2; m < n; ++m) {
    BigCount v = L_formula(n, m);
    if (v > best) {
      best = v;
      best_m = m;
    }
  }
  return {best_m, best};
}

// ---------------------------------------------------------------------------
// asymptotics

// unique positive root of beta*x = 1 - e^{-x}; bracketed bisection, final
// residual below 1e-10
inline double temme_x(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("temme_x: beta in (0,1) required");
  auto f = [&](double x) { return beta * x - (1.0 - std::exp(-x)); };
  double lo = 1e-12, hi = 2.0 / beta;  // f is positive beyond 1/beta
  // f(lo) < 0 (slope at 0 is beta - 1 < 0), f(hi) > 0
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

inline double temme_M(double beta) {
  const double x = temme_x(beta);
  const double a = -std::log(x) + beta * std::log(std::exp(x) - 1.0) - (1.0 - beta) +
                   (1.0 - beta) * std::log(1.0 / beta - 1.0);
  return std::exp(a - beta) * std::pow(beta / (1.0 - beta), 1.0 - beta);
}

inline double h(double beta, double gamma) {
  if (!(beta > 0.0 && beta < 1.0 && gamma > 0.0 && gamma <= beta))
    throw std::invalid_argument("h: need 0 < gamma <= beta < 1");
  const double ratio = gamma / beta;
  // M[1] degenerates (x -> 0); take the limit value via a nearby argument
  const double m = ratio >= 1.0 ? temme_M(1.0 - 1e-9) : temme_M(ratio);
  return std::pow(1.0 - beta, beta - 1.0) * std::pow(m, beta) * std::pow(gamma, 1.0 - beta);
}

struct AsymptoticPoint {
  double beta = 0.0;
  double gamma = 0.0;
  double x = 0.0;  // Temme root at gamma/beta
  double value = 0.0;
};

// coarse grid sweep followed by local refinement rounds that shrink the
// step tenfold around the incumbent
inline AsymptoticPoint maximize_h(double grid_step = 1e-3, int refine_iters = 3) {
  if (grid_step <= 0.0 || refine_iters < 0) throw std::invalid_argument("maximize_h: bad parameters");
  const double eps = 1e-9;
  AsymptoticPoint best;
  auto sweep = [&](double blo, double bhi, double glo, double ghi, double step) {
    for (double b = std::max(blo, step); b < std::min(bhi, 1.0 - eps); b += step)
      for (double g = std::max(glo, step); g <= std::min({ghi, b, 1.0 - eps}); g += step) {
        double v = h(b, g);
        if (v > best.value) best = {b, g, 0.0, v};
      }
  };
  // keep the coarse pass affordable: start at 100x the requested step
  double step = grid_step * 100.0;
  sweep(0.0, 1.0, 0.0, 1.0, step);
  while (step > grid_step) {
    step /= 10.0;
    sweep(best.beta - 15 * step, best.beta + 15 * step, best.gamma - 15 * step,
          best.gamma + 15 * step, step);
  }
  for (int i = 0; i < refine_iters; ++i) {
    step /= 10.0;
    sweep(best.beta - 15 * step, best.beta + 15 * step, best.gamma - 15 * step,
          best.gamma + 15 * step, step);
  }
  best.x = temme_x(best.gamma / best.beta);
  return best;
}

// n-th root of the exact count, scaled by n; compares against the
// grid-maximized constant
inline double growth_ratio(int n) {
  auto [m, L] = L_max(n);
  (void)m;
  const double logL = static_cast<double>(boost::multiprecision::log(
      boost::multiprecision::cpp_dec_float_100(L)));
  return std::exp(logL / n) / n;
}

inline double michel_baseline() { return 1.0 / std::exp(1.0); }

}  // namespace roa::analysis

#endif  // ROA_ANALYSIS_HPP
