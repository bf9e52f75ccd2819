#pragma once

#include <cmath>
#include <optional>

namespace levy::detail {

inline constexpr double kPi = 3.14159265358979323846;

struct SeriesValue {
  double value;
  double error;
};

// Beyond every algebraic order of the large-u expansion sits an exponentially
// small remainder; for alpha >= 1 it is of the scale of the alpha=2 Gaussian
// at the same u (empirically up to a few times larger, hence the safety factor).
inline double tail_remainder_guard(double u, int order) {
  double g = std::exp(-0.25 * u * u) / (2.0 * std::sqrt(kPi));
  return 8.0 * g * std::pow(std::max(1.0, 0.5 * u), order);
}

/// Large-u expansion of the n-th derivative of the standard density:
///   g^(n)(u) = (1/pi) sum_m (-1)^(m-1) Gamma(m a + 1)/m! sin(m pi a/2)
///              * (-1)^n (ma+1)...(ma+n) u^(-ma-1-n)
/// Convergent for alpha<1, asymptotic for alpha>1 (truncate at the least term).
inline std::optional<SeriesValue> stable_tail_series(double alpha, double u, int order,
                                                     double eps) {
  if (u <= 0.0) return std::nullopt;
  const double logu = std::log(u);
  double total = 0.0;
  double prev_env = HUGE_VAL;
  double first_env = 0.0;
  for (int m = 1; m < 220; ++m) {
    const double ma = m * alpha;
    double log_fall = 0.0;
    for (int j = 1; j <= order; ++j) log_fall += std::log(ma + j);
    const double log_env = std::lgamma(ma + 1.0) - std::lgamma(m + 1.0) + log_fall -
                           (ma + 1.0 + order) * logu;
    const double env = std::exp(log_env);
    if (!std::isfinite(env)) return std::nullopt;
    // absolute target, tightened so values far below eps keep ~1e-9 relative
    // accuracy (the sampling tables interpolate on tail values this small)
    const double tol =
        0.3 * std::max(std::min(eps, 1e-9 * std::abs(total)), 1e-15 * first_env);
    if (m > 1 && env < tol) {
      if (alpha >= 1.0 && tail_remainder_guard(u, order) > tol) return std::nullopt;
      return SeriesValue{total / kPi, (env + tail_remainder_guard(u, order)) / kPi};
    }
    if (m == 1) first_env = env;
    if (alpha > 1.0 && env > prev_env) return std::nullopt;  // diverging before eps
    prev_env = env;
    const double sgn = ((m - 1) % 2 == 0 ? 1.0 : -1.0) * (order % 2 == 0 ? 1.0 : -1.0);
    total += sgn * env * std::sin(m * kPi * alpha / 2.0);
  }
  return std::nullopt;
}

/// Large-u expansion of the upper tail 1 - F(u), same convergence structure.
inline std::optional<SeriesValue> stable_tail_cdf_series(double alpha, double u, double eps) {
  if (u <= 0.0) return std::nullopt;
  const double logu = std::log(u);
  double total = 0.0;
  double prev_env = HUGE_VAL;
  double first_env = 0.0;
  for (int m = 1; m < 220; ++m) {
    const double ma = m * alpha;
    const double env = std::exp(std::lgamma(ma) - std::lgamma(m + 1.0) - ma * logu);
    if (!std::isfinite(env)) return std::nullopt;
    const double tol =
        0.3 * std::max(std::min(eps, 1e-9 * std::abs(total)), 1e-15 * first_env);
    if (m > 1 && env < tol) {
      if (alpha >= 1.0 && tail_remainder_guard(u, 0) > tol) return std::nullopt;
      return SeriesValue{total / kPi, (env + tail_remainder_guard(u, 0)) / kPi};
    }
    if (m == 1) first_env = env;
    if (alpha > 1.0 && env > prev_env) return std::nullopt;
    prev_env = env;
    const double sgn = ((m - 1) % 2 == 0 ? 1.0 : -1.0);
    total += sgn * env * std::sin(m * kPi * alpha / 2.0);
  }
  return std::nullopt;
}

/// Small-u expansion:
///   g(u) = (1/(pi a)) sum_j (-1)^j Gamma((2j+1)/a)/(2j)! u^(2j)
/// differentiated term by term. Entire for alpha>1, asymptotic for alpha<1.
inline std::optional<SeriesValue> stable_taylor_series(double alpha, double u, int order,
                                                       double eps) {
  const double logu = (u > 0.0) ? std::log(u) : 0.0;
  double total = 0.0;
  double max_env = 0.0;
  double prev_env = HUGE_VAL;
  for (int j = 0; j < 420; ++j) {
    const int p = 2 * j;
    if (p < order) continue;
    double log_fall = 0.0;
    for (int i = 0; i < order; ++i) log_fall += std::log(static_cast<double>(p - i));
    if (p > order && u == 0.0) {
      // only the p == order term survives at u = 0
      if (max_env * 2.3e-16 > 0.3 * eps) return std::nullopt;
      return SeriesValue{total / (kPi * alpha), max_env * 2.3e-16 / (kPi * alpha)};
    }
    const double log_env = std::lgamma((p + 1.0) / alpha) - std::lgamma(p + 1.0) + log_fall +
                           (p - order) * logu;
    const double env = std::exp(log_env);
    if (!std::isfinite(env)) return std::nullopt;
    max_env = std::max(max_env, env);
    if (max_env * 2.3e-16 > 0.3 * eps) return std::nullopt;  // cancellation too severe
    if (env < 0.1 * eps && p > order) {
      return SeriesValue{total / (kPi * alpha),
                         (env + max_env * 2.3e-16) / (kPi * alpha)};
    }
    if (alpha < 1.0 && env > prev_env) {
      if (prev_env < 0.3 * eps) break;  // asymptotic: least term already recorded
      return std::nullopt;
    }
    prev_env = env;
    total += (j % 2 == 0 ? 1.0 : -1.0) * env;
  }
  return std::nullopt;
}

/// Small-u expansion of F(u) - 1/2, integrated term by term.
inline std::optional<SeriesValue> stable_taylor_cdf_series(double alpha, double u, double eps) {
  if (u == 0.0) return SeriesValue{0.0, 0.0};
  const double logu = std::log(u);
  double total = 0.0;
  double max_env = 0.0;
  double prev_env = HUGE_VAL;
  for (int j = 0; j < 420; ++j) {
    const int p = 2 * j + 1;
    const double env =
        std::exp(std::lgamma((p + 0.0) / alpha) - std::lgamma(p + 1.0) + p * logu);
    if (!std::isfinite(env)) return std::nullopt;
    max_env = std::max(max_env, env);
    if (max_env * 2.3e-16 > 0.3 * eps) return std::nullopt;
    if (env < 0.1 * eps) {
      return SeriesValue{total / (kPi * alpha), (env + max_env * 2.3e-16) / (kPi * alpha)};
    }
    if (alpha < 1.0 && env > prev_env) {
      if (prev_env < 0.3 * eps) break;
      return std::nullopt;
    }
    prev_env = env;
    total += (j % 2 == 0 ? 1.0 : -1.0) * env;
  }
  return std::nullopt;
}

}  // namespace levy::detail
