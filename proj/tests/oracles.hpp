// Test-side oracles, deliberately independent of the library's evaluation
// paths: dense non-adaptive quadrature, finite differences, and the standard
// statistical tests. Slow and simple on purpose.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline constexpr double kPi = 3.14159265358979323846;

// fixed 20-point Gauss-Legendre nodes/weights on [-1,1]
inline const double* gl20_nodes() {
  static const double x[20] = {
      -0.9931285991850949, -0.9639719272779138, -0.9122344282513259, -0.8391169718222188,
      -0.7463319064601508, -0.6360536807265150, -0.5108670019508271, -0.3737060887154195,
      -0.2277858511416451, -0.0765265211334973, 0.0765265211334973,  0.2277858511416451,
      0.3737060887154195,  0.5108670019508271,  0.6360536807265150,  0.7463319064601508,
      0.8391169718222188,  0.9122344282513259,  0.9639719272779138,  0.9931285991850949};
  return x;
}
inline const double* gl20_weights() {
  static const double w[20] = {
      0.0176140071391521, 0.0406014298003869, 0.0626720483341091, 0.0832767415767048,
      0.1019301198172404, 0.1181945319615184, 0.1316886384491766, 0.1420961093183820,
      0.1491729864726037, 0.1527533871307258, 0.1527533871307258, 0.1491729864726037,
      0.1420961093183820, 0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
      0.0832767415767048, 0.0626720483341091, 0.0406014298003869, 0.0176140071391521};
  return w;
}

inline double gl20(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const double* x = gl20_nodes();
  const double* w = gl20_weights();
  double s = 0.0;
  for (int i = 0; i < 20; ++i) s += w[i] * f(c + h * x[i]);
  return h * s;
}

/// Dense panel integration of f over [a,b]: n equal panels, GL20 each.
inline double integrate(const std::function<double(double)>& f, double a, double b, int n) {
  double s = 0.0;
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) s += gl20(f, a + i * h, a + (i + 1) * h);
  return s;
}

/// Brute-force standard symmetric stable density: (1/pi) int cos(ku) e^{-k^a}.
/// Panels split at cosine zeros, each further split in 4; head split finely.
inline double stable_pdf_brute(double alpha, double u, double kmax = -1.0) {
  u = std::abs(u);
  if (kmax <= 0.0) {
    kmax = 4.0;
    while (std::exp(-std::pow(kmax, alpha)) > 1e-16) kmax *= 1.25;
  }
  std::vector<double> breaks{0.0};
  for (int i = 60; i >= 1; --i) breaks.push_back(kmax * std::pow(0.8, i));
  if (u > 1e-12) {
    for (double z = 0.5 * kPi / u; z < kmax; z += kPi / u) breaks.push_back(z);
  }
  breaks.push_back(kmax);
  std::sort(breaks.begin(), breaks.end());
  auto f = [&](double k) { return std::cos(k * u) * std::exp(-std::pow(k, alpha)); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    total += integrate(f, breaks[i], breaks[i + 1], 4);
  return total / kPi;
}

/// Brute-force cdf via the sine kernel.
inline double stable_cdf_brute(double alpha, double u) {
  const double au = std::abs(u);
  double kmax = 4.0;
  while (std::exp(-std::pow(kmax, alpha)) / std::max(kmax, 1.0) > 1e-15) kmax *= 1.25;
  std::vector<double> breaks{0.0};
  for (int i = 60; i >= 1; --i) breaks.push_back(kmax * std::pow(0.8, i));
  if (au > 1e-12) {
    for (double z = kPi / au; z < kmax; z += kPi / au) breaks.push_back(z);
  }
  breaks.push_back(kmax);
  std::sort(breaks.begin(), breaks.end());
  auto f = [&](double k) {
    return (k > 0 ? std::sin(k * au) / k : au) * std::exp(-std::pow(k, alpha));
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    total += integrate(f, breaks[i], breaks[i + 1], 4);
  const double F = 0.5 + total / kPi;
  return u >= 0.0 ? F : 1.0 - F;
}

/// Central finite difference of given order (1..4) with step h.
inline double finite_difference(const std::function<double(double)>& f, double x, int order,
                                double h) {
  switch (order) {
    case 1: return (f(x + h) - f(x - h)) / (2.0 * h);
    case 2: return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
    case 3:
      return (f(x + 2 * h) - 2.0 * f(x + h) + 2.0 * f(x - h) - f(x - 2 * h)) /
             (2.0 * h * h * h);
    case 4:
      return (f(x + 2 * h) - 4.0 * f(x + h) + 6.0 * f(x) - 4.0 * f(x - h) + f(x - 2 * h)) /
             (h * h * h * h);
  }
  throw std::invalid_argument("order");
}

/// One-sample Kolmogorov-Smirnov statistic against a cdf.
inline double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double F = cdf(sample[i]);
    d = std::max(d, std::abs(F - (i + 1) / n));
    d = std::max(d, std::abs(F - i / n));
  }
  return d;
}

/// Asymptotic one-sample KS critical value at the 1% level.
inline double ks_critical_1pct(std::size_t n) { return 1.627624 / std::sqrt(double(n)); }

/// Two-sample KS statistic.
inline double ks_two_sample(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] <= b[j]) ++i;
    else ++j;
    d = std::max(d, std::abs(double(i) / a.size() - double(j) / b.size()));
  }
  return d;
}

inline double ks_two_sample_critical_1pct(std::size_t n, std::size_t m) {
  return 1.627624 * std::sqrt((n + m) / (double(n) * double(m)));
}

/// Chi-square statistic for equal-probability bins.
inline double chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  const double e = static_cast<double>(total) / counts.size();
  double s = 0.0;
  for (auto c : counts) s += (c - e) * (c - e) / e;
  return s;
}

// 1% critical values of chi-square for df = 19 and 9
inline constexpr double kChi2Crit1pct_df19 = 36.1909;
inline constexpr double kChi2Crit1pct_df9 = 21.6660;

}  // namespace oracle
