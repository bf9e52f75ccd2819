#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "levy/stable.hpp"

namespace levy {

/// Arrival data of a bridge: x(0) = 0, x(T) = L.
struct BridgeSpec {
  StableParams params;
  double T;
  double L;

  BridgeSpec(StableParams p, double total_time, double arrival)
      : params(p), T(total_time), L(arrival) {
    if (!(T > 0.0)) throw std::domain_error("T must be > 0");
    if (!std::isfinite(L)) throw std::domain_error("L must be finite");
  }
};

/// Sampled trajectory: strictly increasing times from 0 to T, positions pinned
/// to 0 and L at the ends.
struct Path {
  std::vector<double> times;
  std::vector<double> positions;
};

namespace detail {

/// Uniform view of the standard law for one alpha: closed forms where they
/// exist, the shared table elsewhere. Cheap to copy.
struct StdLaw {
  enum class Kind { gauss, cauchy, table } kind;
  std::shared_ptr<const StandardTable> tab;

  explicit StdLaw(double alpha) {
    if (alpha == 2.0) {
      kind = Kind::gauss;
    } else if (alpha == 1.0) {
      kind = Kind::cauchy;
    } else {
      kind = Kind::table;
      tab = standard_table(alpha);
    }
  }

  double pdf(double u) const {
    switch (kind) {
      case Kind::gauss: return gauss_std(u, 0);
      case Kind::cauchy: return cauchy_std(u, 0);
      default: return tab->pdf(u);
    }
  }

  double cdf(double u) const {
    switch (kind) {
      case Kind::gauss: return gauss_std_cdf(u);
      case Kind::cauchy: return cauchy_std_cdf(u);
      default: return tab->cdf(u);
    }
  }

  double quantile(double p) const {
    switch (kind) {
      case Kind::gauss: return gauss_std_quantile(p);
      case Kind::cauchy: return cauchy_std_quantile(p);
      default: return tab->quantile(p);
    }
  }
};

/// Draw from the conditional midpoint law in standard units:
///   rho_a(w) ~ g(w) g(a - w),  a >= 0.
/// Proposal: equal mixture of g centered at 0 and at a. The harmonic-mean
/// bound 2 g(w) g(a-w)/(g(w)+g(a-w)) <= 2 g(a/2) holds because g is unimodal;
/// the 1.001 slack absorbs interpolation wiggle and the near-Gaussian tail
/// seam. Acceptance stays above ~1/8 uniformly in (alpha, a).
inline double sample_conditional_midpoint(const StdLaw& law, double a, RngStream& rng,
                                          std::uint64_t max_attempts = 100000) {
  if (law.kind == StdLaw::Kind::gauss) {
    // conditional is exactly Gaussian: mean a/2, unit standard-scale variance
    return 0.5 * a + rng.normal01();
  }
  const double bound = 2.0 * law.pdf(0.5 * a) * 1.001;
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    const double w0 = law.quantile(rng.uniform01());
    const double w = (rng.uniform01() < 0.5) ? w0 : a - w0;
    const double pa = law.pdf(w);
    const double pb = law.pdf(a - w);
    const double denom = bound * 0.5 * (pa + pb);
    if (denom <= 0.0) continue;
    const double ratio = pa * pb / denom;
    if (rng.uniform01() < ratio) return w;
  }
  throw rejection_exhausted(max_attempts, 0.0);
}

}  // namespace detail

/// Conditional density of x(T/2) given x(T) = L, built from the two
/// elapsed-time T/2 factors and the arrival normalizer f_alpha(L;T).
/// Holds a monotone cdf tabulation for inverse-transform sampling; the
/// tabulation is symmetric about L/2 by construction.
class MidpointDensity {
 public:
  explicit MidpointDensity(const BridgeSpec& spec)
      : spec_(spec),
        law_(spec.params.alpha),
        c_(spec.params.scale(spec.T / 2.0)),
        lam_(spec.L / c_) {
    a_ = std::abs(lam_);
    normalizer_ = stable_pdf(spec.params, spec.T, spec.L);
    if (!(normalizer_ > 0.0) || !std::isfinite(normalizer_)) {
      throw accuracy_error("midpoint normalizer f(L;T) underflowed", normalizer_);
    }
    build_table();
  }

  const BridgeSpec& spec() const { return spec_; }

  /// Conditional density at x_half (normalized through f(L;T)).
  double pdf(double x_half) const {
    const double w = to_std(x_half);
    return law_.pdf(w) * law_.pdf(a_ - w) / (normalizer_ * c_ * c_);
  }

  double cdf(double x_half) const {
    double w = to_std(x_half);
    // table covers w >= a/2; mirror the lower half
    const bool mirror = w < 0.5 * a_;
    if (mirror) w = a_ - w;
    const double upper = cdf_std(w);
    const double F = mirror ? 1.0 - upper : upper;
    return (lam_ < 0.0) ? 1.0 - F : F;
  }

  double quantile(double p) const {
    if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("p must be in (0,1)");
    if (lam_ < 0.0) p = 1.0 - p;
    const bool mirror = p < 0.5;
    const double w = quantile_std(mirror ? 1.0 - p : p);
    const double ws = mirror ? a_ - w : w;
    return from_std(ws);
  }

  /// Inverse-cdf draw.
  double sample(RngStream& rng) const { return quantile(rng.uniform01()); }

  /// Ratio of the numeric integral of the numerator to f(L;T); 1 up to
  /// tabulation error by the convolution identity.
  double normalization_ratio() const { return total_ * 2.0 / (normalizer_ * c_); }

 private:
  double to_std(double x) const {
    const double w = x / c_;
    return (lam_ < 0.0) ? -w : w;
  }
  double from_std(double w) const { return (lam_ < 0.0) ? -w * c_ : w * c_; }

  double rho(double w) const { return law_.pdf(w) * law_.pdf(a_ - w); }

  void build_table() {
    // nodes on [a/2, edge]: dense near the center and the upper lobe,
    // geometric out to negligible conditional tail mass
    const double m = 0.5 * a_;
    std::vector<double> nodes;
    auto push_range = [&](double lo, double hi, double step) {
      for (double w = lo; w < hi + 0.5 * step; w += step) {
        nodes.push_back(std::min(w, hi));
      }
    };
    push_range(m, std::min(m + 8.0, a_ + 8.0), 0.02);
    if (a_ > 8.0) {
      push_range(std::max(m, a_ - 8.0), a_ + 8.0, 0.02);
      push_range(m, a_ + 8.0, std::max(0.05, a_ / 2000.0));  // bridge the lobes
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    // geometric continuation; stop when the power-extrapolated remainder is dust
    const double beta = 2.0 * spec_.params.alpha + 2.0;  // product tail exponent
    double w = nodes.back();
    double mass = 0.0;
    std::vector<double> seg_mass;
    w_ = std::move(nodes);
    for (std::size_t i = 0; i + 1 < w_.size(); ++i) {
      const double s = detail::gk15([&](double x) { return rho(x); }, w_[i], w_[i + 1]).value;
      seg_mass.push_back(s);
      mass += s;
    }
    for (int k = 0; k < 4000; ++k) {
      const double next = m + (w - m) * 1.05 + 0.05;
      const double s = detail::gk15([&](double x) { return rho(x); }, w, next).value;
      w_.push_back(next);
      seg_mass.push_back(s);
      mass += s;
      w = next;
      const double rem = rho(w) * (w - m) / (beta - 1.0);  // power-tail remainder
      if (rem < 1e-10 * mass) break;
    }
    tail_rem_ = rho(w) * (w - m) / (beta - 1.0);
    total_ = mass + tail_rem_;

    pdf_.resize(w_.size());
    cdf_.resize(w_.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < w_.size(); ++i) {
      pdf_[i] = rho(w_[i]) / (2.0 * total_);  // density of the half, mirrored later
      if (i > 0) acc += seg_mass[i - 1];
      cdf_[i] = 0.5 + 0.5 * acc / total_;
    }
  }

  // cdf/quantile over the tabulated upper half, w in [a/2, edge]
  double cdf_std(double w) const {
    if (w >= w_.back()) {
      const double beta = 2.0 * spec_.params.alpha + 2.0;
      const double rem = tail_rem_ * std::pow((w - 0.5 * a_) / (w_.back() - 0.5 * a_),
                                              -(beta - 1.0));
      return 1.0 - 0.5 * rem / total_;
    }
    const auto it = std::upper_bound(w_.begin(), w_.end(), w);
    const std::size_t i = std::max<std::ptrdiff_t>(1, it - w_.begin()) - 1;
    const double h = w_[i + 1] - w_[i];
    const double t = (w - w_[i]) / h;
    const double t2 = t * t;
    return (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t) * cdf_[i] + t * (1.0 - t) * (1.0 - t) * h * pdf_[i] +
           t2 * (3.0 - 2.0 * t) * cdf_[i + 1] + t2 * (t - 1.0) * h * pdf_[i + 1];
  }

  double quantile_std(double p) const {
    if (p >= cdf_.back()) {
      const double beta = 2.0 * spec_.params.alpha + 2.0;
      const double rem = 2.0 * total_ * (1.0 - p);
      const double r = rem / std::max(tail_rem_, 1e-300);
      return 0.5 * a_ +
             (w_.back() - 0.5 * a_) * std::pow(std::max(r, 1e-300), -1.0 / (beta - 1.0));
    }
    std::size_t lo = 0, hi = cdf_.size() - 1;
    while (hi - lo > 1) {
      const std::size_t mid = (lo + hi) / 2;
      (cdf_[mid] < p ? lo : hi) = mid;
    }
    double w = w_[lo] + (p - cdf_[lo]) / std::max(cdf_[hi] - cdf_[lo], 1e-300) *
                            (w_[hi] - w_[lo]);
    for (int it = 0; it < 30; ++it) {
      const double f = cdf_std(w) - p;
      const double fp = std::max(rho(w) / (2.0 * total_), 1e-300);
      double step = f / fp;
      step = std::clamp(step, -(w_[hi] - w_[lo]), w_[hi] - w_[lo]);
      w -= step;
      w = std::clamp(w, w_[lo], w_[hi]);
      if (std::abs(f) < 1e-13) break;
    }
    return w;
  }

  BridgeSpec spec_;
  detail::StdLaw law_;
  double c_, lam_, a_;
  double normalizer_ = 0.0;
  double total_ = 0.0, tail_rem_ = 0.0;
  std::vector<double> w_, pdf_, cdf_;
};

/// Conditional density of x(T/2) given x(T) = L via the product form; exact
/// closed forms for alpha in {1, 2}.
inline double midpoint_pdf(const BridgeSpec& spec, double x_half) {
  const double alpha = spec.params.alpha;
  const double sigma = spec.params.sigma;
  if (alpha == 2.0) {
    // Gaussian conditional: mean L/2, variance sigma^2 T / 2
    const double var = sigma * sigma * spec.T / 2.0;
    const double norm_check = stable_pdf(spec.params, spec.T, spec.L);
    if (!(norm_check > 0.0)) {
      throw accuracy_error("midpoint normalizer f(L;T) underflowed", norm_check);
    }
    const double z = x_half - 0.5 * spec.L;
    return std::exp(-0.5 * z * z / var) / std::sqrt(2.0 * detail::kPi * var);
  }
  const double h = spec.T / 2.0;
  const double num = stable_pdf(spec.params, h, x_half) *
                     stable_pdf(spec.params, h, spec.L - x_half);
  const double den = stable_pdf(spec.params, spec.T, spec.L);
  if (!(den > 0.0) || !std::isfinite(den)) {
    throw accuracy_error("midpoint normalizer f(L;T) underflowed", den);
  }
  return num / den;
}

/// One inverse-cdf draw of x(T/2) given x(T) = L. Builds the tabulation on
/// each call; hold a MidpointDensity for repeated draws from one spec.
inline double sample_midpoint(const BridgeSpec& spec, RngStream& rng) {
  return MidpointDensity(spec).sample(rng);
}

/// Dyadic bridge: 2^depth + 1 points, endpoints pinned exactly, interior
/// filled level by level from the conditional midpoint law.
inline Path sample_bridge_recursive(const BridgeSpec& spec, int depth, RngStream& rng) {
  if (depth < 0) throw std::domain_error("depth must be >= 0");
  const std::size_t n = std::size_t{1} << depth;
  Path path;
  path.times.resize(n + 1);
  path.positions.resize(n + 1);
  const double step = spec.T / static_cast<double>(n);
  for (std::size_t j = 0; j <= n; ++j) path.times[j] = static_cast<double>(j) * step;
  path.times[0] = 0.0;
  path.times[n] = spec.T;
  path.positions[0] = 0.0;
  path.positions[n] = spec.L;
  if (depth == 0) return path;

  const detail::StdLaw law(spec.params.alpha);
  const double inv_alpha = 1.0 / spec.params.alpha;
  for (std::size_t len = n; len >= 2; len /= 2) {
    const double half_dt = spec.T * static_cast<double>(len) / (2.0 * n);
    const double c = spec.params.sigma * std::pow(half_dt, inv_alpha);
    for (std::size_t i0 = 0; i0 < n; i0 += len) {
      const std::size_t i1 = i0 + len;
      const std::size_t im = i0 + len / 2;
      const double x0 = path.positions[i0];
      const double diff = path.positions[i1] - x0;
      const double a = std::abs(diff) / c;
      const double w = detail::sample_conditional_midpoint(law, a, rng);
      path.positions[im] = (diff < 0.0) ? x0 - c * w : x0 + c * w;
    }
  }
  return path;
}

struct StretchedResult {
  Path path;
  std::uint64_t attempts;
};

/// Unconditioned stable walk, accepted when the endpoint lands within
/// L_thresh of the arrival, then linearly stretched so x(T) = L exactly.
inline StretchedResult sample_bridge_stretched(const BridgeSpec& spec, double dt,
                                               double L_thresh, RngStream& rng,
                                               std::uint64_t max_attempts = 1000000) {
  if (!(dt > 0.0)) throw std::domain_error("dt must be > 0");
  if (!(L_thresh > 0.0)) throw std::domain_error("L_thresh must be > 0");
  const double steps_real = spec.T / dt;
  const std::size_t m = static_cast<std::size_t>(std::llround(steps_real));
  if (m < 1 || std::abs(steps_real - static_cast<double>(m)) > 1e-9 * steps_real) {
    throw std::domain_error("dt must divide T within rounding");
  }
  const double c_step = spec.params.scale(dt);
  const double alpha = spec.params.alpha;
  std::vector<double> walk(m + 1);
  for (std::uint64_t attempt = 1; attempt <= max_attempts; ++attempt) {
    walk[0] = 0.0;
    double x = 0.0;
    for (std::size_t j = 1; j <= m; ++j) {
      x += c_step * cms_increment(alpha, rng.uniform_angle(), rng.exponential());
      walk[j] = x;
    }
    if (std::abs(x - spec.L) <= L_thresh) {
      StretchedResult out;
      out.attempts = attempt;
      out.path.times.resize(m + 1);
      out.path.positions.resize(m + 1);
      const double correction = spec.L - x;
      for (std::size_t j = 0; j <= m; ++j) {
        out.path.times[j] = static_cast<double>(j) * dt;
        out.path.positions[j] =
            walk[j] + (static_cast<double>(j) / static_cast<double>(m)) * correction;
      }
      out.path.times[0] = 0.0;
      out.path.times[m] = spec.T;
      out.path.positions[0] = 0.0;
      out.path.positions[m] = spec.L;
      return out;
    }
  }
  throw rejection_exhausted(max_attempts, 0.0);
}

struct JumpCensus {
  std::size_t count = 0;
  std::vector<double> sizes;
};

/// Increments whose magnitude exceeds a per-step threshold; the default
/// consumer passes the bifurcation-length rule L_b (dt/T)^(1/alpha).
inline JumpCensus effective_jump_census(const Path& path,
                                        const std::function<double(double)>& step_threshold) {
  if (path.times.size() < 2 || path.times.size() != path.positions.size()) {
    throw std::domain_error("path must have at least 2 points");
  }
  JumpCensus census;
  for (std::size_t i = 0; i + 1 < path.times.size(); ++i) {
    const double dt = path.times[i + 1] - path.times[i];
    const double dx = path.positions[i + 1] - path.positions[i];
    if (std::abs(dx) > step_threshold(dt)) {
      ++census.count;
      census.sizes.push_back(dx);
    }
  }
  return census;
}

/// Step-threshold rule scaling a reference length down to the step size.
inline std::function<double(double)> jump_threshold_rule(double alpha, double reference_length,
                                                         double T) {
  return [=](double dt) { return reference_length * std::pow(dt / T, 1.0 / alpha); };
}

}  // namespace levy
