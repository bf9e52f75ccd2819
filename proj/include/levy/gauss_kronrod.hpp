#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace levy::detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1,1] (QUADPACK dqk15).
inline constexpr double kGk15X[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kGk15W[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kG7W[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  double value;
  double error;     // |GK15 - G7| based estimate
  double abs_sum;   // integral of |f|, for cancellation accounting
};

template <class F>
PanelResult gk15(F&& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(c - h * kGk15X[i]);
    fv[14 - i] = f(c + h * kGk15X[i]);
  }
  fv[7] = f(c);
  double kron = kGk15W[7] * fv[7];
  double gauss = kG7W[3] * fv[7];
  double asum = kGk15W[7] * std::abs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    kron += kGk15W[i] * (fv[i] + fv[14 - i]);
    asum += kGk15W[i] * (std::abs(fv[i]) + std::abs(fv[14 - i]));
    if (i % 2 == 1) gauss += kG7W[i / 2] * (fv[i] + fv[14 - i]);
  }
  double err = std::abs(kron - gauss);
  // QUADPACK-style sharpening of the raw difference
  err = std::pow(200.0 * err, 1.5);
  err = std::min(std::abs(kron - gauss), err);
  return {h * kron, h * std::max(err, 1e-18 * asum), h * asum};
}

/// Adaptive panel sum over a pre-split breakpoint list; bisects worst panels
/// until the summed error estimate is below eps or the budget runs out.
/// Returns {value, achieved error bound (including cancellation)}.
template <class F>
std::pair<double, double> adaptive_panels(F&& f, const std::vector<double>& breaks, double eps,
                                          int max_panels = 20000) {
  struct Node {
    double a, b, value, error, abs_sum;
    bool operator<(const Node& o) const { return error < o.error; }
  };
  std::priority_queue<Node> q;
  double total = 0.0, err = 0.0, abs_total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    auto r = gk15(f, breaks[i], breaks[i + 1]);
    q.push({breaks[i], breaks[i + 1], r.value, r.error, r.abs_sum});
    total += r.value;
    err += r.error;
    abs_total += r.abs_sum;
  }
  int panels = static_cast<int>(breaks.size());
  while (err > 0.5 * eps && panels < max_panels && !q.empty()) {
    Node worst = q.top();
    if (worst.error < 1e-4 * eps / static_cast<double>(panels)) break;
    q.pop();
    double m = 0.5 * (worst.a + worst.b);
    if (!(worst.a < m && m < worst.b)) continue;  // cannot split further
    auto left = gk15(f, worst.a, m);
    auto right = gk15(f, m, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    abs_total += left.abs_sum + right.abs_sum - worst.abs_sum;
    q.push({worst.a, m, left.value, left.error, left.abs_sum});
    q.push({m, worst.b, right.value, right.error, right.abs_sum});
    ++panels;
  }
  const double cancellation = abs_total * 2.3e-16;
  return {total, std::max(err, 0.0) + cancellation};
}

}  // namespace levy::detail
