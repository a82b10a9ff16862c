#include "fraclab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fraclab/constants.hpp"
#include "fraclab/quadrature.hpp"

namespace fraclab {

namespace {

constexpr double kPi = std::numbers::pi;

// Direct panels over [1e-12, Z0] plus the IBP tail. Boundary terms: with Z0 a
// whole number of periods, the zero-mean antiderivatives G_k of the kernel
// numerator satisfy G_k(Z0) = ((-1)^k + sgn) d^{-k}u(x); only every other
// level survives.
double periodic_oracle(const TrigPoly& u, double a, double x, KernelBranch which,
                       int refine, double tol) {
  const int periods = 30, levels = 6;
  double Z0 = 2.0 * kPi * periods;
  double sgn = which == KernelBranch::lambda_hilbert ? -1.0 : 1.0;
  double c0 = u.c0();
  auto g = [&](double z) {
    return u.eval(x - z) + sgn * u.eval(x + z) - (1.0 + sgn) * c0;
  };
  double bw = std::min(0.5, 10.0 / std::max(1.0, double(u.max_mode()))) / refine;
  // z = t^q flattens the z^{-a} head (the symmetric numerator g(0) != 0)
  double q = 1.0 / (1.0 - a);
  double v = q * gl_panels([&](double t) { return g(std::pow(t, q)); }, 0.0, 1.0,
                           0.0, 0.05 / refine);
  v += gl_panels([&](double z) { return g(z) * std::pow(z, -a); }, 1.0, Z0, 0.0, bw);
  double coef = 1.0, tail = 0.0;
  for (int k = 0; k < levels; ++k) {
    bool survives = which == KernelBranch::lambda_hilbert ? (k + 1) % 2 == 1
                                                          : (k + 1) % 2 == 0;
    double Gk1 = survives ? sgn * 2.0 * u.antideriv(x, k + 1) : 0.0;
    tail += coef * (-Gk1 * std::pow(Z0, -a - k));
    coef *= a + k;
  }
  // remainder bound for the truncated recursion
  double rem = coef * 2.0 * u.antideriv_bound(levels) *
               std::pow(Z0, -a - levels + 1) / (a + levels - 1);
  if (rem > tol)
    throw std::runtime_error("kernel_oracle: tail estimate above tol (oracle divergence)");
  double cst = which == KernelBranch::lambda_hilbert ? cbar_alpha(a) : c_alpha(a);
  return cst * (v + tail);
}

// Compact support on the window; y = x +/- t^g flattens |x-y|^{-a} exactly.
double line_oracle(const Field& u, double a, double x, KernelBranch which,
                   int refine) {
  double S = 0.5 * u.grid().period;
  double g = 1.0 / (1.0 - a);
  double bw = 0.05 / refine;
  double right = gl_panels([&](double t) { return u.eval(x + std::pow(t, g)); },
                           0.0, std::pow(std::max(S - x, 0.0), 1.0 - a), 0.0, bw);
  double left = gl_panels([&](double t) { return u.eval(x - std::pow(t, g)); },
                          0.0, std::pow(std::max(S + x, 0.0), 1.0 - a), 0.0, bw);
  if (which == KernelBranch::lambda) return c_alpha(a) * g * (left + right);
  return cbar_alpha(a) * g * (left - right);
}

}  // namespace

double kernel_oracle(const Field& u, double alpha, double x, KernelBranch which,
                     int refine, double tol) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::domain_error("kernel_oracle: alpha must be in (0,1)");
  if (u.grid().x0 == 0.0)
    return periodic_oracle(TrigPoly::from_field(u), alpha, x, which, refine, tol);
  return line_oracle(u, alpha, x, which, refine);
}

namespace {

// Panel edges on [a,b], uniform plus geometric refinement toward the end
// nearest x0.
std::vector<double> graded_edges(double a, double b, double x0, double scale) {
  std::vector<double> pts;
  const int n = 24;
  for (int i = 0; i <= n; ++i) pts.push_back(a + (b - a) * i / n);
  if (std::abs(a - x0) < std::abs(b - x0)) {
    for (int k = -12; k <= 2; ++k) {
      double p = a + scale * std::pow(2.0, k);
      if (p < b) pts.push_back(p);
    }
  } else {
    for (int k = -12; k <= 2; ++k) {
      double p = b - scale * std::pow(2.0, k);
      if (p > a) pts.push_back(p);
    }
  }
  for (auto& p : pts) p = std::clamp(p, a, b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

double hilbert_line_even(const BumpSum& u, double x) {
  const double sup = 1.0;
  double w = x < sup ? std::min(x, sup - x) : 0.0;
  double I = 0.0;
  if (w > 0.0) {
    double ux = u.eval(x);
    double bw = std::max(w / 8.0, 1e-6);
    I += gl_panels([&](double y) { return (u.eval(y) - ux) / (x - y); }, x - w,
                   x + w, 0.0, bw);
    I += gl_panels([&](double y) { return u.eval(y) / (x + y); }, x - w, x + w,
                   0.0, bw);
  }
  std::vector<std::pair<double, double>> segs;
  if (x >= sup) {
    segs.push_back({0.0, sup});
  } else {
    if (x - w > 0.0) segs.push_back({0.0, x - w});
    if (x + w < sup) segs.push_back({x + w, sup});
  }
  double scale = w > 0.0 ? w : std::max(x - sup, 1e-3);
  for (auto [a, b] : segs) {
    auto f_out = [&](double y) { return u.eval(y) * 2.0 * x / (x * x - y * y); };
    auto edges = graded_edges(a, b, x, scale);
    for (size_t i = 0; i + 1 < edges.size(); ++i)
      I += gl_panels(f_out, edges[i], edges[i + 1], 0.0, edges[i + 1] - edges[i]);
  }
  return I / kPi;
}

double velocity_line_even(const BumpSum& u, double x, double b) {
  double cb = c_alpha(b);
  double g = 1.0 / (1.0 - b);
  double I = 0.0;
  if (x > 0.0) {
    double t_edge = std::pow(std::max(0.0, x - 1.0), 1.0 - b);
    I += gl_panels([&](double t) { return u.deriv(x - std::pow(t, g)) * g; },
                   t_edge, std::pow(x, 1.0 - b), 0.0, 0.05);
  }
  if (x < 1.0) {
    I += gl_panels([&](double t) { return u.deriv(x + std::pow(t, g)) * g; },
                   0.0, std::pow(1.0 - x, 1.0 - b), 0.0, 0.05);
  }
  auto f_plus = [&](double y) { return -u.deriv(y) * std::pow(x + y, -b); };
  double cutg = std::min(0.1, std::max(x, 1e-7));
  for (double yy = cutg; yy > 1e-7 * cutg; yy /= 2.0)
    I += gl_panels(f_plus, yy / 2.0, yy, 0.0, yy);
  I += gl_panels(f_plus, cutg, 1.0, 0.0, 0.05);
  return -cb * I;
}

}  // namespace fraclab
