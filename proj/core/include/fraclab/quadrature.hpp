#pragma once
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace fraclab {

namespace detail {
struct GLPoint {
  double x, w;
};
extern const GLPoint kGL8[8];
extern const GLPoint kGL16[16];
}  // namespace detail

// Composite 16-pt Gauss-Legendre; panel width <= min(base_w, 10/max(1,freq)).
// freq is the dominant oscillation frequency of f on [a,b].
template <class F>
double gl_panels(F&& f, double a, double b, double freq = 0.0,
                 double base_w = 0.5) {
  if (b <= a) return 0.0;
  double w = std::min(base_w, 10.0 / std::max(1.0, std::abs(freq)));
  int n = std::max(1, int(std::ceil((b - a) / w)));
  double tot = 0.0;
  for (int i = 0; i < n; ++i) {
    double lo = a + (b - a) * i / n, hi = a + (b - a) * (i + 1) / n;
    double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
    for (const auto& p : detail::kGL16) tot += h * p.w * f(c + h * p.x);
  }
  return tot;
}

template <class F>
std::complex<double> gl_panels_c(F&& f, double a, double b, double freq = 0.0,
                                 double base_w = 0.5) {
  if (b <= a) return {0.0, 0.0};
  double w = std::min(base_w, 10.0 / std::max(1.0, std::abs(freq)));
  int n = std::max(1, int(std::ceil((b - a) / w)));
  std::complex<double> tot = 0.0;
  for (int i = 0; i < n; ++i) {
    double lo = a + (b - a) * i / n, hi = a + (b - a) * (i + 1) / n;
    double h = 0.5 * (hi - lo), c = 0.5 * (hi + lo);
    for (const auto& p : detail::kGL16) tot += h * p.w * f(c + h * p.x);
  }
  return tot;
}

// 8-pt GL on geometric edges: octave refinement below the knee (resolves
// power-law features near lo), gentler ratio above (oscillatory tails).
template <class F>
double geom_gl(F&& f, double lo, double hi, double ratio_lo = 2.0,
               double knee = 1.0, double ratio_hi = 1.25) {
  double total = 0.0;
  double a = lo;
  while (a < hi) {
    double b = a < knee ? std::min(a * ratio_lo, knee) : std::min(a * ratio_hi, hi);
    double h = 0.5 * (b - a), c = 0.5 * (b + a);
    for (const auto& p : detail::kGL8) total += h * p.w * f(c + h * p.x);
    a = b;
  }
  return total;
}

// panels on geometrically halved intervals [cut/2^{k+1}, cut/2^k] down to
// cut*floor_frac; for integrands with a feature scale set by cut
template <class F>
double halving_gl(F&& f, double cut, double floor_frac = 1e-7) {
  double total = 0.0;
  double hi = cut;
  while (hi > floor_frac * cut) {
    total += gl_panels(f, hi / 2.0, hi, 0.0, hi);
    hi /= 2.0;
  }
  return total;
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i)
    v[i] = n > 1 ? lo + (hi - lo) * i / (n - 1) : lo;
  return v;
}

inline std::vector<double> geomspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    v[i] = n > 1 ? std::exp(llo + (lhi - llo) * i / (n - 1)) : lo;
  return v;
}

}  // namespace fraclab
