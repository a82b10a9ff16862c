#include "fraclab/field.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace fraclab {

namespace {

// FFTW planner is not thread-safe; execution of distinct plans is. Each plan
// owns its buffers (copy in/out), cached per thread by (n, sign).
class Plan {
 public:
  Plan(int n, int sign) : n_(n) {
    static std::mutex planner_mu;
    std::lock_guard<std::mutex> lock(planner_mu);
    in_ = fftw_alloc_complex(n);
    out_ = fftw_alloc_complex(n);
    plan_ = fftw_plan_dft_1d(n, in_, out_, sign, FFTW_ESTIMATE);
  }
  ~Plan() {
    fftw_destroy_plan(plan_);
    fftw_free(in_);
    fftw_free(out_);
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;

  std::vector<cplx> run(const std::vector<cplx>& x) {
    for (int i = 0; i < n_; ++i) {
      in_[i][0] = x[i].real();
      in_[i][1] = x[i].imag();
    }
    fftw_execute(plan_);
    std::vector<cplx> y(n_);
    for (int i = 0; i < n_; ++i) y[i] = {out_[i][0], out_[i][1]};
    return y;
  }

 private:
  int n_;
  fftw_complex *in_, *out_;
  fftw_plan plan_;
};

Plan& plan_for(int n, int sign) {
  thread_local std::unordered_map<long, std::unique_ptr<Plan>> cache;
  long key = long(n) * 4 + (sign == FFTW_FORWARD ? 0 : 1);
  auto& p = cache[key];
  if (!p) p = std::make_unique<Plan>(n, sign);
  return *p;
}

}  // namespace

std::vector<cplx> fft_forward(const std::vector<cplx>& in) {
  return plan_for(int(in.size()), FFTW_FORWARD).run(in);
}

std::vector<cplx> fft_backward(const std::vector<cplx>& in) {
  return plan_for(int(in.size()), FFTW_BACKWARD).run(in);
}

Grid Grid::torus(int n) { return Grid{n, 2.0 * std::numbers::pi, 0.0}; }

Grid Grid::line_window(int n, double L) { return Grid{n, 2.0 * L, -L}; }

Field Field::from_values(const Grid& g, std::vector<double> vals, Parity parity) {
  if (int(vals.size()) != g.n) throw std::invalid_argument("Field: size mismatch");
  Field f;
  f.grid_ = g;
  f.values_ = std::move(vals);
  std::vector<cplx> tmp(g.n);
  for (int i = 0; i < g.n; ++i) tmp[i] = f.values_[i];
  f.coeffs_ = fft_forward(tmp);
  for (auto& c : f.coeffs_) c /= double(g.n);
  f.parity_ = parity;
  return f;
}

Field Field::from_coeffs(const Grid& g, std::vector<cplx> coeffs, Parity parity) {
  if (int(coeffs.size()) != g.n) throw std::invalid_argument("Field: size mismatch");
  Field f;
  f.grid_ = g;
  f.coeffs_ = std::move(coeffs);
  auto back = fft_backward(f.coeffs_);
  f.values_.resize(g.n);
  for (int i = 0; i < g.n; ++i) f.values_[i] = back[i].real();
  f.parity_ = parity;
  return f;
}

Field Field::zero(const Grid& g) {
  return from_values(g, std::vector<double>(g.n, 0.0), Parity::even);
}

double Field::mass() const { return grid_.period * coeffs_[0].real(); }

double Field::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double Field::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double Field::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double Field::eval(double x) const {
  // u(x) = Re sum_k c_k e^{i xi_k (x - x0)}; pair +/-k so the sum is real
  double acc = coeffs_[0].real();
  int n = grid_.n;
  for (int j = 1; j <= n / 2; ++j) {
    double ph = grid_.xi(j) * (x - grid_.x0);
    cplx e(std::cos(ph), std::sin(ph));
    if (2 * j == n) {
      acc += (coeffs_[j] * e).real();
    } else {
      acc += (coeffs_[j] * e).real() + (coeffs_[n - j] * std::conj(e)).real();
    }
  }
  return acc;
}

double Field::parity_violation(Parity p) const {
  if (p == Parity::none) return 0.0;
  double worst = 0.0;
  int n = grid_.n;
  for (int j = 0; j < n; ++j) {
    int jr = (n - j) % n;  // node at -x_j (mod period)
    double a = values_[j], b = values_[jr];
    worst = std::max(worst, std::abs(p == Parity::even ? a - b : a + b));
  }
  return worst;
}

HypothesisReport validate_hypotheses(const Field& u0, Setting setting, double tol) {
  HypothesisReport r;
  const auto& v = u0.values();
  const Grid& g = u0.grid();
  int n = g.n;

  if (setting == Setting::line) {
    // H1: nonnegative, and supported away from the window boundary
    double neg = 0.0, boundary = 0.0;
    for (int j = 0; j < n; ++j) {
      neg = std::max(neg, -v[j]);
      if (std::abs(g.node(j) - g.x0 - g.period / 2.0) >= g.period / 4.0)
        boundary = std::max(boundary, std::abs(v[j]));
    }
    double h1v = std::max(neg, boundary);
    r.h1 = h1v <= tol;
    r.diagnostics.push_back({Hypothesis::h1, h1v});
  }

  // H2: u(0) = u_x(0) = 0
  double u_at_0 = u0.eval(0.0);
  double ux_at_0 = 0.0;
  {
    const auto& c = u0.coeffs();
    for (int j = 0; j < n; ++j) {
      double ph = g.xi(j) * (0.0 - g.x0);
      ux_at_0 += (cplx(0.0, g.xi(j)) * c[j] * cplx(std::cos(ph), std::sin(ph))).real();
    }
  }
  double h2v = std::max(std::abs(u_at_0), std::abs(ux_at_0));
  r.h2 = h2v <= tol;
  r.diagnostics.push_back({Hypothesis::h2, h2v});

  // H3: evenness
  double h3v = u0.parity_violation(Parity::even);
  r.h3 = h3v <= tol;
  r.diagnostics.push_back({Hypothesis::h3, h3v});

  if (setting == Setting::torus) {
    // H4: u_x >= -tol on [0,pi], checked on grid nodes
    std::vector<cplx> dc(n);
    for (int j = 0; j < n; ++j) dc[j] = cplx(0.0, g.xi(j)) * u0.coeffs()[j];
    auto dv = fft_backward(dc);
    double worst = 0.0;
    for (int j = 0; j < n; ++j) {
      double x = g.node(j);
      if (x >= 0.0 && x <= std::numbers::pi)
        worst = std::max(worst, -dv[j].real());
    }
    r.h4 = worst <= tol;
    r.diagnostics.push_back({Hypothesis::h4, worst});
  }
  return r;
}

}  // namespace fraclab
