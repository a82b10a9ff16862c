#pragma once
#include <complex>
#include <memory>
#include <string>
#include <vector>

namespace fraclab {

using cplx = std::complex<double>;

// Uniform periodic grid: nodes x_j = x0 + j*period/n. The "line" setting is a
// window [-L,L] realized as a period-2L torus holding compactly supported
// data; one transform engine serves both.
struct Grid {
  int n = 0;
  double period = 0.0;
  double x0 = 0.0;

  static Grid torus(int n);                  // period 2pi, x0 = 0
  static Grid line_window(int n, double L);  // period 2L, x0 = -L

  double dx() const { return period / n; }
  double node(int j) const { return x0 + period * j / n; }
  // signed integer mode of coefficient slot j (FFT layout)
  int mode(int j) const { return j <= n / 2 ? j : j - n; }
  // physical frequency of slot j
  double xi(int j) const { return 2.0 * 3.141592653589793238462643 * mode(j) / period; }
  bool operator==(const Grid&) const = default;
};

enum class Parity { even, odd, none };

// Real function on a grid together with its spectral coefficients, kept
// consistent (coeffs[k] = (1/n) sum_j values[j] e^{-2pi i jk/n}).
class Field {
 public:
  Field() = default;
  static Field from_values(const Grid& g, std::vector<double> vals,
                           Parity parity = Parity::none);
  static Field from_coeffs(const Grid& g, std::vector<cplx> coeffs,
                           Parity parity = Parity::none);
  static Field zero(const Grid& g);

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  Parity parity() const { return parity_; }

  int n() const { return grid_.n; }
  double mass() const;          // int u dx = period * coeffs[0]
  double min_value() const;
  double max_value() const;
  double max_abs() const;
  // trig-interpolant evaluation at arbitrary x (O(n) sum)
  double eval(double x) const;

  // measured parity violation max_j |u(x_j) -/+ u(-x_j)|
  double parity_violation(Parity p) const;

 private:
  Grid grid_;
  std::vector<double> values_;
  std::vector<cplx> coeffs_;
  Parity parity_ = Parity::none;
};

// forward/backward c2c transforms (FFTW, cached plans, thread-safe)
std::vector<cplx> fft_forward(const std::vector<cplx>& in);
std::vector<cplx> fft_backward(const std::vector<cplx>& in);  // unnormalized

enum class Hypothesis { h1, h2, h3, h4 };

struct HypothesisReport {
  bool h1 = false, h2 = false, h3 = false, h4 = false;
  struct Diag {
    Hypothesis which;
    double violation;
  };
  std::vector<Diag> diagnostics;
  bool all(bool torus) const { return h2 && h3 && (torus ? h4 : h1); }
};

enum class Setting { line, torus };

// H1 support/positivity (line), H2 double zero at the origin, H3 evenness,
// H4 monotone u_x >= -tol on [0,pi] (torus). Report-only.
HypothesisReport validate_hypotheses(const Field& u0, Setting setting,
                                     double tol = 1e-10);

}  // namespace fraclab
