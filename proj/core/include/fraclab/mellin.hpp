#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "fraclab/profiles.hpp"

namespace fraclab {

// M[f](lam) = int_0^inf x^{i lam - 1} f(x) dx restricted to [x_lo, x_hi],
// evaluated in log coordinates. When f(0+) != 0 the head below x=1 exists
// only as an Abel limit: it is split off in closed form u0/(i lam) and the
// quadrature runs on f - u0 1_{x<1}, absolutely convergent for Hoelder f.
// u0 defaults to f(x_lo); x=1 is kept a panel boundary (the subtraction has
// a kink there). Requires x_lo < 1 < x_hi.
cplx mellin_num(const std::function<double(double)>& f, double lam,
                double x_lo = 1e-12, double x_hi = 60.0, double base_w = 0.05,
                std::optional<double> u0 = std::nullopt);

struct ParsevalReport {
  double lhs = 0.0;
  double rhs = 0.0;               // lambda integral truncated at lambda_max
  double residual = 0.0;          // |lhs - rhs|
  double truncation_bound = 0.0;  // estimated discarded tail mass
  bool conclusive = false;        // truncation_bound <= tol
};

// |int_0^inf u v dx/x - (1/2pi) int M[u] conj(M[v]) dlam|. The tail bound
// assumes at least quadratic decay of the lambda integrand past lambda_max,
// which the certified envelopes supply for our weighted test profiles.
ParsevalReport parseval_residual(const std::function<double(double)>& u,
                                 const std::function<double(double)>& v,
                                 double lambda_max = 40.0, double tol = 1e-6);

enum class MellinKernel { line_beta, periodic_alpha };

// Multiplier symbol c_b int_0^inf x^{i lam + eps - 2} k(x) dx with
// k = |1-x|^{-b} - |1+x|^{-b}           (line_beta,     constant c_b)
// k = sign(x-1)|1-x|^{-b} + |1+x|^{-b}  (periodic_alpha, constant cbar_b).
// Singularity-split: series-subtracted kernel on (0,1/2) in log coords,
// x = 1 +- t^{1/(1-b)} panels on [1/2,3/2], log tail on [3/2,inf).
// Valid for eps in [0, 1-b); eps = 0 needs lam != 0 (Abel head pole).
cplx eval_m(double lam, double eps, double b, MellinKernel kind);

// B = conj(m_line)(1 + b - eps + i lam); A = -conj(m_periodic).
cplx B_of(double lam, double eps, double b);
cplx A_of(double lam, double eps, double a);

// eps -> 0 limits of Re B and Re A. eval_B0 returns the proof-display route
// and cross-checks the G0-integral route to 1e-6 relative (throws
// std::runtime_error on disagreement); eval_A0 returns the
// integrated-by-parts form cross-checked against Richardson extrapolation
// over eps in {1e-2, 5e-3, 2.5e-3}. Both need lam != 0; both are even in lam.
double eval_B0(double lam, double b);
double b0_route_e(double lam, double b);
double b0_route_g(double lam, double b);
double eval_A0(double lam, double a);
double a0_ibp(double lam, double a);
double a0_richardson(double lam, double a);

// Z(s,x) = x^{-s} + sum_{n>=1} [(x+2pi n)^{-s} - (2pi n - x)^{-s}] for
// s = alpha + i lam, alpha in (0,1), x in (0, pi]; direct sum to
// N = max(64, 1.2|lam|) plus integral tail and Euler-Maclaurin derivative
// corrections, abs error <= 1e-10. Z(s, pi) telescopes to 0.
cplx hurwitz_Z(double lam, double alpha, double x);

// W(x) = sum_{n>=0} (x + 2pi n)^{-p}, x in (0, 2pi), p > 1; same
// Euler-Maclaurin scheme (one-sided).
double weight_torus(double x, double p);

// Samples of one Mellin transform over a lambda grid.
struct MellinSample {
  std::vector<double> lambda_grid;
  std::vector<cplx> values;
  double epsilon = 0.0;
  double exponent = 0.0;
  // max |v(-lam) - conj(v(lam))| over matched grid pairs; real integrands
  // must give 0 up to quadrature noise.
  double conj_symmetry_violation() const;
};

MellinSample sample_mellin(const std::function<double(double)>& f,
                           const std::vector<double>& lambda_grid);

enum class MultiplierKind { m, B, B0, m_p, A, A0, U };

struct MultiplierTable {
  MultiplierKind kind = MultiplierKind::m;
  std::vector<double> lambda_grid;
  std::vector<cplx> values;  // B0, A0 and U(.,0,.) are real-valued rows
  double epsilon = 0.0;
  double exponent = 0.0;  // the beta or alpha of the kernel
};

// B0/A0 kinds ignore epsilon and require a nonzero grid; U is built from the
// profile overload.
MultiplierTable tabulate_multiplier(MultiplierKind kind,
                                    const std::vector<double>& lambda_grid,
                                    double eps, double exponent);
// U(lam,eps,b) = conj(M[x^{eps-1-b}u]) M[x^{-eps-1-b}u], exact rational
// transforms of the bump profile. U(lam,0,b) = |M[x^{-1-b}u]|^2 >= 0.
MultiplierTable tabulate_U(const BumpSum& u,
                           const std::vector<double>& lambda_grid, double eps,
                           double b);
cplx U_of(const BumpSum& u, double lam, double eps, double b);

struct DecayCertificate {
  double exponent_fit = 0.0;
  double constant_fit = 0.0;
  double residual = 0.0;  // max log-envelope deviation of the binned fit
  std::pair<double, double> lambda_range{0.0, 0.0};
  bool pass = false;  // exponent_fit <= expected_exponent + 0.1
};

// Envelope fit of log|value| vs log|lam| on per-bin maxima. Requires the
// grid to cover [5, 200] with at least 40 points.
DecayCertificate decay_certificate(const MultiplierTable& table,
                                   double expected_exponent);

struct EnvelopeFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double residual = 0.0;
};

// Least squares on log-log per-bin maxima of |vals|; bins log-spaced in lam.
EnvelopeFit fit_envelope_exponent(const std::vector<double>& lams,
                                  const std::vector<double>& vals,
                                  int nbins = 24);

struct GrowthFit {
  double C = 0.0;        // constant term of sup_x |Z(i lam + a, x) - x^{-s}|
  double Ce = 0.0;       // coefficient of lam^{1-a+eps}
  double raw_exponent = 0.0;  // growth exponent of the raw envelope
};

// Fits sup_x |Z(i lam + a, x) - x^{-i lam - a}| <= C + Ce lam^{1-a+eps} over
// lam in [2, 200]; coefficients rescaled so the fit dominates every sample.
GrowthFit zstar_growth_fit(double a, double eps = 0.25);

struct LemmaLadderReport {
  std::vector<double> eps_list;
  std::vector<double> lhs;         // int B(.,eps) U(.,eps) per eps
  double rhs = 0.0;                // atom + int B0 U(.,0)
  std::vector<double> rel_errors;  // |lhs - rhs| / |rhs|
  bool monotone = false;           // nonincreasing up to a 1e-6 noise floor
  bool pass = false;               // monotone and final error <= 1e-3
};

// Limiting pairing identity: int B(lam,eps) U(lam,eps) dlam converges as
// eps -> 0 to 2pi(1+b) b c_b U(0,0) + int B0(lam) U(lam,0) dlam. The lambda
// integrals run over |lam| <= lambda_max on octave panels; the integral is
// exactly eps-independent in the limit identity, so the observed errors
// bottom out at the quadrature noise floor.
LemmaLadderReport mellin_lemma_check(const BumpSum& u, double b,
                                     const std::vector<double>& eps_list,
                                     double lambda_max = 200.0);

}  // namespace fraclab
