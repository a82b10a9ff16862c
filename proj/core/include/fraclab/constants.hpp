#pragma once
#include <complex>

namespace fraclab {

// Lanczos (g=7, 9 terms) with reflection for Re z < 1/2; ~1e-13 relative on
// the strip we use. Complex overload needed for Gamma(i lam) in the Mellin
// checks; the real one is just the restriction.
std::complex<double> gamma_fn(std::complex<double> z);
double gamma_fn(double x);

double beta_fn(double a, double b);

// c_a = Gamma(a/2) / (sqrt(pi) 2^{1-a} Gamma((1-a)/2)); Riesz-kernel constant
// of Lambda^{a-1} for a in (0,2). Vanishes at a=1 (Gamma pole in the
// denominator), which is the correct limit.
double c_alpha(double a);
// cbar_a = Gamma(a) sin(pi a/2) / pi; the folded periodic-kernel constant.
double cbar_alpha(double a);
// k_a = -2^a Gamma((1+a)/2) / (sqrt(pi) Gamma(-a/2)); influence constant.
double k_alpha(double a);

struct Constants {
  double alpha;
  double beta;          // alpha-1 for alpha>1, else alpha acts as the exponent
  double c_alpha;
  double c_bar_alpha;
  double k_alpha;
  double blowup_const;  // (1+beta) beta c_beta
};

// throws std::domain_error outside (0,2)
Constants make_constants(double alpha);

struct Params {
  double alpha = 1.5;
  double beta() const { return alpha - 1.0; }
  double epsilon = 1e-2;      // Mellin regularization, in (0, holder_bump)
  double holder_bump = 0.05;  // the "+" in C^{beta+}
  double dt_safety = 0.5;
  double tol = 1e-10;
};

}  // namespace fraclab
