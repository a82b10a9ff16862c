#pragma once

#include "fraclab/field.hpp"
#include "fraclab/profiles.hpp"

namespace fraclab {

enum class KernelBranch { lambda, lambda_hilbert };

// Quadrature evaluation of Lambda^{alpha-1}u (lambda) or Lambda^{alpha-1}Hu
// (lambda_hilbert) at one point, 0 < alpha < 1, independent of the spectral
// path. Torus fields use direct panels over 30 periods plus an
// integration-by-parts tail (boundary terms are spectral antiderivatives of
// u); line-window fields integrate the compact support with the y = x +/- t^g
// substitution, g = 1/(1-alpha). refine scales all panel widths down for
// self-convergence checks. Throws on alpha outside (0,1) or when the tail
// estimate exceeds tol (oracle divergence).
double kernel_oracle(const Field& u, double alpha, double x, KernelBranch which,
                     int refine = 1, double tol = 1e-8);

// H u for an even profile supported on [0,1], window difference quotient at
// y = x plus the combined kernel 2x/(x^2-y^2) outside.
double hilbert_line_even(const BumpSum& u, double x);

// Lambda^b H u = -c_b int_0^inf u'(y) [|x-y|^{-b} - (x+y)^{-b}] dy for an
// even profile, b in (0,1); endpoint substitutions remove both kernel kinks.
double velocity_line_even(const BumpSum& u, double x, double b);

}  // namespace fraclab
