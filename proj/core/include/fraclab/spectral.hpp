#pragma once

#include <functional>

#include "fraclab/field.hpp"

namespace fraclab {

// Fourier multiplier acting on the physical frequencies xi_n = 2 pi n/period
// (on the 2 pi torus xi_n = n). Reality of the output needs
// symbol(-xi) = conj(symbol(xi)); odd symbols flip parity and must zero the
// self-conjugate Nyquist slot.
struct MultiplierSpec {
  std::function<cplx(double)> symbol;
  cplx zero_mode = 0.0;
  bool flips_parity = false;
};

Field apply_multiplier(const Field& u, const MultiplierSpec& spec);

// H: symbol -i sign(xi), mean -> 0.
Field hilbert(const Field& u);
// Lambda^s: symbol |xi|^s, s in (-1,1), mean -> 0.
Field lambda_power(const Field& u, double s);
// v = Lambda^{alpha-1} H u, implemented literally as the composition so the
// two paths are bitwise identical.
Field velocity(const Field& u, double alpha);
// d/dx: symbol i xi.
Field deriv(const Field& u);

// Zero all modes with |n| > n/3 (2/3 rule for the quadratic flux).
Field dealias(const Field& u);
// Energy fraction sitting above the dealias cut, mean excluded.
double tail_fraction(const Field& u);

}  // namespace fraclab
