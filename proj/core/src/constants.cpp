#include "fraclab/constants.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fraclab {

namespace {
constexpr double kPi = std::numbers::pi;

constexpr double kLanczos[9] = {
    0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
    771.32342877765313,       -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

std::complex<double> lanczos_pos(std::complex<double> z) {
  // valid for Re z >= 1/2
  z -= 1.0;
  std::complex<double> x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  std::complex<double> t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}
}  // namespace

std::complex<double> gamma_fn(std::complex<double> z) {
  if (z.real() < 0.5) {
    // reflection; sin(pi z) poles at nonpositive integers come out as inf
    return kPi / (std::sin(kPi * z) * lanczos_pos(1.0 - z));
  }
  return lanczos_pos(z);
}

double gamma_fn(double x) { return gamma_fn(std::complex<double>(x, 0.0)).real(); }

double beta_fn(double a, double b) {
  return gamma_fn(a) * gamma_fn(b) / gamma_fn(a + b);
}

double c_alpha(double a) {
  return gamma_fn(a / 2.0) /
         (std::sqrt(kPi) * std::pow(2.0, 1.0 - a) * gamma_fn((1.0 - a) / 2.0));
}

double cbar_alpha(double a) {
  return gamma_fn(a) * std::sin(kPi * a / 2.0) / kPi;
}

double k_alpha(double a) {
  return -std::pow(2.0, a) * gamma_fn((1.0 + a) / 2.0) /
         (std::sqrt(kPi) * gamma_fn(-a / 2.0));
}

Constants make_constants(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0))
    throw std::domain_error("make_constants: alpha must lie in (0,2)");
  Constants c;
  c.alpha = alpha;
  c.beta = alpha > 1.0 ? alpha - 1.0 : alpha;
  c.c_alpha = c_alpha(alpha);
  c.c_bar_alpha = cbar_alpha(alpha);
  c.k_alpha = k_alpha(alpha);
  double cb = c_alpha(c.beta);
  c.blowup_const = (1.0 + c.beta) * c.beta * cb;
  return c;
}

}  // namespace fraclab
