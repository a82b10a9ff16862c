#include "fraclab/spectral.hpp"

#include <cmath>
#include <cstdlib>

namespace fraclab {

namespace {

Parity map_parity(Parity p, bool flips) {
  if (p == Parity::none || !flips) return p;
  return p == Parity::even ? Parity::odd : Parity::even;
}

}  // namespace

Field apply_multiplier(const Field& u, const MultiplierSpec& spec) {
  const Grid& g = u.grid();
  std::vector<cplx> c = u.coeffs();
  c[0] *= spec.zero_mode;
  for (int j = 1; j < g.n; ++j) {
    if (spec.flips_parity && 2 * j == g.n) {
      c[j] = 0.0;  // self-conjugate slot, odd symbol would break reality
    } else {
      c[j] *= spec.symbol(g.xi(j));
    }
  }
  return Field::from_coeffs(g, std::move(c), map_parity(u.parity(), spec.flips_parity));
}

Field hilbert(const Field& u) {
  MultiplierSpec s;
  s.symbol = [](double xi) { return cplx(0.0, xi > 0 ? -1.0 : 1.0); };
  s.flips_parity = true;
  return apply_multiplier(u, s);
}

Field lambda_power(const Field& u, double s) {
  MultiplierSpec m;
  m.symbol = [s](double xi) { return cplx(std::pow(std::abs(xi), s), 0.0); };
  return apply_multiplier(u, m);
}

Field velocity(const Field& u, double alpha) {
  return hilbert(lambda_power(u, alpha - 1.0));
}

Field deriv(const Field& u) {
  MultiplierSpec s;
  s.symbol = [](double xi) { return cplx(0.0, xi); };
  s.flips_parity = true;
  return apply_multiplier(u, s);
}

Field dealias(const Field& u) {
  const Grid& g = u.grid();
  std::vector<cplx> c = u.coeffs();
  int cut = g.n / 3;
  for (int j = 0; j < g.n; ++j)
    if (std::abs(g.mode(j)) > cut) c[j] = 0.0;
  return Field::from_coeffs(g, std::move(c), u.parity());
}

double tail_fraction(const Field& u) {
  const Grid& g = u.grid();
  const auto& c = u.coeffs();
  int cut = g.n / 3;
  double tail = 0.0, total = 0.0;
  for (int j = 1; j < g.n; ++j) {
    double e = std::norm(c[j]);
    total += e;
    if (std::abs(g.mode(j)) > cut) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace fraclab
