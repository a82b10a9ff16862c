#include <cmath>
#include <numbers>

#include "doctest.h"
#include "fraclab/constants.hpp"
#include "fraclab/field.hpp"
#include "fraclab/oracle.hpp"
#include "fraclab/profiles.hpp"
#include "fraclab/spectral.hpp"

using namespace fraclab;

namespace {
constexpr double kPi = std::numbers::pi;

Field sampled(int n, double (*f)(double)) {
  Grid g = Grid::torus(n);
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = f(g.node(j));
  return Field::from_values(g, std::move(v));
}
}  // namespace

TEST_CASE("hilbert of cos is sin, constants annihilate") {
  Field u = sampled(64, [](double x) { return std::cos(x); });
  Field hu = hilbert(u);
  for (int j = 0; j < 64; ++j)
    CHECK(hu.values()[j] ==
          doctest::Approx(std::sin(u.grid().node(j))).epsilon(1e-12));
  CHECK(std::abs(hu.coeffs()[0]) < 1e-15);

  Field c = sampled(64, [](double) { return 3.7; });
  CHECK(hilbert(c).max_abs() < 1e-14);
}

TEST_CASE("H^2 = -I on mean-zero fields") {
  Field u = sampled(128, [](double x) { return std::cos(x) - 0.4 * std::sin(3 * x); });
  Field hh = hilbert(hilbert(u));
  for (int j = 0; j < 128; ++j)
    CHECK(hh.values()[j] == doctest::Approx(-u.values()[j]).epsilon(1e-12));
}

TEST_CASE("lambda_power multiplier arithmetic") {
  Field u = sampled(64, [](double x) { return std::cos(2.0 * x); });
  Field l = lambda_power(u, 0.5);
  for (int j = 0; j < 64; ++j)
    CHECK(l.values()[j] ==
          doctest::Approx(std::sqrt(2.0) * std::cos(2.0 * u.grid().node(j)))
              .epsilon(1e-12));
  // s = 0 is the identity on mean-zero data
  Field m0 = sampled(64, [](double x) { return std::cos(x) + std::sin(2 * x); });
  Field id = lambda_power(m0, 0.0);
  for (int j = 0; j < 64; ++j)
    CHECK(id.values()[j] == doctest::Approx(m0.values()[j]).epsilon(1e-13));
  CHECK(lambda_power(Field::zero(Grid::torus(32)), -0.5).max_abs() == 0.0);
}

TEST_CASE("velocity single-mode examples") {
  Field u = sampled(64, [](double x) { return 1.0 - std::cos(x); });
  for (double a : {0.3, 1.0, 1.7}) {
    Field v = velocity(u, a);
    for (int j = 0; j < 64; ++j)
      CHECK(v.values()[j] ==
            doctest::Approx(-std::sin(u.grid().node(j))).epsilon(1e-12));
  }
  Field u2 = sampled(64, [](double x) { return std::cos(2.0 * x); });
  double a = 0.6;
  Field v2 = velocity(u2, a);
  for (int j = 0; j < 64; ++j)
    CHECK(v2.values()[j] ==
          doctest::Approx(std::pow(2.0, a - 1.0) * std::sin(2.0 * u2.grid().node(j)))
              .epsilon(1e-12));
}

TEST_CASE("velocity is bitwise the composition and flips parity") {
  Field u = sampled(128, [](double x) { return 1.0 - std::cos(x) + 0.2 * std::cos(3 * x); });
  double a = 0.7;
  Field v1 = velocity(u, a);
  Field v2 = hilbert(lambda_power(u, a - 1.0));
  for (int j = 0; j < 128; ++j) {
    CHECK(v1.coeffs()[j].real() == v2.coeffs()[j].real());
    CHECK(v1.coeffs()[j].imag() == v2.coeffs()[j].imag());
  }
  Field ue = sampled(128, [](double x) { return 1.0 - std::cos(x); });
  Field ve = velocity(Field::from_values(ue.grid(), ue.values(), Parity::even), 0.7);
  CHECK(ve.parity() == Parity::odd);
  CHECK(ve.parity_violation(Parity::odd) < 1e-12);
}

TEST_CASE("dealias and tail fraction") {
  Grid g = Grid::torus(96);
  std::vector<cplx> c(96, 0.0);
  c[2] = 0.25;
  c[94] = 0.25;
  c[40] = 0.1;  // above the cut 32
  c[56] = 0.1;
  Field u = Field::from_coeffs(g, c);
  Field d = dealias(u);
  CHECK(std::abs(d.coeffs()[40]) == 0.0);
  CHECK(std::abs(d.coeffs()[2] - cplx(0.25, 0.0)) < 1e-15);
  double tf = tail_fraction(u);
  CHECK(tf == doctest::Approx(2.0 * 0.01 / (2.0 * 0.0625 + 2.0 * 0.01)).epsilon(1e-12));
}

TEST_CASE("periodic kernel oracle agrees with the multiplier") {
  Field u = sampled(64, [](double x) { return 1.0 - std::cos(x); });
  TrigPoly p = TrigPoly::from_field(u);
  for (double a : {0.3, 0.5, 0.7}) {
    for (double x : {0.1, 1.3, 2.9}) {
      double vo = kernel_oracle(u, a, x, KernelBranch::lambda_hilbert);
      CHECK(vo == doctest::Approx(-std::sin(x)).epsilon(2e-6));
      double lo = kernel_oracle(u, a, x, KernelBranch::lambda);
      CHECK(lo == doctest::Approx(p.lam_exact(x, a - 1.0)).epsilon(2e-6));
    }
  }
  CHECK(kernel_oracle(Field::zero(Grid::torus(32)), 0.5, 1.0,
                      KernelBranch::lambda_hilbert) == doctest::Approx(0.0));
  CHECK_THROWS_AS(kernel_oracle(u, 1.5, 1.0, KernelBranch::lambda),
                  std::domain_error);
}

TEST_CASE("line kernel oracle self-converges under refinement") {
  Grid g = Grid::line_window(512, 2.0);
  Field u = BumpSum::canonical().to_field(g);
  for (double x : {0.2, 0.7, 1.5}) {
    for (auto which : {KernelBranch::lambda, KernelBranch::lambda_hilbert}) {
      double c1 = kernel_oracle(u, 0.5, x, which, 1);
      double c2 = kernel_oracle(u, 0.5, x, which, 2);
      CHECK(std::abs(c1 - c2) < 1e-6);
    }
  }
}

TEST_CASE("line kernel oracle slope at the origin") {
  // For even u, Lambda^{a-1}Hu has slope -2a cbar_a int_0^1 u y^{-1-a} at 0.
  // Smooth profile (m=4) keeps the trig interpolation error out of the way.
  BumpSum p({{1.0, 1, 4}});
  Grid g = Grid::line_window(1024, 2.0);
  Field u = p.to_field(g);
  double a = 0.5, x = 1e-3;
  double slope = -2.0 * a * cbar_alpha(a) * p.moment(-1.0 - a);
  CHECK(slope == doctest::Approx(-0.0744619539997388).epsilon(1e-12));
  CHECK(kernel_oracle(u, a, x, KernelBranch::lambda_hilbert) / x ==
        doctest::Approx(slope).epsilon(1e-3));
}

TEST_CASE("line even Hilbert transform") {
  // small-x behaviour Hu ~ -(2x/pi) int_0^1 u/y^2 dy = -(2x/pi) * 8/15
  BumpSum u = BumpSum::canonical();
  double slope = -2.0 / kPi * (8.0 / 15.0);
  CHECK(hilbert_line_even(u, 1e-4) / 1e-4 == doctest::Approx(slope).epsilon(1e-3));
  // H u is odd under the even extension: vanishes at the origin
  CHECK(std::abs(hilbert_line_even(u, 1e-7)) < 1e-6);
}

TEST_CASE("line velocity slope at the origin") {
  // v'(0) = -2 b (1+b) c_b I[u], I = int_0^inf u y^{-2-b}
  BumpSum u = BumpSum::canonical();
  double b = 0.5;
  double I = u.moment(-2.0 - b);
  double K = -2.0 * b * (1.0 + b) * c_alpha(b) * I;
  CHECK(K == doctest::Approx(-0.8510768648563896).epsilon(1e-12));
  double x = 1e-3;
  CHECK(velocity_line_even(u, x, b) / x == doctest::Approx(K).epsilon(1e-4));
}
