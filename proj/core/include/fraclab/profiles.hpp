#pragma once

#include <cstdint>
#include <vector>

#include "fraclab/field.hpp"

namespace fraclab {

// One term c * x^{2k} (1-x^2)^m of an even compactly supported profile.
struct BumpTerm {
  double c;
  int k;
  int m;
};

// Even profile u(x) = sum_i c_i x^{2k_i} (1-x^2)_+^{m_i}, support [-1,1].
// Closed forms for the weighted moments keep the singular-weight integrals
// exact near the origin, where grid sampling cannot reach.
class BumpSum {
 public:
  explicit BumpSum(std::vector<BumpTerm> terms);

  // x^2 (1-x^2)^2, the reference profile.
  static BumpSum canonical();
  // n profiles with 1..3 terms, c in [0.2,1], k in {1,2,3}, m in {2,3,4};
  // mt19937_64 keeps the draw identical across platforms.
  static std::vector<BumpSum> seeded_family(int n, std::uint64_t seed);

  double eval(double x) const;
  double deriv(double x) const;  // one-sided from inside at x=1
  // Coefficient of x^2 at the origin (terms with k=1).
  double a2() const;
  // int_0^1 u(x) x^w dx = sum c/2 B(k+(w+1)/2, m+1); needs k+(w+1)/2 > 0.
  double moment(double w) const;
  // int_0^1 x^{i lam - 1} x^w u(x) dx, exact rational sum.
  cplx mellin_weighted(double lam, double w) const;

  // Sample onto a line window grid (even periodic extension).
  Field to_field(const Grid& g) const;

  const std::vector<BumpTerm>& terms() const { return terms_; }

 private:
  std::vector<BumpTerm> terms_;
};

// Real trigonometric polynomial u = c0 + sum_{n>=1} 2 Re(c_n e^{inx}) on the
// 2*pi torus, with the closed-form pieces the kernel oracle needs.
class TrigPoly {
 public:
  TrigPoly(double c0, std::vector<cplx> cpos);
  static TrigPoly from_field(const Field& u);

  double eval(double x) const;
  // Zero-mean k-th antiderivative d^{-k}u at x.
  double antideriv(double x, int k) const;
  // Exact v = Lambda^{alpha-1} H u via the Fourier multiplier.
  double vel_exact(double x, double alpha) const;
  // Exact Lambda^s of the mean-zero part.
  double lam_exact(double x, double s) const;

  double c0() const { return c0_; }
  int max_mode() const { return static_cast<int>(cpos_.size()); }
  // sum_n |c_n| / n^k, bounds |d^{-k}u|.
  double antideriv_bound(int k) const;

 private:
  double c0_;
  std::vector<cplx> cpos_;
};

}  // namespace fraclab
