#include "fraclab/profiles.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fraclab/constants.hpp"

namespace fraclab {

namespace {

double binom(int m, int j) {
  double b = 1.0;
  for (int i = 0; i < j; ++i) b = b * (m - i) / (i + 1);
  return b;
}

// uniform in [0,1) with 53 random bits; mt19937_64 output is specified by the
// standard, so the family is identical on every platform
double unit(std::mt19937_64& rng) { return double(rng() >> 11) * 0x1.0p-53; }

}  // namespace

BumpSum::BumpSum(std::vector<BumpTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.k < 1 || t.m < 1) throw std::invalid_argument("BumpSum: need k,m >= 1");
  }
}

BumpSum BumpSum::canonical() { return BumpSum({{1.0, 1, 2}}); }

std::vector<BumpSum> BumpSum::seeded_family(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BumpSum> fam;
  fam.reserve(n);
  for (int i = 0; i < n; ++i) {
    int nterms = 1 + std::min(2, int(unit(rng) * 3.0));
    std::vector<BumpTerm> terms;
    for (int t = 0; t < nterms; ++t) {
      double c = 0.2 + 0.8 * unit(rng);
      int k = 1 + std::min(2, int(unit(rng) * 3.0));
      int m = 2 + std::min(2, int(unit(rng) * 3.0));
      terms.push_back({c, k, m});
    }
    fam.emplace_back(std::move(terms));
  }
  return fam;
}

double BumpSum::eval(double x) const {
  double x2 = x * x;
  if (x2 >= 1.0) return 0.0;
  double q = 1.0 - x2;
  double s = 0.0;
  for (const auto& t : terms_)
    s += t.c * std::pow(x2, t.k) * std::pow(q, t.m);
  return s;
}

double BumpSum::deriv(double x) const {
  double ax = std::abs(x), sgn = x < 0.0 ? -1.0 : 1.0;
  if (ax >= 1.0) return 0.0;
  double q = 1.0 - ax * ax;
  double s = 0.0;
  for (const auto& t : terms_)
    s += t.c * (2.0 * t.k * std::pow(ax, 2 * t.k - 1) * std::pow(q, t.m) -
                2.0 * t.m * std::pow(ax, 2 * t.k + 1) * std::pow(q, t.m - 1));
  return sgn * s;
}

double BumpSum::a2() const {
  double s = 0.0;
  for (const auto& t : terms_)
    if (t.k == 1) s += t.c;
  return s;
}

double BumpSum::moment(double w) const {
  double s = 0.0;
  for (const auto& t : terms_) {
    double a = t.k + (w + 1.0) / 2.0;
    if (a <= 0.0) throw std::domain_error("BumpSum::moment: divergent weight");
    s += 0.5 * t.c * beta_fn(a, t.m + 1.0);
  }
  return s;
}

cplx BumpSum::mellin_weighted(double lam, double w) const {
  cplx s = 0.0;
  for (const auto& t : terms_)
    for (int j = 0; j <= t.m; ++j)
      s += t.c * (j % 2 ? -1.0 : 1.0) * binom(t.m, j) /
           cplx(w + 2.0 * t.k + 2.0 * j, lam);
  return s;
}

Field BumpSum::to_field(const Grid& g) const {
  std::vector<double> vals(g.n);
  for (int j = 0; j < g.n; ++j) vals[j] = eval(g.node(j));
  return Field::from_values(g, std::move(vals), Parity::even);
}

TrigPoly::TrigPoly(double c0, std::vector<cplx> cpos)
    : c0_(c0), cpos_(std::move(cpos)) {}

TrigPoly TrigPoly::from_field(const Field& u) {
  const auto& c = u.coeffs();
  int n = u.n();
  std::vector<cplx> cpos(n / 2);
  for (int k = 1; k < n / 2; ++k) cpos[k - 1] = c[k];
  // field eval counts the Nyquist slot once; split it across +/-n/2
  if (n >= 2) cpos[n / 2 - 1] = 0.5 * c[n / 2];
  return TrigPoly(c[0].real(), std::move(cpos));
}

double TrigPoly::eval(double x) const {
  double v = c0_;
  for (int n = 1; n <= max_mode(); ++n)
    v += 2.0 * (cpos_[n - 1] * std::polar(1.0, n * x)).real();
  return v;
}

double TrigPoly::antideriv(double x, int k) const {
  double v = 0.0;
  for (int n = 1; n <= max_mode(); ++n) {
    cplx div = std::pow(cplx(0.0, double(n)), k);
    v += 2.0 * (cpos_[n - 1] * std::polar(1.0, n * x) / div).real();
  }
  return v;
}

double TrigPoly::vel_exact(double x, double alpha) const {
  double v = 0.0;
  for (int n = 1; n <= max_mode(); ++n)
    v += 2.0 * (cplx(0.0, -1.0) * std::pow(double(n), alpha - 1.0) *
                cpos_[n - 1] * std::polar(1.0, n * x))
                   .real();
  return v;
}

double TrigPoly::lam_exact(double x, double s) const {
  double v = 0.0;
  for (int n = 1; n <= max_mode(); ++n)
    v += 2.0 * std::pow(double(n), s) *
         (cpos_[n - 1] * std::polar(1.0, n * x)).real();
  return v;
}

double TrigPoly::antideriv_bound(int k) const {
  double b = 0.0;
  for (int n = 1; n <= max_mode(); ++n)
    b += std::abs(cpos_[n - 1]) / std::pow(double(n), k);
  return 2.0 * b;
}

}  // namespace fraclab
