#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "nullcurves/laurent.hpp"

using namespace nullcurves;

namespace {

constexpr double kPi = 3.14159265358979323846;
const cplx I(0.0, 1.0);

// Independent oracle: plain per-point Horner evaluation.
cplx horner_eval(const LaurentPoly& p, cplx z) {
  cplx acc(0.0, 0.0);
  for (int k = p.k_max(); k >= p.k_min(); --k) acc = acc * z + p.coeff(k);
  cplx zmin = std::pow(z, p.k_min());
  return acc * zmin;
}

std::vector<double> sampled(const std::function<double(double)>& f,
                            std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = f(2.0 * kPi * static_cast<double>(k) / static_cast<double>(n));
  return out;
}

}  // namespace

TEST_CASE("eval: direct powers and constants") {
  const LaurentPoly z2 = LaurentPoly::monomial(1.0, 2);
  CHECK(std::abs(eval(z2, cplx(0.0, 2.0)) - cplx(-4.0, 0.0)) < 1e-15);

  const LaurentPoly one = LaurentPoly::constant(1.0);
  CHECK(eval(one, cplx(0.3, 0.4)) == cplx(1.0, 0.0));

  // zeta + 1/zeta on an annulus at zeta = 1
  LaurentPoly p(-1, {cplx(1.0, 0.0), cplx(0.0, 0.0), cplx(1.0, 0.0)},
                Domain::annulus(0.25));
  CHECK(std::abs(eval(p, cplx(1.0, 0.0)) - cplx(2.0, 0.0)) < 1e-15);
}

TEST_CASE("eval: domain errors") {
  const LaurentPoly z = LaurentPoly::monomial(1.0, 1);
  CHECK_THROWS_AS((void)eval(z, cplx(1.5, 0.0)), Error);
  LaurentPoly inv(-1, {cplx(1.0, 0.0)}, Domain::annulus(0.5));
  CHECK_THROWS_AS((void)eval(inv, cplx(0.1, 0.0)), Error);
  try {
    (void)eval(inv, cplx(0.1, 0.0));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfDomain);
  }
}

TEST_CASE("canonicalization trims exact zeros") {
  LaurentPoly p(-2, {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(0.0, 0.0)},
                Domain::annulus(0.5));
  CHECK(p.k_min() == -1);
  CHECK(p.size() == 1);
  LaurentPoly q(0, {cplx(0.0, 0.0), cplx(0.0, 0.0)});
  CHECK(q.is_zero());
  CHECK(q.k_min() == 0);
}

TEST_CASE("boundary_samples: roots of unity and oracle comparison") {
  const LaurentPoly z = LaurentPoly::monomial(1.0, 1);
  const auto s = boundary_samples(z, 4);
  REQUIRE(s.size() == 4);
  CHECK(std::abs(s[0] - cplx(1, 0)) < 1e-14);
  CHECK(std::abs(s[1] - cplx(0, 1)) < 1e-14);
  CHECK(std::abs(s[2] - cplx(-1, 0)) < 1e-14);
  CHECK(std::abs(s[3] - cplx(0, -1)) < 1e-14);

  const LaurentPoly one = LaurentPoly::constant(1.0);
  for (const cplx& v : boundary_samples(one, 8))
    CHECK(std::abs(v - cplx(1, 0)) < 1e-14);

  LaurentPoly p(-1, {cplx(1, 0), cplx(0, 0), cplx(1, 0)}, Domain::annulus(0.5));
  const auto vals = boundary_samples(p, 8);
  for (std::size_t k = 0; k < 8; ++k) {
    const double th = 2.0 * kPi * static_cast<double>(k) / 8.0;
    CHECK(std::abs(vals[k] - cplx(2.0 * std::cos(th), 0.0)) < 1e-13);
  }
}

TEST_CASE("boundary_samples: anti-aliasing precondition") {
  LaurentPoly p(0, std::vector<cplx>(8, cplx(1.0, 0.0)));
  CHECK_THROWS_AS((void)boundary_samples(p, 8), Error);  // span 7 needs >= 16
  CHECK_NOTHROW((void)boundary_samples(p, 16));
}

TEST_CASE("boundary_samples agrees with pointwise eval to 1e-12 relative") {
  std::mt19937_64 rng(7);
  auto u = [&] { return std::uniform_real_distribution<double>(-1, 1)(rng); };
  for (int deg : {64, 512, 2048}) {
    std::vector<cplx> c(static_cast<std::size_t>(deg + 1));
    for (std::size_t k = 0; k < c.size(); ++k)
      c[k] = cplx(u(), u()) / (1.0 + 0.05 * static_cast<double>(k));
    LaurentPoly p(0, c);
    const std::size_t n = 2 * static_cast<std::size_t>(deg) + 2;
    const auto vals = boundary_samples(p, n);
    double scale = 0.0;
    for (const cplx& v : vals) scale = std::max(scale, std::abs(v));
    // spot-check 32 grid points against Horner
    for (std::size_t k = 0; k < n; k += n / 32) {
      const double th = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
      const cplx z(std::cos(th), std::sin(th));
      CHECK(std::abs(vals[k] - horner_eval(p, z)) < 1e-12 * scale);
    }
  }
}

TEST_CASE("derivative and antiderivative") {
  for (int n : {1, 3, 7}) {
    const LaurentPoly zn = LaurentPoly::monomial(1.0, n);
    const LaurentPoly d = derivative(zn);
    CHECK(d.k_min() == n - 1);
    CHECK(std::abs(d.coeff(n - 1) - cplx(n, 0)) < 1e-15);
  }
  // antiderivative(zeta^{2n}, 0) = zeta^{2n+1}/(2n+1)
  for (int n : {0, 2, 5}) {
    const LaurentPoly p = LaurentPoly::monomial(1.0, 2 * n);
    const LaurentPoly a = antiderivative(p, 0.0);
    CHECK(std::abs(a.coeff(2 * n + 1) - cplx(1.0 / (2.0 * n + 1.0), 0)) <
          1e-15);
    CHECK(a.coeff(0) == cplx(0.0, 0.0));
  }
  // residue obstruction
  LaurentPoly res(-1, {cplx(1, 0)}, Domain::annulus(0.5));
  CHECK_THROWS_AS((void)antiderivative(res, 0.0), Error);
  try {
    (void)antiderivative(res, 0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonzeroResidue);
  }
}

TEST_CASE("derivative(antiderivative(p, c)) == p exactly") {
  std::mt19937_64 rng(11);
  auto u = [&] { return std::uniform_real_distribution<double>(-2, 2)(rng); };
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<cplx> c(17);
    for (auto& x : c) x = cplx(u(), u());
    LaurentPoly p(-8, c, Domain::annulus(0.3));
    // clear the residue slot so the antiderivative exists
    std::vector<cplx> cc(p.coeffs());
    if (p.k_min() <= -1 && p.k_max() >= -1)
      cc[static_cast<std::size_t>(-1 - p.k_min())] = cplx(0.0, 0.0);
    LaurentPoly q(p.k_min(), cc, p.domain());
    const LaurentPoly back = derivative(antiderivative(q, cplx(u(), u())));
    CHECK(back == q);
  }
}

TEST_CASE("antiderivative anchors at 1 on the annulus") {
  LaurentPoly p(-3, {cplx(2, 1), cplx(0, 0), cplx(0, 0), cplx(1, -1)},
                Domain::annulus(0.4));
  const cplx c0(0.7, -0.2);
  const LaurentPoly a = antiderivative(p, c0);
  CHECK(std::abs(eval(a, cplx(1.0, 0.0)) - c0) < 1e-14);
}

TEST_CASE("algebra: products, zero, symmetric square") {
  const LaurentPoly one_plus_z(0, {cplx(1, 0), cplx(1, 0)});
  const LaurentPoly sq = mul(one_plus_z, one_plus_z);
  CHECK(sq.coeff(0) == cplx(1, 0));
  CHECK(sq.coeff(1) == cplx(2, 0));
  CHECK(sq.coeff(2) == cplx(1, 0));

  CHECK(mul(one_plus_z, LaurentPoly::zero()).is_zero());

  LaurentPoly s(-1, {cplx(1, 0), cplx(0, 0), cplx(1, 0)}, Domain::annulus(0.5));
  const LaurentPoly s2 = mul(s, s);
  CHECK(s2.coeff(-2) == cplx(1, 0));
  CHECK(s2.coeff(0) == cplx(2, 0));
  CHECK(s2.coeff(2) == cplx(1, 0));

  const LaurentPoly disc_p = LaurentPoly::constant(1.0);
  CHECK_THROWS_AS((void)mul(disc_p, s), Error);
}

TEST_CASE("mul respects the coefficient cap") {
  std::vector<cplx> c(5000, cplx(1.0, 0.0));
  LaurentPoly p(0, c);
  CHECK_THROWS_AS((void)mul(p, p), Error);
  try {
    (void)mul(p, p);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TruncationOverflow);
  }
  CHECK_NOTHROW((void)mul(p, p, 16384));
}

TEST_CASE("fit_boundary: cos theta in least-squares mode") {
  const auto s = sampled([](double t) { return std::cos(t); }, 64);
  const LaurentPoly fit = fit_boundary(s, 1, FitMode::LeastSquares);
  CHECK(std::abs(fit.coeff(-1) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(fit.coeff(1) - cplx(0.5, 0)) < 1e-12);
  CHECK(std::abs(fit.coeff(0)) < 1e-12);
}

TEST_CASE("fit_boundary: constant samples") {
  const auto s = sampled([](double) { return 1.0; }, 64);
  const LaurentPoly fit = fit_boundary(s, 4, FitMode::LeastSquares);
  CHECK(std::abs(fit.coeff(0) - cplx(1, 0)) < 1e-13);
  for (int k = -4; k <= 4; ++k)
    if (k != 0) CHECK(std::abs(fit.coeff(k)) < 1e-13);
}

TEST_CASE("fit_boundary: too few samples") {
  const auto s = sampled([](double t) { return std::cos(t); }, 16);
  CHECK_THROWS_AS((void)fit_boundary(s, 8, FitMode::Fejer), Error);
}

TEST_CASE("fit_boundary: Fejer positivity on a nonnegative bump") {
  auto bump = [](double t) {
    const double d = std::cos(t - 1.0);
    return d > 0.3 ? (d - 0.3) * (d - 0.3) : 0.0;
  };
  const auto s = sampled(bump, 1024);
  const LaurentPoly fit = fit_boundary(s, 24, FitMode::Fejer);
  const auto vals = boundary_samples(fit, 4096);
  for (const cplx& v : vals) {
    CHECK(v.real() >= -1e-12);
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("fit_boundary: Fejer positivity on a 4x finer verification grid") {
  auto bump = [](double t) { return std::max(0.0, std::sin(3 * t)); };
  const auto s = sampled(bump, 512);
  const LaurentPoly fit = fit_boundary(s, 16, FitMode::Fejer);
  double mn = 1e300;
  for (const cplx& v : boundary_samples(fit, 2048)) mn = std::min(mn, v.real());
  CHECK(mn >= -1e-10);
}

TEST_CASE("sqrt_holo: constants and exact squares") {
  const LaurentPoly four = LaurentPoly::constant(4.0);
  const LaurentPoly two = sqrt_holo(four);
  CHECK(std::abs(two.coeff(0) - cplx(2, 0)) < 1e-14);

  LaurentPoly p(0, {cplx(1, 0), cplx(0.5, 0)});
  const LaurentPoly q = sqrt_holo(mul(p, p));
  CHECK(std::abs(q.coeff(0) - cplx(1, 0)) < 1e-12);
  CHECK(std::abs(q.coeff(1) - cplx(0.5, 0)) < 1e-12);

  const LaurentPoly z = LaurentPoly::monomial(1.0, 1);
  CHECK_THROWS_AS((void)sqrt_holo(z), Error);
  try {
    (void)sqrt_holo(z);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroOnDomain);
  }
}

TEST_CASE("sqrt_holo: random nonvanishing inputs square back") {
  std::mt19937_64 rng(23);
  auto u = [&] { return std::uniform_real_distribution<double>(-1, 1)(rng); };
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<cplx> c(9);
    c[0] = cplx(3.0 + u(), u());  // large constant keeps it zero-free
    for (std::size_t k = 1; k < c.size(); ++k)
      c[k] = cplx(u(), u()) * (0.2 / static_cast<double>(k));
    LaurentPoly p(0, c);
    const LaurentPoly q = sqrt_holo(p);
    const LaurentPoly err = sub(mul(q, q, 65536), p);
    CHECK(err.coeff_sup() < 1e-10 * p.coeff_sup());
  }
}

TEST_CASE("winding count rejects interior zeros") {
  // p = zeta - 0.5 has one zero inside; boundary modulus stays >= 0.5
  LaurentPoly p(0, {cplx(-0.5, 0), cplx(1, 0)});
  const auto rep = check_nonvanishing_disc(p);
  CHECK(rep.winding == 1);
  CHECK(!rep.nonvanishing);
  CHECK_THROWS_AS((void)sqrt_holo(p), Error);
}
