#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "nullcurves/errors.hpp"

namespace nullcurves {

using cplx = std::complex<double>;

// Hard cap on coefficient counts so degree growth fails loudly instead of
// truncating silently. Callers that legitimately need more (the n-search in
// the Riemann-Hilbert engine) pass an explicit larger cap.
inline constexpr std::size_t kDefaultCoeffCap = 8192;

struct Domain {
  enum class Kind { Disc, Annulus };
  Kind kind = Kind::Disc;
  double inner = 0.0;  // Annulus only, strictly in (0,1)

  static Domain disc() { return Domain{Kind::Disc, 0.0}; }
  static Domain annulus(double r);

  bool is_disc() const { return kind == Kind::Disc; }
  bool operator==(const Domain& o) const {
    return kind == o.kind && (kind == Kind::Disc || inner == o.inner);
  }
};

/// Truncated Laurent series sum_{k=k_min}^{k_max} c_k zeta^k on the closed
/// unit disc or on the closed annulus inner <= |zeta| <= 1. Values are
/// immutable; canonical form trims exactly-zero edge coefficients, so two
/// canonical values are equal iff their coefficient sequences (and domains)
/// are equal. The zero polynomial is k_min = 0 with an empty vector.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int k_min, std::vector<cplx> coeffs, Domain dom = Domain::disc());

  static LaurentPoly zero(Domain dom = Domain::disc()) {
    return LaurentPoly(0, {}, dom);
  }
  static LaurentPoly constant(cplx c, Domain dom = Domain::disc()) {
    return LaurentPoly(0, {c}, dom);
  }
  // c * zeta^k
  static LaurentPoly monomial(cplx c, int k, Domain dom = Domain::disc()) {
    return LaurentPoly(k, {c}, dom);
  }

  bool is_zero() const { return coeffs_.empty(); }
  int k_min() const { return k_min_; }
  int k_max() const { return k_min_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  const Domain& domain() const { return domain_; }

  // Coefficient of zeta^k, zero outside the stored window.
  cplx coeff(int k) const;

  // Largest coefficient modulus (sup norm on the coefficient sequence).
  double coeff_sup() const;

  bool operator==(const LaurentPoly& o) const {
    return domain_ == o.domain_ && k_min_ == o.k_min_ && coeffs_ == o.coeffs_;
  }

 private:
  int k_min_ = 0;
  std::vector<cplx> coeffs_;
  Domain domain_ = Domain::disc();
};

enum class FitMode { Fejer, LeastSquares };

// --- evaluation ---------------------------------------------------------

cplx eval(const LaurentPoly& p, cplx zeta);

// p at the n_grid-th roots of unity, via FFT of the coefficient vector.
// Requires n_grid >= 2*(k_max - k_min) + 2 so the grid resolves the series.
std::vector<cplx> boundary_samples(const LaurentPoly& p, std::size_t n_grid);

// p on the circle |zeta| = radius at n equispaced angles. Coefficients are
// folded mod n with the radius weight first, so this is exact at the grid
// points for any degree (no anti-aliasing requirement). Evaluation helper for
// sup-norm measurements; not a fitting input.
std::vector<cplx> grid_eval(const LaurentPoly& p, std::size_t n, double radius);

// --- calculus -----------------------------------------------------------

LaurentPoly derivative(const LaurentPoly& p);

// Termwise antiderivative. Requires the zeta^{-1} coefficient to be exactly
// zero (NonzeroResidue otherwise; this is the period obstruction detector).
// The constant anchors the value at 0 on the disc and at 1 on an annulus.
LaurentPoly antiderivative(const LaurentPoly& p, cplx constant);

// --- algebra ------------------------------------------------------------

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly scale(const LaurentPoly& p, cplx s);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q,
                std::size_t coeff_cap = kDefaultCoeffCap);
// p * zeta^k (exponent shift; may leave the disc class if k < 0).
LaurentPoly shift(const LaurentPoly& p, int k);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, q);
}
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  return sub(p, q);
}
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  return mul(p, q);
}
inline LaurentPoly operator*(cplx s, const LaurentPoly& p) {
  return scale(p, s);
}

// --- boundary fitting ---------------------------------------------------

// Trigonometric fit of uniform circle samples with exponents in [-K, K].
// LeastSquares returns the truncated Fourier series; Fejer returns its
// Cesaro mean, which maps nonnegative real samples to a fit with nonnegative
// real boundary values. Requires samples.size() >= 4K + 4.
LaurentPoly fit_boundary(const std::vector<cplx>& samples, int K, FitMode mode,
                         Domain dom = Domain::annulus(0.5));
LaurentPoly fit_boundary(const std::vector<double>& samples, int K,
                         FitMode mode, Domain dom = Domain::annulus(0.5));

// --- holomorphic square root -------------------------------------------

struct NonvanishingReport {
  double min_abs = 0.0;     // min modulus over the boundary grid
  double max_abs = 0.0;     // max modulus over the boundary grid
  long winding = 0;         // accumulated-argument winding number
  bool nonvanishing = false;
};

// Nonvanishing test on the closed disc: modulus above tol_rel * max on a
// boundary grid and argument-principle winding count zero.
NonvanishingReport check_nonvanishing_disc(const LaurentPoly& p,
                                           std::size_t n_grid = 4096,
                                           double tol_rel = 1e-9);

// Principal-branch holomorphic square root of a nonvanishing p on the disc,
// computed as exp(log(p)/2) with log(p) the antiderivative of p'/p anchored
// at zeta = 0. Result q satisfies ||q*q - p|| < 1e-10 ||p|| in coefficient
// sup norm and q(0) = principal sqrt of p(0).
LaurentPoly sqrt_holo(const LaurentPoly& p,
                      std::size_t coeff_cap = kDefaultCoeffCap);

// --- series helpers (disc-based power series, used by the lifting code) --

namespace series {

// num/den as a power series with den(0) != 0, truncated to n_terms.
LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den,
                   std::size_t n_terms);

// exp of a power series (k_min >= 0), truncated to n_terms.
LaurentPoly exp(const LaurentPoly& p, std::size_t n_terms);

}  // namespace series

// Deterministic pairwise sum (order-independent reduction for grid sums).
double pairwise_sum(const std::vector<double>& v);

}  // namespace nullcurves
