#include "nullcurves/laurent.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"

namespace nullcurves {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Domain Domain::annulus(double r) {
  if (!(r > 0.0 && r < 1.0))
    raise(ErrorCode::InvalidInput, "annulus inner radius must lie in (0,1)");
  return Domain{Kind::Annulus, r};
}

LaurentPoly::LaurentPoly(int k_min, std::vector<cplx> coeffs, Domain dom)
    : k_min_(k_min), coeffs_(std::move(coeffs)), domain_(dom) {
  // Canonicalize: trim exactly-zero edge coefficients.
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == cplx(0.0, 0.0)) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    k_min_ = 0;
  } else {
    std::size_t tail = coeffs_.size();
    while (tail > lead && coeffs_[tail - 1] == cplx(0.0, 0.0)) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
      coeffs_ = std::vector<cplx>(coeffs_.begin() + static_cast<long>(lead),
                                  coeffs_.begin() + static_cast<long>(tail));
      k_min_ += static_cast<int>(lead);
    }
  }
  if (domain_.is_disc() && k_min_ < 0)
    raise(ErrorCode::OutOfDomain,
          "disc-domain series cannot carry negative exponents");
}

cplx LaurentPoly::coeff(int k) const {
  if (coeffs_.empty() || k < k_min_ || k > k_max()) return cplx(0.0, 0.0);
  return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

double LaurentPoly::coeff_sup() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

// --- evaluation ---------------------------------------------------------

cplx eval(const LaurentPoly& p, cplx zeta) {
  const double az = std::abs(zeta);
  const double tol = 1e-12;
  if (p.domain().is_disc()) {
    if (az > 1.0 + tol)
      raise(ErrorCode::OutOfDomain, "|zeta| > 1 on disc domain");
  } else {
    if (az > 1.0 + tol || az < p.domain().inner - tol)
      raise(ErrorCode::OutOfDomain, "zeta outside annulus");
  }
  if (p.is_zero()) return cplx(0.0, 0.0);
  if (p.k_min() < 0 && az == 0.0)
    raise(ErrorCode::OutOfDomain, "pole at zeta = 0");

  // Horner on the regular part, Horner in 1/zeta on the principal part.
  const auto& c = p.coeffs();
  const int kmin = p.k_min();
  const int kmax = p.k_max();
  cplx regular(0.0, 0.0);
  for (int k = kmax; k >= std::max(kmin, 0); --k)
    regular = regular * zeta + p.coeff(k);
  if (kmin >= 0) {
    // Account for a positive k_min offset: we started Horner at k = kmax and
    // folded down to k = kmin, so multiply by zeta^{kmin}.
    cplx zk(1.0, 0.0);
    for (int i = 0; i < kmin; ++i) zk *= zeta;
    (void)c;
    return regular * zk;
  }
  cplx principal(0.0, 0.0);
  const cplx w = 1.0 / zeta;
  for (int k = kmin; k <= -1; ++k) principal = principal * w + p.coeff(k);
  // principal currently equals sum_{k=kmin}^{-1} c_k w^{-1-k}; one more w
  // factor lands each term on w^{-k}.
  return regular + principal * w;
}

std::vector<cplx> boundary_samples(const LaurentPoly& p, std::size_t n_grid) {
  if (n_grid < 2) raise(ErrorCode::GridTooCoarse, "need at least 2 points");
  if (!p.is_zero()) {
    const std::size_t span =
        static_cast<std::size_t>(p.k_max() - p.k_min());
    if (n_grid < 2 * span + 2)
      raise(ErrorCode::GridTooCoarse,
            "grid must satisfy n >= 2*(k_max - k_min) + 2");
  }
  return grid_eval(p, n_grid, 1.0);
}

std::vector<cplx> grid_eval(const LaurentPoly& p, std::size_t n,
                            double radius) {
  if (n == 0) return {};
  std::vector<cplx> bins(n, cplx(0.0, 0.0));
  if (!p.is_zero()) {
    // Fold c_k * radius^k into bin k mod n; exact at the grid points.
    const int kmin = p.k_min();
    double rk = std::pow(radius, kmin);
    if (radius == 0.0) {
      if (kmin < 0)
        raise(ErrorCode::OutOfDomain, "pole at zeta = 0");
      rk = (kmin == 0) ? 1.0 : 0.0;
    }
    for (int k = kmin; k <= p.k_max(); ++k) {
      long b = static_cast<long>(k) % static_cast<long>(n);
      if (b < 0) b += static_cast<long>(n);
      bins[static_cast<std::size_t>(b)] += p.coeff(k) * rk;
      rk *= radius;
    }
  }
  detail::dft(bins, +1);  // values_j = sum_b bins_b * e^{+2pi i j b / n}
  return bins;
}

// --- calculus -----------------------------------------------------------

LaurentPoly derivative(const LaurentPoly& p) {
  if (p.is_zero()) return LaurentPoly::zero(p.domain());
  std::vector<cplx> out(p.size());
  for (int k = p.k_min(); k <= p.k_max(); ++k)
    out[static_cast<std::size_t>(k - p.k_min())] =
        p.coeff(k) * static_cast<double>(k);
  return LaurentPoly(p.k_min() - 1, std::move(out), p.domain());
}

LaurentPoly antiderivative(const LaurentPoly& p, cplx constant) {
  if (p.coeff(-1) != cplx(0.0, 0.0))
    raise(ErrorCode::NonzeroResidue,
          "zeta^{-1} coefficient must vanish before integrating");
  const int kmin = p.is_zero() ? 0 : p.k_min();
  const int kmax = p.is_zero() ? -1 : p.k_max();
  const int out_kmin = kmin + 1;
  std::vector<cplx> out(
      kmax >= kmin ? static_cast<std::size_t>(kmax - kmin + 1) : 0,
      cplx(0.0, 0.0));
  for (int k = kmin; k <= kmax; ++k) {
    if (k == -1) continue;  // exactly-zero residue slot drops out
    out[static_cast<std::size_t>(k - kmin)] =
        p.coeff(k) / static_cast<double>(k + 1);
  }
  LaurentPoly prim(out_kmin, std::move(out), p.domain());
  // Anchor: value at 0 on the disc, at 1 on an annulus.
  cplx anchor_value;
  if (p.domain().is_disc()) {
    anchor_value = prim.coeff(0);
  } else {
    anchor_value = eval(prim, cplx(1.0, 0.0));
  }
  return add(prim, LaurentPoly::constant(constant - anchor_value, p.domain()));
}

// --- algebra ------------------------------------------------------------

static void require_same_domain(const LaurentPoly& p, const LaurentPoly& q) {
  if (!(p.domain() == q.domain()))
    raise(ErrorCode::DomainMismatch, "operands live on different domains");
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) {
  require_same_domain(p, q);
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  const int kmin = std::min(p.k_min(), q.k_min());
  const int kmax = std::max(p.k_max(), q.k_max());
  std::vector<cplx> out(static_cast<std::size_t>(kmax - kmin + 1));
  for (int k = kmin; k <= kmax; ++k)
    out[static_cast<std::size_t>(k - kmin)] = p.coeff(k) + q.coeff(k);
  return LaurentPoly(kmin, std::move(out), p.domain());
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) {
  return add(p, scale(q, cplx(-1.0, 0.0)));
}

LaurentPoly scale(const LaurentPoly& p, cplx s) {
  if (s == cplx(0.0, 0.0)) return LaurentPoly::zero(p.domain());
  std::vector<cplx> out(p.coeffs());
  for (cplx& c : out) c *= s;
  return LaurentPoly(p.k_min(), std::move(out), p.domain());
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q,
                std::size_t coeff_cap) {
  require_same_domain(p, q);
  if (p.is_zero() || q.is_zero()) return LaurentPoly::zero(p.domain());
  const std::size_t out_len = p.size() + q.size() - 1;
  if (out_len > coeff_cap)
    raise(ErrorCode::TruncationOverflow,
          "product exceeds the working coefficient cap");
  std::vector<cplx> out = detail::convolve(p.coeffs(), q.coeffs());
  return LaurentPoly(p.k_min() + q.k_min(), std::move(out), p.domain());
}

LaurentPoly shift(const LaurentPoly& p, int k) {
  if (p.is_zero()) return p;
  return LaurentPoly(p.k_min() + k, p.coeffs(), p.domain());
}

// --- boundary fitting ---------------------------------------------------

LaurentPoly fit_boundary(const std::vector<cplx>& samples, int K, FitMode mode,
                         Domain dom) {
  if (K < 0) raise(ErrorCode::InvalidInput, "negative fit degree");
  const std::size_t n = samples.size();
  if (n < static_cast<std::size_t>(4 * K + 4))
    raise(ErrorCode::TooFewSamples, "need at least 4K + 4 samples");
  std::vector<cplx> hat(samples);
  detail::dft(hat, -1);
  const double inv = 1.0 / static_cast<double>(n);
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * K + 1));
  for (int k = -K; k <= K; ++k) {
    long b = static_cast<long>(k) % static_cast<long>(n);
    if (b < 0) b += static_cast<long>(n);
    cplx c = hat[static_cast<std::size_t>(b)] * inv;
    if (mode == FitMode::Fejer)
      c *= 1.0 - static_cast<double>(std::abs(k)) / static_cast<double>(K + 1);
    coeffs[static_cast<std::size_t>(k + K)] = c;
  }
  if (dom.is_disc()) {
    // Negative exponents cannot be tagged Disc; callers asking for a disc fit
    // get one only when the low coefficients vanish.
    for (int k = -K; k <= -1; ++k)
      if (coeffs[static_cast<std::size_t>(k + K)] != cplx(0.0, 0.0))
        raise(ErrorCode::OutOfDomain,
              "fit carries negative exponents; use an annulus domain");
  }
  return LaurentPoly(-K, std::move(coeffs), dom);
}

LaurentPoly fit_boundary(const std::vector<double>& samples, int K,
                         FitMode mode, Domain dom) {
  std::vector<cplx> s(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) s[i] = cplx(samples[i], 0.0);
  return fit_boundary(s, K, mode, dom);
}

// --- series helpers -----------------------------------------------------

namespace series {

LaurentPoly divide(const LaurentPoly& num, const LaurentPoly& den,
                   std::size_t n_terms) {
  if (den.is_zero() || den.k_min() != 0 || den.coeff(0) == cplx(0.0, 0.0))
    raise(ErrorCode::InvalidInput, "series division needs den(0) != 0");
  if (!num.is_zero() && num.k_min() < 0)
    raise(ErrorCode::InvalidInput, "series division expects power series");
  const cplx d0 = den.coeff(0);
  std::vector<cplx> q(n_terms, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < n_terms; ++k) {
    cplx acc = num.coeff(static_cast<int>(k));
    const int jmax = std::min<int>(static_cast<int>(k), den.k_max());
    for (int j = 1; j <= jmax; ++j)
      acc -= den.coeff(j) * q[k - static_cast<std::size_t>(j)];
    q[k] = acc / d0;
  }
  return LaurentPoly(0, std::move(q), num.domain());
}

LaurentPoly exp(const LaurentPoly& p, std::size_t n_terms) {
  if (!p.is_zero() && p.k_min() < 0)
    raise(ErrorCode::InvalidInput, "series exp expects a power series");
  // E' = p' E  =>  (k+1) e_{k+1} = sum_{j=0}^{k} (j+1) p_{j+1} e_{k-j}.
  std::vector<cplx> e(n_terms, cplx(0.0, 0.0));
  if (n_terms == 0) return LaurentPoly::zero(p.domain());
  e[0] = std::exp(p.coeff(0));
  for (std::size_t k = 0; k + 1 < n_terms; ++k) {
    cplx acc(0.0, 0.0);
    const int jmax = std::min<int>(static_cast<int>(k), p.k_max() - 1);
    for (int j = 0; j <= jmax; ++j)
      acc += static_cast<double>(j + 1) * p.coeff(j + 1) *
             e[k - static_cast<std::size_t>(j)];
    e[k + 1] = acc / static_cast<double>(k + 1);
  }
  return LaurentPoly(0, std::move(e), p.domain());
}

}  // namespace series

// --- nonvanishing check and square root ---------------------------------

NonvanishingReport check_nonvanishing_disc(const LaurentPoly& p,
                                           std::size_t n_grid,
                                           double tol_rel) {
  NonvanishingReport rep;
  if (p.is_zero()) return rep;
  const std::vector<cplx> vals = grid_eval(p, n_grid, 1.0);
  double mn = std::abs(vals[0]), mx = std::abs(vals[0]);
  for (const cplx& v : vals) {
    mn = std::min(mn, std::abs(v));
    mx = std::max(mx, std::abs(v));
  }
  rep.min_abs = mn;
  rep.max_abs = mx;
  if (mn <= tol_rel * mx) {
    rep.nonvanishing = false;
    return rep;
  }
  // Accumulated-argument winding number over the boundary grid.
  double total = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const cplx a = vals[i];
    const cplx b = vals[(i + 1) % vals.size()];
    total += std::arg(b / a);
  }
  rep.winding = std::lround(total / (2.0 * kPi));
  // Interior value must also clear the threshold (a zero at the origin has
  // winding 0 viewed from outside its modulus dip only if the grid misses it;
  // the winding count is the authoritative interior test).
  rep.nonvanishing = (rep.winding == 0);
  return rep;
}

LaurentPoly sqrt_holo(const LaurentPoly& p, std::size_t coeff_cap) {
  if (!p.domain().is_disc())
    raise(ErrorCode::InvalidInput, "sqrt_holo is defined on the disc");
  if (p.is_zero()) raise(ErrorCode::ZeroOnDomain, "sqrt of the zero series");
  const NonvanishingReport rep = check_nonvanishing_disc(p);
  if (!rep.nonvanishing)
    raise(ErrorCode::ZeroOnDomain,
          rep.winding != 0 ? "argument-principle winding is nonzero"
                           : "modulus drops below tolerance on the boundary");

  const double target = 1e-10 * p.coeff_sup();
  std::size_t n_terms = std::max<std::size_t>(2 * p.size() + 16, 32);
  for (;;) {
    if (n_terms > coeff_cap)
      raise(ErrorCode::TruncationOverflow,
            "square root does not meet tolerance within the coefficient cap");
    // log p via antiderivative of p'/p, anchored at p(0).
    const LaurentPoly ratio = series::divide(derivative(p), p, n_terms);
    const LaurentPoly logp = antiderivative(ratio, std::log(p.coeff(0)));
    const LaurentPoly q = series::exp(scale(logp, 0.5), n_terms);
    const LaurentPoly err = sub(mul(q, q, 4 * coeff_cap), p);
    if (err.coeff_sup() < target) return q;
    n_terms *= 2;
  }
}

double pairwise_sum(const std::vector<double>& v) {
  // Recursive pairwise reduction; deterministic and order-stable.
  struct Rec {
    static double run(const double* d, std::size_t n) {
      if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += d[i];
        return s;
      }
      const std::size_t h = n / 2;
      return run(d, h) + run(d + h, n - h);
    }
  };
  return Rec::run(v.data(), v.size());
}

}  // namespace nullcurves
