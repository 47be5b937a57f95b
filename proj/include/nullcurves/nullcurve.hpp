#pragma once

#include <array>
#include <functional>
#include <optional>

#include "nullcurves/laurent.hpp"

namespace nullcurves {

using Vec3 = std::array<cplx, 3>;

cplx hermitian(const Vec3& a, const Vec3& b);  // sum a_i * conj(b_i)
double norm3(const Vec3& a);
Vec3 add3(const Vec3& a, const Vec3& b);
Vec3 sub3(const Vec3& a, const Vec3& b);
Vec3 scale3(const Vec3& a, cplx s);
// sum a_i^2 (the bilinear square-sum, not the Hermitian norm)
cplx square_sum(const Vec3& a);

// Null frame of C^2 x {0}: orthonormal (Hermitian) pair of null vectors.
inline const Vec3 kV1{cplx(1.0 / 1.4142135623730951, 0.0),
                      cplx(0.0, 1.0 / 1.4142135623730951), cplx(0.0, 0.0)};
inline const Vec3 kV2{cplx(1.0 / 1.4142135623730951, 0.0),
                      cplx(0.0, -1.0 / 1.4142135623730951), cplx(0.0, 0.0)};

// Two-sheeted cover of the null quadric: pi(u,v) = (u^2-v^2, i(u^2+v^2), 2uv).
Vec3 pi_map(cplx u, cplx v);

struct SpinorField {
  LaurentPoly u;
  LaurentPoly v;
};

using PhiTriple = std::array<LaurentPoly, 3>;

// pi applied to a spinor field coefficientwise-exactly.
PhiTriple pi_map(const SpinorField& s, std::size_t coeff_cap = kDefaultCoeffCap);

// ||phi1^2 + phi2^2 + phi3^2|| / (max_j ||phi_j||)^2 in coefficient sup norms.
double null_residual(const PhiTriple& phi,
                     std::size_t coeff_cap = 4 * kDefaultCoeffCap);

struct ImmersionCheck {
  double min_abs = 0.0;
  double max_abs = 0.0;
  bool ok = false;
};

// min |Phi| over a 4096-point boundary grid and a 64 x 256 polar interior
// grid must exceed tol_rel * max |Phi|.
ImmersionCheck check_immersion(const PhiTriple& phi, double tol_rel = 1e-9);

/// A null holomorphic curve represented by its derivative triple Phi (in the
/// null quadric) plus the value at the anchor point: zeta = 0 on the disc,
/// zeta = 1 on an annulus. Optionally carries the spinor lift it was built
/// from. Construction validates nullity, the immersion bound and (on an
/// annulus) vanishing residues; invalid data is rejected, never propagated.
class NullCurve {
 public:
  // Weierstrass integration of a given derivative triple.
  static NullCurve integrate(const Vec3& base, PhiTriple phi,
                             std::size_t coeff_cap = kDefaultCoeffCap);
  // Exact-null construction from a spinor field.
  static NullCurve from_spinor(const Vec3& base, SpinorField spinor,
                               std::size_t coeff_cap = kDefaultCoeffCap);

  const Domain& domain() const { return phi_[0].domain(); }
  const Vec3& base() const { return base_; }
  const PhiTriple& phi() const { return phi_; }
  const std::optional<SpinorField>& spinor() const { return spinor_; }
  // The integrated value triple F with F(anchor) = base.
  const PhiTriple& value() const { return value_; }

  Vec3 eval(cplx zeta) const;
  Vec3 eval_derivative(cplx zeta) const;

  // F and F' on the circle |zeta| = radius at n equispaced angles.
  std::vector<Vec3> values_on_circle(std::size_t n, double radius) const;
  std::vector<Vec3> derivatives_on_circle(std::size_t n, double radius) const;

  double sup_boundary(std::size_t n_grid = 4096) const;
  double min_boundary(std::size_t n_grid = 4096) const;

 private:
  NullCurve() = default;
  Vec3 base_{};
  PhiTriple phi_{};
  PhiTriple value_{};
  std::optional<SpinorField> spinor_;
};

// Holomorphic pi-lift of a null derivative triple on the disc. The branch is
// fixed by the principal square root of u^2 = (phi1 - i phi2)/2 at zeta = 0;
// v is recovered as phi3 / (2u). Degenerate inputs with u^2 vanishing while
// phi does not raise LiftBranchZero (callers then supply spinors directly).
SpinorField spinor_lift(const PhiTriple& phi,
                        std::size_t coeff_cap = kDefaultCoeffCap);

// Conformal metric density sigma(zeta) = |Phi(zeta)|.
double metric_density(const NullCurve& curve, cplx zeta);

// m-gauge: max of the Hermitian projections onto the null frame V1, V2.
double m_gauge(const NullCurve& curve, cplx zeta);
double m_gauge_value(const Vec3& f);

struct PolarMesh {
  int n_r = 128;
  int n_theta = 512;
};

// Graph-geodesic distance from zeta = 0 to the circle |zeta| = rho in the
// metric sigma |dzeta|, on a polar grid with an 8-neighbor stencil. Edge
// weight is the Euclidean chord length times the average sigma at the
// endpoints; the result overestimates the continuum distance by O(mesh).
double intrinsic_radius(const NullCurve& curve, double rho,
                        PolarMesh mesh = {});

// Same search for an arbitrary metric density (test oracle entry point).
double intrinsic_radius_field(const std::function<double(cplx)>& sigma,
                              double rho, PolarMesh mesh = {});

}  // namespace nullcurves
