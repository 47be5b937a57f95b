#include "nullcurves/nullcurve.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace nullcurves {

namespace {
constexpr double kPi = 3.14159265358979323846;
const cplx kI(0.0, 1.0);
}  // namespace

cplx hermitian(const Vec3& a, const Vec3& b) {
  return a[0] * std::conj(b[0]) + a[1] * std::conj(b[1]) +
         a[2] * std::conj(b[2]);
}

double norm3(const Vec3& a) {
  return std::sqrt(std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]));
}

Vec3 add3(const Vec3& a, const Vec3& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

Vec3 sub3(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 scale3(const Vec3& a, cplx s) { return {a[0] * s, a[1] * s, a[2] * s}; }

cplx square_sum(const Vec3& a) {
  return a[0] * a[0] + a[1] * a[1] + a[2] * a[2];
}

Vec3 pi_map(cplx u, cplx v) {
  return {u * u - v * v, kI * (u * u + v * v), 2.0 * u * v};
}

PhiTriple pi_map(const SpinorField& s, std::size_t coeff_cap) {
  const LaurentPoly u2 = mul(s.u, s.u, coeff_cap);
  const LaurentPoly v2 = mul(s.v, s.v, coeff_cap);
  const LaurentPoly uv = mul(s.u, s.v, coeff_cap);
  return {sub(u2, v2), scale(add(u2, v2), kI), scale(uv, 2.0)};
}

double null_residual(const PhiTriple& phi, std::size_t coeff_cap) {
  double sup = 0.0;
  for (const auto& c : phi) sup = std::max(sup, c.coeff_sup());
  if (sup == 0.0) return 0.0;
  LaurentPoly q = mul(phi[0], phi[0], coeff_cap);
  q = add(q, mul(phi[1], phi[1], coeff_cap));
  q = add(q, mul(phi[2], phi[2], coeff_cap));
  return q.coeff_sup() / (sup * sup);
}

static std::vector<double> abs_phi_on_circle(const PhiTriple& phi,
                                             std::size_t n, double radius) {
  std::array<std::vector<cplx>, 3> vals;
  for (int j = 0; j < 3; ++j) vals[j] = grid_eval(phi[j], n, radius);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::sqrt(std::norm(vals[0][i]) + std::norm(vals[1][i]) +
                       std::norm(vals[2][i]));
  return out;
}

ImmersionCheck check_immersion(const PhiTriple& phi, double tol_rel) {
  ImmersionCheck chk;
  bool any = false;
  double mn = 0.0, mx = 0.0;
  auto feed = [&](const std::vector<double>& a) {
    for (double v : a) {
      if (!any) {
        mn = mx = v;
        any = true;
      } else {
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
    }
  };
  feed(abs_phi_on_circle(phi, 4096, 1.0));
  const Domain dom = phi[0].domain();
  const double r_lo = dom.is_disc() ? 0.0 : dom.inner;
  for (int i = 0; i <= 64; ++i) {
    const double r = r_lo + (1.0 - r_lo) * static_cast<double>(i) / 64.0;
    if (dom.is_disc() && i == 0) {
      // center is a single point
      double v = 0.0;
      bool pole = false;
      for (int j = 0; j < 3; ++j)
        if (!phi[j].is_zero() && phi[j].k_min() < 0) pole = true;
      if (!pole) {
        Vec3 f{phi[0].coeff(0), phi[1].coeff(0), phi[2].coeff(0)};
        v = norm3(f);
        feed({v});
      }
      continue;
    }
    feed(abs_phi_on_circle(phi, 256, r));
  }
  chk.min_abs = mn;
  chk.max_abs = mx;
  chk.ok = (mx > 0.0) && (mn > tol_rel * mx);
  return chk;
}

// --- NullCurve ----------------------------------------------------------

static PhiTriple integrate_phi(const Vec3& base, const PhiTriple& phi) {
  PhiTriple value;
  for (int j = 0; j < 3; ++j) {
    LaurentPoly comp = phi[j];
    if (!comp.domain().is_disc() && comp.coeff(-1) != cplx(0.0, 0.0)) {
      // Residues were already verified tiny; clear them so the termwise
      // antiderivative is defined.
      std::vector<cplx> c(comp.coeffs());
      c[static_cast<std::size_t>(-1 - comp.k_min())] = cplx(0.0, 0.0);
      comp = LaurentPoly(comp.k_min(), std::move(c), comp.domain());
    }
    value[j] = antiderivative(comp, base[j]);
  }
  return value;
}

NullCurve NullCurve::integrate(const Vec3& base, PhiTriple phi,
                               std::size_t coeff_cap) {
  for (int j = 1; j < 3; ++j)
    if (!(phi[j].domain() == phi[0].domain()))
      raise(ErrorCode::DomainMismatch, "phi components on different domains");
  const double residual = null_residual(phi, 4 * coeff_cap);
  if (residual >= 1e-10)
    raise(ErrorCode::NotNull, "derivative triple is not null");
  const ImmersionCheck chk = check_immersion(phi);
  if (!chk.ok)
    raise(ErrorCode::NotImmersion, "derivative triple vanishes on the domain");
  if (!phi[0].domain().is_disc()) {
    for (int j = 0; j < 3; ++j)
      if (std::abs(phi[j].coeff(-1)) >= 1e-12)
        raise(ErrorCode::NonzeroResidue,
              "annulus periods do not vanish; route through period control");
  }
  NullCurve out;
  out.base_ = base;
  out.value_ = integrate_phi(base, phi);
  out.phi_ = std::move(phi);
  return out;
}

NullCurve NullCurve::from_spinor(const Vec3& base, SpinorField spinor,
                                 std::size_t coeff_cap) {
  if (!(spinor.u.domain() == spinor.v.domain()))
    raise(ErrorCode::DomainMismatch, "spinor components on different domains");
  NullCurve out = integrate(base, pi_map(spinor, coeff_cap), coeff_cap);
  out.spinor_ = std::move(spinor);
  return out;
}

Vec3 NullCurve::eval(cplx zeta) const {
  return {nullcurves::eval(value_[0], zeta), nullcurves::eval(value_[1], zeta),
          nullcurves::eval(value_[2], zeta)};
}

Vec3 NullCurve::eval_derivative(cplx zeta) const {
  return {nullcurves::eval(phi_[0], zeta), nullcurves::eval(phi_[1], zeta),
          nullcurves::eval(phi_[2], zeta)};
}

static std::vector<Vec3> triple_on_circle(const PhiTriple& t, std::size_t n,
                                          double radius) {
  std::array<std::vector<cplx>, 3> vals;
  for (int j = 0; j < 3; ++j) vals[j] = grid_eval(t[j], n, radius);
  std::vector<Vec3> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = Vec3{vals[0][i], vals[1][i], vals[2][i]};
  return out;
}

std::vector<Vec3> NullCurve::values_on_circle(std::size_t n,
                                              double radius) const {
  return triple_on_circle(value_, n, radius);
}

std::vector<Vec3> NullCurve::derivatives_on_circle(std::size_t n,
                                                   double radius) const {
  return triple_on_circle(phi_, n, radius);
}

double NullCurve::sup_boundary(std::size_t n_grid) const {
  double m = 0.0;
  for (const Vec3& f : values_on_circle(n_grid, 1.0))
    m = std::max(m, norm3(f));
  return m;
}

double NullCurve::min_boundary(std::size_t n_grid) const {
  double m = std::numeric_limits<double>::infinity();
  for (const Vec3& f : values_on_circle(n_grid, 1.0))
    m = std::min(m, norm3(f));
  return m;
}

// --- spinor lift --------------------------------------------------------

SpinorField spinor_lift(const PhiTriple& phi, std::size_t coeff_cap) {
  if (!phi[0].domain().is_disc())
    raise(ErrorCode::InvalidInput, "spinor lift is defined on the disc");
  const double residual = null_residual(phi, 4 * coeff_cap);
  if (residual >= 1e-10)
    raise(ErrorCode::NotNull, "derivative triple is not null");
  const ImmersionCheck imm = check_immersion(phi);
  if (!imm.ok)
    raise(ErrorCode::NotImmersion, "derivative triple vanishes on the domain");

  const LaurentPoly u2 = scale(sub(phi[0], scale(phi[1], kI)), 0.5);
  const NonvanishingReport rep = check_nonvanishing_disc(u2);
  if (!rep.nonvanishing)
    raise(ErrorCode::LiftBranchZero,
          "u^2 = (phi1 - i phi2)/2 vanishes on the disc; supply spinors");
  const LaurentPoly u = sqrt_holo(u2, coeff_cap);

  double sup = 0.0;
  for (const auto& c : phi) sup = std::max(sup, c.coeff_sup());
  const double target = 1e-10 * sup;

  std::size_t n_terms =
      std::max<std::size_t>({u.size(), phi[2].size() + 8, 32});
  for (;;) {
    if (n_terms > coeff_cap)
      raise(ErrorCode::TruncationOverflow,
            "lift does not meet tolerance within the coefficient cap");
    const LaurentPoly v =
        phi[2].is_zero()
            ? LaurentPoly::zero(phi[2].domain())
            : series::divide(phi[2], scale(u, 2.0), n_terms);
    SpinorField s{u, v};
    const PhiTriple back = pi_map(s, 4 * coeff_cap);
    double err = 0.0;
    for (int j = 0; j < 3; ++j)
      err = std::max(err, sub(back[j], phi[j]).coeff_sup());
    if (err < target) return s;
    n_terms *= 2;
  }
}

// --- metric and gauge ---------------------------------------------------

double metric_density(const NullCurve& curve, cplx zeta) {
  return norm3(curve.eval_derivative(zeta));
}

double m_gauge_value(const Vec3& f) {
  return std::max(std::abs(hermitian(f, kV1)), std::abs(hermitian(f, kV2)));
}

double m_gauge(const NullCurve& curve, cplx zeta) {
  return m_gauge_value(curve.eval(zeta));
}

// --- intrinsic radius ---------------------------------------------------

namespace {

struct PolarGraph {
  int n_r;
  int n_theta;
  double rho;
  std::vector<cplx> pos;      // node positions, node 0 = center
  std::vector<double> sigma;  // metric density at nodes

  int node(int i, int j) const { return 1 + (i - 1) * n_theta + j; }
  int total() const { return 1 + n_r * n_theta; }
};

double dijkstra_to_outer_ring(const PolarGraph& g) {
  const int n = g.total();
  std::vector<double> dist(static_cast<std::size_t>(n),
                           std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  dist[0] = 0.0;
  pq.push({0.0, 0});
  auto relax = [&](int from, int to) {
    const double w = std::abs(g.pos[static_cast<std::size_t>(from)] -
                              g.pos[static_cast<std::size_t>(to)]) *
                     0.5 *
                     (g.sigma[static_cast<std::size_t>(from)] +
                      g.sigma[static_cast<std::size_t>(to)]);
    if (dist[static_cast<std::size_t>(from)] + w <
        dist[static_cast<std::size_t>(to)]) {
      dist[static_cast<std::size_t>(to)] =
          dist[static_cast<std::size_t>(from)] + w;
      pq.push({dist[static_cast<std::size_t>(to)], to});
    }
  };
  while (!pq.empty()) {
    auto [d, idx] = pq.top();
    pq.pop();
    if (d > dist[static_cast<std::size_t>(idx)]) continue;
    if (idx > 0) {
      const int i = 1 + (idx - 1) / g.n_theta;
      if (i == g.n_r) return d;  // first settled outer-ring node is optimal
      const int j = (idx - 1) % g.n_theta;
      const int jl = (j + g.n_theta - 1) % g.n_theta;
      const int jr = (j + 1) % g.n_theta;
      relax(idx, g.node(i, jl));
      relax(idx, g.node(i, jr));
      for (int di = -1; di <= 1; di += 2) {
        const int ii = i + di;
        if (ii < 1) {
          relax(idx, 0);
          continue;
        }
        if (ii > g.n_r) continue;
        relax(idx, g.node(ii, jl));
        relax(idx, g.node(ii, j));
        relax(idx, g.node(ii, jr));
      }
    } else {
      for (int j = 0; j < g.n_theta; ++j) relax(0, g.node(1, j));
    }
  }
  return std::numeric_limits<double>::infinity();
}

PolarGraph make_graph(double rho, PolarMesh mesh) {
  PolarGraph g;
  g.n_r = mesh.n_r;
  g.n_theta = mesh.n_theta;
  g.rho = rho;
  g.pos.resize(static_cast<std::size_t>(g.total()));
  g.sigma.assign(static_cast<std::size_t>(g.total()), 0.0);
  g.pos[0] = cplx(0.0, 0.0);
  for (int i = 1; i <= g.n_r; ++i) {
    const double r = rho * static_cast<double>(i) / static_cast<double>(g.n_r);
    for (int j = 0; j < g.n_theta; ++j) {
      const double th =
          2.0 * kPi * static_cast<double>(j) / static_cast<double>(g.n_theta);
      g.pos[static_cast<std::size_t>(g.node(i, j))] =
          cplx(r * std::cos(th), r * std::sin(th));
    }
  }
  return g;
}

}  // namespace

double intrinsic_radius(const NullCurve& curve, double rho, PolarMesh mesh) {
  if (!(rho > 0.0 && rho <= 1.0))
    raise(ErrorCode::OutOfDomain, "target radius must lie in (0, 1]");
  if (!curve.domain().is_disc())
    raise(ErrorCode::OutOfDomain, "intrinsic radius is a disc diagnostic");
  PolarGraph g = make_graph(rho, mesh);
  g.sigma[0] = norm3(Vec3{curve.phi()[0].coeff(0), curve.phi()[1].coeff(0),
                          curve.phi()[2].coeff(0)});
  for (int i = 1; i <= g.n_r; ++i) {
    const double r = rho * static_cast<double>(i) / static_cast<double>(g.n_r);
    const std::vector<Vec3> ring =
        curve.derivatives_on_circle(static_cast<std::size_t>(g.n_theta), r);
    for (int j = 0; j < g.n_theta; ++j)
      g.sigma[static_cast<std::size_t>(g.node(i, j))] =
          norm3(ring[static_cast<std::size_t>(j)]);
  }
  return dijkstra_to_outer_ring(g);
}

double intrinsic_radius_field(const std::function<double(cplx)>& sigma,
                              double rho, PolarMesh mesh) {
  if (!(rho > 0.0 && rho <= 1.0))
    raise(ErrorCode::OutOfDomain, "target radius must lie in (0, 1]");
  PolarGraph g = make_graph(rho, mesh);
  for (std::size_t k = 0; k < g.pos.size(); ++k) g.sigma[k] = sigma(g.pos[k]);
  return dijkstra_to_outer_ring(g);
}

}  // namespace nullcurves
