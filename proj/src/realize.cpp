#include "qda/realize.hpp"
#include <cmath>

namespace qda {

namespace {

using cd = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

double preal(const ParamSet& ps, Param p) {
  cd v = ps.get(p);
  if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
    throw std::invalid_argument(std::string("parameter ") + param_name(p) +
                                " must be real here");
  return v.real();
}

Op op_const(cd c, const Grid& g) { return op_scale(c, op_identity(g)); }

Op opf(const Spectrum& S, const RFn& f, const std::vector<int>& dom) {
  ScalarFn sf = [f](double E) { return cd(f(E), 0.0); };
  return operator_function(S, sf, &dom);
}

std::vector<int> iota_levels(int k) {
  std::vector<int> v(k);
  for (int i = 0; i < k; ++i) v[i] = i;
  return v;
}

// V = Vreg + Vsing / Y^2 sampled on the grid; the family constraints make the
// result real.
VectorXd sample_potential(const FamilySpec& f, const ParamSet& ps, const Grid& g) {
  VectorXcd v = sample_expr(f.Vreg, ps, g);
  if (!f.Vsing.is_zero()) {
    VectorXcd s = sample_expr(f.Vsing, ps, g);
    VectorXcd y = sample_expr(f.Y, ps, g);
    for (int i = 0; i < g.n; ++i) v[i] += s[i] / (y[i] * y[i]);
  }
  double scale = v.cwiseAbs().maxCoeff();
  if (v.imag().cwiseAbs().maxCoeff() > 1e-9 * (1.0 + scale))
    throw std::invalid_argument("potential for family " + f.id +
                                " is not real at these parameters");
  return v.real();
}

// H = X d^2/dx^2 + V as a matrix-free operator.
Op ham_op(const FamilySpec& f, const ParamSet& ps, const VectorXd& V, const Grid& g) {
  return op_add(op_compose(op_diag_expr(f.X, ps, g), op_d2(g)),
                op_diag(V.cast<cd>(), g));
}

// P = Y d/dx + Z.
Op first_order_op(const FamilySpec& f, const ParamSet& ps, const Grid& g) {
  return op_add(op_compose(op_diag_expr(f.Y, ps, g), op_d1(g)),
                op_diag_expr(f.Z, ps, g));
}

// Energy solve: Hermitian families go through the Schrodinger band with the
// constant -X scaled out; pseudo families through the weighted symmetrization.
Spectrum solve_family(const FamilySpec& f, const ParamSet& ps, const VectorXd& V,
                      const Grid& g, int k) {
  VectorXcd xs = sample_expr(f.X, ps, g);
  if (f.hermitian) {
    double c = -xs[0].real();
    if (c <= 0) throw std::invalid_argument("X must be a negative constant");
    Spectrum S = solve_schrodinger(V / c, g, k);
    S.eigenvalues *= c;
    return S;
  }
  VectorXd d(g.n);
  for (int i = 0; i < g.n; ++i) d[i] = -xs[i].real();
  return solve_pseudo(d, V, g, k);
}

}  // namespace

CommutationDiag diagonalize_commutation_matrix(const CFn& m00, const CFn& m01,
                                               const CFn& m10, const CFn& m11) {
  auto eig = [=](double E, int which) -> cd {
    cd tr = m00(E) + m11(E);
    cd det = m00(E) * m11(E) - m01(E) * m10(E);
    cd disc = tr * tr - 4.0 * det;
    if (std::abs(disc.imag()) < 1e-12 * (1.0 + std::abs(disc.real())) &&
        disc.real() < -1e-12)
      throw BranchViolation("commutation-matrix discriminant negative at E=" +
                            std::to_string(E));
    cd root = std::sqrt(disc);
    // order by real part: "which"=0 is the lowering (smaller) eigenvalue
    cd lo = (tr - root) / 2.0, hi = (tr + root) / 2.0;
    if (lo.real() > hi.real()) std::swap(lo, hi);
    return which == 0 ? lo : hi;
  };
  CommutationDiag d;
  d.q1 = [=](double E) { return m01(E); };
  d.p1 = [=](double E) { return eig(E, 0) - m00(E); };
  d.q2 = [=](double E) { return m01(E); };
  d.p2 = [=](double E) { return eig(E, 1) - m00(E); };
  d.omega1 = [=](double E) { return -eig(E, 0); };
  d.omega2 = [=](double E) { return eig(E, 1); };
  return d;
}

Op build_b0_from_omegas(const Spectrum& S, const RFn& b0_closed, const CFn& omega1,
                        const CFn& omega2, const std::vector<int>& domain, int dir) {
  for (int j : domain) {
    double E = S.eigenvalues[j];
    double t = b0_closed(E);
    double down = b0_closed(E - omega1(E).real());
    double up = b0_closed(E + omega2(E).real());
    double tol = 1e-8 * (1.0 + std::abs(t));
    if (std::abs(down - (t - dir)) > tol || std::abs(up - (t + dir)) > tol)
      throw std::runtime_error("b0 unit-shift functional equation violated at E=" +
                               std::to_string(E));
  }
  return opf(S, b0_closed, domain);
}

namespace {

void realize_harmonic(Realization& r) {
  const Grid& g = r.grid;
  r.Qt = op_diag_expr(r.family->Q, r.params, g);
  r.Pt = first_order_op(*r.family, r.params, g);   // -d/dx
  r.S1 = op_sub(r.Qt, r.Pt);                       // x + d/dx
  r.S2 = op_add(r.Qt, r.Pt);                       // x - d/dx
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  r.b = op_scale(inv_sqrt2, r.S1);
  r.bdag = op_scale(inv_sqrt2, r.S2);
  r.b0 = r.H;
  r.omega1 = [](double) { return cd(1.0); };
  r.omega2 = [](double) { return cd(1.0); };
  r.b0_of_E = [](double E) { return E; };
  r.xi_of_E = [](double E) { return std::sqrt(E + 0.5); };
  r.case_label = 2;
  Op xi = opf(r.spectrum, r.xi_of_E, r.safe);
  r.J0 = r.b0;
  r.Jp = op_compose(r.bdag, xi);
  r.Jm = op_compose(xi, r.b);
}

void realize_A(Realization& r) {
  const Grid& g = r.grid;
  const ParamSet& ps = r.params;
  cd alpha = ps.get(Param::alpha), lam = ps.get(Param::lambda);
  cd c1 = ps.get(Param::c1), c2 = ps.get(Param::c2);
  cd nu = -alpha;
  cd s2v = alpha * alpha + 2.0 * lam;
  double s = std::sqrt(s2v.real());
  r.Qt = op_add(op_diag_expr(r.family->Q, ps, g),
                op_const(alpha * (2.0 * lam * c2 + nu * c1) / s2v, g));
  r.Pt = op_add(first_order_op(*r.family, ps, g),
                op_const((alpha * alpha * c2 - nu * c1) / s2v - c2, g));
  r.S1 = op_add(op_scale(1.0 / (alpha - s), r.Qt), r.Pt);
  r.S2 = op_add(op_scale(1.0 / (alpha + s), r.Qt), r.Pt);
  r.b = r.S1;
  r.bdag = r.S2;
  r.b0 = op_scale(1.0 / s, r.H);
  r.omega1 = [s](double) { return cd(s); };
  r.omega2 = [s](double) { return cd(s); };
  r.b0_of_E = [s](double E) { return E / s; };
  r.xi_of_E = [s](double E) { return std::sqrt((E / s + 0.5) / s); };
  r.case_label = 2;
  Op xi = opf(r.spectrum, r.xi_of_E, r.safe);
  r.J0 = r.b0;
  r.Jp = op_compose(r.S2, xi);
  r.Jm = op_compose(xi, r.S1);
}

void realize_B(Realization& r) {
  const Grid& g = r.grid;
  const ParamSet& ps = r.params;
  double alpha = preal(ps, Param::alpha), lam = preal(ps, Param::lambda);
  double c1 = preal(ps, Param::c1), c2 = preal(ps, Param::c2);
  double s2v = alpha * alpha + 2.0 * lam;
  double s = std::sqrt(s2v);
  double Cc = lam + alpha * c1 - 2.0 * lam * c2;  // = tau
  r.Qt = op_add(op_add(op_diag_expr(r.family->Q, ps, g),
                       op_scale(4.0 * lam / s2v, r.H)),
                op_const(-alpha * Cc / s2v, g));
  r.Pt = op_add(op_add(first_order_op(*r.family, ps, g),
                       op_scale(2.0 * alpha / s2v, r.H)),
                op_const(Cc / s2v, g));
  r.S1 = op_add(r.Qt, op_scale(alpha - s, r.Pt));
  r.S2 = op_add(r.Qt, op_scale(alpha + s, r.Pt));
  r.eta_const = 1.0 + (alpha * alpha - alpha * s) / lam;
  r.b = r.S1;
  r.bdag = op_scale(r.eta_const, r.S2);
  r.b0 = op_scale(1.0 / s, r.H);
  r.omega1 = [s](double) { return cd(s); };
  r.omega2 = [s](double) { return cd(s); };
  r.b0_of_E = [s](double E) { return E / s; };
  r.xi0 = -(alpha / 2.0 - alpha * c2 - c1) / (2.0 * s);
  double coef = 1.0 / (2.0 * std::sqrt(2.0) *
                       std::sqrt(alpha * alpha + lam - alpha * s));
  r.xi_of_E = [coef](double) { return coef; };
  r.case_label = 1;
  r.J0 = op_add(r.b0, op_const(r.xi0, g));
  r.Jp = op_scale(coef, r.bdag);
  r.Jm = op_scale(coef, r.b);
}

void realize_C(Realization& r) {
  const ParamSet& ps = r.params;
  double a = preal(ps, Param::a), bb = preal(ps, Param::b), c = preal(ps, Param::c);
  double alpha = preal(ps, Param::alpha), lam = preal(ps, Param::lambda);
  double Kc = (alpha + c * c) * (alpha + c * c) + 2.0 * lam;
  double c2sq = c * c;
  auto Rfun = [Kc, c2sq](double E) { return Kc - 4.0 * c2sq * E; };
  r.b0_of_E = [Rfun, c2sq](double E) { return std::sqrt(Rfun(E)) / (2.0 * c2sq); };
  // pole-free, radicand-positive level subset
  r.safe.clear();
  for (int j = 0; j < r.spectrum.k(); ++j) {
    double E = r.spectrum.eigenvalues[j];
    if (Rfun(E) > 1e-8 && std::abs(r.b0_of_E(E) - 1.0) > 1e-6) r.safe.push_back(j);
  }
  if ((int)r.safe.size() < r.K)
    throw BranchViolation("family C: fewer than K radicand-positive bound levels");
  r.Qt = op_diag_expr(r.family->Q, ps, r.grid);
  r.Pt = first_order_op(*r.family, ps, r.grid);
  Op P = opf(r.spectrum, [](double) { return 1.0; }, r.safe);
  Op Rop = opf(r.spectrum, [Rfun](double E) { return std::sqrt(Rfun(E)); }, r.safe);
  double ac2 = alpha + c2sq;
  r.S1 = op_add(op_scale(-1.0 / (2.0 * lam),
                         op_compose(r.Qt, op_add(op_scale(ac2, P), Rop))),
                op_compose(r.Pt, P));
  r.S2 = op_add(op_scale(-1.0 / (2.0 * lam),
                         op_compose(r.Qt, op_sub(op_scale(ac2, P), Rop))),
                op_compose(r.Pt, P));
  r.omega1 = [Rfun, c2sq](double E) { return cd(c2sq + std::sqrt(Rfun(E))); };
  r.omega2 = [Rfun, c2sq](double E) { return cd(-c2sq + std::sqrt(Rfun(E))); };
  // S2 lowers b0 (the ladder runs antiparallel to energy for this family)
  r.b0 = build_b0_from_omegas(r.spectrum, r.b0_of_E, r.omega1, r.omega2, r.safe, -1);
  r.b = r.S2;
  r.bdag = op_adjoint(r.S2);
  r.xi1 = 1.0 / (4.0 * a * bb * c2sq);
  double xi1 = r.xi1;
  auto b0E = r.b0_of_E;
  r.xi_of_E = [xi1, b0E](double E) {
    double t = b0E(E);
    double rad = xi1 * t / (t + 1.0);
    if (rad < 0)
      throw BranchViolation("algebra not realizable: xi^2 = xi1*b0/(b0+1) is "
                            "negative on the bound spectrum (family C)");
    return std::sqrt(rad);
  };
  r.eta_of_E = [b0E](double E) {
    double t = b0E(E);
    return -(t + 1.0) / t;
  };
  r.case_label = 3;
  r.climb_dir = -1;
  Op xi = opf(r.spectrum, r.xi_of_E, r.safe);
  r.J0 = opf(r.spectrum, r.b0_of_E, r.safe);
  r.Jm = op_compose(xi, r.b);
  r.Jp = op_compose(r.bdag, xi);
}

void realize_D(Realization& r) {
  const ParamSet& ps = r.params;
  double a = preal(ps, Param::a), bb = preal(ps, Param::b), k = preal(ps, Param::k);
  double alpha = preal(ps, Param::alpha), lam = preal(ps, Param::lambda);
  double k2 = k * k;
  double Kd = (alpha - k2) * (alpha - k2) + 2.0 * lam;
  auto Rfun = [Kd, k2](double E) { return Kd + 4.0 * k2 * E; };
  r.b0_of_E = [Rfun, k2](double E) { return std::sqrt(Rfun(E)) / (2.0 * k2); };
  r.safe.clear();
  for (int j = 0; j < r.spectrum.k(); ++j)
    if (Rfun(r.spectrum.eigenvalues[j]) > 1e-8) r.safe.push_back(j);
  if ((int)r.safe.size() < r.K)
    throw BranchViolation("family D: fewer than K radicand-positive bound levels");
  r.Qt = op_diag_expr(r.family->Q, ps, r.grid);
  r.Pt = first_order_op(*r.family, ps, r.grid);
  Op P = opf(r.spectrum, [](double) { return 1.0; }, r.safe);
  Op Rop = opf(r.spectrum, [Rfun](double E) { return std::sqrt(Rfun(E)); }, r.safe);
  double ak2 = alpha - k2;
  r.S1 = op_add(op_scale(-1.0 / (2.0 * lam),
                         op_compose(r.Qt, op_add(op_scale(ak2, P), Rop))),
                op_compose(r.Pt, P));
  r.S2 = op_add(op_scale(-1.0 / (2.0 * lam),
                         op_compose(r.Qt, op_sub(op_scale(ak2, P), Rop))),
                op_compose(r.Pt, P));
  r.omega1 = [Rfun, k2](double E) { return cd(std::sqrt(Rfun(E)) - k2); };
  r.omega2 = [Rfun, k2](double E) { return cd(std::sqrt(Rfun(E)) + k2); };
  r.b0 = build_b0_from_omegas(r.spectrum, r.b0_of_E, r.omega1, r.omega2, r.safe, +1);
  r.b = r.S1;
  r.bdag = op_scale(-1.0, op_compose(r.S2, opf(r.spectrum,
      [Rfun, k2](double E) { return 1.0 + 2.0 * k2 / std::sqrt(Rfun(E)); }, r.safe)));
  r.xi1 = 1.0 / (k2 * (a * a + bb * bb));
  double xi1 = r.xi1;
  auto b0E = r.b0_of_E;
  r.xi_of_E = [xi1, b0E](double E) {
    double t = b0E(E);
    double rad = xi1 * t / (t + 1.0);
    if (rad < 0)
      throw BranchViolation("algebra not realizable: xi^2 = xi1*b0/(b0+1) is "
                            "negative on the bound spectrum (family D)");
    return std::sqrt(rad);
  };
  r.eta_of_E = [b0E](double E) {
    double t = b0E(E);
    return -(t + 1.0) / t;
  };
  r.case_label = 3;
  Op xi = opf(r.spectrum, r.xi_of_E, r.safe);
  r.J0 = opf(r.spectrum, r.b0_of_E, r.safe);
  r.Jm = op_compose(xi, r.b);
  r.Jp = op_compose(r.bdag, xi);
}

void realize_pt(Realization& r) {
  const Grid& g = r.grid;
  const ParamSet& ps = r.params;
  double k = preal(ps, Param::k);
  double nu = preal(ps, Param::nu_pt);
  double eps = k * k;
  // pole-free levels: sqrt(E/eps) away from 1 (f has a simple pole there)
  r.safe.clear();
  for (int j = 0; j < r.spectrum.k(); ++j)
    if (std::abs(std::sqrt(r.spectrum.eigenvalues[j] / eps) - 1.0) > 1e-6)
      r.safe.push_back(j);
  r.Qt = op_diag_expr(r.family->Q, ps, g);  // X = sin(kx)
  VectorXcd coskx(g.n);
  for (int i = 0; i < g.n; ++i) coskx[i] = std::cos(k * g.x(i));
  // symmetrized momentum P = (k/2){cos(kx), p},  p = -i d/dx
  r.Pt = op_add(op_scale(cd(0, -k), op_compose(op_diag(coskx, g), op_d1(g))),
                op_scale(cd(0, eps / 2.0), r.Qt));
  Op P = opf(r.spectrum, [](double) { return 1.0; }, r.safe);
  Op sqH = opf(r.spectrum, [eps](double E) { return std::sqrt(eps * E); }, r.safe);
  Op XP = op_compose(r.Pt, P);
  Op bm = op_scale(1.0 / (2.0 * eps),
                   op_add(op_compose(r.Qt, op_add(op_scale(eps, P), op_scale(2.0, sqH))),
                          op_scale(cd(0, 2.0), XP)));
  Op bp_core = op_add(op_compose(r.Qt, op_sub(op_scale(eps, P), op_scale(2.0, sqH))),
                      op_scale(cd(0, 2.0), XP));
  Op bp = op_scale(-1.0 / (2.0 * eps),
                   op_compose(bp_core, opf(r.spectrum, [eps](double E) {
                     double sq = std::sqrt(eps * E);
                     return (eps + sq) / sq;
                   }, r.safe)));
  r.S1 = bm;
  r.S2 = bp;
  r.b = bm;
  r.bdag = bp;
  r.b0 = r.H;
  r.g_of_E = [eps](double E) { return -eps + 2.0 * std::sqrt(eps * E); };
  r.f_of_E = [eps, nu](double E) {
    double t = std::sqrt(E / eps);
    return 1.0 + 2.0 * t + nu * (nu - 1.0) / (t * (t - 1.0));
  };
  r.nlda_g = opf(r.spectrum, r.g_of_E, r.safe);
  r.nlda_f = opf(r.spectrum, r.f_of_E, r.safe);
  r.has_nlda = true;
  r.b0_of_E = [eps](double E) { return std::sqrt(E / eps); };
  r.omega1 = [eps](double E) { return cd(2.0 * std::sqrt(eps * E) - eps); };
  r.omega2 = [eps](double E) { return cd(2.0 * std::sqrt(eps * E) + eps); };
  auto b0E = r.b0_of_E;
  r.J0 = opf(r.spectrum, b0E, r.safe);
  Op w = opf(r.spectrum, [b0E](double E) {
    double t = b0E(E);
    return std::sqrt(t / (t + 1.0));
  }, r.safe);
  r.Jm = op_compose(w, bm);
  r.Jp = op_adjoint(r.Jm);
}

void realize_E(Realization& r) {
  const Grid& g = r.grid;
  const ParamSet& ps = r.params;
  double alpha = preal(ps, Param::alpha), lam = preal(ps, Param::lambda);
  double c1 = preal(ps, Param::c1), c2 = preal(ps, Param::c2);
  double s2v = alpha * alpha + 2.0 * lam;
  double s = std::sqrt(s2v);
  r.Qt = op_add(op_add(op_diag_expr(r.family->Q, ps, g),
                       op_scale(2.0 * lam / s2v, r.H)),
                op_const(2.0 * lam * (c1 + c2 * alpha) / s2v, g));
  r.Pt = op_add(op_add(op_add(first_order_op(*r.family, ps, g), op_const(-c2, g)),
                       op_scale(alpha / s2v, r.H)),
                op_const(alpha * (c1 + alpha * c2) / s2v, g));
  r.S1 = op_add(op_scale(-(alpha + s) / (2.0 * lam), r.Qt), r.Pt);
  r.S2 = op_add(op_scale(-(alpha - s) / (2.0 * lam), r.Qt), r.Pt);
  r.b0 = op_scale(1.0 / s, r.H);
  r.omega1 = [s](double) { return cd(s); };
  r.omega2 = [s](double) { return cd(s); };
  r.b0_of_E = [s](double E) { return E / s; };
  r.xi0 = (c1 + alpha * c2) / s;
  r.xi_of_E = [](double) { return 1.0; };
  r.b = r.S1;
  // The raw raising shift operator needs the -1 rescaling for the ladder
  // relations and the -2J0 closure to hold simultaneously (scale freedom of
  // the 2x2 diagonalization).
  r.bdag = op_scale(-1.0, r.S2);
  r.J0 = op_add(r.b0, op_const(r.xi0, g));
  r.Jm = r.b;
  r.Jp = r.bdag;
}

void realize_F(Realization& r) {
  const Grid& g = r.grid;
  const ParamSet& ps = r.params;
  double lam = preal(ps, Param::lambda), tau = preal(ps, Param::tau);
  auto Rfun = [lam](double E) { return std::sqrt(1.0 + 2.0 * lam - 4.0 * E); };
  // The lowest tower state sits exactly on the 1/(lambda - 2H) pole
  // (E = lambda/2); operator functions are built on the pole-free levels.
  r.safe.clear();
  std::vector<int> all;
  for (int j = 0; j < std::min(r.spectrum.k(), 3); ++j) {
    all.push_back(j);
    // discretization shifts the pole level off lambda/2 by ~1e-5, so the
    // exclusion window must be wider than that
    if (std::abs(lam - 2.0 * r.spectrum.eigenvalues[j]) > 1e-3 * (1.0 + std::abs(lam)))
      r.safe.push_back(j);
  }
  Op qshift = opf(r.spectrum, [lam, tau](double E) {
    return tau * E / (lam - 2.0 * E);
  }, r.safe);
  r.Qt = op_add(op_diag_expr(r.family->Q, ps, g), qshift);
  r.Pt = op_add(op_d1(g), op_scale(tau / 2.0, opf(r.spectrum, [lam](double E) {
    return 1.0 / (lam - 2.0 * E);
  }, r.safe)));
  Op P = opf(r.spectrum, [](double) { return 1.0; }, r.safe);
  Op Rop = opf(r.spectrum, Rfun, r.safe);
  r.S1 = op_add(op_compose(r.Qt, op_sub(Rop, P)), op_scale(2.0 * lam, r.Pt));
  r.S2 = op_add(op_compose(r.Qt, op_scale(-1.0, op_add(Rop, P))),
                op_scale(2.0 * lam, r.Pt));
  r.b = r.S1;
  r.bdag = r.S2;
  r.b0_of_E = [Rfun](double E) { return 0.5 * Rfun(E); };
  r.omega1 = [Rfun](double E) { return cd(1.0 - Rfun(E)); };
  r.omega2 = [Rfun](double E) { return cd(1.0 + Rfun(E)); };
  r.J0 = opf(r.spectrum, r.b0_of_E, all);
  r.b0 = r.J0;
  r.xi_of_E = [](double) { return 1.0; };
  r.Jm = r.S1;
  r.Jp = r.S2;
  r.climb_dir = -1;  // J+ raises J0, which decreases with energy here
  r.margin = 6;
}

}  // namespace

Realization instantiate(const std::string& id,
                        const std::vector<ParamOverride>& overrides,
                        std::optional<Grid> grid, int K) {
  Realization r;
  r.family = &family(id);
  const FamilySpec& f = *r.family;
  r.params = resolve_params(f, overrides);
  check_constraints(f, r.params);
  r.K = K;

  if (grid) {
    r.grid = *grid;
  } else {
    double lo = f.lo, hi = f.hi;
    // trigonometric domains scale with the wavenumber
    if (id == "D-pt1") {
      double k = preal(r.params, Param::k);
      lo = 1e-3;
      hi = kPi / std::abs(k) - 1e-3;
    } else if (id == "pt-canonical") {
      double k = preal(r.params, Param::k);
      lo = -kPi / (2.0 * std::abs(k));
      hi = kPi / (2.0 * std::abs(k));
    }
    r.grid = Grid(lo, hi, 2000);
  }

  int solve_k = (id == "C-pt2") ? std::max(K + 4, 12)
              : (id == "F-radial-l") ? std::max(K, 4)
              : K + 4;
  VectorXd V = sample_potential(f, r.params, r.grid);
  r.spectrum = solve_family(f, r.params, V, r.grid, solve_k);
  r.H = ham_op(f, r.params, V, r.grid);
  r.safe = iota_levels(r.spectrum.k());

  if (id == "harmonic-canonical") realize_harmonic(r);
  else if (id == "A-harmonic") realize_A(r);
  else if (id == "B-radial-osc") realize_B(r);
  else if (id == "C-pt2") realize_C(r);
  else if (id == "D-pt1") realize_D(r);
  else if (id == "pt-canonical") realize_pt(r);
  else if (id == "E-radial-coulomb") realize_E(r);
  else if (id == "F-radial-l") realize_F(r);
  else throw std::invalid_argument("no realization recipe for " + id);
  return r;
}

}  // namespace qda
