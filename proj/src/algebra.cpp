#include "qda/algebra.hpp"
#include <algorithm>
#include <cmath>

namespace qda {

namespace {

using cd = std::complex<double>;

std::vector<int> verify_cols(const Realization& r, int K) {
  std::vector<int> cols;
  for (int j : r.safe) {
    if ((int)cols.size() >= K) break;
    cols.push_back(j);
  }
  return cols;
}

double res_cols(const Op& A, const Spectrum& S, const std::vector<int>& cols,
                double scale, int margin) {
  double worst = 0;
  for (int m : cols)
    worst = std::max(worst,
                     vector_residual(S.grid, A.apply(S.vectors.col(m)), scale, margin));
  return worst;
}

double rel_spread(const std::vector<cd>& v) {
  if (v.size() < 2) return 0.0;
  cd mean = 0;
  for (auto x : v) mean += x;
  mean /= double(v.size());
  double dev = 0, mag = std::abs(mean);
  for (auto x : v) dev = std::max(dev, std::abs(x - mean));
  return dev / std::max(mag, 1e-300);
}

}  // namespace

CaseClassification classify_case(const Realization& r, int K) {
  CaseClassification c;
  const Spectrum& S = r.spectrum;
  std::vector<int> cols = verify_cols(r, K);
  Op comm = op_commutator(r.S1, r.S2);
  std::vector<cd> etas, comms;
  for (int m : cols) {
    VectorXcd v = S.vectors.col(m);
    VectorXcd s2v = r.S2.apply(v);
    VectorXcd s1dv = r.S1.applyAdj(v);
    cd den = hdot(S.grid, s2v, s2v);
    cd eta = hdot(S.grid, s2v, s1dv) / den;
    double fit = vector_residual(S.grid, (s1dv - eta * s2v).eval(), 0.0, r.margin) /
                 std::max(hnorm(S.grid, s2v), 1e-300);
    c.eta_fit_residual = std::max(c.eta_fit_residual, fit);
    double t = r.b0_of_E(S.eigenvalues[m]);
    c.eta_samples.push_back({t, eta});
    etas.push_back(eta);
    cd cm = hdot(S.grid, v, comm.apply(v));
    c.commutator_profile.push_back({t, cm});
    comms.push_back(cm);
  }
  if (c.eta_fit_residual > 1e-3)
    throw std::runtime_error("eta relation violated for family " + r.family->id +
                             " (fit residual " + std::to_string(c.eta_fit_residual) + ")");
  c.eta_spread = rel_spread(etas);
  c.comm_spread = rel_spread(comms);
  bool eta_const = c.eta_spread <= c.constancy_threshold;
  bool comm_const = c.comm_spread <= c.constancy_threshold;
  c.case_label = !eta_const ? 3 : (comm_const ? 2 : 1);
  return c;
}

XiSolution solve_xi(const CaseClassification& cls, const Realization& r,
                    int sign_target) {
  XiSolution out;
  out.xi0 = r.xi0;
  const Spectrum& S = r.spectrum;
  std::vector<int> cols = verify_cols(r, r.K);
  auto tval = [&](int m) { return r.b0_of_E(S.eigenvalues[m]) + r.xi0; };

  if (cls.case_label == 1 || cls.case_label == 2) {
    // kappa_m = <[b, bdag]>, sigma_m = <bdag b> per level
    std::vector<double> sigma, kappa;
    for (int m : cols) {
      VectorXcd v = S.vectors.col(m);
      double s = hdot(S.grid, v, r.bdag.apply(r.b.apply(v))).real();
      double k = hdot(S.grid, v, r.b.apply(r.bdag.apply(v))).real() - s;
      sigma.push_back(s);
      kappa.push_back(k);
    }
    for (int sgn : {sign_target ? sign_target : -1, sign_target ? 0 : +1}) {
      if (sgn == 0) break;
      out.xi2_fitted.clear();
      bool ok = true;
      if (cls.case_label == 1) {
        // constant xi: -xi^2 kappa = sgn * 2 J0 level by level
        for (std::size_t i = 0; i < cols.size(); ++i) {
          double x2 = -double(sgn) * 2.0 * tval(cols[i]) / kappa[i];
          if (x2 <= 0) { ok = false; break; }
          out.xi2_fitted.push_back(x2);
        }
      } else {
        // telescoping up the unit-spaced b0 ladder; sigma_0 ~ 0 closes it
        double prev = 0;
        for (std::size_t i = 0; i < cols.size(); ++i) {
          double x2 = (sigma[i] * prev - double(sgn) * 2.0 * tval(cols[i])) /
                      (sigma[i] + kappa[i]);
          if (x2 <= 0) { ok = false; break; }
          out.xi2_fitted.push_back(x2);
          prev = x2;
        }
      }
      if (ok) { out.sign = sgn; break; }
      if (sign_target) break;
    }
    if (out.xi2_fitted.size() != cols.size())
      throw std::runtime_error("algebra not realizable at these parameters (no "
                               "sign choice gives xi^2 > 0)");
  } else {
    // case 3: closure with the trial coefficient xi1 = 1 scales as 1/xi1
    auto b0E = r.b0_of_E;
    RFn xi_trial = [b0E](double E) {
      double t = b0E(E);
      return std::sqrt(t / (t + 1.0));
    };
    ScalarFn sf = [xi_trial](double E) { return cd(xi_trial(E), 0.0); };
    Op xiop = operator_function(S, sf, &r.safe);
    Op JmT = op_compose(xiop, r.b);
    Op JpT = op_compose(r.bdag, xiop);
    Op clo = op_commutator(JpT, JmT);
    std::vector<double> xi1s;
    for (int m : cols) {
      VectorXcd v = S.vectors.col(m);
      double d = hdot(S.grid, v, clo.apply(v)).real();
      xi1s.push_back(2.0 * tval(m) / d);
    }
    double mean = 0;
    for (double q : xi1s) mean += q;
    mean /= double(xi1s.size());
    int sgn = mean > 0 ? +1 : -1;
    if (sign_target && sign_target != sgn)
      throw std::runtime_error("algebra not realizable at these parameters "
                               "(requested sign makes xi1 negative)");
    out.sign = sgn;
    out.xi1 = std::abs(mean);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      double t = r.b0_of_E(S.eigenvalues[cols[i]]);
      out.xi2_fitted.push_back(double(sgn) * xi1s[i] * t / (t + 1.0));
    }
    // closed-form functional-equation check: eta(t) xi^2(t) is t-independent
    if (r.eta_of_E) {
      std::vector<double> prods;
      for (int m : cols) {
        double E = S.eigenvalues[m];
        prods.push_back(r.eta_of_E(E) * r.xi_of_E(E) * r.xi_of_E(E));
      }
      double pmean = 0;
      for (double p : prods) pmean += p;
      pmean /= double(prods.size());
      for (double p : prods)
        out.functional_eq_residual =
            std::max(out.functional_eq_residual,
                     std::abs(p - pmean) / std::max(std::abs(pmean), 1e-300));
    }
  }

  if (r.xi_of_E) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      double closed = r.xi_of_E(S.eigenvalues[cols[i]]);
      out.xi2_closed.push_back(closed * closed);
      double dev = std::abs(out.xi2_fitted[i] - closed * closed) /
                   std::max(closed * closed, 1e-300);
      out.closed_form_dev = std::max(out.closed_form_dev, dev);
    }
  }
  return out;
}

void assemble_generators(Realization& r, double xi0, const RFn& xi_of_E) {
  ScalarFn sf = [xi_of_E](double E) { return cd(xi_of_E(E), 0.0); };
  Op xiop = operator_function(r.spectrum, sf, &r.safe);
  r.xi0 = xi0;
  r.xi_of_E = xi_of_E;
  r.J0 = op_add(r.b0, op_scale(xi0, op_identity(r.grid)));
  r.Jp = op_compose(r.bdag, xiop);
  r.Jm = op_compose(xiop, r.b);
}

AlgebraReport verify_algebra(const Realization& r, int K) {
  AlgebraReport rep;
  rep.family = r.family->id;
  rep.grid = r.grid;
  rep.K = K;
  rep.condition_number = r.spectrum.condition_number;
  rep.tolerance = (r.family->id == "harmonic-canonical") ? 1e-5 : 1e-4;
  const Spectrum& S = r.spectrum;
  std::vector<int> cols = verify_cols(r, K);
  const int margin = r.margin;

  double scale_E = 0, scale_t = 0;
  for (int m : cols) {
    scale_E = std::max(scale_E, std::abs(S.eigenvalues[m]));
    scale_t = std::max(scale_t, std::abs(r.b0_of_E(S.eigenvalues[m]) + r.xi0));
  }

  const bool is_pt = r.has_nlda;
  const bool is_F = (r.family->expected_algebra == "partial");
  const bool is_pseudo = (r.family->expected_algebra == "su11-pseudo");

  if (!is_pt) {
    rep.residuals["bS-lower"] =
        res_cols(op_add(op_commutator(r.b0, r.b), r.b), S, cols, scale_t, margin);
    rep.residuals["bS-raise"] =
        res_cols(op_sub(op_commutator(r.b0, r.bdag), r.bdag), S, cols, scale_t, margin);
  }
  {
    auto w1 = r.omega1, w2 = r.omega2;
    ScalarFn lower = [w1](double E) { return cd(E, 0) - w1(E); };
    ScalarFn raise = [w2](double E) { return cd(E, 0) + w2(E); };
    Op down = operator_function(S, lower, &r.safe);
    Op up = operator_function(S, raise, &r.safe);
    rep.residuals["HSS-lower"] = res_cols(
        op_sub(op_compose(r.H, r.S1), op_compose(r.S1, down)), S, cols, scale_E, margin);
    rep.residuals["HSS-raise"] = res_cols(
        op_sub(op_compose(r.H, r.S2), op_compose(r.S2, up)), S, cols, scale_E, margin);
  }
  rep.residuals["JJ-lower"] =
      res_cols(op_add(op_commutator(r.J0, r.Jm), r.Jm), S, cols, scale_t, margin);
  rep.residuals["JJ-raise"] =
      res_cols(op_sub(op_commutator(r.J0, r.Jp), r.Jp), S, cols, scale_t, margin);

  // detected closure sign from the diagonal of [J+,J-] against 2 J0
  Op clo_raw = op_commutator(r.Jp, r.Jm);
  double ratio = 0;
  for (int m : cols) {
    VectorXcd v = S.vectors.col(m);
    double t = r.b0_of_E(S.eigenvalues[m]) + r.xi0;
    if (std::abs(t) > 1e-12)
      ratio += hdot(S.grid, v, clo_raw.apply(v)).real() / (2.0 * t);
  }
  int sgn = ratio >= 0 ? +1 : -1;
  rep.sign = sgn > 0 ? "su2" : "su11";
  rep.residuals["closure"] =
      res_cols(op_sub(clo_raw, op_scale(2.0 * sgn, r.J0)), S, cols, 2.0 * scale_t, margin);
  rep.residuals["hermiticity"] =
      res_cols(op_sub(r.Jp, op_adjoint(r.Jm)), S, cols, scale_t, margin);

  if (is_pt)
    for (auto& [k, v] : verify_nlda(r, K)) rep.residuals[k] = v;

  if (r.case_label > 0) rep.classification = classify_case(r, K);

  // pass/fail
  std::vector<std::string> enforced = {"JJ-lower", "JJ-raise"};
  if (!is_F) enforced.push_back("closure");
  if (!is_pt && !is_F) { enforced.push_back("bS-lower"); enforced.push_back("bS-raise"); }
  if (!is_F) { enforced.push_back("HSS-lower"); enforced.push_back("HSS-raise"); }
  if (!is_pseudo && !is_F) enforced.push_back("hermiticity");
  if (is_pt) {
    enforced.push_back("NLDA-f");
    enforced.push_back("NLDA-g-lower");
    enforced.push_back("NLDA-g-raise");
  }
  rep.pass = true;
  for (const auto& k : enforced)
    if (rep.residuals.at(k) > rep.tolerance) {
      rep.pass = false;
      rep.notes.push_back("residual " + k + " exceeds tolerance");
    }
  if (is_F) rep.notes.push_back("closure unconstrained (only the ladder commutators are asserted)");
  if (is_pseudo) {
    double ncl = std::max(rep.residuals["closure"], 1e-300);
    if (rep.residuals["hermiticity"] <= 1e3 * ncl) {
      rep.pass = false;
      rep.notes.push_back("expected non-self-adjoint generators, but hermiticity "
                          "defect is small");
    } else {
      rep.notes.push_back("non-self-adjoint by construction: hermiticity defect " +
                          std::to_string(rep.residuals["hermiticity"]));
    }
  }
  std::string expected = r.family->expected_algebra;
  std::string detected = rep.sign == "su2" ? "su2" : "su11";
  bool sign_ok = true;
  if (expected == "su11" || expected == "su11-pseudo") sign_ok = (detected == "su11");
  else if (expected == "nlda") sign_ok = (detected == "su11");  // transformed generators
  if (!sign_ok) {
    rep.pass = false;
    rep.notes.push_back("detected closure sign " + detected +
                        " differs from the expected " + expected +
                        " (positive-xi^2 branch closes with the opposite sign)");
  }
  if (r.case_label > 0 && rep.classification.case_label != r.case_label) {
    rep.pass = false;
    rep.notes.push_back("case classification mismatch");
  }
  return rep;
}

std::map<std::string, double> verify_nlda(const Realization& r, int K) {
  if (!r.has_nlda)
    throw std::invalid_argument("verify_nlda requires the pt-canonical realization");
  const Spectrum& S = r.spectrum;
  std::vector<int> cols = verify_cols(r, K);
  double scale_E = 0;
  for (int m : cols) scale_E = std::max(scale_E, std::abs(S.eigenvalues[m]));
  std::map<std::string, double> out;
  out["NLDA-g-lower"] =
      res_cols(op_add(op_commutator(r.b0, r.b), op_compose(r.b, r.nlda_g)), S, cols,
               scale_E, r.margin);
  out["NLDA-g-raise"] =
      res_cols(op_sub(op_commutator(r.b0, r.bdag), op_compose(r.nlda_g, r.bdag)), S,
               cols, scale_E, r.margin);
  out["NLDA-f"] = res_cols(op_sub(op_commutator(r.b, r.bdag), r.nlda_f), S, cols,
                           scale_E, r.margin);
  return out;
}

}  // namespace qda
