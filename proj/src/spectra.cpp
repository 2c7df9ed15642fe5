#include "qda/spectra.hpp"
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace qda {

namespace {
using cd = std::complex<double>;
}

GroundState ground_state_from_annihilator(const Op& Jm, const Spectrum& basis, int K) {
  K = std::min<int>(K, basis.k());
  const int n = basis.grid.n;
  const double h = basis.grid.h();
  MatrixXcd V(n, K), B(n, K);
  for (int j = 0; j < K; ++j) {
    V.col(j) = basis.vectors.col(j);
    B.col(j) = Jm.apply(basis.vectors.col(j));
  }
  // minimize ||B c||_h subject to ||V c||_h = 1 (generalized eigenproblem)
  MatrixXcd A = (B.adjoint() * B) * h;
  MatrixXcd G = (V.adjoint() * V) * h;
  Eigen::GeneralizedSelfAdjointEigenSolver<MatrixXcd> es(A, G);
  const auto& ev = es.eigenvalues();
  double s0 = std::sqrt(std::max(ev[0], 0.0));
  double s1 = std::sqrt(std::max(ev[K > 1 ? 1 : 0], 0.0));
  double smax = std::sqrt(std::max(ev[K - 1], 0.0));
  if (K > 1 && (s1 - s0) <= 1e-6 * std::max(smax, 1.0))
    throw std::runtime_error("ambiguous annihilator null space: two smallest "
                             "singular values nearly coincide");
  GroundState g;
  g.psi = V * es.eigenvectors().col(0);
  g.psi /= hnorm(basis.grid, g.psi);
  g.residual = s0;
  return g;
}

GroundState ground_state_from_matrix(const Grid& g, const MatrixXcd& Jm) {
  Eigen::JacobiSVD<MatrixXcd> svd(Jm, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int n = static_cast<int>(sv.size());
  double smax = sv[0];
  if (n > 1 && (sv[n - 2] - sv[n - 1]) <= 1e-6 * std::max(smax, 1.0))
    throw std::runtime_error("ambiguous annihilator null space: two smallest "
                             "singular values nearly coincide");
  GroundState out;
  out.psi = svd.matrixV().col(n - 1);
  out.psi /= hnorm(g, out.psi);
  out.residual = sv[n - 1] * std::sqrt(g.h());
  return out;
}

Projector subspace_projector(const Spectrum& basis) {
  const int M = basis.k();
  const double h = basis.grid.h();
  auto V = std::make_shared<MatrixXcd>(basis.vectors.leftCols(M));
  MatrixXcd G = (V->adjoint() * *V) * h;
  auto gram = std::make_shared<Eigen::LDLT<MatrixXcd>>(G);
  return [V, gram, h](const VectorXcd& u) -> VectorXcd {
    return *V * gram->solve(V->adjoint() * u * h);
  };
}

LadderClimb ladder_climb(const Op& Jup, const Op& H, const VectorXcd& psi0, int steps,
                         const Projector& project) {
  LadderClimb out;
  const Grid& g = Jup.grid;
  VectorXcd psi = psi0 / hnorm(g, psi0);
  out.states.push_back(psi);
  out.rayleigh.push_back(hdot(g, psi, H.apply(psi)).real());
  for (int s = 0; s < steps; ++s) {
    VectorXcd up = Jup.apply(psi);
    if (project) up = project(up);
    double nrm = hnorm(g, up);
    if (nrm < 1e-10) {
      out.early_stop_reason = "norm collapse after step " + std::to_string(s);
      return out;
    }
    psi = up / nrm;
    out.states.push_back(psi);
    out.rayleigh.push_back(hdot(g, psi, H.apply(psi)).real());
    ++out.steps_taken;
  }
  return out;
}

SpectrumComparison compare(const Realization& r, int K) {
  SpectrumComparison out;
  out.family = r.family->id;
  const Spectrum& S = r.spectrum;
  std::vector<int> cols;
  for (int j : r.safe) {
    if ((int)cols.size() >= K) break;
    cols.push_back(j);
  }
  const int requested = K;
  K = static_cast<int>(cols.size());

  const Op& annihilator = r.climb_dir > 0 ? r.Jm : r.Jp;
  const Op& climber = r.climb_dir > 0 ? r.Jp : r.Jm;
  GroundState gs = ground_state_from_annihilator(annihilator, S, K);
  out.annihilation_residual = gs.residual;
  LadderClimb climb = ladder_climb(climber, r.H, gs.psi, K - 1, subspace_projector(S));
  out.steps_taken = climb.steps_taken;
  out.early_stop_reason = climb.early_stop_reason;
  if (out.early_stop_reason.empty() && K < requested)
    out.early_stop_reason =
        "clipped to " + std::to_string(K) + " resolved levels";
  out.ladder = climb.rayleigh;

  for (int i = 0; i < K; ++i) {
    int m = cols[i];
    out.direct.push_back(S.eigenvalues[m]);
    out.j0.push_back(hdot(S.grid, S.vectors.col(m), r.J0.apply(S.vectors.col(m))).real());
    if (i < (int)climb.states.size())
      out.overlaps.push_back(std::abs(hdot(S.grid, S.vectors.col(m), climb.states[i])));
  }
  for (std::size_t i = 0; i + 1 < out.j0.size(); ++i)
    out.j0_step_dev = std::max(out.j0_step_dev,
                               std::abs(std::abs(out.j0[i + 1] - out.j0[i]) - 1.0));
  return out;
}

}  // namespace qda
