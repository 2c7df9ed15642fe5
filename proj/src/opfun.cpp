#include "qda/opfun.hpp"

namespace qda {

Op operator_function(const Spectrum& S, const ScalarFn& f,
                     const std::vector<int>* domain) {
  std::vector<int> idx;
  if (domain) idx = *domain;
  else {
    idx.resize(S.k());
    for (int m = 0; m < S.k(); ++m) idx[m] = m;
  }
  const int K = static_cast<int>(idx.size());
  auto V = std::make_shared<MatrixXcd>(S.vectors.rows(), K);
  auto fvals = std::make_shared<VectorXcd>(K);
  for (int m = 0; m < K; ++m) {
    V->col(m) = S.vectors.col(idx[m]);
    (*fvals)[m] = f(S.eigenvalues[idx[m]]);
  }
  const double h = S.grid.h();
  if (S.hermitian) {
    // Orthonormal basis under <.,.>_h: F v = sum f_m psi_m <psi_m, v>_h.
    auto fwd = [V, fvals, h](const VectorXcd& v) {
      VectorXcd c = V->adjoint() * v * h;
      return (*V * fvals->cwiseProduct(c)).eval();
    };
    auto adj = [V, fvals, h](const VectorXcd& v) {
      VectorXcd c = V->adjoint() * v * h;
      return (*V * fvals->conjugate().cwiseProduct(c)).eval();
    };
    return {S.grid, fwd, adj};
  }
  // Non-normal: oblique spectral function on span(V) via the orthogonal
  // projector coordinates, F = V f (V^H V)^{-1} V^H.
  auto gram = std::make_shared<Eigen::LDLT<MatrixXcd>>((V->adjoint() * *V).eval());
  auto fwd = [V, fvals, gram](const VectorXcd& v) {
    VectorXcd c = gram->solve(V->adjoint() * v);
    return (*V * fvals->cwiseProduct(c)).eval();
  };
  auto adj = [V, fvals, gram](const VectorXcd& v) {
    VectorXcd c = gram->solve(V->adjoint() * v);
    return (*V * fvals->conjugate().cwiseProduct(c)).eval();
  };
  return {S.grid, fwd, adj};
}

ScalarFn guarded_sqrt(const std::function<double(double)>& radicand) {
  return [radicand](double E) -> std::complex<double> {
    double r = radicand(E);
    if (r < -1e-10 * (1.0 + std::abs(E)))
      throw BranchViolation("negative radicand at eigenvalue " + std::to_string(E));
    return std::sqrt(std::max(r, 0.0));
  };
}

double vector_residual(const Grid& g, const VectorXcd& r, double scale, int margin) {
  const int n = g.n;
  double s2 = 0;
  for (int i = margin; i < n - margin; ++i) s2 += std::norm(r[i]);
  return std::sqrt(s2 * g.h()) / (1.0 + scale);
}

double subspace_residual(const Op& A, const Spectrum& S, int K, double scale,
                         int margin) {
  double worst = 0;
  K = std::min<int>(K, S.k());
  for (int m = 0; m < K; ++m) {
    VectorXcd r = A.apply(S.vectors.col(m));
    worst = std::max(worst, vector_residual(S.grid, r, scale, margin));
  }
  return worst;
}

}  // namespace qda
