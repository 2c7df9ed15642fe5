#include "qda/spectrum.hpp"
#include <algorithm>
#include <numeric>

namespace qda {

std::complex<double> hdot(const Grid& g, const VectorXcd& a, const VectorXcd& b) {
  return a.dot(b) * g.h();
}
double hnorm(const Grid& g, const VectorXcd& a) { return a.norm() * std::sqrt(g.h()); }

SymBand5 schrodinger_band(const VectorXd& V, const Grid& g) {
  const int n = g.n;
  const double ih2 = 1.0 / (12.0 * g.h() * g.h());
  SymBand5 B;
  B.d0 = VectorXd::Constant(n, 30.0 * ih2) + V;
  B.d0[0] -= ih2;       // corner correction of the symmetric D2 stencil
  B.d0[n - 1] -= ih2;
  B.d1 = VectorXd::Constant(n - 1, -16.0 * ih2);
  B.d2 = VectorXd::Constant(n - 2, ih2);
  return B;
}

Spectrum solve_schrodinger(const VectorXd& V, const Grid& g, int k) {
  auto [ev, U] = band_lowest_eigenpairs(schrodinger_band(V, g), k);
  Spectrum s;
  s.grid = g;
  s.eigenvalues = ev;
  s.vectors = (U / std::sqrt(g.h())).cast<std::complex<double>>();
  s.hermitian = true;
  return s;
}

Spectrum solve_pseudo(const VectorXd& d, const VectorXd& V, const Grid& g, int k) {
  const int n = g.n;
  if ((d.array() <= 0).any())
    throw std::domain_error("pseudo-Hamiltonian weight must be positive");
  VectorXd sq = d.array().sqrt();
  // C = sqrt(d) * (-D2 + diag(V/d)) * sqrt(d), still pentadiagonal symmetric.
  SymBand5 A = schrodinger_band(VectorXd::Zero(n), g);
  SymBand5 C;
  C.d0 = A.d0.cwiseProduct(d) + V;
  C.d1.resize(n - 1);
  C.d2.resize(n - 2);
  for (int i = 0; i + 1 < n; ++i) C.d1[i] = A.d1[i] * sq[i] * sq[i + 1];
  for (int i = 0; i + 2 < n; ++i) C.d2[i] = A.d2[i] * sq[i] * sq[i + 2];
  auto [ev, U] = band_lowest_eigenpairs(C, k);
  Spectrum s;
  s.grid = g;
  s.eigenvalues = ev;
  s.vectors.resize(n, k);
  s.left.resize(n, k);
  for (int m = 0; m < k; ++m) {
    VectorXd v = U.col(m).cwiseProduct(sq);
    VectorXd w = U.col(m).cwiseQuotient(sq);
    double nv = v.norm() * std::sqrt(g.h());
    v /= nv;
    w /= w.dot(v) * g.h();  // biorthonormal under the h-inner product
    s.vectors.col(m) = v.cast<std::complex<double>>();
    s.left.col(m) = w.cast<std::complex<double>>();
  }
  s.hermitian = false;
  Eigen::JacobiSVD<MatrixXd> svd(s.vectors.real());
  s.condition_number =
      svd.singularValues()[0] / svd.singularValues()[svd.singularValues().size() - 1];
  return s;
}

Spectrum solve_eigen(const LinearOperator& A, int k) {
  const int n = A.grid.n;
  if (k > n) throw std::invalid_argument("k exceeds grid size");
  double herm = (A.matrix - A.matrix.adjoint()).cwiseAbs().maxCoeff();
  double scale = A.matrix.cwiseAbs().maxCoeff();
  Spectrum s;
  s.grid = A.grid;
  if (herm <= 1e-10 * std::max(1.0, scale)) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(A.matrix);
    if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
    s.eigenvalues = es.eigenvalues().head(k);
    s.vectors = es.eigenvectors().leftCols(k) / std::sqrt(A.grid.h());
    s.hermitian = true;
    return s;
  }
  Eigen::ComplexEigenSolver<MatrixXcd> es(A.matrix);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return es.eigenvalues()[a].real() < es.eigenvalues()[b].real();
  });
  s.eigenvalues.resize(k);
  s.vectors.resize(n, k);
  for (int m = 0; m < k; ++m) {
    s.eigenvalues[m] = es.eigenvalues()[idx[m]].real();
    s.vectors.col(m) = es.eigenvectors().col(idx[m]) / std::sqrt(A.grid.h());
  }
  s.hermitian = false;
  Eigen::JacobiSVD<MatrixXcd> svd(s.vectors);
  s.condition_number =
      svd.singularValues()[0] / svd.singularValues()[svd.singularValues().size() - 1];
  return s;
}

}  // namespace qda
