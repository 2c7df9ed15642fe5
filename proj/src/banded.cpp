#include "qda/banded.hpp"
#include <cmath>
#include <random>
#include <stdexcept>

namespace qda {

namespace {
double band_entry(const SymBand5& A, int i, int j) {
  if (i > j) std::swap(i, j);
  int d = j - i;
  if (d == 0) return A.d0[i];
  if (d == 1) return A.d1[i];
  if (d == 2) return A.d2[i];
  return 0.0;
}
}  // namespace

int band_inertia(const SymBand5& A, double sigma) {
  const int n = A.n();
  // LDL^T of A - sigma*I without pivoting; Sturm count = # negative pivots.
  Eigen::VectorXd d(n), l1(n), l2(n);  // l1[j] = L(j+1,j), l2[j] = L(j+2,j)
  const double scale = A.d0.cwiseAbs().maxCoeff() + A.d1.cwiseAbs().maxCoeff() +
                       std::abs(sigma) + 1.0;
  int neg = 0;
  for (int j = 0; j < n; ++j) {
    double dj = A.d0[j] - sigma;
    if (j >= 1) dj -= l1[j - 1] * l1[j - 1] * d[j - 1];
    if (j >= 2) dj -= l2[j - 2] * l2[j - 2] * d[j - 2];
    if (dj == 0.0) dj = -1e-300 * scale;
    if (dj < 0) ++neg;
    d[j] = dj;
    if (j + 1 < n) {
      double b = A.d1[j];
      if (j >= 1) b -= l2[j - 1] * l1[j - 1] * d[j - 1];
      l1[j] = b / dj;
    }
    if (j + 2 < n) l2[j] = A.d2[j] / dj;
  }
  return neg;
}

Eigen::VectorXd band_lowest_eigenvalues(const SymBand5& A, int k) {
  const int n = A.n();
  if (k < 1 || k > n) throw std::invalid_argument("bad eigenvalue count");
  double lo = A.d0[0], hi = A.d0[0];
  for (int i = 0; i < n; ++i) {
    double r = 0;
    if (i >= 1) r += std::abs(A.d1[i - 1]);
    if (i >= 2) r += std::abs(A.d2[i - 2]);
    if (i + 1 < n) r += std::abs(A.d1[i]);
    if (i + 2 < n) r += std::abs(A.d2[i]);
    lo = std::min(lo, A.d0[i] - r);
    hi = std::max(hi, A.d0[i] + r);
  }
  Eigen::VectorXd ev(k);
  for (int m = 1; m <= k; ++m) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      if (band_inertia(A, mid) >= m) b = mid;
      else a = mid;
      if (b - a <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    }
    ev[m - 1] = 0.5 * (a + b);
  }
  return ev;
}

BandLU::BandLU(const SymBand5& A, double sigma) : n_(A.n()) {
  rows_ = Eigen::MatrixXd::Zero(n_, 9);
  mult_ = Eigen::MatrixXd::Zero(n_, 2);
  swap_ = Eigen::VectorXi::Zero(n_);
  // Slot p window: columns p-2 .. p+6; column c sits at index c - p + 2.
  for (int i = 0; i < n_; ++i)
    for (int j = std::max(0, i - 2); j <= std::min(n_ - 1, i + 2); ++j)
      rows_(i, j - i + 2) = band_entry(A, i, j) - (i == j ? sigma : 0.0);
  for (int j = 0; j < n_; ++j) {
    // Pivot among slots j, j+1, j+2 on their column-j entry.
    int best = 0;
    double bv = std::abs(rows_(j, 2));
    for (int t = 1; t <= 2 && j + t < n_; ++t) {
      double v = std::abs(rows_(j + t, 2 - t));
      if (v > bv) { bv = v; best = t; }
    }
    swap_[j] = best;
    if (best) {
      // Realign both rows to their new slot bases while swapping.
      Eigen::Matrix<double, 1, 9> up = rows_.row(j + best), down = rows_.row(j);
      rows_.row(j).setZero();
      rows_.row(j + best).setZero();
      for (int idx = 0; idx < 9; ++idx) {
        int c = (j + best) - 2 + idx;          // column of `up` entry
        if (c - j + 2 >= 0 && c - j + 2 < 9) rows_(j, c - j + 2) = up[idx];
      }
      for (int idx = 0; idx < 9; ++idx) {
        int c = j - 2 + idx;                   // column of `down` entry
        if (c - (j + best) + 2 >= 0 && c - (j + best) + 2 < 9)
          rows_(j + best, c - (j + best) + 2) = down[idx];
      }
    }
    double piv = rows_(j, 2);
    if (piv == 0.0) piv = rows_(j, 2) = 1e-300;
    for (int t = 1; t <= 2 && j + t < n_; ++t) {
      double m = rows_(j + t, 2 - t) / piv;
      mult_(j, t - 1) = m;
      if (m != 0.0)
        for (int idx = 2; idx < 9; ++idx) {
          int c = j - 2 + idx;
          if (c >= n_) break;
          rows_(j + t, c - (j + t) + 2) -= m * rows_(j, idx);
        }
    }
  }
}

Eigen::VectorXd BandLU::solve(Eigen::VectorXd b) const {
  for (int j = 0; j < n_; ++j) {
    if (swap_[j]) std::swap(b[j], b[j + swap_[j]]);
    for (int t = 1; t <= 2 && j + t < n_; ++t) b[j + t] -= mult_(j, t - 1) * b[j];
  }
  for (int j = n_ - 1; j >= 0; --j) {
    double s = b[j];
    for (int idx = 3; idx < 9; ++idx) {
      int c = j - 2 + idx;
      if (c >= n_) break;
      s -= rows_(j, idx) * b[c];
    }
    b[j] = s / rows_(j, 2);
  }
  return b;
}

std::pair<Eigen::VectorXd, Eigen::MatrixXd> band_lowest_eigenpairs(const SymBand5& A,
                                                                   int k) {
  const int n = A.n();
  Eigen::VectorXd ev = band_lowest_eigenvalues(A, k);
  Eigen::MatrixXd V(n, k);
  std::mt19937_64 rng(0x9e3779b9u);
  std::normal_distribution<double> nd;
  for (int m = 0; m < k; ++m) {
    BandLU lu(A, ev[m]);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = nd(rng);
    v.normalize();
    for (int it = 0; it < 4; ++it) {
      v = lu.solve(v);
      for (int p = 0; p < m; ++p) v -= V.col(p).dot(v) * V.col(p);
      double nrm = v.norm();
      if (!(nrm > 0) || !std::isfinite(nrm))
        throw std::runtime_error("inverse iteration breakdown");
      v /= nrm;
    }
    V.col(m) = v;
  }
  return {ev, V};
}

}  // namespace qda
