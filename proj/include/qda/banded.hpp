#pragma once
#include <Eigen/Dense>
#include <utility>

namespace qda {

// Real symmetric pentadiagonal matrix (half-bandwidth 2), stored by diagonals.
struct SymBand5 {
  Eigen::VectorXd d0;  // main diagonal, length n
  Eigen::VectorXd d1;  // first superdiagonal, length n-1
  Eigen::VectorXd d2;  // second superdiagonal, length n-2
  int n() const { return static_cast<int>(d0.size()); }
};

// Number of eigenvalues strictly below sigma (LDL^T inertia count).
int band_inertia(const SymBand5& A, double sigma);

// k lowest eigenvalues by bisection on the inertia count, ascending.
Eigen::VectorXd band_lowest_eigenvalues(const SymBand5& A, int k);

// k lowest eigenpairs: eigenvalues ascending, eigenvectors (2-norm 1) as
// columns, computed by inverse iteration with banded LU solves.
std::pair<Eigen::VectorXd, Eigen::MatrixXd> band_lowest_eigenpairs(const SymBand5& A,
                                                                   int k);

// LU factorization of (A - sigma*I) with partial pivoting (band fill-in kept).
class BandLU {
 public:
  BandLU(const SymBand5& A, double sigma);
  Eigen::VectorXd solve(Eigen::VectorXd b) const;

 private:
  int n_;
  // Slot p stores the row currently at elimination position p over the
  // column window p-2 .. p+6 (fill-in from partial pivoting stays inside).
  Eigen::MatrixXd rows_;   // n x 9
  Eigen::MatrixXd mult_;   // n x 2 elimination multipliers
  Eigen::VectorXi swap_;   // pivot offset (0, 1, 2) chosen at each step
};

}  // namespace qda
