#pragma once
#include "qda/banded.hpp"
#include "qda/grid_ops.hpp"

namespace qda {

// Lowest-k eigenpairs of a grid operator.  Columns are h-normalized
// (sum |psi_i|^2 h = 1).  For non-normal sources the `left` columns are the
// biorthonormal left eigenvectors (<w_i, v_j>_h = delta_ij).
struct Spectrum {
  Grid grid;
  VectorXd eigenvalues;   // ascending
  MatrixXcd vectors;      // right eigenvectors
  MatrixXcd left;         // empty for Hermitian sources
  bool hermitian = true;
  double condition_number = 1.0;

  int k() const { return static_cast<int>(eigenvalues.size()); }
};

// Hermitian Schrodinger path: H = -D2 + diag(V), real pentadiagonal.
Spectrum solve_schrodinger(const VectorXd& V, const Grid& g, int k);

// Pseudo-Hamiltonian path: H = diag(d) * (-D2 + diag(V)/diag(d)) with d > 0.
// Solved through the symmetric similarity C = sqrt(d) A sqrt(d); right
// eigenvectors v = sqrt(d) u, left w = u / sqrt(d) are automatically
// biorthogonal.
Spectrum solve_pseudo(const VectorXd& d, const VectorXd& V, const Grid& g, int k);

// Dense oracle for small grids and generic operators (tests): k lowest
// eigenpairs by real part; Hermitian inputs routed to the symmetric solver.
Spectrum solve_eigen(const LinearOperator& A, int k);

// Pentadiagonal band of -D2 + diag(V) on g (shared by both paths above).
SymBand5 schrodinger_band(const VectorXd& V, const Grid& g);

// h-weighted inner product and norm.
std::complex<double> hdot(const Grid& g, const VectorXcd& a, const VectorXcd& b);
double hnorm(const Grid& g, const VectorXcd& a);

}  // namespace qda
