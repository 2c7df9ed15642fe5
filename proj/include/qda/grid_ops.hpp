#pragma once
#include <Eigen/Dense>
#include <functional>
#include <memory>
#include "qda/expr.hpp"

namespace qda {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

// Uniform interior grid with Dirichlet endpoints excluded:
// x_i = lo + h*(i+1), h = (hi-lo)/(n+1).
struct Grid {
  double lo = 0, hi = 1;
  int n = 0;

  Grid() = default;
  Grid(double l, double h_, int n_) : lo(l), hi(h_), n(n_) {
    if (!(lo < hi) || n < 16) throw std::invalid_argument("bad grid");
  }
  double h() const { return (hi - lo) / (n + 1); }
  double x(int i) const { return lo + h() * (i + 1); }
  VectorXd points() const {
    VectorXd p(n);
    for (int i = 0; i < n; ++i) p[i] = x(i);
    return p;
  }
  friend bool operator==(const Grid& a, const Grid& b) {
    return a.lo == b.lo && a.hi == b.hi && a.n == b.n;
  }
};

// Matrix-free stencil application (4th-order central, zero ghosts).
void d1_apply(const Grid& g, const VectorXcd& v, VectorXcd& out);
void d2_apply(const Grid& g, const VectorXcd& v, VectorXcd& out);

// Dense operator on grid-sampled wavefunctions.
struct LinearOperator {
  Grid grid;
  MatrixXcd matrix;

  LinearOperator() = default;
  LinearOperator(Grid g, MatrixXcd m) : grid(g), matrix(std::move(m)) {}
  VectorXcd apply(const VectorXcd& v) const { return matrix * v; }
};

LinearOperator mul_operator(const Expr& e, const ParamSet& ps, const Grid& g);
LinearOperator derivative_operator(int order, const Grid& g);
LinearOperator build_first_order(const Expr& Y, const Expr& Z, const ParamSet& ps,
                                 const Grid& g);
LinearOperator build_hamiltonian(const Expr& X, const Expr& V, const ParamSet& ps,
                                 const Grid& g);
LinearOperator commutator(const LinearOperator& A, const LinearOperator& B);
LinearOperator adjoint(const LinearOperator& A);

// Samples an Expr on the grid, rejecting singular evaluations.
VectorXcd sample_expr(const Expr& e, const ParamSet& ps, const Grid& g);

// Matrix-free operator: pair of apply / adjoint-apply closures over a grid.
// Used for realization operators whose dense products would be wasteful;
// all residual metrics only need operator-vector actions.
struct Op {
  Grid grid;
  std::function<VectorXcd(const VectorXcd&)> apply;
  std::function<VectorXcd(const VectorXcd&)> applyAdj;

  VectorXcd operator()(const VectorXcd& v) const { return apply(v); }
};

Op op_zero(const Grid& g);
Op op_identity(const Grid& g);
Op op_diag(VectorXcd d, const Grid& g);
Op op_diag_expr(const Expr& e, const ParamSet& ps, const Grid& g);
Op op_d1(const Grid& g);
Op op_d2(const Grid& g);
Op op_from_matrix(const LinearOperator& A);
Op op_scale(std::complex<double> c, const Op& A);
Op op_add(const Op& A, const Op& B);
Op op_sub(const Op& A, const Op& B);
Op op_compose(const Op& A, const Op& B);  // acts as A(B(v))
Op op_adjoint(const Op& A);
Op op_commutator(const Op& A, const Op& B);

}  // namespace qda
