#include "qda/grid_ops.hpp"

namespace qda {

// 4th-order central first derivative, antisymmetric with zero ghost values:
// D1 v[i] = (v[i-2] - 8 v[i-1] + 8 v[i+1] - v[i+2]) / (12 h).
void d1_apply(const Grid& g, const VectorXcd& v, VectorXcd& out) {
  const int n = g.n;
  const double s = 1.0 / (12.0 * g.h());
  out.resize(n);
  auto at = [&](int i) -> std::complex<double> {
    return (i < 0 || i >= n) ? std::complex<double>(0) : v[i];
  };
  for (int i = 0; i < n; ++i)
    out[i] = s * (at(i - 2) - 8.0 * at(i - 1) + 8.0 * at(i + 1) - at(i + 2));
}

// 4th-order central second derivative with zero ghosts and odd-reflection
// corner correction (+1/(12 h^2) at both corners), exactly symmetric.
void d2_apply(const Grid& g, const VectorXcd& v, VectorXcd& out) {
  const int n = g.n;
  const double s = 1.0 / (12.0 * g.h() * g.h());
  out.resize(n);
  auto at = [&](int i) -> std::complex<double> {
    return (i < 0 || i >= n) ? std::complex<double>(0) : v[i];
  };
  for (int i = 0; i < n; ++i)
    out[i] = s * (-at(i - 2) + 16.0 * at(i - 1) - 30.0 * v[i] + 16.0 * at(i + 1) -
                  at(i + 2));
  out[0] += s * v[0];
  out[n - 1] += s * v[n - 1];
}

VectorXcd sample_expr(const Expr& e, const ParamSet& ps, const Grid& g) {
  VectorXcd d(g.n);
  bool has_neg = false;
  for (const auto& t : e.terms)
    if (t.xpow < 0) has_neg = true;
  for (int i = 0; i < g.n; ++i) {
    double xi = g.x(i);
    if (has_neg && std::abs(xi) < 1e-12)
      throw std::domain_error("singular evaluation at grid point near 0");
    d[i] = e.eval(xi, ps);
    if (!std::isfinite(d[i].real()) || !std::isfinite(d[i].imag()))
      throw std::domain_error("non-finite expression sample");
  }
  return d;
}

LinearOperator mul_operator(const Expr& e, const ParamSet& ps, const Grid& g) {
  return {g, sample_expr(e, ps, g).asDiagonal().toDenseMatrix()};
}

LinearOperator derivative_operator(int order, const Grid& g) {
  if (order != 1 && order != 2) throw std::invalid_argument("order must be 1 or 2");
  MatrixXcd M = MatrixXcd::Zero(g.n, g.n);
  VectorXcd e = VectorXcd::Zero(g.n), col;
  for (int j = 0; j < g.n; ++j) {
    e[j] = 1.0;
    if (order == 1) d1_apply(g, e, col);
    else d2_apply(g, e, col);
    M.col(j) = col;
    e[j] = 0.0;
  }
  return {g, std::move(M)};
}

LinearOperator build_first_order(const Expr& Y, const Expr& Z, const ParamSet& ps,
                                 const Grid& g) {
  LinearOperator D1 = derivative_operator(1, g);
  MatrixXcd M = sample_expr(Y, ps, g).asDiagonal() * D1.matrix;
  M += sample_expr(Z, ps, g).asDiagonal().toDenseMatrix();
  return {g, std::move(M)};
}

LinearOperator build_hamiltonian(const Expr& X, const Expr& V, const ParamSet& ps,
                                 const Grid& g) {
  LinearOperator D2 = derivative_operator(2, g);
  MatrixXcd M = sample_expr(X, ps, g).asDiagonal() * D2.matrix;
  M += sample_expr(V, ps, g).asDiagonal().toDenseMatrix();
  return {g, std::move(M)};
}

LinearOperator commutator(const LinearOperator& A, const LinearOperator& B) {
  if (!(A.grid == B.grid)) throw std::invalid_argument("grid mismatch");
  return {A.grid, A.matrix * B.matrix - B.matrix * A.matrix};
}

LinearOperator adjoint(const LinearOperator& A) {
  return {A.grid, A.matrix.adjoint()};
}

Op op_zero(const Grid& g) {
  auto z = [n = g.n](const VectorXcd&) { return VectorXcd::Zero(n).eval(); };
  return {g, z, z};
}
Op op_identity(const Grid& g) {
  auto id = [](const VectorXcd& v) { return v; };
  return {g, id, id};
}
Op op_diag(VectorXcd d, const Grid& g) {
  auto dd = std::make_shared<VectorXcd>(std::move(d));
  return {g,
          [dd](const VectorXcd& v) { return (dd->array() * v.array()).matrix().eval(); },
          [dd](const VectorXcd& v) {
            return (dd->array().conjugate() * v.array()).matrix().eval();
          }};
}
Op op_diag_expr(const Expr& e, const ParamSet& ps, const Grid& g) {
  return op_diag(sample_expr(e, ps, g), g);
}
Op op_d1(const Grid& g) {
  // D1 is exactly antisymmetric and real: adjoint = -D1.
  auto f = [g](const VectorXcd& v) {
    VectorXcd out;
    d1_apply(g, v, out);
    return out;
  };
  auto fa = [g](const VectorXcd& v) {
    VectorXcd out;
    d1_apply(g, v, out);
    return (-out).eval();
  };
  return {g, f, fa};
}
Op op_d2(const Grid& g) {
  // D2 is exactly symmetric and real: self-adjoint.
  auto f = [g](const VectorXcd& v) {
    VectorXcd out;
    d2_apply(g, v, out);
    return out;
  };
  return {g, f, f};
}
Op op_from_matrix(const LinearOperator& A) {
  auto M = std::make_shared<MatrixXcd>(A.matrix);
  return {A.grid, [M](const VectorXcd& v) { return (*M * v).eval(); },
          [M](const VectorXcd& v) { return (M->adjoint() * v).eval(); }};
}
Op op_scale(std::complex<double> c, const Op& A) {
  return {A.grid, [c, A](const VectorXcd& v) { return (c * A.apply(v)).eval(); },
          [c, A](const VectorXcd& v) { return (std::conj(c) * A.applyAdj(v)).eval(); }};
}
Op op_add(const Op& A, const Op& B) {
  return {A.grid,
          [A, B](const VectorXcd& v) { return (A.apply(v) + B.apply(v)).eval(); },
          [A, B](const VectorXcd& v) { return (A.applyAdj(v) + B.applyAdj(v)).eval(); }};
}
Op op_sub(const Op& A, const Op& B) { return op_add(A, op_scale(-1.0, B)); }
Op op_compose(const Op& A, const Op& B) {
  return {A.grid,
          [A, B](const VectorXcd& v) { return A.apply(B.apply(v)); },
          [A, B](const VectorXcd& v) { return B.applyAdj(A.applyAdj(v)); }};
}
Op op_adjoint(const Op& A) { return {A.grid, A.applyAdj, A.apply}; }
Op op_commutator(const Op& A, const Op& B) {
  return op_sub(op_compose(A, B), op_compose(B, A));
}

}  // namespace qda
