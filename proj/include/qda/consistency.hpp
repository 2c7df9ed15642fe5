#pragma once
#include <optional>
#include <string>
#include <vector>
#include "qda/expr.hpp"

namespace qda {

// Symbolic inputs for the defining-equation check of one family.
// The potential may carry a singular piece: V = Vreg + Vsing / Y^2,
// where Vsing is a parameter constant (zero when absent).  The singular
// split keeps V inside the closed expression family when 1/Y^2 itself
// is not representable (hyperbolic and trigonometric Y).
struct ConsistencyInput {
  Expr X, Y, Z, Q, Vreg, Vsing;
  ParamSet params;
};

struct RelationResult {
  std::string id;       // "X(Y''+2Z')=aY", ...
  Expr residual;        // symbolic residual (zero when the relation holds)
  bool pass = false;
};

// Evaluates the four structure relations plus the potential-defining
// identity (the latter multiplied through by Y^3 to clear 1/Y^2 poles):
//   X(Y''+2Z') = alpha*Y
//   2XY' - X'Y = (beta*Q + gamma)*X
//   XQ'        = lambda*Y
//   -2*lambda*Z + XQ'' = nu*Q + tau
//   Q(1+beta*V) = XZ'' - gamma*V - alpha*Z - YV'
std::vector<RelationResult> check_consistency(const ConsistencyInput& in);

// If `e` substitutes to an x-independent constant, return its value.
// Used to derive tau (and the potential's additive constant) directly
// from the relations instead of trusting a transcription.
std::optional<std::complex<double>> constant_value(const Expr& e, const ParamSet& ps);

// The tau that exactly satisfies -2*lambda*Z + XQ'' = nu*Q + tau, when the
// left side minus nu*Q is constant.
std::optional<std::complex<double>> derive_tau(const ConsistencyInput& in);

}  // namespace qda
