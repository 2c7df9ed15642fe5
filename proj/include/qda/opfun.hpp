#pragma once
#include <functional>
#include "qda/spectrum.hpp"

namespace qda {

struct BranchViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ScalarFn = std::function<std::complex<double>(double)>;

// Spectral operator function restricted to the solved subspace and
// projector-completed outside it.
//   Hermitian source:  F = sum_m f(E_m) |psi_m><psi_m|  (h-weighted).
//   Non-normal source: F = V f(Lambda) (V^H V)^{-1} V^H  (orthogonal
//   projection onto the right-eigenvector span; left-eigenvector sampling
//   amplifies boundary noise through its coordinate singularity and is
//   deliberately avoided).
// `domain` optionally restricts to a subset of eigenpair indices (pole-safe
// subsets); nullptr means all solved pairs.
Op operator_function(const Spectrum& S, const ScalarFn& f,
                     const std::vector<int>* domain = nullptr);

// Principal square root guard: evaluates sqrt(g(E)) and throws
// BranchViolation when the radicand is negative beyond tolerance.
ScalarFn guarded_sqrt(const std::function<double(double)>& radicand);

// max_m ||A psi_m||_h / (1 + scale) over the `K` lowest eigenvectors, with
// `margin` rows next to each boundary excluded (the one-sided stencil rows
// carry no physical information under Dirichlet truncation).
double subspace_residual(const Op& A, const Spectrum& S, int K, double scale = 0.0,
                         int margin = 4);

// Same metric for a single vector.
double vector_residual(const Grid& g, const VectorXcd& r, double scale = 0.0,
                       int margin = 4);

}  // namespace qda
