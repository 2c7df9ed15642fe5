#pragma once
#include "qda/realize.hpp"

namespace qda {

struct GroundState {
  VectorXcd psi;        // h-normalized
  double residual = 0;  // ||J- psi|| / ||psi|| (h-norm)
};

// Normalized minimizer of ||J- psi|| over the resolved bound subspace
// (smallest singular direction of J- restricted to the eigenvector span).
// Throws std::runtime_error when the two smallest singular values are within
// 1e-6 (relative) of each other: degenerate near-null space.
GroundState ground_state_from_annihilator(const Op& Jm, const Spectrum& basis, int K);

// Dense variant for small synthetic operators (exercises the degeneracy path).
GroundState ground_state_from_matrix(const Grid& g, const MatrixXcd& Jm);

struct LadderClimb {
  std::vector<VectorXcd> states;   // psi_0 .. psi_steps (normalized)
  std::vector<double> rayleigh;    // <psi_n, H psi_n> per state
  int steps_taken = 0;
  std::string early_stop_reason;   // empty when all steps completed
};

// psi_{n+1} = normalize(Jup psi_n); Rayleigh quotients against H recorded.
// Stops early when the raised norm collapses below 1e-10.  When a projector is
// supplied, each raised vector is passed through it before normalization.  The
// climb must live in the resolved spectral subspace: ladder operators contain
// H and singular coefficients whose discrete spectral radius (~1/h^2) amplifies
// grid-scale roundoff per application, so an unfiltered climb diverges toward
// the top of the discrete spectrum after a few steps.  The projector removes
// that noise without choosing the direction within the subspace, which remains
// entirely determined by Jup.
using Projector = std::function<VectorXcd(const VectorXcd&)>;
LadderClimb ladder_climb(const Op& Jup, const Op& H, const VectorXcd& psi0, int steps,
                         const Projector& project = nullptr);

// h-weighted oblique projector onto the span of the solved eigenvectors
// (Gram-inverse form, valid for non-orthogonal pseudo-Hermitian bases).
Projector subspace_projector(const Spectrum& basis);

struct SpectrumComparison {
  std::string family;
  std::vector<double> direct;       // oracle eigenvalues, ascending
  std::vector<double> ladder;       // Rayleigh quotients along the climb
  std::vector<double> j0;           // J0 expectation per direct eigenvector
  std::vector<double> overlaps;     // |<psi_direct, psi_ladder>|_h per level
  double annihilation_residual = 0;
  double j0_step_dev = 0;           // max deviation of the J0 sequence from unit step
  int steps_taken = 0;
  std::string early_stop_reason;
};

// Full ladder-versus-oracle comparison.  The climb starts from the state the
// energy-ground annihilator kills (J- for parallel ladders, J+ for family C's
// antiparallel one) and climbs with the opposite generator.
SpectrumComparison compare(const Realization& r, int K);

}  // namespace qda
