#pragma once
#include <optional>
#include "qda/catalog.hpp"
#include "qda/grid_ops.hpp"
#include "qda/opfun.hpp"

namespace qda {

using CFn = std::function<std::complex<double>(double)>;
using RFn = std::function<double(double)>;

// Diagonalization of the 2x2 commutation matrix M(H) defined by
// [H, (Qt, Pt)] = (Qt, Pt) M(H) over the commutative ring of H-functions.
// Columns of the returned mixing give S1 = Qt q1(H) + Pt p1(H) (lowering,
// eigenvalue -omega1(H)) and S2 = Qt q2(H) + Pt p2(H) (raising, +omega2(H)).
struct CommutationDiag {
  CFn q1, p1, q2, p2;
  CFn omega1, omega2;
};
CommutationDiag diagonalize_commutation_matrix(const CFn& m00, const CFn& m01,
                                               const CFn& m10, const CFn& m11);

// Validates the unit-shift functional equations
//   b0(E - omega1(E)) = b0(E) - dir,   b0(E + omega2(E)) = b0(E) + dir
// at the listed eigenvalues (dir = -1 for ladders antiparallel to energy),
// then returns the spectral operator b0(H) on the given subspace.  Throws
// std::runtime_error when a shift defect exceeds 1e-8 relative.
Op build_b0_from_omegas(const Spectrum& S, const RFn& b0_closed, const CFn& omega1,
                        const CFn& omega2, const std::vector<int>& domain,
                        int dir = +1);

// A fully instantiated realization: every operator of the construction plus
// the scalar closed forms the verifiers compare against.
struct Realization {
  const FamilySpec* family = nullptr;
  ParamSet params;
  Grid grid;
  int K = 8;                 // verification subspace size
  Spectrum spectrum;         // >= K solved levels of H
  std::vector<int> safe;     // pole-/branch-safe level indices (opfun domain)

  Op H, Qt, Pt, S1, S2, b0, b, bdag, J0, Jp, Jm;

  CFn omega1, omega2;        // diagonal of the commutation matrix, as E-functions
  RFn b0_of_E;               // closed form of b0 on the energy axis
  RFn xi_of_E;               // xi evaluated at b0(E) (empty for nlda/partial)
  RFn eta_of_E;              // adjoint defect at b0(E) (empty when eta == 1)
  double xi0 = 0;            // constant shift of J0
  double xi1 = 0;            // case-3 closed-form coefficient (0 otherwise)
  double eta_const = 1;      // case-1/2 adjoint defect
  int case_label = 0;        // 1|2|3; 0 for nlda / partial entries
  int climb_dir = +1;        // +1: J+ raises energy; -1: antiparallel ladder
  int margin = 4;            // boundary rows excluded from residual norms

  // pt-canonical only: deformation structure functions.
  bool has_nlda = false;
  Op nlda_f, nlda_g;
  RFn f_of_E, g_of_E;
};

// Builds the full realization for a catalog id.  `grid` defaults to the
// family domain (k-rescaled for the trigonometric families) with n = 2000.
// K extra levels are solved internally so raising operators stay inside the
// resolved subspace.  Throws ConstraintError / BranchViolation.
Realization instantiate(const std::string& id,
                        const std::vector<ParamOverride>& overrides = {},
                        std::optional<Grid> grid = std::nullopt, int K = 8);

}  // namespace qda
