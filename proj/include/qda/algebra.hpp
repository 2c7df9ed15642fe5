#pragma once
#include <map>
#include "qda/realize.hpp"

namespace qda {

// Case classification data: the adjoint defect eta (least-squares fit of
// S1-adjoint against S2 per level) and the diagonal [S1,S2] profile, with the
// constancy verdict derived from their relative spreads.
struct CaseClassification {
  int case_label = 0;  // 1 | 2 | 3
  std::vector<std::pair<double, std::complex<double>>> eta_samples;         // (b0, eta)
  std::vector<std::pair<double, std::complex<double>>> commutator_profile;  // (b0, <[S1,S2]>)
  double eta_spread = 0, comm_spread = 0;
  double eta_fit_residual = 0;
  double constancy_threshold = 1e-6;
};

CaseClassification classify_case(const Realization& r, int K);

// Solved dressing: the constant shift xi0, the sampled xi^2 ladder, and the
// deviation from the family closed form.
struct XiSolution {
  double xi0 = 0;
  double xi1 = 0;                  // case-3 coefficient fit
  std::vector<double> xi2_fitted;  // xi^2 at each level's b0
  std::vector<double> xi2_closed;  // closed form at the same levels
  double closed_form_dev = 0;      // max relative deviation fitted vs closed
  double functional_eq_residual = 0;  // case-3 eta*xi^2 telescoping check
  int sign = -1;                   // -1: su(1,1), +1: su(2)
};

// sign_target: -1 su(1,1), +1 su(2), 0 auto (pick the sign with xi^2 > 0).
XiSolution solve_xi(const CaseClassification& cls, const Realization& r,
                    int sign_target = 0);

// J0 = b0 + xi0, J+ = bdag xi(b0), J- = xi(b0) b  (exactly this ordering).
void assemble_generators(Realization& r, double xi0, const RFn& xi_of_E);

struct AlgebraReport {
  std::string family;
  Grid grid;
  int K = 0;
  std::map<std::string, double> residuals;
  CaseClassification classification;
  std::string sign;  // "su11" | "su2"
  double condition_number = 1;
  double tolerance = 1e-4;
  bool pass = false;
  std::vector<std::string> notes;
};

AlgebraReport verify_algebra(const Realization& r, int K);

// pt-canonical deformation-algebra residuals.
std::map<std::string, double> verify_nlda(const Realization& r, int K);

}  // namespace qda
