#pragma once
#include <string>
#include <vector>
#include "qda/consistency.hpp"

namespace qda {

struct ConstraintError : std::runtime_error {
  std::string predicate;
  ConstraintError(const std::string& pred, const std::string& msg)
      : std::runtime_error(msg), predicate(pred) {}
};

// One constraint predicate: `expr` is a pure-parameter expression checked
// against the given kind after substitution.
struct Constraint {
  enum Kind { zero, nonzero, positive, real, imaginary } kind;
  std::string src;
  Expr expr;
};

struct ParamDef {
  Param name;
  Expr value;  // pure-parameter expression (free: numeric literal default)
  std::string src;
};

struct FamilySpec {
  std::string id;
  bool hermitian = true;
  std::string expected_algebra;  // su11 | su11-pseudo | partial | nlda
  int expected_case = 0;         // 0 = not classified by the source material
  double lo = 0, hi = 1;         // default domain (default parameters)
  Expr X, Y, Z, Q, Vreg, Vsing;
  std::string Xs, Ys, Zs, Qs, Vregs, Vsings;  // sources, for listings
  std::vector<ParamDef> free_params;    // overridable, resolved first
  std::vector<ParamDef> derived;        // computed in order unless overridden
  std::vector<Constraint> constraints;
};

// Catalog loaded from the data file (cached after first load).
const std::vector<FamilySpec>& catalog();
const FamilySpec& family(const std::string& id);

struct ParamOverride {
  std::string name;
  std::complex<double> value;
};

// defaults -> overrides -> derived (skipping overridden names).
ParamSet resolve_params(const FamilySpec& f, const std::vector<ParamOverride>& ov);

// Throws ConstraintError on the first violated predicate.
void check_constraints(const FamilySpec& f, const ParamSet& ps);

ConsistencyInput consistency_input(const FamilySpec& f, const ParamSet& ps);

// "1+2i", "-0.5i", "3" -> complex; throws std::invalid_argument.
std::complex<double> parse_complex(const std::string& s);

}  // namespace qda
