#ifndef COXTOP_REALIZATION_HPP
#define COXTOP_REALIZATION_HPP

#include <vector>

#include "coxtop/chamber_system.hpp"
#include "coxtop/coefficients.hpp"
#include "coxtop/complexes.hpp"
#include "coxtop/graded_group.hpp"

namespace coxtop {

/// U(Phi, X) as a simplicial complex: one copy of each face c of X per
/// S(c)-residue of Phi. The vertex for model vertex x and residue r is named
/// "x#r".
struct RealizedComplex {
  SimplicialComplex complex;
  /// Number of faces per dimension predicted by residue counts.
  std::vector<std::size_t> expected_cells;
};

/// Throws ValidationError when the glued cells do not form a simplicial
/// complex (two cells with the same vertex set), which cannot happen for a
/// building.
RealizedComplex realize(const ChamberSystem& Phi, const MirroredComplex& X);

/// U(W, Delta) for finite W.
RealizedComplex coxeter_complex(const CoxeterMatrix& M);

GradedAbelianGroup realization_cohomology(const RealizedComplex& R);

/// (+)_T H*(X, X^{S-T}) (x) A-hat^T for a finite chamber system.
GradedAbelianGroup formula_right_side(const MirroredComplex& X, const CoefficientSystem& A);

struct FormulaCheck {
  GradedAbelianGroup realized;
  GradedAbelianGroup formula;
  long realized_euler = 0;
  long formula_euler = 0;
  bool equal = false;
  bool euler_equal = false;
};

/// H*_c(U(Phi, X)) computed on the realization versus the decomposition
/// formula.
FormulaCheck formula_cross_check(const CoefficientSystem& A, const MirroredComplex& X);

/// Alternating sum of free ranks; requires finite ranks.
long euler_characteristic(const GradedAbelianGroup& g);

}  // namespace coxtop

#endif
