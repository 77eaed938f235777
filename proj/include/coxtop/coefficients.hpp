#ifndef COXTOP_COEFFICIENTS_HPP
#define COXTOP_COEFFICIENTS_HPP

#include <map>
#include <string>
#include <vector>

#include "coxtop/chamber_system.hpp"
#include "coxtop/complexes.hpp"
#include "coxtop/graded_group.hpp"
#include "coxtop/integer_matrix.hpp"

namespace coxtop {

/// The modules A^T, A^{>T}, D^T and the chosen splittings of a finite
/// chamber system, all in coordinates of Z^Phi (chamber order of Phi).
///
/// A^T has the basis of T-residue indicators, residues ordered by smallest
/// chamber; for nonspherical T it is the zero module. A vector of A^T is
/// written in these coordinates by reading its value on each residue's
/// smallest chamber.
class CoefficientSystem {
 public:
  explicit CoefficientSystem(ChamberSystem Phi);

  const ChamberSystem& chambers() const { return phi_; }
  const CoxeterMatrix& matrix() const { return phi_.type(); }
  const SphericalPoset& poset() const { return poset_; }

  /// T-residues (defined for every T, spherical or not).
  const Residues& residues_of(GenSet T) const;
  /// rank A^T: number of T-residues, 0 for nonspherical T.
  std::size_t rank(GenSet T) const;

  /// Basis of A^T as columns in Z^Phi.
  IntMatrix residue_module(GenSet T) const;
  /// Indicators of the U-residues for all spherical U strictly containing T,
  /// in A^T coordinates.
  std::vector<std::vector<Integer>> above_generators(GenSet T) const;
  /// A basis of A^{>T}, as columns in Z^Phi.
  IntMatrix above_module(GenSet T) const;
  /// D^T = A^T / A^{>T}.
  GroupEntry d_quotient(GenSet T) const;
  /// The splitting A-hat^T, as columns in Z^Phi. Throws TheoremViolation when
  /// D^T has torsion.
  const IntMatrix& splitting(GenSet T) const;
  /// Coordinates in A^T of a vector of Z^Phi that is constant on
  /// T-residues; throws TheoremViolation otherwise.
  std::vector<Integer> to_residue_coordinates(GenSet T, const std::vector<Integer>& v) const;
  /// Inverse of to_residue_coordinates.
  std::vector<Integer> from_residue_coordinates(GenSet T, const std::vector<Integer>& coords) const;

 private:
  ChamberSystem phi_;
  SphericalPoset poset_;
  mutable std::map<std::uint64_t, Residues> residues_;
  mutable std::map<std::uint64_t, IntMatrix> splittings_;
};

/// The witness A^T = (+)_{V >= T} A-hat^V.
struct DecompositionWitness {
  GenSet base;
  /// (V, rank of A-hat^V) in canonical order of V.
  std::vector<std::pair<GenSet, std::size_t>> pieces;
  /// Columns: the A-hat^V bases in A^T coordinates, concatenated.
  IntMatrix assembled;
  bool square = false;
  /// Exact determinant; 0 when not square.
  Integer determinant = 0;
  bool passed() const { return square && (determinant == 1 || determinant == -1); }
};

DecompositionWitness verify_decomposition(const CoefficientSystem& A, GenSet T);

/// C*(X, B; I(A)): one summand A^{S(c)} per cell c of X not in B. With
/// `augmented`, the empty simplex of a nonvoid X contributes A^{S(empty)} in
/// degree -1 whenever B is void; this is the reduced form needed when W is
/// finite, and agrees with the plain form when W is infinite (then
/// A^{S(empty)} = A^S = 0).
CochainComplex coefficient_cochains(const MirroredComplex& X, const SimplicialComplex& B,
                                    const CoefficientSystem& A, bool augmented);

GradedAbelianGroup coefficient_cohomology(const MirroredComplex& X, const SimplicialComplex& B,
                                          const CoefficientSystem& A, bool augmented);

/// Z^n modulo a submodule, where both are given by generators in Z^n:
/// span(big) / span(small), small contained in big.
GroupEntry submodule_quotient(std::size_t n, const std::vector<std::vector<Integer>>& big,
                              const std::vector<std::vector<Integer>>& small);

/// One graded group computed two or three ways.
struct SigmaComparison {
  std::string name;  // e.g. "H(sigma, sigma^U)"
  int top_degree = 0;
  GradedAbelianGroup direct;
  GradedAbelianGroup quotient_formula;
  GradedAbelianGroup hat_formula;
  bool concentrated = false;
  bool agrees = false;
};

struct SigmaReport {
  GenSet T;
  GenSet U;
  int m = 0;
  std::vector<SigmaComparison> comparisons;
  bool passed() const;
};

/// Checks, for sigma = Delta_T and U in S - T, that the coefficient
/// cohomology of (sigma, sigma^U), (sigma^U, boundary of sigma^U) and sigma^U
/// is concentrated in degrees m, m-1, m-1 and matches both the quotient
/// formulas and the A-hat direct sums. The boundary of sigma^U is its
/// intersection with sigma^{(S-T)-U}.
SigmaReport sigma_formula_check(const CoefficientSystem& A, GenSet T, GenSet U);

/// Ranks of the graded pieces of the filtration of A by residue modules.
struct FiltrationReport {
  /// Which reading produced F_p / F_{p+1} = (+)_{|T|=p} D^T: "|T|>=p" or "|T|<=p".
  std::string convention;
  bool matches = false;
  /// rank F_p for p = 0..max|T|+1, per reading.
  std::vector<std::size_t> ranks_at_least;
  std::vector<std::size_t> ranks_at_most;
  /// rank F_p / F_{p+1} (chosen reading) and sum of D^T ranks with |T| = p.
  std::vector<std::size_t> graded_ranks;
  std::vector<std::size_t> d_ranks;
  std::vector<bool> graded_torsion_free;
};

FiltrationReport filtration_ranks(const CoefficientSystem& A);

}  // namespace coxtop

#endif
