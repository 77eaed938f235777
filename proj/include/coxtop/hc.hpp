#ifndef COXTOP_HC_HPP
#define COXTOP_HC_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxtop/chamber_system.hpp"
#include "coxtop/coefficients.hpp"
#include "coxtop/complexes.hpp"
#include "coxtop/graded_group.hpp"

namespace coxtop {

/// Thickness of the building whose standard realization is reported.
struct ThicknessSpec {
  enum class Kind { Thin, Regular, Concrete };
  Kind kind = Kind::Thin;
  /// Regular: panel size q_s + 1 for each generator (q_s >= 1).
  std::vector<int> q;
  /// Concrete: a finite chamber system of the same type.
  std::optional<ChamberSystem> building;

  static ThicknessSpec thin() { return {}; }
  static ThicknessSpec regular(std::vector<int> q);
  static ThicknessSpec concrete(ChamberSystem Phi);
};

/// a_l = #{w : l(w) = l, In(w) = T} for l = 0..N.
std::vector<std::uint64_t> thin_multiplicity_series(const CoxeterMatrix& M, GenSet T, int N);

/// #{w in W : In(w) = T}: exact when every irreducible component meeting T
/// is finite; omega when some infinite component meets T. Components
/// disjoint from T contribute a factor 1 (only the identity has no descent).
Rank thin_multiplicity(const CoxeterMatrix& M, GenSet T);

struct HcContribution {
  GenSet T;
  GroupEntry local;  // H^k(K, K^{S-T})
  Rank multiplicity;
};

struct HcDegree {
  int degree = 0;
  GroupEntry total;
  std::vector<HcContribution> contributions;  // nonzero local groups only
};

struct HcReport {
  std::vector<HcDegree> degrees;  // 0..dim K
  bool group_is_finite = false;
  /// Thin growth series per T, when requested (truncation in `series_length`).
  std::vector<std::pair<GenSet, std::vector<std::uint64_t>>> series;
};

/// H*_c(U(Phi, K)) = (+)_T H*(K, K^{S-T}) (x) A-hat^T with multiplicity rank
/// A-hat^T taken from the thickness: exact for a concrete building, from
/// descent counting for thin, omega for thick regular buildings of infinite
/// type. Growth series (length N+1) are attached for thin input when N >= 0.
HcReport hc_standard_realization(const CoxeterMatrix& M, const ThicknessSpec& thick, int N = -1);

/// max{k : H^k(K, K^{S-T}) != 0 for some spherical T}; torsion counts.
struct VcdReport {
  int value = 0;
  bool group_is_finite = false;  // value reported as 0 by convention
  GenSet witness;
};
VcdReport vcd(const CoxeterMatrix& M);

/// Reduced cohomology of K^{S-T} free and concentrated in one common degree
/// d for all spherical T (zero groups impose nothing, the void complex counts
/// as degree -1); then n = d + 1.
struct DualityReport {
  bool is_duality = false;
  int n = 0;
  /// First T breaking the condition, with the reason.
  std::optional<GenSet> offending;
  std::string reason;
  std::vector<std::pair<GenSet, ReducedCohomology>> punctured;
};
DualityReport duality_check(const CoxeterMatrix& M);

/// For a finite building and X = K: per p, (+)_{|T|=p} H*(K, K^{S-T}) (x) D^T.
struct GradedModuleRow {
  int p = 0;
  GradedAbelianGroup groups;
};
std::vector<GradedModuleRow> graded_module_report(const CoefficientSystem& A);

}  // namespace coxtop

#endif
