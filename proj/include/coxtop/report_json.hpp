#ifndef COXTOP_REPORT_JSON_HPP
#define COXTOP_REPORT_JSON_HPP

#include <json.hpp>

#include "coxtop/coefficients.hpp"
#include "coxtop/complexes.hpp"
#include "coxtop/graded_group.hpp"
#include "coxtop/hc.hpp"

namespace coxtop {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_json(const Integer& x);
Json rank_json(const Rank& r);
Json subset_json(const CoxeterMatrix& M, GenSet T);
Json entry_json(const GroupEntry& e);
/// [{"degree": k, "free_rank": ..., "torsion": [...]}, ...] over nonzero degrees.
Json graded_json(const GradedAbelianGroup& g);
Json matrix_json(const IntMatrix& A);
Json complex_json(const SimplicialComplex& X);
Json hc_json(const CoxeterMatrix& M, const HcReport& report);
Json witness_json(const CoxeterMatrix& M, const DecompositionWitness& w);
Json sigma_json(const CoxeterMatrix& M, const SigmaReport& r);

}  // namespace coxtop

#endif
