#include <algorithm>
#include <map>
#include <set>

#include "coxtop/errors.hpp"
#include "coxtop/realization.hpp"

namespace coxtop {

RealizedComplex realize(const ChamberSystem& Phi, const MirroredComplex& X) {
  if (Phi.type() != X.matrix()) throw ValidationError("chamber system and mirror structure have different types");
  const SimplicialComplex& K = X.complex();
  RealizedComplex out;
  std::map<std::uint64_t, Residues> cache;
  auto res = [&](GenSet T) -> const Residues& {
    auto it = cache.find(T.bits());
    if (it == cache.end()) it = cache.emplace(T.bits(), residues(Phi, T)).first;
    return it->second;
  };
  // Vertex label of model vertex v in the realized copy containing chamber c.
  auto vertex_name = [&](int v, std::size_t c) {
    const auto vi = static_cast<std::size_t>(K.face_index({v}));
    return K.vertex_name(v) + "#" + std::to_string(res(X.label(0, vi)).residue_of[c]);
  };

  std::vector<std::vector<std::string>> faces;
  std::set<std::vector<std::string>> seen;
  for (int d = 0; d <= K.dimension(); ++d) {
    const auto& level = K.faces(d);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& R = res(X.label(d, i));
      expected += R.count();
      for (const auto& members : R.members) {
        std::vector<std::string> f;
        for (int v : level[i]) f.push_back(vertex_name(v, members.front()));
        std::sort(f.begin(), f.end());
        if (!seen.insert(f).second)
          throw ValidationError("realization is not a simplicial complex: two cells share the vertices of " +
                                f.front());
        faces.push_back(std::move(f));
      }
    }
    out.expected_cells.push_back(expected);
  }
  out.complex = SimplicialComplex::generated_by(faces);
  for (int d = 0; d <= K.dimension(); ++d)
    if (out.complex.num_faces(d) != out.expected_cells[static_cast<std::size_t>(d)])
      throw ValidationError("realization is not a simplicial complex: face counts differ in dimension " +
                            std::to_string(d));
  return out;
}

RealizedComplex coxeter_complex(const CoxeterMatrix& M) {
  return realize(thin_building(M), classical_chamber(M));
}

GradedAbelianGroup realization_cohomology(const RealizedComplex& R) { return cohomology(R.complex); }

GradedAbelianGroup formula_right_side(const MirroredComplex& X, const CoefficientSystem& A) {
  const GenSet S = X.matrix().all();
  GradedAbelianGroup out;
  for (GenSet T : A.poset().members()) {
    const auto rank = A.splitting(T).cols();
    if (rank == 0) continue;
    const auto local = relative_cohomology(X.complex(), mirror_union(X, S - T));
    GradedAbelianGroup term;
    for (const auto& [k, e] : local.entries()) term.set(k, scaled(e, Rank(static_cast<long>(rank))));
    out = out + term;
  }
  return out;
}

long euler_characteristic(const GradedAbelianGroup& g) {
  long chi = 0;
  for (const auto& [k, e] : g.entries()) {
    if (e.free_rank.is_omega()) throw ValidationError("Euler characteristic of an infinite-rank group");
    const long r = e.free_rank.value().convert_to<long>();
    chi += (k % 2 == 0) ? r : -r;
  }
  return chi;
}

FormulaCheck formula_cross_check(const CoefficientSystem& A, const MirroredComplex& X) {
  FormulaCheck out;
  out.realized = realization_cohomology(realize(A.chambers(), X));
  out.formula = formula_right_side(X, A);
  out.realized_euler = euler_characteristic(out.realized);
  out.formula_euler = euler_characteristic(out.formula);
  out.equal = out.realized == out.formula;
  out.euler_equal = out.realized_euler == out.formula_euler;
  return out;
}

}  // namespace coxtop
