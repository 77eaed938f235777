#include "coxtop/errors.hpp"
#include "coxtop/hc.hpp"

namespace coxtop {

ThicknessSpec ThicknessSpec::regular(std::vector<int> q) {
  for (int x : q)
    if (x < 1) throw ValidationError("thickness q_s must be at least 1");
  ThicknessSpec t;
  t.kind = Kind::Regular;
  t.q = std::move(q);
  return t;
}

ThicknessSpec ThicknessSpec::concrete(ChamberSystem Phi) {
  ThicknessSpec t;
  t.kind = Kind::Concrete;
  t.building.emplace(std::move(Phi));
  return t;
}

std::vector<std::uint64_t> thin_multiplicity_series(const CoxeterMatrix& M, GenSet T, int N) {
  if (N < 0) throw ValidationError("truncation N must be nonnegative");
  const auto ball = enumerate_ball(M, N);
  std::vector<std::uint64_t> out(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& e : ball.elements())
    if (e.descents == T) ++out[static_cast<std::size_t>(e.length)];
  return out;
}

Rank thin_multiplicity(const CoxeterMatrix& M, GenSet T) {
  if (!is_spherical(M, T)) return Rank(0L);
  Rank out(1L);
  for (GenSet C : M.components(M.all())) {
    const GenSet Ti = T & C;
    if (!is_spherical(M, C)) {
      if (!Ti.empty()) out = out * Rank::omega();
      continue;
    }
    const auto table = enumerate_group(M, C);
    long count = 0;
    for (const auto& e : table.elements())
      if (e.descents == Ti) ++count;
    out = out * Rank(count);
  }
  return out;
}

HcReport hc_standard_realization(const CoxeterMatrix& M, const ThicknessSpec& thick, int N) {
  const SphericalPoset P(M);
  const auto K = davis_chamber(M);
  const GenSet S = M.all();
  HcReport report;
  report.group_is_finite = P.group_is_finite();

  std::optional<CoefficientSystem> coeffs;
  if (thick.kind == ThicknessSpec::Kind::Concrete) {
    if (thick.building->type() != M) throw ValidationError("building type does not match the Coxeter matrix");
    coeffs.emplace(*thick.building);
  }
  if (thick.kind == ThicknessSpec::Kind::Regular) {
    if (static_cast<int>(thick.q.size()) != M.rank()) throw ValidationError("one thickness per generator is required");
    if (report.group_is_finite)
      throw ValidationError("finite type with regular thickness: pass a concrete building instead");
  }

  std::vector<std::pair<GenSet, GradedAbelianGroup>> locals;
  std::vector<Rank> mult;
  for (GenSet T : P.members()) {
    locals.emplace_back(T, relative_cohomology(K.complex(), mirror_union(K, S - T)));
    switch (thick.kind) {
      case ThicknessSpec::Kind::Thin:
        mult.push_back(thin_multiplicity(M, T));
        break;
      case ThicknessSpec::Kind::Regular:
        mult.push_back(Rank::omega());
        break;
      case ThicknessSpec::Kind::Concrete:
        mult.push_back(Rank(static_cast<long>(coeffs->splitting(T).cols())));
        break;
    }
    if (thick.kind == ThicknessSpec::Kind::Thin && N >= 0)
      report.series.emplace_back(T, thin_multiplicity_series(M, T, N));
  }
  for (int k = 0; k <= K.complex().dimension(); ++k) {
    HcDegree deg;
    deg.degree = k;
    for (std::size_t i = 0; i < locals.size(); ++i) {
      const auto e = locals[i].second.at(k);
      if (e.is_zero()) continue;
      deg.total = direct_sum(deg.total, scaled(e, mult[i]));
      deg.contributions.push_back({locals[i].first, e, mult[i]});
    }
    report.degrees.push_back(std::move(deg));
  }
  return report;
}

VcdReport vcd(const CoxeterMatrix& M) {
  const SphericalPoset P(M);
  VcdReport out;
  out.group_is_finite = P.group_is_finite();
  if (out.group_is_finite) return out;
  const auto K = davis_chamber(M);
  out.value = -1;
  for (GenSet T : P.members()) {
    const auto h = relative_cohomology(K.complex(), mirror_union(K, M.all() - T));
    if (!h.is_zero() && h.top_degree() > out.value) {
      out.value = h.top_degree();
      out.witness = T;
    }
  }
  return out;
}

DualityReport duality_check(const CoxeterMatrix& M) {
  DualityReport out;
  out.punctured = punctured_nerve_homology(M);
  std::optional<int> common;
  std::optional<GenSet> first_witness;
  for (const auto& [T, h] : out.punctured) {
    if (h.is_void) {
      if (common && *common != -1) {
        out.offending = T;
        out.reason = "empty complex (degree -1) while " + M.name(*first_witness) + " is concentrated in degree " +
                     std::to_string(*common);
        return out;
      }
      common = -1;
      if (!first_witness) first_witness = T;
      continue;
    }
    for (const auto& [k, e] : h.groups.entries()) {
      if (!e.is_free()) {
        out.offending = T;
        out.reason = "torsion in degree " + std::to_string(k);
        return out;
      }
      if (common && *common != k) {
        out.offending = T;
        out.reason = *first_witness == T
                         ? "reduced cohomology in degrees " + std::to_string(*common) + " and " + std::to_string(k)
                         : "nonzero in degree " + std::to_string(k) + " while " + M.name(*first_witness) +
                               " is concentrated in degree " + std::to_string(*common);
        return out;
      }
      common = k;
      if (!first_witness) first_witness = T;
    }
  }
  out.is_duality = true;
  out.n = common ? *common + 1 : 0;
  return out;
}

std::vector<GradedModuleRow> graded_module_report(const CoefficientSystem& A) {
  const CoxeterMatrix& M = A.matrix();
  const auto K = davis_chamber(M);
  std::vector<GradedModuleRow> rows;
  for (int p = 0; p <= M.rank(); ++p) {
    GradedModuleRow row;
    row.p = p;
    for (GenSet T : A.poset().members()) {
      if (T.size() != p) continue;
      const auto d = A.d_quotient(T);
      if (!d.is_free()) throw TheoremViolation("D^" + M.name(T) + " has torsion");
      const auto local = relative_cohomology(K.complex(), mirror_union(K, M.all() - T));
      GradedAbelianGroup term;
      for (const auto& [k, e] : local.entries()) term.set(k, scaled(e, d.free_rank));
      row.groups = row.groups + term;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace coxtop
