#include "coxtop/report_json.hpp"

namespace coxtop {

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

Json rank_json(const Rank& r) { return r.is_omega() ? Json("omega") : integer_json(r.value()); }

Json subset_json(const CoxeterMatrix& M, GenSet T) { return Json(M.names(T)); }

Json entry_json(const GroupEntry& e) {
  Json out = Json::object();
  out["free_rank"] = rank_json(e.free_rank);
  Json t = Json::array();
  for (const auto& x : e.torsion) t.push_back(integer_json(x));
  out["torsion"] = t;
  if (!e.omega_torsion.empty()) {
    Json w = Json::array();
    for (const auto& x : e.omega_torsion) w.push_back(integer_json(x));
    out["omega_torsion"] = w;
  }
  return out;
}

Json graded_json(const GradedAbelianGroup& g) {
  Json out = Json::array();
  for (const auto& [k, e] : g.entries()) {
    Json row = Json::object();
    row["degree"] = k;
    const Json entry = entry_json(e);
    for (const auto& [key, value] : entry.items()) row[key] = value;
    out.push_back(row);
  }
  return out;
}

Json matrix_json(const IntMatrix& A) {
  Json out = Json::array();
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(integer_json(A.at(i, j)));
    out.push_back(row);
  }
  return out;
}

Json complex_json(const SimplicialComplex& X) {
  Json out = Json::object();
  out["void"] = X.is_void();
  out["dimension"] = X.dimension();
  out["vertices"] = X.vertices();
  Json counts = Json::array();
  for (int d = 0; d <= X.dimension(); ++d) counts.push_back(X.num_faces(d));
  out["face_counts"] = counts;
  out["faces"] = X.face_list();
  return out;
}

Json hc_json(const CoxeterMatrix& M, const HcReport& report) {
  Json out = Json::array();
  for (const auto& deg : report.degrees) {
    Json row = Json::object();
    row["degree"] = deg.degree;
    row["total"] = entry_json(deg.total);
    Json contributions = Json::array();
    for (const auto& c : deg.contributions) {
      Json item = Json::object();
      item["T"] = subset_json(M, c.T);
      item["local"] = entry_json(c.local);
      item["multiplicity"] = rank_json(c.multiplicity);
      for (const auto& [T, series] : report.series)
        if (T == c.T) item["series"] = series;
      contributions.push_back(item);
    }
    row["contributions"] = contributions;
    out.push_back(row);
  }
  return out;
}

Json witness_json(const CoxeterMatrix& M, const DecompositionWitness& w) {
  Json out = Json::object();
  out["T"] = subset_json(M, w.base);
  Json pieces = Json::array();
  for (const auto& [V, r] : w.pieces) {
    Json p = Json::object();
    p["V"] = subset_json(M, V);
    p["rank"] = r;
    pieces.push_back(p);
  }
  out["pieces"] = pieces;
  out["rows"] = w.assembled.rows();
  out["cols"] = w.assembled.cols();
  out["square"] = w.square;
  out["determinant"] = integer_json(w.determinant);
  out["matrix"] = matrix_json(w.assembled);
  out["passed"] = w.passed();
  return out;
}

Json sigma_json(const CoxeterMatrix& M, const SigmaReport& r) {
  Json out = Json::object();
  out["T"] = subset_json(M, r.T);
  out["U"] = subset_json(M, r.U);
  out["m"] = r.m;
  Json list = Json::array();
  for (const auto& c : r.comparisons) {
    Json item = Json::object();
    item["group"] = c.name;
    item["top_degree"] = c.top_degree;
    item["direct"] = graded_json(c.direct);
    item["quotient_formula"] = graded_json(c.quotient_formula);
    item["hat_formula"] = graded_json(c.hat_formula);
    item["concentrated"] = c.concentrated;
    item["agrees"] = c.agrees;
    list.push_back(item);
  }
  out["comparisons"] = list;
  out["passed"] = r.passed();
  return out;
}

}  // namespace coxtop
