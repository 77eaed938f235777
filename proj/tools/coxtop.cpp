// coxtop: command-line front end for the Coxeter/building cohomology toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "coxtop/chamber_system.hpp"
#include "coxtop/coefficients.hpp"
#include "coxtop/complexes.hpp"
#include "coxtop/errors.hpp"
#include "coxtop/hc.hpp"
#include "coxtop/realization.hpp"
#include "coxtop/report_json.hpp"

using namespace coxtop;

namespace {

struct Options {
  std::string input;
  bool json = false;
  int N = -1;
  std::string T;
  bool T_given = false;
  std::string U;
  bool U_given = false;
  std::string chamber_file;
  std::string model = "K";
  bool augmented = false;
  std::vector<int> q;
};

/// What a command produced: a JSON document, its human rendering, and the
/// exit status.
struct Outcome {
  Json json;
  std::string text;
  int status = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CoxeterMatrix load_matrix(const std::string& path) { return parse_coxeter_matrix(read_file(path)); }
ChamberSystem load_building(const std::string& path) { return parse_chamber_system(read_file(path)); }

MirroredComplex model_of(const CoxeterMatrix& M, const std::string& model) {
  if (model == "delta") return classical_chamber(M);
  if (model == "K") return davis_chamber(M);
  throw ValidationError("--model must be 'delta' or 'K'");
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string series_text(const std::vector<std::uint64_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

Outcome cmd_spherical_subsets(const Options& o) {
  const auto M = load_matrix(o.input);
  const SphericalPoset P(M);
  Outcome out;
  out.json["group_is_finite"] = P.group_is_finite();
  out.json["count"] = P.size();
  Json members = Json::array();
  std::ostringstream os;
  os << P.size() << " spherical subsets" << (P.group_is_finite() ? " (W finite)" : "") << "\n";
  for (GenSet T : P.members()) {
    Json item = Json::object();
    item["T"] = subset_json(M, T);
    const auto order = spherical_order(M, T);
    item["order"] = order ? Json(*order) : Json(nullptr);
    members.push_back(item);
    os << "  " << M.name(T) << "  |W_T| = " << (order ? std::to_string(*order) : "?") << "\n";
  }
  out.json["members"] = members;
  out.text = os.str();
  return out;
}

Outcome cmd_nerve(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto L = nerve(M);
  Outcome out;
  out.json = complex_json(L);
  std::ostringstream os;
  os << "nerve: dimension " << L.dimension() << "\n";
  for (const auto& f : L.face_list()) os << "  {" << join(f, ",") << "}\n";
  out.text = os.str();
  return out;
}

Outcome cmd_davis_chamber(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto K = davis_chamber(M);
  Outcome out;
  out.json["complex"] = complex_json(K.complex());
  Json mirrors = Json::object();
  std::ostringstream os;
  os << "K: " << K.complex().vertices().size() << " vertices, dimension " << K.complex().dimension() << "\n";
  for (int s = 0; s < M.rank(); ++s) {
    mirrors[M.label(s)] = complex_json(K.mirror(s));
    os << "  K_" << M.label(s) << ": " << K.mirror(s).vertices().size() << " vertices, faces";
    for (const auto& f : K.mirror(s).face_list()) os << " {" << join(f, " ") << "}";
    os << "\n";
  }
  out.json["mirrors"] = mirrors;
  out.text = os.str();
  return out;
}

Outcome cmd_cohomology(const Options& o) {
  Outcome out;
  std::ostringstream os;
  if (!o.chamber_file.empty()) {
    const CoefficientSystem A(load_building(o.chamber_file));
    const auto& M = A.matrix();
    const auto X = model_of(M, o.model);
    const auto h = coefficient_cohomology(X, SimplicialComplex(), A, o.augmented);
    out.json["model"] = o.model;
    out.json["coefficients"] = "I(A)";
    out.json["augmented"] = o.augmented;
    out.json["cohomology"] = graded_json(h);
    os << "H*(" << o.model << "; I(A))" << (o.augmented ? " augmented" : "") << ": " << h.str() << "\n";
  } else {
    const auto M = load_matrix(o.input);
    const auto X = model_of(M, o.model);
    GradedAbelianGroup h;
    if (o.T_given) {
      const GenSet T = M.subset(o.T);
      h = relative_cohomology(X.complex(), mirror_union(X, M.all() - T));
      out.json["T"] = subset_json(M, T);
      os << "H*(" << o.model << ", " << o.model << "^{S-" << M.name(T) << "}): " << h.str() << "\n";
    } else {
      h = cohomology(X.complex());
      os << "H*(" << o.model << "): " << h.str() << "\n";
    }
    out.json["model"] = o.model;
    out.json["cohomology"] = graded_json(h);
  }
  out.text = os.str();
  return out;
}

Outcome cmd_realize(const Options& o) {
  const auto Phi = load_building(o.input);
  const auto X = model_of(Phi.type(), o.model);
  const auto R = realize(Phi, X);
  const auto h = realization_cohomology(R);
  Outcome out;
  out.json["model"] = o.model;
  out.json["chambers"] = Phi.size();
  out.json["expected_cells"] = R.expected_cells;
  out.json["complex"] = complex_json(R.complex);
  out.json["cohomology"] = graded_json(h);
  std::ostringstream os;
  os << "U(Phi, " << o.model << "): cells per dimension";
  for (auto c : R.expected_cells) os << " " << c;
  os << "\nH*: " << h.str() << "\n";
  out.text = os.str();
  return out;
}

Outcome cmd_coxeter_complex(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto R = coxeter_complex(M);
  const auto h = realization_cohomology(R);
  Outcome out;
  out.json["cells"] = R.expected_cells;
  out.json["complex"] = complex_json(R.complex);
  out.json["cohomology"] = graded_json(h);
  std::ostringstream os;
  os << "Coxeter complex: cells per dimension";
  for (auto c : R.expected_cells) os << " " << c;
  os << "\nH*: " << h.str() << "\n";
  out.text = os.str();
  return out;
}

std::vector<GenSet> selected(const Options& o, const CoxeterMatrix& M, const SphericalPoset& P) {
  if (o.T_given) return {M.subset(o.T)};
  return P.members();
}

Outcome cmd_decompose(const Options& o) {
  const CoefficientSystem A(load_building(o.input));
  const auto& M = A.matrix();
  Outcome out;
  out.json["chambers"] = A.chambers().size();
  Json rows = Json::array();
  std::ostringstream os;
  os << std::left << std::setw(12) << "T" << std::setw(10) << "rank A^T" << std::setw(11) << "rank A^>T"
     << std::setw(12) << "D^T" << "rank Ahat^T\n";
  for (GenSet T : selected(o, M, A.poset())) {
    const auto d = A.d_quotient(T);
    const auto above = A.above_module(T);
    Json row = Json::object();
    row["T"] = subset_json(M, T);
    row["rank_A"] = A.rank(T);
    row["rank_above"] = above.cols();
    row["D"] = entry_json(d);
    if (d.is_free()) {
      const auto& hat = A.splitting(T);
      row["rank_hat"] = hat.cols();
      row["hat_basis"] = matrix_json(hat.transpose());
    }
    rows.push_back(row);
    os << std::setw(12) << M.name(T) << std::setw(10) << A.rank(T) << std::setw(11) << above.cols() << std::setw(12)
       << d.str() << (d.is_free() ? std::to_string(A.splitting(T).cols()) : "-") << "\n";
  }
  out.json["modules"] = rows;
  out.text = os.str();
  return out;
}

Outcome cmd_verify_decomposition(const Options& o) {
  const CoefficientSystem A(load_building(o.input));
  const auto& M = A.matrix();
  const GenSet T = o.T_given ? M.subset(o.T) : GenSet();
  const auto w = verify_decomposition(A, T);
  Outcome out;
  out.json = witness_json(M, w);
  std::ostringstream os;
  os << "A^" << M.name(T) << " = (+) Ahat^V:";
  for (const auto& [V, r] : w.pieces) os << " " << M.name(V) << ":" << r;
  os << "\nmatrix " << w.assembled.rows() << "x" << w.assembled.cols() << ", determinant " << w.determinant << "\n"
     << (w.passed() ? "PASS" : "FAIL") << "\n";
  out.text = os.str();
  out.status = w.passed() ? 0 : 2;
  return out;
}

Outcome cmd_sigma_check(const Options& o) {
  const CoefficientSystem A(load_building(o.input));
  const auto& M = A.matrix();
  Outcome out;
  Json reports = Json::array();
  std::ostringstream os;
  bool all = true;
  for (GenSet T : selected(o, M, A.poset())) {
    std::vector<GenSet> Us;
    if (o.U_given) Us = {M.subset(o.U)};
    else Us = all_subsets(M.all() - T);
    for (GenSet U : Us) {
      const auto r = sigma_formula_check(A, T, U);
      reports.push_back(sigma_json(M, r));
      all = all && r.passed();
      os << "T=" << M.name(T) << " U=" << M.name(U) << " m=" << r.m << ": " << (r.passed() ? "pass" : "FAIL");
      for (const auto& c : r.comparisons) os << "  " << c.name << " = " << c.direct.str();
      os << "\n";
    }
  }
  out.json["checks"] = reports;
  out.json["passed"] = all;
  out.text = os.str();
  out.status = all ? 0 : 2;
  return out;
}

Outcome cmd_hc(const Options& o) {
  const auto M = load_matrix(o.input);
  ThicknessSpec spec = ThicknessSpec::thin();
  if (!o.chamber_file.empty()) spec = ThicknessSpec::concrete(load_building(o.chamber_file));
  else if (!o.q.empty()) spec = ThicknessSpec::regular(o.q);
  const auto report = hc_standard_realization(M, spec, o.N);
  Outcome out;
  out.json = hc_json(M, report);
  std::ostringstream os;
  for (const auto& deg : report.degrees) {
    os << "H_c^" << deg.degree << " = " << deg.total.str() << "\n";
    for (const auto& c : deg.contributions)
      os << "    T=" << M.name(c.T) << "  local " << c.local.str() << "  x  " << c.multiplicity.str() << "\n";
  }
  out.text = os.str();
  return out;
}

Outcome cmd_vcd(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto r = vcd(M);
  Outcome out;
  out.json["vcd"] = r.value;
  out.json["finite_group"] = r.group_is_finite;
  if (!r.group_is_finite) out.json["witness"] = subset_json(M, r.witness);
  out.text = std::to_string(r.value) + (r.group_is_finite ? " (W finite)" : "") + "\n";
  return out;
}

Outcome cmd_duality(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto r = duality_check(M);
  Outcome out;
  out.json["is_duality"] = r.is_duality;
  if (r.is_duality) out.json["n"] = r.n;
  if (r.offending) {
    out.json["offending_T"] = subset_json(M, *r.offending);
    out.json["reason"] = r.reason;
  }
  Json punctured = Json::array();
  for (const auto& [T, h] : r.punctured) {
    Json item = Json::object();
    item["T"] = subset_json(M, T);
    item["empty_complex"] = h.is_void;
    item["reduced"] = graded_json(h.groups);
    punctured.push_back(item);
  }
  out.json["punctured"] = punctured;
  std::ostringstream os;
  if (r.is_duality) os << "duality group, n = " << r.n << "\n";
  else os << "not a duality group: T = " << M.name(*r.offending) << ", " << r.reason << "\n";
  out.text = os.str();
  return out;
}

Outcome cmd_growth(const Options& o) {
  const auto M = load_matrix(o.input);
  if (o.N < 0) throw ValidationError("growth needs --N");
  const GenSet T = o.T_given ? M.subset(o.T) : GenSet();
  const auto series = thin_multiplicity_series(M, T, o.N);
  Outcome out;
  out.json = series;
  out.text = series_text(series) + "\n";
  return out;
}

Outcome cmd_filtration(const Options& o) {
  const CoefficientSystem A(load_building(o.input));
  const auto f = filtration_ranks(A);
  const auto rows = graded_module_report(A);
  Outcome out;
  out.json["convention"] = f.convention;
  out.json["matches"] = f.matches;
  out.json["ranks_at_least"] = f.ranks_at_least;
  out.json["ranks_at_most"] = f.ranks_at_most;
  out.json["graded_ranks"] = f.graded_ranks;
  out.json["d_ranks"] = f.d_ranks;
  Json g = Json::array();
  for (const auto& row : rows) {
    Json item = Json::object();
    item["p"] = row.p;
    item["groups"] = graded_json(row.groups);
    g.push_back(item);
  }
  out.json["graded_module"] = g;
  std::ostringstream os;
  os << "filtration by " << f.convention << (f.matches ? "" : " (no reading matches)") << "\n";
  for (std::size_t p = 0; p < f.graded_ranks.size(); ++p)
    os << "  p=" << p << "  rank F_p/F_p+1 = " << f.graded_ranks[p] << "  sum D^T = " << f.d_ranks[p] << "\n";
  for (const auto& row : rows) os << "  graded p=" << row.p << ": " << row.groups.str() << "\n";
  out.text = os.str();
  out.status = f.matches ? 0 : 2;
  return out;
}

Outcome cmd_verify_building(const Options& o) {
  const auto Phi = load_building(o.input);
  const auto r = verify_building(Phi);
  Outcome out;
  Json checks = Json::array();
  std::ostringstream os;
  for (const auto& c : r.checks) {
    Json item = Json::object();
    item["check"] = c.name;
    item["passed"] = c.passed;
    item["skipped"] = c.skipped;
    item["detail"] = c.detail;
    checks.push_back(item);
    os << (c.skipped ? "skip" : c.passed ? "pass" : "FAIL") << "  " << c.name
       << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
  }
  out.json["chambers"] = Phi.size();
  out.json["checks"] = checks;
  out.json["passed"] = r.passed();
  out.text = os.str();
  out.status = r.passed() ? 0 : 1;
  return out;
}

Outcome cmd_metric_flag(const Options& o) {
  const auto M = load_matrix(o.input);
  const auto r = metric_flag_check(M);
  Outcome out;
  out.json["ok"] = r.ok;
  out.json["cliques_checked"] = r.cliques_checked;
  Json bad = Json::array();
  for (GenSet T : r.mismatches) bad.push_back(subset_json(M, T));
  out.json["mismatches"] = bad;
  out.text = std::string(r.ok ? "true" : "false") + " (" + std::to_string(r.cliques_checked) + " cliques)\n";
  out.status = r.ok ? 0 : 2;
  return out;
}

// Specs: digon:P,Q  projective:Q  thin:<matrix file>  product:<a.bld>,<b.bld>
Outcome cmd_emit_building(const Options& o) {
  const auto colon = o.input.find(':');
  const std::string kind = o.input.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : o.input.substr(colon + 1);
  auto ints = [&](std::size_t count) {
    std::vector<int> v;
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
        throw ValidationError("bad integer '" + tok + "' in '" + o.input + "'");
      v.push_back(std::stoi(tok));
    }
    if (v.size() != count) throw ValidationError("expected " + std::to_string(count) + " integers in '" + o.input + "'");
    return v;
  };
  std::optional<ChamberSystem> Phi;
  if (kind == "digon") {
    const auto v = ints(2);
    Phi.emplace(digon_building(v[0], v[1]));
  } else if (kind == "projective") {
    Phi.emplace(projective_plane_building(ints(1)[0]));
  } else if (kind == "thin") {
    Phi.emplace(thin_building(load_matrix(arg)));
  } else if (kind == "product") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw ValidationError("product needs two files: product:a.bld,b.bld");
    Phi.emplace(product_building(load_building(arg.substr(0, comma)), load_building(arg.substr(comma + 1))));
  } else {
    throw ValidationError("unknown building kind '" + kind + "' (digon, projective, thin, product)");
  }
  Outcome out;
  out.text = to_text(*Phi);
  out.json["building"] = out.text;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cohomology of Coxeter groups, buildings and their realizations"};
  app.require_subcommand(1);
  Options o;

  struct Verb {
    const char* name;
    const char* help;
    Outcome (*run)(const Options&);
    const char* input_help;
  };
  const std::vector<Verb> verbs = {
      {"spherical-subsets", "list the spherical subsets of S", cmd_spherical_subsets, "Coxeter matrix file"},
      {"nerve", "the nerve L", cmd_nerve, "Coxeter matrix file"},
      {"davis-chamber", "the Davis chamber K and its mirrors", cmd_davis_chamber, "Coxeter matrix file"},
      {"cohomology", "H*(X), H*(X, X^{S-T}) or H*(X; I(A)) with --chamber-file", cmd_cohomology,
       "Coxeter matrix file"},
      {"realize", "realization U(Phi, X) and its cohomology", cmd_realize, "chamber system file"},
      {"coxeter-complex", "Coxeter complex U(W, Delta) of a finite W", cmd_coxeter_complex, "Coxeter matrix file"},
      {"decompose", "A^T, A^{>T}, D^T and the splittings", cmd_decompose, "chamber system file"},
      {"verify-decomposition", "witness for A^T = (+) Ahat^V", cmd_verify_decomposition, "chamber system file"},
      {"sigma-check", "coefficient cohomology of faces of Delta versus the closed formulas", cmd_sigma_check,
       "chamber system file"},
      {"hc", "compactly supported cohomology of U(Phi, K)", cmd_hc, "Coxeter matrix file"},
      {"vcd", "virtual cohomological dimension", cmd_vcd, "Coxeter matrix file"},
      {"duality", "duality group test via punctured nerve cohomology", cmd_duality, "Coxeter matrix file"},
      {"growth", "thin multiplicity series #{w : In(w) = T, l(w) = k}", cmd_growth, "Coxeter matrix file"},
      {"filtration", "filtration ranks and associated graded report", cmd_filtration, "chamber system file"},
      {"verify-building", "panel, rank-2 residue and W-distance checks", cmd_verify_building, "chamber system file"},
      {"metric-flag", "nerve versus positive definiteness on every clique", cmd_metric_flag, "Coxeter matrix file"},
      {"emit-building", "print a constructed building (digon:P,Q projective:Q thin:FILE product:A,B)",
       cmd_emit_building, "building spec"},
  };
  std::vector<std::pair<CLI::App*, const Verb*>> subs;
  for (const auto& v : verbs) {
    auto* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("input", o.input, v.input_help)->required();
    sub->add_flag("--json", o.json, "print JSON instead of a table");
    sub->add_option("--N", o.N, "truncation length / radius");
    sub->add_option("--T", o.T, "subset of S, e.g. 's,t' (empty string for the empty set)");
    sub->add_option("--U", o.U, "subset of S - T for sigma-check");
    sub->add_option("--chamber-file", o.chamber_file, "chamber system file");
    sub->add_option("--model", o.model, "chamber model: delta or K")->check(CLI::IsMember({"delta", "K"}));
    sub->add_flag("--augmented", o.augmented, "include the empty simplex in degree -1");
    sub->add_option("--q", o.q, "regular thickness q_s per generator")->delimiter(',');
    subs.emplace_back(sub, &v);
  }
  CLI11_PARSE(app, argc, argv);

  for (const auto& [sub, verb] : subs) {
    if (!sub->parsed()) continue;
    o.T_given = sub->count("--T") > 0;
    o.U_given = sub->count("--U") > 0;
    try {
      const Outcome out = verb->run(o);
      if (o.json && std::string(verb->name) != "emit-building") std::cout << out.json.dump(2) << "\n";
      else std::cout << out.text;
      return out.status;
    } catch (const TheoremViolation& e) {
      std::cerr << "theorem violation: " << e.what() << "\n";
      return 2;
    } catch (const ValidationError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}
