#include <algorithm>

#include "coxtop/coefficients.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

CoefficientSystem::CoefficientSystem(ChamberSystem Phi) : phi_(std::move(Phi)), poset_(phi_.type()) {}

const Residues& CoefficientSystem::residues_of(GenSet T) const {
  auto it = residues_.find(T.bits());
  if (it == residues_.end()) it = residues_.emplace(T.bits(), residues(phi_, T)).first;
  return it->second;
}

std::size_t CoefficientSystem::rank(GenSet T) const {
  return poset_.contains(T) ? residues_of(T).count() : 0;
}

IntMatrix CoefficientSystem::residue_module(GenSet T) const {
  const std::size_t r = rank(T);
  IntMatrix out(phi_.size(), r);
  if (r == 0) return out;
  const auto& R = residues_of(T);
  for (std::size_t c = 0; c < phi_.size(); ++c) out.at(c, static_cast<std::size_t>(R.residue_of[c])) = 1;
  return out;
}

std::vector<std::vector<Integer>> CoefficientSystem::above_generators(GenSet T) const {
  std::vector<std::vector<Integer>> out;
  const std::size_t r = rank(T);
  if (r == 0) return out;
  const auto& R = residues_of(T);
  for (GenSet U : poset_.members()) {
    if (!T.proper_subset_of(U)) continue;
    const auto& RU = residues_of(U);
    std::vector<std::vector<Integer>> block(RU.count(), std::vector<Integer>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
      block[static_cast<std::size_t>(RU.residue_of[R.members[i].front()])][i] = 1;
    for (auto& v : block) out.push_back(std::move(v));
  }
  return out;
}

IntMatrix CoefficientSystem::above_module(GenSet T) const {
  const std::size_t r = rank(T);
  if (r == 0) return IntMatrix(phi_.size(), 0);
  const auto basis = span_basis(r, above_generators(T));
  IntMatrix out(phi_.size(), basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    const auto v = from_residue_coordinates(T, basis.column(j));
    for (std::size_t c = 0; c < phi_.size(); ++c) out.at(c, j) = v[c];
  }
  return out;
}

GroupEntry CoefficientSystem::d_quotient(GenSet T) const {
  GroupEntry out;
  const std::size_t r = rank(T);
  if (r == 0) return out;
  const auto q = quotient_structure(r, above_generators(T));
  out.free_rank = Rank(static_cast<long>(q.free_rank));
  out.torsion = q.torsion;
  return out;
}

const IntMatrix& CoefficientSystem::splitting(GenSet T) const {
  auto it = splittings_.find(T.bits());
  if (it != splittings_.end()) return it->second;
  const std::size_t r = rank(T);
  IntMatrix out(phi_.size(), 0);
  if (r > 0) {
    IntMatrix comp;
    try {
      comp = direct_complement(r, above_generators(T));
    } catch (const TheoremViolation&) {
      throw TheoremViolation("D^" + matrix().name(T) + " has torsion; A^{>T} is not a direct summand");
    }
    out = IntMatrix(phi_.size(), comp.cols());
    for (std::size_t j = 0; j < comp.cols(); ++j) {
      const auto v = from_residue_coordinates(T, comp.column(j));
      for (std::size_t c = 0; c < phi_.size(); ++c) out.at(c, j) = v[c];
    }
  }
  return splittings_.emplace(T.bits(), std::move(out)).first->second;
}

std::vector<Integer> CoefficientSystem::to_residue_coordinates(GenSet T, const std::vector<Integer>& v) const {
  if (v.size() != phi_.size()) throw ValidationError("vector length differs from the number of chambers");
  const std::size_t r = rank(T);
  std::vector<Integer> out(r);
  const auto& R = residues_of(T);
  for (std::size_t i = 0; i < r; ++i) {
    out[i] = v[R.members[i].front()];
    for (std::size_t c : R.members[i])
      if (v[c] != out[i])
        throw TheoremViolation("vector is not constant on the " + matrix().name(T) + "-residue of chamber " +
                               std::to_string(R.members[i].front()));
  }
  if (r == 0)
    for (const auto& x : v)
      if (x != 0) throw TheoremViolation("nonzero vector in the zero module A^" + matrix().name(T));
  return out;
}

std::vector<Integer> CoefficientSystem::from_residue_coordinates(GenSet T, const std::vector<Integer>& coords) const {
  if (coords.size() != rank(T)) throw ValidationError("coordinate vector has the wrong length");
  std::vector<Integer> out(phi_.size(), 0);
  if (coords.empty()) return out;
  const auto& R = residues_of(T);
  for (std::size_t c = 0; c < phi_.size(); ++c) out[c] = coords[static_cast<std::size_t>(R.residue_of[c])];
  return out;
}

DecompositionWitness verify_decomposition(const CoefficientSystem& A, GenSet T) {
  if (!A.poset().contains(T)) throw ValidationError("T = " + A.matrix().name(T) + " is not spherical");
  DecompositionWitness w;
  w.base = T;
  std::vector<std::vector<Integer>> columns;
  for (GenSet V : A.poset().members()) {
    if (!T.subset_of(V)) continue;
    const auto& hat = A.splitting(V);
    w.pieces.emplace_back(V, hat.cols());
    for (std::size_t j = 0; j < hat.cols(); ++j) columns.push_back(A.to_residue_coordinates(T, hat.column(j)));
  }
  const std::size_t r = A.rank(T);
  w.assembled = IntMatrix::from_columns(r, columns);
  w.square = columns.size() == r;
  w.determinant = w.square ? determinant(w.assembled) : Integer(0);
  return w;
}

CochainComplex coefficient_cochains(const MirroredComplex& X, const SimplicialComplex& B,
                                    const CoefficientSystem& A, bool augmented) {
  const SimplicialComplex& K = X.complex();
  if (!B.is_subcomplex_of(K)) throw ValidationError("B is not a subcomplex of X");
  if (X.matrix() != A.matrix()) throw ValidationError("mirror structure and chamber system have different types");
  const bool with_empty = augmented && !K.is_void() && B.is_void();
  const int lo = with_empty ? -1 : 0;
  const int hi = K.dimension();
  CochainComplex C;
  C.first_degree = lo;
  if (hi < lo) return C;

  // offset[d][i]: first coordinate of the summand of face i in degree d, or
  // -1 when the face lies in B.
  std::vector<std::vector<long>> offset(static_cast<std::size_t>(hi + 2));
  auto slot = [&](int d) -> std::vector<long>& { return offset[static_cast<std::size_t>(d + 1)]; };
  for (int d = lo; d <= hi; ++d) {
    std::size_t total = 0;
    if (d == -1) {
      slot(d).push_back(0);
      total = A.rank(X.empty_face_label());
    } else {
      const auto& faces = K.faces(d);
      for (std::size_t i = 0; i < faces.size(); ++i) {
        if (!B.is_void() && B.contains(K.names_of(faces[i]))) {
          slot(d).push_back(-1);
          continue;
        }
        slot(d).push_back(static_cast<long>(total));
        total += A.rank(X.label(d, i));
      }
    }
    C.dims.push_back(total);
  }

  for (int d = lo; d < hi; ++d) {
    SparseIntMatrix m(C.dims[static_cast<std::size_t>(d + 1 - lo)], C.dims[static_cast<std::size_t>(d - lo)]);
    const auto& upper = K.faces(d + 1);
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const long row0 = slot(d + 1)[i];
      if (row0 < 0) continue;
      const GenSet Su = X.label(d + 1, i);
      const std::size_t ru = A.rank(Su);
      if (ru == 0) continue;
      const auto& Ru = A.residues_of(Su);
      auto add_face = [&](GenSet Sl, long col0, int sign) {
        if (col0 < 0 || A.rank(Sl) == 0) return;
        const auto& Rl = A.residues_of(Sl);
        for (std::size_t k = 0; k < ru; ++k) {
          const auto col = static_cast<std::size_t>(col0 + Rl.residue_of[Ru.members[k].front()]);
          m.add(static_cast<std::size_t>(row0) + k, col, sign);
        }
      };
      if (d == -1) {
        add_face(X.empty_face_label(), 0, 1);
        continue;
      }
      const auto& f = upper[i];
      for (std::size_t j = 0; j < f.size(); ++j) {
        SimplicialComplex::Face g = f;
        g.erase(g.begin() + static_cast<long>(j));
        const auto gi = static_cast<std::size_t>(K.face_index(g));
        add_face(X.label(d, gi), slot(d)[gi], j % 2 == 0 ? 1 : -1);
      }
    }
    C.d.push_back(std::move(m));
  }
  return C;
}

GradedAbelianGroup coefficient_cohomology(const MirroredComplex& X, const SimplicialComplex& B,
                                          const CoefficientSystem& A, bool augmented) {
  const auto C = coefficient_cochains(X, B, A, augmented);
  C.check();
  return cochain_cohomology(C);
}

GroupEntry submodule_quotient(std::size_t n, const std::vector<std::vector<Integer>>& big,
                              const std::vector<std::vector<Integer>>& small) {
  GroupEntry out;
  const auto basis = span_basis(n, big);
  std::vector<std::vector<Integer>> coords;
  for (const auto& v : small) {
    auto c = coordinates_in(basis, v);
    if (!c) throw TheoremViolation("submodule is not contained in the ambient module");
    coords.push_back(std::move(*c));
  }
  const auto q = quotient_structure(basis.cols(), coords);
  out.free_rank = Rank(static_cast<long>(q.free_rank));
  out.torsion = q.torsion;
  return out;
}

bool SigmaReport::passed() const {
  return std::all_of(comparisons.begin(), comparisons.end(),
                     [](const SigmaComparison& c) { return c.concentrated && c.agrees; });
}

namespace {

GradedAbelianGroup in_degree(int degree, GroupEntry e) {
  GradedAbelianGroup g;
  g.set(degree, std::move(e));
  return g;
}

GroupEntry free_of_rank(std::size_t r) {
  GroupEntry e;
  e.free_rank = Rank(static_cast<long>(r));
  return e;
}

bool concentrated_in(const GradedAbelianGroup& g, int degree) {
  for (const auto& [k, e] : g.entries())
    if (k != degree || !e.is_free()) return false;
  return true;
}

}  // namespace

SigmaReport sigma_formula_check(const CoefficientSystem& A, GenSet T, GenSet U) {
  const CoxeterMatrix& M = A.matrix();
  const GenSet S = M.all();
  if (!A.poset().contains(T)) throw ValidationError("T = " + M.name(T) + " is not spherical");
  if (!U.subset_of(S - T)) throw ValidationError("U must be a subset of S - T");
  SigmaReport report;
  report.T = T;
  report.U = U;
  const int n = M.rank() - 1;
  const int m = n - T.size();
  report.m = m;

  const auto delta = classical_chamber(M);
  const auto sigma = delta.restrict_to(mirror_intersection(delta, T));
  const auto sigma_U = mirror_union(sigma, U);
  const auto boundary = intersection_of(sigma_U, mirror_union(sigma, (S - T) - U));
  const auto sigma_U_mirrored = sigma.restrict_to(sigma_U);

  const std::size_t rT = A.rank(T);
  // Indicators of W-residues for the given types, in A^T coordinates.
  auto generators = [&](const std::vector<GenSet>& types) {
    std::vector<std::vector<Integer>> out;
    const auto& RT = A.residues_of(T);
    for (GenSet V : types) {
      if (!A.poset().contains(V)) continue;
      const auto& RV = A.residues_of(V);
      std::vector<std::vector<Integer>> block(RV.count(), std::vector<Integer>(rT, 0));
      for (std::size_t i = 0; i < rT; ++i) block[static_cast<std::size_t>(RV.residue_of[RT.members[i].front()])][i] = 1;
      for (auto& v : block) out.push_back(std::move(v));
    }
    return out;
  };
  auto hat_sum = [&](auto&& keep) {
    std::size_t r = 0;
    for (GenSet V : A.poset().members())
      if (T.subset_of(V) && keep(V - T)) r += A.splitting(V).cols();
    return r;
  };

  std::vector<GenSet> outside_singles;  // T + s, s in (S-T)-U
  for (int s : ((S - T) - U).members()) outside_singles.push_back(T.with(s));
  std::vector<GenSet> inside_singles;  // T + s, s in U
  for (int s : U.members()) inside_singles.push_back(T.with(s));
  std::vector<GenSet> mixed_pairs;  // T + s + t, s in U, t in (S-T)-U
  for (int s : U.members())
    for (int t : ((S - T) - U).members()) mixed_pairs.push_back(T.with(s).with(t));

  {
    SigmaComparison c;
    c.name = "H(sigma, sigma^U)";
    c.top_degree = m;
    c.direct = coefficient_cohomology(sigma, sigma_U, A, true);
    c.quotient_formula = in_degree(m, submodule_quotient(rT, generators({T}), generators(outside_singles)));
    c.hat_formula = in_degree(m, free_of_rank(hat_sum([&](GenSet D) { return D.subset_of(U); })));
    report.comparisons.push_back(std::move(c));
  }
  {
    SigmaComparison c;
    c.name = "H(sigma^U, boundary)";
    c.top_degree = m - 1;
    c.direct = coefficient_cohomology(sigma_U_mirrored, boundary, A, true);
    const auto span = generators(inside_singles);
    c.quotient_formula = in_degree(m - 1, free_of_rank(span.empty() ? 0 : span_basis(rT, span).cols()));
    c.hat_formula = in_degree(m - 1, free_of_rank(hat_sum([&](GenSet D) { return D.intersects(U); })));
    report.comparisons.push_back(std::move(c));
  }
  {
    SigmaComparison c;
    c.name = "H(sigma^U)";
    c.top_degree = m - 1;
    c.direct = coefficient_cohomology(sigma_U_mirrored, SimplicialComplex(), A, true);
    c.quotient_formula = in_degree(m - 1, submodule_quotient(rT, generators(inside_singles), generators(mixed_pairs)));
    // Strict containment V > T: the summand V = T belongs to H(sigma).
    c.hat_formula = in_degree(m - 1, free_of_rank(hat_sum([&](GenSet D) { return !D.empty() && D.subset_of(U); })));
    report.comparisons.push_back(std::move(c));
  }
  for (auto& c : report.comparisons) {
    c.concentrated = concentrated_in(c.direct, c.top_degree);
    c.agrees = c.direct == c.quotient_formula && c.direct == c.hat_formula;
  }
  return report;
}

FiltrationReport filtration_ranks(const CoefficientSystem& A) {
  FiltrationReport out;
  const std::size_t n = A.chambers().size();
  const int top = A.poset().max_size();
  auto gens = [&](auto&& keep) {
    std::vector<std::vector<Integer>> v;
    for (GenSet T : A.poset().members())
      if (keep(T.size())) {
        const auto cols = A.residue_module(T).columns();
        v.insert(v.end(), cols.begin(), cols.end());
      }
    return v;
  };
  auto rank_of = [&](const std::vector<std::vector<Integer>>& g) {
    return g.empty() ? std::size_t{0} : invariant_factors(IntMatrix::from_columns(n, g)).size();
  };
  std::vector<std::vector<std::vector<Integer>>> at_least;
  std::vector<std::vector<std::vector<Integer>>> at_most;
  for (int p = 0; p <= top + 1; ++p) {
    at_least.push_back(gens([p](int k) { return k >= p; }));
    at_most.push_back(gens([p](int k) { return k <= p; }));
    out.ranks_at_least.push_back(rank_of(at_least.back()));
    out.ranks_at_most.push_back(rank_of(at_most.back()));
  }
  for (int p = 0; p <= top; ++p) {
    std::size_t d = 0;
    for (GenSet T : A.poset().members())
      if (T.size() == p) {
        const auto e = A.d_quotient(T);
        d += e.free_rank.value().convert_to<std::size_t>();
      }
    out.d_ranks.push_back(d);
  }
  // F_p / F_{p+1} for one reading; zero when F_{p+1} is not inside F_p.
  auto graded = [&](const std::vector<std::vector<std::vector<Integer>>>& F, std::vector<std::size_t>& ranks,
                    std::vector<bool>& torsion_free) {
    ranks.clear();
    torsion_free.clear();
    for (int p = 0; p <= top; ++p) {
      const auto& big = F[static_cast<std::size_t>(p)];
      const auto& small = F[static_cast<std::size_t>(p + 1)];
      GroupEntry q;
      try {
        q = big.empty() ? GroupEntry{} : submodule_quotient(n, big, small);
      } catch (const TheoremViolation&) {
        q = GroupEntry{};
      }
      ranks.push_back(q.free_rank.value().convert_to<std::size_t>());
      torsion_free.push_back(q.torsion.empty());
    }
  };
  std::vector<std::size_t> ranks_least;
  std::vector<bool> free_least;
  graded(at_least, ranks_least, free_least);
  std::vector<std::size_t> ranks_most;
  std::vector<bool> free_most;
  graded(at_most, ranks_most, free_most);
  auto all_free = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  if (ranks_least == out.d_ranks && all_free(free_least)) {
    out.convention = "|T|>=p";
    out.matches = true;
    out.graded_ranks = ranks_least;
    out.graded_torsion_free = free_least;
  } else if (ranks_most == out.d_ranks && all_free(free_most)) {
    out.convention = "|T|<=p";
    out.matches = true;
    out.graded_ranks = ranks_most;
    out.graded_torsion_free = free_most;
  } else {
    out.convention = "none";
    out.graded_ranks = ranks_least;
    out.graded_torsion_free = free_least;
  }
  return out;
}

}  // namespace coxtop
