#include <algorithm>
#include <set>

#include "coxtop/complexes.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

SimplicialComplex SimplicialComplex::generated_by(const std::vector<std::vector<std::string>>& faces) {
  SimplicialComplex out;
  out.has_empty_ = true;
  std::set<std::string> names;
  for (const auto& f : faces) names.insert(f.begin(), f.end());
  out.names_.assign(names.begin(), names.end());

  std::vector<std::set<Face>> by_dim;
  auto insert = [&](auto&& self, const Face& f) -> void {
    if (f.empty()) return;
    const std::size_t d = f.size() - 1;
    if (by_dim.size() <= d) by_dim.resize(d + 1);
    if (!by_dim[d].insert(f).second) return;
    for (std::size_t j = 0; j < f.size(); ++j) {
      Face g = f;
      g.erase(g.begin() + static_cast<long>(j));
      self(self, g);
    }
  };
  for (const auto& f : faces) {
    Face ids;
    for (const auto& v : f) ids.push_back(out.vertex_index(v));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    insert(insert, ids);
  }
  for (auto& s : by_dim) {
    out.faces_.emplace_back(s.begin(), s.end());
    auto& idx = out.index_.emplace_back();
    for (std::size_t i = 0; i < out.faces_.back().size(); ++i) idx.emplace(out.faces_.back()[i], i);
  }
  return out;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return -1;
  return static_cast<int>(it - names_.begin());
}

std::size_t SimplicialComplex::num_faces(int dim) const {
  if (dim == -1) return has_empty_ ? 1 : 0;
  if (dim < -1 || dim > dimension()) return 0;
  return faces_[static_cast<std::size_t>(dim)].size();
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int dim) const {
  static const std::vector<Face> kNone;
  if (dim < 0 || dim > dimension()) return kNone;
  return faces_[static_cast<std::size_t>(dim)];
}

long SimplicialComplex::face_index(const Face& f) const {
  if (f.empty()) return has_empty_ ? 0 : -1;
  const std::size_t d = f.size() - 1;
  if (d >= index_.size()) return -1;
  auto it = index_[d].find(f);
  return it == index_[d].end() ? -1 : static_cast<long>(it->second);
}

bool SimplicialComplex::contains(std::vector<std::string> face) const {
  Face ids;
  for (const auto& v : face) {
    const int i = vertex_index(v);
    if (i < 0) return false;
    ids.push_back(i);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return face_index(ids) >= 0;
}

std::vector<std::string> SimplicialComplex::names_of(const Face& f) const {
  std::vector<std::string> out;
  for (int v : f) out.push_back(vertex_name(v));
  return out;
}

std::vector<std::vector<std::string>> SimplicialComplex::face_list() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& level : faces_)
    for (const auto& f : level) out.push_back(names_of(f));
  return out;
}

std::size_t SimplicialComplex::total_faces() const {
  std::size_t n = 0;
  for (const auto& level : faces_) n += level.size();
  return n;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& X) const {
  if (has_empty_ && !X.has_empty_) return false;
  for (const auto& level : faces_)
    for (const auto& f : level)
      if (!X.contains(names_of(f))) return false;
  return true;
}

SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void()) return b;
  if (b.is_void()) return a;
  auto faces = a.face_list();
  for (auto& f : b.face_list()) faces.push_back(std::move(f));
  return SimplicialComplex::generated_by(faces);
}

SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return SimplicialComplex();
  std::vector<std::vector<std::string>> faces;
  for (auto& f : a.face_list())
    if (b.contains(f)) faces.push_back(std::move(f));
  return SimplicialComplex::generated_by(faces);
}

SimplicialComplex flag_complex(const Poset& P) {
  const std::size_t n = P.names.size();
  // Chains are extended upward only, so each is produced once.
  std::vector<std::vector<std::string>> chains;
  std::vector<std::size_t> chain;
  auto extend = [&](auto&& self) -> void {
    std::vector<std::string> f;
    for (std::size_t i : chain) f.push_back(P.names[i]);
    chains.push_back(std::move(f));
    for (std::size_t j = 0; j < n; ++j)
      if (P.less[chain.back()][j]) {
        chain.push_back(j);
        self(self);
        chain.pop_back();
      }
  };
  for (std::size_t i = 0; i < n; ++i) {
    chain = {i};
    extend(extend);
  }
  return SimplicialComplex::generated_by(chains);
}

Poset subset_poset(const CoxeterMatrix& M, const std::vector<GenSet>& subsets) {
  Poset P;
  for (GenSet T : subsets) P.names.push_back(M.name(T));
  P.less.assign(subsets.size(), std::vector<bool>(subsets.size(), false));
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = 0; j < subsets.size(); ++j)
      P.less[i][j] = subsets[i].proper_subset_of(subsets[j]);
  return P;
}

MirroredComplex::MirroredComplex(CoxeterMatrix M, SimplicialComplex X, std::vector<SimplicialComplex> mirrors)
    : matrix_(std::move(M)), complex_(std::move(X)), mirrors_(std::move(mirrors)) {
  if (static_cast<int>(mirrors_.size()) != matrix_.rank())
    throw ValidationError("one mirror per generator is required");
  for (const auto& m : mirrors_)
    if (!m.is_subcomplex_of(complex_)) throw ValidationError("mirror is not a subcomplex");
  for (int d = 0; d <= complex_.dimension(); ++d) {
    auto& level = labels_.emplace_back();
    for (const auto& f : complex_.faces(d)) {
      const auto names = complex_.names_of(f);
      GenSet S;
      for (int s = 0; s < matrix_.rank(); ++s)
        if (mirrors_[static_cast<std::size_t>(s)].contains(names)) S = S.with(s);
      level.push_back(S);
    }
  }
}

GenSet MirroredComplex::label(int dim, std::size_t index) const {
  if (dim == -1) return empty_face_label();
  return labels_[static_cast<std::size_t>(dim)][index];
}

GenSet MirroredComplex::empty_face_label() const {
  GenSet out;
  for (int s = 0; s < matrix_.rank(); ++s)
    if (!mirrors_[static_cast<std::size_t>(s)].is_void()) out = out.with(s);
  return out;
}

MirroredComplex MirroredComplex::restrict_to(const SimplicialComplex& Y) const {
  if (!Y.is_subcomplex_of(complex_)) throw ValidationError("restriction to a non-subcomplex");
  std::vector<SimplicialComplex> mirrors;
  for (const auto& m : mirrors_) mirrors.push_back(intersection_of(Y, m));
  return MirroredComplex(matrix_, Y, std::move(mirrors));
}

SimplicialComplex nerve(const CoxeterMatrix& M) {
  const SphericalPoset P(M);
  std::vector<std::vector<std::string>> faces;
  for (GenSet T : P.members())
    if (!T.empty()) faces.push_back(M.names(T));
  return SimplicialComplex::generated_by(faces);
}

MirroredComplex classical_chamber(const CoxeterMatrix& M) {
  const auto all = M.names(M.all());
  const auto X = SimplicialComplex::generated_by({all});
  std::vector<SimplicialComplex> mirrors;
  for (int s = 0; s < M.rank(); ++s) mirrors.push_back(SimplicialComplex::generated_by({M.names(M.all().without(s))}));
  return MirroredComplex(M, X, std::move(mirrors));
}

MirroredComplex davis_chamber(const CoxeterMatrix& M) {
  const SphericalPoset P(M);
  const auto K = flag_complex(subset_poset(M, P.members()));
  std::vector<SimplicialComplex> mirrors;
  for (int s = 0; s < M.rank(); ++s) {
    std::vector<GenSet> above;
    for (GenSet T : P.members())
      if (T.contains(s)) above.push_back(T);
    mirrors.push_back(flag_complex(subset_poset(M, above)));
  }
  return MirroredComplex(M, K, std::move(mirrors));
}

SimplicialComplex mirror_union(const MirroredComplex& X, GenSet U) {
  SimplicialComplex out;
  for (int s : U.members()) out = union_of(out, X.mirror(s));
  return out;
}

SimplicialComplex mirror_intersection(const MirroredComplex& X, GenSet T) {
  SimplicialComplex out = X.complex();
  for (int s : T.members()) out = intersection_of(out, X.mirror(s));
  return out;
}

CochainComplex relative_cochains(const SimplicialComplex& X, const SimplicialComplex& A, bool augmented) {
  if (!A.is_subcomplex_of(X)) throw ValidationError("relative pair: A is not a subcomplex of X");
  const bool with_empty = augmented && !X.is_void() && A.is_void();
  const int lo = with_empty ? -1 : 0;
  const int hi = X.dimension();
  CochainComplex C;
  C.first_degree = lo;
  if (hi < lo) return C;

  // Position of each face of X among the cells of the pair (-1 if in A).
  std::vector<std::vector<long>> cell(static_cast<std::size_t>(hi + 1));
  for (int d = lo; d <= hi; ++d) {
    std::size_t count = 0;
    if (d == -1) {
      count = 1;
    } else {
      for (const auto& f : X.faces(d)) {
        const bool in_a = A.contains(X.names_of(f));
        cell[static_cast<std::size_t>(d)].push_back(in_a ? -1 : static_cast<long>(count));
        if (!in_a) ++count;
      }
    }
    C.dims.push_back(count);
  }
  for (int d = lo; d < hi; ++d) {
    SparseIntMatrix m(C.dims[static_cast<std::size_t>(d + 1 - lo)], C.dims[static_cast<std::size_t>(d - lo)]);
    const auto& upper = X.faces(d + 1);
    for (std::size_t i = 0; i < upper.size(); ++i) {
      const long row = cell[static_cast<std::size_t>(d + 1)][i];
      if (row < 0) continue;
      if (d == -1) {
        m.add(static_cast<std::size_t>(row), 0, 1);
        continue;
      }
      const auto& f = upper[i];
      for (std::size_t j = 0; j < f.size(); ++j) {
        SimplicialComplex::Face g = f;
        g.erase(g.begin() + static_cast<long>(j));
        const long col = cell[static_cast<std::size_t>(d)][static_cast<std::size_t>(X.face_index(g))];
        if (col >= 0) m.add(static_cast<std::size_t>(row), static_cast<std::size_t>(col), j % 2 == 0 ? 1 : -1);
      }
    }
    C.d.push_back(std::move(m));
  }
  return C;
}

GradedAbelianGroup relative_cohomology(const SimplicialComplex& X, const SimplicialComplex& A) {
  return cochain_cohomology(relative_cochains(X, A, false));
}

GradedAbelianGroup cohomology(const SimplicialComplex& X) { return relative_cohomology(X, SimplicialComplex()); }

ReducedCohomology reduced_cohomology(const SimplicialComplex& X) {
  ReducedCohomology out;
  if (X.is_void()) {
    out.is_void = true;
    return out;
  }
  out.groups = cochain_cohomology(relative_cochains(X, SimplicialComplex(), true));
  return out;
}

std::vector<std::pair<GenSet, ReducedCohomology>> punctured_nerve_homology(const CoxeterMatrix& M) {
  const SphericalPoset P(M);
  const auto K = davis_chamber(M);
  std::vector<std::pair<GenSet, ReducedCohomology>> out;
  for (GenSet T : P.members()) out.emplace_back(T, reduced_cohomology(mirror_union(K, M.all() - T)));
  return out;
}

MetricFlagReport metric_flag_check(const CoxeterMatrix& M) {
  MetricFlagReport out;
  const auto L = nerve(M);
  const int n = M.rank();
  auto visit = [&](auto&& self, GenSet T, int next) -> void {
    if (!T.empty()) {
      ++out.cliques_checked;
      const bool face = L.contains(M.names(T));
      if (face != cosine_gram_definite(M, T)) {
        out.ok = false;
        out.mismatches.push_back(T);
      }
    }
    for (int s = next; s < n; ++s) {
      bool adjacent = true;
      for (int t : T.members())
        if (M.m(s, t) == kInfinity) adjacent = false;
      if (adjacent) self(self, T.with(s), s + 1);
    }
  };
  visit(visit, GenSet(), 0);
  return out;
}

}  // namespace coxtop
