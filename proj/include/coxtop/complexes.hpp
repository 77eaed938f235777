#ifndef COXTOP_COMPLEXES_HPP
#define COXTOP_COMPLEXES_HPP

#include <map>
#include <string>
#include <vector>

#include "coxtop/coxeter.hpp"
#include "coxtop/graded_group.hpp"

namespace coxtop {

/// A finite abstract simplicial complex on named vertices. Vertex ids follow
/// the lexicographic order of the names, which also orients every simplex.
///
/// Two complexes without vertices are distinguished: the void complex (no
/// faces at all, e.g. X^U for U empty) and {empty simplex} (e.g. a mirror of
/// the 0-simplex).
class SimplicialComplex {
 public:
  using Face = std::vector<int>;

  /// The void complex.
  SimplicialComplex() = default;

  /// Closure under subsets of the given faces. The empty simplex is always
  /// included, so passing no faces yields {empty simplex}.
  static SimplicialComplex generated_by(const std::vector<std::vector<std::string>>& faces);

  const std::vector<std::string>& vertices() const { return names_; }
  int vertex_index(const std::string& name) const;
  const std::string& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }

  bool is_void() const { return !has_empty_; }
  /// -1 when there are no vertices.
  int dimension() const { return static_cast<int>(faces_.size()) - 1; }
  std::size_t num_faces(int dim) const;
  const std::vector<Face>& faces(int dim) const;
  /// Position of a face (vertex ids, sorted) in faces(dim); -1 when absent.
  long face_index(const Face& f) const;
  /// Membership of a face given by vertex names (any order). The empty face
  /// belongs to every nonvoid complex.
  bool contains(std::vector<std::string> face) const;
  std::vector<std::string> names_of(const Face& f) const;
  /// Vertex names of every face, by dimension then lexicographically.
  std::vector<std::vector<std::string>> face_list() const;
  std::size_t total_faces() const;

  bool is_subcomplex_of(const SimplicialComplex& X) const;

  friend SimplicialComplex union_of(const SimplicialComplex& a, const SimplicialComplex& b);
  friend SimplicialComplex intersection_of(const SimplicialComplex& a, const SimplicialComplex& b);
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.has_empty_ == b.has_empty_ && a.names_ == b.names_ && a.faces_ == b.faces_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::map<Face, std::size_t>> index_;
  bool has_empty_ = false;
};

/// Finite poset given by element names and a strict order relation
/// less[i][j] (i < j), assumed transitive.
struct Poset {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> less;
};

/// Order complex: vertices are the elements, faces the nonempty chains.
SimplicialComplex flag_complex(const Poset& P);

/// Poset of the given subsets of S ordered by inclusion, named by M.name(T).
Poset subset_poset(const CoxeterMatrix& M, const std::vector<GenSet>& subsets);

/// A simplicial complex with mirrors X_s indexed by the generators of a
/// Coxeter matrix, and cached per-face labels S(c) = {s : c in X_s}.
class MirroredComplex {
 public:
  MirroredComplex(CoxeterMatrix M, SimplicialComplex X, std::vector<SimplicialComplex> mirrors);

  const CoxeterMatrix& matrix() const { return matrix_; }
  const SimplicialComplex& complex() const { return complex_; }
  const SimplicialComplex& mirror(int s) const { return mirrors_[static_cast<std::size_t>(s)]; }
  /// S(c) for the face with the given dimension and index.
  GenSet label(int dim, std::size_t index) const;
  /// S of the empty simplex: the generators whose mirror is nonvoid.
  GenSet empty_face_label() const;

  /// Y with mirrors Y intersected with X_s; Y must be a subcomplex.
  MirroredComplex restrict_to(const SimplicialComplex& Y) const;

 private:
  CoxeterMatrix matrix_;
  SimplicialComplex complex_;
  std::vector<SimplicialComplex> mirrors_;
  std::vector<std::vector<GenSet>> labels_;
};

/// L: vertex set S, faces the nonempty spherical subsets.
SimplicialComplex nerve(const CoxeterMatrix& M);

/// Delta: the simplex on S with Delta_s the face opposite the vertex s, so
/// that S(F) = S - F.
MirroredComplex classical_chamber(const CoxeterMatrix& M);

/// K = |spherical poset| (with the vertex for the empty set) and
/// K_s = |{T spherical : s in T}|.
MirroredComplex davis_chamber(const CoxeterMatrix& M);

/// X^U: union of the mirrors X_s, s in U; void for U empty.
SimplicialComplex mirror_union(const MirroredComplex& X, GenSet U);
/// X_T: intersection of the mirrors X_s, s in T; X itself for T empty.
SimplicialComplex mirror_intersection(const MirroredComplex& X, GenSet T);

/// Simplicial cochain complex of (X, A): cells of X not in A, with the empty
/// simplex added in degree -1 when `augmented` and it lies in X but not A.
CochainComplex relative_cochains(const SimplicialComplex& X, const SimplicialComplex& A, bool augmented);

/// H*(X, A; Z). Throws ValidationError when A is not a subcomplex of X.
GradedAbelianGroup relative_cohomology(const SimplicialComplex& X, const SimplicialComplex& A);
GradedAbelianGroup cohomology(const SimplicialComplex& X);

/// Reduced cohomology. For the void complex `is_void` is set and `groups`
/// is left zero (its only reduced group would sit in degree -1).
struct ReducedCohomology {
  bool is_void = false;
  GradedAbelianGroup groups;
};
ReducedCohomology reduced_cohomology(const SimplicialComplex& X);

/// For each spherical T (in canonical order), reduced cohomology of K^{S-T}.
std::vector<std::pair<GenSet, ReducedCohomology>> punctured_nerve_homology(const CoxeterMatrix& M);

/// For every clique T of the 1-skeleton of L: T is a face of L exactly when
/// the cosine matrix of T is positive definite. Must hold for all M.
struct MetricFlagReport {
  bool ok = true;
  std::size_t cliques_checked = 0;
  std::vector<GenSet> mismatches;
};
MetricFlagReport metric_flag_check(const CoxeterMatrix& M);

}  // namespace coxtop

#endif
