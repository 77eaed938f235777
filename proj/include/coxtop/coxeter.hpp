#ifndef COXTOP_COXETER_HPP
#define COXTOP_COXETER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxtop/coxeter_matrix.hpp"
#include "coxtop/gen_set.hpp"
#include "coxtop/surd.hpp"

namespace coxtop {

// ---------------------------------------------------------------------------
// Finiteness
// ---------------------------------------------------------------------------

/// Classified type of an irreducible component, e.g. "A3", "B4", "H3", "I2(7)".
struct ComponentType {
  std::string name;
  /// Group order; empty when the component is infinite or the order does
  /// not fit in 64 bits.
  std::optional<std::uint64_t> order;
  bool finite = false;
};

/// Matches an irreducible component (connected in the m != 2 graph) against
/// the list of finite irreducible Coxeter diagrams.
ComponentType classify_component(const CoxeterMatrix& M, GenSet component);

/// W_T finite, decided by classification of the irreducible components of T.
bool is_spherical(const CoxeterMatrix& M, GenSet T);

/// |W_T| when T is spherical and the order fits in 64 bits.
std::optional<std::uint64_t> spherical_order(const CoxeterMatrix& M, GenSet T);

/// Positive definiteness of the cosine matrix (1 on the diagonal,
/// -cos(pi/m_st) off it, -1 for m = inf), decided by exact leading principal
/// minors in Q(sqrt2,sqrt3,sqrt5). Requires every m_st inside T to lie in
/// {2,...,6, inf}; throws ValidationError otherwise.
bool cosine_gram_definite(const CoxeterMatrix& M, GenSet T);

/// Leading principal minors of the cosine matrix of T (in index order).
std::vector<Surd> cosine_gram_minors(const CoxeterMatrix& M, GenSet T);

/// The poset of spherical subsets, ordered by inclusion.
class SphericalPoset {
 public:
  SphericalPoset(const CoxeterMatrix& M);

  /// Members in canonical order (cardinality, then members); index 0 is the
  /// empty set.
  const std::vector<GenSet>& members() const& { return members_; }
  /// By value on temporaries, so `for (T : SphericalPoset(M).members())` is safe.
  std::vector<GenSet> members() && { return std::move(members_); }
  std::size_t size() const { return members_.size(); }
  bool contains(GenSet T) const;
  /// Position of T in members(); -1 if T is not spherical.
  int index_of(GenSet T) const;
  GenSet generators() const { return generators_; }
  /// True when S itself is spherical.
  bool group_is_finite() const { return contains(generators_); }
  /// Largest cardinality of a member.
  int max_size() const;

 private:
  std::vector<GenSet> members_;
  GenSet generators_;
};

/// BFS from the empty set by single-generator extensions.
SphericalPoset spherical_poset(const CoxeterMatrix& M);

// ---------------------------------------------------------------------------
// Element tables
// ---------------------------------------------------------------------------

struct GroupElement {
  /// Shortlex-minimal reduced word (generator indices of the ambient matrix).
  std::vector<int> word;
  int length = 0;
  /// In(w) = {s : l(ws) < l(w)}.
  GenSet descents;
};

/// All elements of a finite special subgroup W_T with right multiplication
/// by generators. Element 0 is the identity; elements appear in shortlex
/// order of their reduced words.
class ElementTable {
 public:
  ElementTable(CoxeterMatrix M, GenSet T, std::vector<GroupElement> elements,
               std::vector<std::vector<int>> right_mult);

  const CoxeterMatrix& matrix() const { return matrix_; }
  GenSet generators() const { return generators_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }

  /// Index of w*s; s must belong to generators().
  int times(int w, int s) const;
  /// Index of the element represented by a word over generators().
  int evaluate(const std::vector<int>& word, int start = 0) const;
  int multiply(int a, int b) const { return evaluate(elements_[static_cast<std::size_t>(b)].word, a); }
  int inverse(int w) const;
  /// The unique element of maximal length.
  int longest() const;
  int max_length() const;

 private:
  CoxeterMatrix matrix_;
  GenSet generators_;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> right_mult_;
};

/// Complete element table of W_T by BFS over the exact geometric
/// representation (every m_st in T within {2,...,6}), or by the closed form
/// of alternating words when |T| <= 2. Throws ValidationError for a
/// nonspherical T or an unsupported configuration.
ElementTable enumerate_group(const CoxeterMatrix& M, GenSet T);

/// Same for the whole generating set.
inline ElementTable enumerate_group(const CoxeterMatrix& M) { return enumerate_group(M, M.all()); }

/// In(w) as stored in an element table.
GenSet descent_set(const ElementTable& table, int w);

/// All elements of W of length at most `radius`, in shortlex order.
/// Descents are read off the sign of w(alpha_s) in the simple-root basis.
class BallTable {
 public:
  BallTable(CoxeterMatrix M, int radius, std::vector<GroupElement> elements,
            std::vector<std::vector<int>> right_mult);

  const CoxeterMatrix& matrix() const { return matrix_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  /// Index of w*s, or -1 when w*s lies outside the ball.
  int times(int w, int s) const { return right_mult_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)]; }
  /// Number of elements of each length 0..radius.
  std::vector<std::uint64_t> counts_by_length() const;

 private:
  CoxeterMatrix matrix_;
  int radius_;
  std::vector<GroupElement> elements_;
  std::vector<std::vector<int>> right_mult_;
};

/// Ball of the given radius around the identity. Requires every m_st in
/// {2,...,6, inf}.
BallTable enumerate_ball(const CoxeterMatrix& M, int radius);

/// In(w) recomputed from lengths inside the ball (l(ws) < l(w) iff ws is in
/// the ball one level down). Throws ValidationError when l(w) equals the
/// radius: there the products w*s are not all tabulated.
GenSet descent_set(const BallTable& table, int w);

}  // namespace coxtop

#endif
