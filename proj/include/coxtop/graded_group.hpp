#ifndef COXTOP_GRADED_GROUP_HPP
#define COXTOP_GRADED_GROUP_HPP

#include <map>
#include <string>
#include <vector>

#include "coxtop/integer_matrix.hpp"

namespace coxtop {

/// A nonnegative integer or the countable infinity omega.
class Rank {
 public:
  Rank() = default;
  Rank(Integer v) : value_(std::move(v)) {}  // NOLINT
  Rank(long v) : value_(v) {}                // NOLINT
  static Rank omega() {
    Rank r;
    r.omega_ = true;
    return r;
  }

  bool is_omega() const { return omega_; }
  bool is_zero() const { return !omega_ && value_ == 0; }
  /// Finite value; meaningless for omega.
  const Integer& value() const { return value_; }

  friend Rank operator+(const Rank& a, const Rank& b);
  friend Rank operator*(const Rank& a, const Rank& b);
  friend bool operator==(const Rank& a, const Rank& b) {
    return a.omega_ == b.omega_ && (a.omega_ || a.value_ == b.value_);
  }
  std::string str() const;

 private:
  bool omega_ = false;
  Integer value_ = 0;
};

/// One degree of a graded group: Z^free_rank plus finite cyclic summands
/// (invariant factors > 1) plus, when a multiplicity is omega, countably many
/// copies of each Z/t in omega_torsion.
struct GroupEntry {
  Rank free_rank;
  std::vector<Integer> torsion;
  std::vector<Integer> omega_torsion;

  bool is_zero() const { return free_rank.is_zero() && torsion.empty() && omega_torsion.empty(); }
  bool is_free() const { return torsion.empty() && omega_torsion.empty(); }
  friend bool operator==(const GroupEntry&, const GroupEntry&) = default;
  std::string str() const;
};

/// Invariant-factor form of a direct sum of cyclic groups Z/t_i; entries
/// equal to 1 are dropped, 0 is rejected.
std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders);

/// a (+) b
GroupEntry direct_sum(const GroupEntry& a, const GroupEntry& b);
/// `count` copies of an entry.
GroupEntry scaled(const GroupEntry& e, const Rank& count);

/// A Z-graded abelian group of finite type in each degree (free part may be
/// omega after multiplying by omega). Zero degrees are not stored.
class GradedAbelianGroup {
 public:
  void set(int degree, GroupEntry entry);
  /// Zero entry when absent.
  GroupEntry at(int degree) const;
  const std::map<int, GroupEntry>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  bool is_zero(int degree) const { return at(degree).is_zero(); }
  /// Largest degree with nonzero entry; requires !is_zero().
  int top_degree() const { return entries_.rbegin()->first; }

  friend GradedAbelianGroup operator+(const GradedAbelianGroup& a, const GradedAbelianGroup& b);
  friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;
  /// e.g. "H^0 = Z, H^2 = Z^3 + Z/2".
  std::string str() const;

 private:
  std::map<int, GroupEntry> entries_;
};

/// Cochain complex of free modules: dims[k] = rank of C^k for degrees
/// first_degree .. first_degree + dims.size() - 1, and d[k] : C^k -> C^(k+1)
/// stored as a (dim C^(k+1)) x (dim C^k) matrix.
struct CochainComplex {
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseIntMatrix> d;  // d[i] leaves degree first_degree + i

  int last_degree() const { return first_degree + static_cast<int>(dims.size()) - 1; }
  /// Checks d[i+1] * d[i] == 0; throws TheoremViolation otherwise.
  void check() const;
};

GradedAbelianGroup cochain_cohomology(const CochainComplex& C);

}  // namespace coxtop

#endif
