#ifndef COXTOP_COXETER_MATRIX_HPP
#define COXTOP_COXETER_MATRIX_HPP

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "coxtop/gen_set.hpp"

namespace coxtop {

/// Edge label for m_st = infinity. Chosen as INT_MAX so that ordinary
/// comparisons treat it as larger than every finite order.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// A Coxeter matrix (m_st) over an ordered list of generator labels.
class CoxeterMatrix {
 public:
  /// All off-diagonal entries default to 2.
  explicit CoxeterMatrix(std::vector<std::string> labels);

  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int s) const { return labels_[static_cast<std::size_t>(s)]; }
  GenSet all() const { return GenSet::full(rank()); }

  /// m_st; 1 on the diagonal and kInfinity for an infinite order.
  int m(int s, int t) const { return entries_[static_cast<std::size_t>(s * rank() + t)]; }

  /// Sets m_st = m_ts. Throws ValidationError for m < 2 or s == t.
  void set(int s, int t, int m);

  /// Index of a label; throws ValidationError if absent.
  int index_of(std::string_view label) const;

  /// Parses a comma- or space-separated label list into a subset.
  GenSet subset(std::string_view labels) const;

  /// "{a,b}" using this matrix's labels, members in index order.
  std::string name(GenSet T) const;
  std::vector<std::string> names(GenSet T) const;

  /// The matrix of the special subgroup W_T, labels in index order.
  CoxeterMatrix restrict_to(GenSet T) const;

  /// Block sum with cross entries 2. Throws on a label collision.
  CoxeterMatrix block_sum(const CoxeterMatrix& other) const;

  /// Irreducible components of T: s, t are joined when m_st != 2.
  std::vector<GenSet> components(GenSet T) const;

  /// Serialized form accepted by parse_coxeter_matrix (only entries != 2).
  std::string to_text() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<int> entries_;
};

/// Parses the line format
///   gens a b c
///   a b 3
///   b c inf      # comment
/// Unlisted pairs default to 2. Throws ParseError carrying the line number.
CoxeterMatrix parse_coxeter_matrix(std::string_view text);

}  // namespace coxtop

#endif
