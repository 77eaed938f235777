#ifndef COXTOP_CHAMBER_SYSTEM_HPP
#define COXTOP_CHAMBER_SYSTEM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "coxtop/coxeter.hpp"

namespace coxtop {

/// A finite chamber system over a Coxeter matrix: chambers 0..n-1 and, for
/// each generator s, a partition of the chambers into s-panels.
class ChamberSystem {
 public:
  /// panel_of[s][c] is any label of the s-panel of chamber c; labels are
  /// renumbered by first occurrence in chamber order.
  ChamberSystem(CoxeterMatrix type, std::size_t chambers, std::vector<std::vector<int>> panel_of);

  const CoxeterMatrix& type() const { return type_; }
  std::size_t size() const { return size_; }
  int panel(int s, std::size_t chamber) const {
    return panel_of_[static_cast<std::size_t>(s)][chamber];
  }
  std::size_t panel_count(int s) const { return counts_[static_cast<std::size_t>(s)]; }
  /// s-panels as sorted chamber lists, ordered by smallest member.
  std::vector<std::vector<std::size_t>> panels(int s) const;

 private:
  CoxeterMatrix type_;
  std::size_t size_;
  std::vector<std::vector<int>> panel_of_;
  std::vector<std::size_t> counts_;
};

/// Partition of the chambers into residues of one type.
struct Residues {
  GenSet type;
  /// residue_of[c]: index of the residue containing chamber c. Residues are
  /// numbered in order of their smallest chamber.
  std::vector<int> residue_of;
  std::vector<std::vector<std::size_t>> members;
  std::size_t count() const { return members.size(); }
};

/// T-connected components; singletons for T empty.
Residues residues(const ChamberSystem& Phi, GenSet T);

/// W_T with s-panels {w, ws}; chamber i is element i of the element table
/// (shortlex order). Type is M restricted to T.
ChamberSystem thin_building(const CoxeterMatrix& M, GenSet T);
inline ChamberSystem thin_building(const CoxeterMatrix& M) { return thin_building(M, M.all()); }

/// Type A1 x A1: chambers (i, j), i < p, j < q, stored at
/// index i*q + j; s-panels fix j, t-panels fix i.
ChamberSystem digon_building(int p, int q, const std::string& s = "s", const std::string& t = "t");

/// Flags of the projective plane over F_q, q in {2, 3}. Points and lines are
/// normalized vectors of F_q^3 (first nonzero coordinate 1) in lexicographic
/// order; chambers are incident (point, line) pairs in lexicographic order;
/// s-panels fix the point, t-panels fix the line.
ChamberSystem projective_plane_building(int q, const std::string& s = "s", const std::string& t = "t");

/// Phi1 x Phi2 with chamber (a, b) at index a*|Phi2| + b and block-sum type.
ChamberSystem product_building(const ChamberSystem& a, const ChamberSystem& b);

/// delta(phi, psi) for every psi, by breadth-first gallery search. Each
/// entry indexes `table` (an element table of the full type). An entry is
/// inconsistent when two minimal galleries give different elements, or the
/// element's length differs from the gallery distance.
struct WDistanceRow {
  std::vector<int> element;  // -1 when unreachable
  std::vector<bool> consistent;
};
WDistanceRow w_distances_from(const ChamberSystem& Phi, const ElementTable& table, std::size_t phi);

/// Single pair; `consistent` is false when the search found conflicting
/// gallery types or psi is unreachable.
struct WDistance {
  int element = -1;
  bool consistent = false;
};
WDistance w_distance(const ChamberSystem& Phi, const ElementTable& table, std::size_t phi, std::size_t psi);

struct BuildingCheck {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct BuildingReport {
  std::vector<BuildingCheck> checks;
  bool passed() const;
};

/// (a) panels have at least two chambers; (b) every rank-2 residue with
/// finite m has an incidence graph of girth 2m and diameter m; (c) for
/// finite type, W-distance is consistent and delta(psi, phi) is the inverse
/// of delta(phi, psi). Connectivity is checked as part of (c) and (b).
BuildingReport verify_building(const ChamberSystem& Phi);

/// Text format: the Coxeter matrix lines, then `chambers <n>` and one
/// `panel <s>: {i,j,...} {...}` line per generator.
ChamberSystem parse_chamber_system(std::string_view text);
std::string to_text(const ChamberSystem& Phi);

}  // namespace coxtop

#endif
