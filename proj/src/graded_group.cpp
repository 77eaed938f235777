#include <algorithm>
#include <sstream>

#include "coxtop/errors.hpp"
#include "coxtop/graded_group.hpp"

namespace coxtop {

Rank operator+(const Rank& a, const Rank& b) {
  if (a.omega_ || b.omega_) return Rank::omega();
  return Rank(a.value_ + b.value_);
}

Rank operator*(const Rank& a, const Rank& b) {
  if (a.is_zero() || b.is_zero()) return Rank(0L);
  if (a.omega_ || b.omega_) return Rank::omega();
  return Rank(a.value_ * b.value_);
}

std::string Rank::str() const { return omega_ ? "omega" : value_.str(); }

std::vector<Integer> normalize_torsion(const std::vector<Integer>& orders) {
  IntMatrix diag(orders.size(), orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 0) throw ValidationError("torsion order 0");
    diag.at(i, i) = orders[i] < 0 ? Integer(-orders[i]) : orders[i];
  }
  std::vector<Integer> out;
  for (auto& d : invariant_factors(diag))
    if (d != 1) out.push_back(std::move(d));
  return out;
}

namespace {

std::vector<Integer> unique_sorted(std::vector<Integer> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

GroupEntry direct_sum(const GroupEntry& a, const GroupEntry& b) {
  GroupEntry out;
  out.free_rank = a.free_rank + b.free_rank;
  std::vector<Integer> t = a.torsion;
  t.insert(t.end(), b.torsion.begin(), b.torsion.end());
  out.torsion = normalize_torsion(t);
  std::vector<Integer> w = a.omega_torsion;
  w.insert(w.end(), b.omega_torsion.begin(), b.omega_torsion.end());
  // (Z/t)^omega is recorded once per order t.
  out.omega_torsion = unique_sorted(std::move(w));
  return out;
}

GroupEntry scaled(const GroupEntry& e, const Rank& count) {
  GroupEntry out;
  if (count.is_zero()) return out;
  out.free_rank = e.free_rank * count;
  if (count.is_omega()) {
    std::vector<Integer> w = e.omega_torsion;
    w.insert(w.end(), e.torsion.begin(), e.torsion.end());
    out.omega_torsion = unique_sorted(std::move(w));
    return out;
  }
  std::vector<Integer> t;
  const auto copies = count.value().convert_to<std::uint64_t>();
  if (!e.torsion.empty() && copies > 100000) throw ValidationError("torsion multiplicity too large");
  for (std::uint64_t k = 0; k < copies; ++k) t.insert(t.end(), e.torsion.begin(), e.torsion.end());
  out.torsion = normalize_torsion(t);
  out.omega_torsion = e.omega_torsion;
  return out;
}

std::string GroupEntry::str() const {
  std::vector<std::string> parts;
  if (free_rank.is_omega()) parts.push_back("Z^omega");
  else if (free_rank.value() == 1) parts.push_back("Z");
  else if (free_rank.value() > 1) parts.push_back("Z^" + free_rank.str());
  for (const auto& t : torsion) parts.push_back("Z/" + t.str());
  for (const auto& t : omega_torsion) parts.push_back("(Z/" + t.str() + ")^omega");
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

void GradedAbelianGroup::set(int degree, GroupEntry entry) {
  if (entry.is_zero()) entries_.erase(degree);
  else entries_[degree] = std::move(entry);
}

GroupEntry GradedAbelianGroup::at(int degree) const {
  auto it = entries_.find(degree);
  return it == entries_.end() ? GroupEntry{} : it->second;
}

GradedAbelianGroup operator+(const GradedAbelianGroup& a, const GradedAbelianGroup& b) {
  GradedAbelianGroup out = a;
  for (const auto& [k, e] : b.entries_) out.set(k, direct_sum(out.at(k), e));
  return out;
}

std::string GradedAbelianGroup::str() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, e] : entries_) {
    os << (first ? "" : ", ") << "H^" << k << " = " << e.str();
    first = false;
  }
  return os.str();
}

void CochainComplex::check() const {
  if (dims.empty()) return;
  if (d.size() + 1 != dims.size()) throw ValidationError("cochain complex has wrong number of maps");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i].cols() != dims[i] || d[i].rows() != dims[i + 1])
      throw ValidationError("coboundary dimension mismatch");
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (!(d[i + 1] * d[i]).is_zero())
      throw TheoremViolation("coboundary squares to a nonzero map in degree " +
                             std::to_string(first_degree + static_cast<int>(i)));
}

GradedAbelianGroup cochain_cohomology(const CochainComplex& C) {
  GradedAbelianGroup out;
  if (C.dims.empty()) return out;
  if (C.d.size() + 1 != C.dims.size()) throw ValidationError("cochain complex has wrong number of maps");
  std::vector<std::vector<Integer>> inv;
  for (const auto& m : C.d) inv.push_back(invariant_factors(m));
  for (std::size_t i = 0; i < C.dims.size(); ++i) {
    const std::size_t rank_out = i < C.d.size() ? inv[i].size() : 0;
    const std::size_t rank_in = i > 0 ? inv[i - 1].size() : 0;
    GroupEntry e;
    e.free_rank = Rank(static_cast<long>(C.dims[i] - rank_out - rank_in));
    if (i > 0)
      for (const auto& t : inv[i - 1])
        if (t != 1) e.torsion.push_back(t);
    e.torsion = normalize_torsion(e.torsion);
    out.set(C.first_degree + static_cast<int>(i), std::move(e));
  }
  return out;
}

}  // namespace coxtop
