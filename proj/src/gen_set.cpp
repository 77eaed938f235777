#include "coxtop/gen_set.hpp"

#include <algorithm>

namespace coxtop {

std::vector<int> GenSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

bool canonical_less(GenSet a, GenSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

std::vector<GenSet> all_subsets(GenSet universe) {
  std::vector<GenSet> out;
  const std::uint64_t u = universe.bits();
  // Standard submask walk.
  std::uint64_t sub = u;
  while (true) {
    out.emplace_back(sub);
    if (sub == 0) break;
    sub = (sub - 1) & u;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace coxtop
