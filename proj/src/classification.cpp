#include <algorithm>
#include <unordered_map>

#include "coxtop/coxeter.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

namespace {

std::optional<std::uint64_t> checked_mul(std::optional<std::uint64_t> a, std::uint64_t b) {
  if (!a) return std::nullopt;
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(*a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> factorial(int n) {
  std::optional<std::uint64_t> out = 1;
  for (int i = 2; i <= n; ++i) out = checked_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

ComponentType infinite(std::string name) { return {std::move(name), std::nullopt, false}; }

ComponentType finite(std::string name, std::optional<std::uint64_t> order) {
  return {std::move(name), order, true};
}

}  // namespace

ComponentType classify_component(const CoxeterMatrix& M, GenSet component) {
  const auto v = component.members();
  const int n = static_cast<int>(v.size());
  if (n == 0) return finite("A0", 1);
  if (n == 1) return finite("A1", 2);
  if (n == 2) {
    const int m = M.m(v[0], v[1]);
    if (m == kInfinity) return infinite("I2(inf)");
    if (m == 3) return finite("A2", 6);
    if (m == 4) return finite("B2", 8);
    if (m == 6) return finite("G2", 12);
    return finite("I2(" + std::to_string(m) + ")", 2 * static_cast<std::uint64_t>(m));
  }

  // n >= 3: the diagram must be a tree with labels in {3,4,5}.
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  int edges = 0;
  int fours = 0;
  int fives = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int m = M.m(v[i], v[j]);
      if (m == 2) continue;
      if (m >= 6) return infinite("rank " + std::to_string(n) + " with m >= 6");
      ++edges;
      fours += (m == 4);
      fives += (m == 5);
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  if (edges != n - 1) return infinite("cyclic diagram");
  if (fours + fives > 1) return infinite("two labels >= 4");

  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    const auto deg = adj[i].size();
    if (deg >= 4) return infinite("vertex of degree >= 4");
    if (deg == 3) branch.push_back(i);
  }
  if (branch.size() > 1) return infinite("two branch points");

  if (branch.size() == 1) {
    if (fours + fives > 0) return infinite("branched diagram with label > 3");
    const int c = branch[0];
    std::vector<int> arms;
    for (int start : adj[c]) {
      int len = 1;
      int prev = c;
      int cur = start;
      while (adj[cur].size() == 2) {
        const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      // D_n: 2^(n-1) n!
      return finite("D" + std::to_string(n), checked_mul(factorial(n), std::uint64_t{1} << (n - 1)));
    }
    if (arms[0] == 1 && arms[1] == 2) {
      if (arms[2] == 2) return finite("E6", 51840);
      if (arms[2] == 3) return finite("E7", 2903040);
      if (arms[2] == 4) return finite("E8", 696729600);
    }
    return infinite("branched non-ADE diagram");
  }

  // A path: walk it from one end.
  int end = 0;
  while (adj[end].size() != 1) ++end;
  std::vector<int> path{end};
  while (static_cast<int>(path.size()) < n) {
    const int cur = path.back();
    for (int nb : adj[cur])
      if (path.size() < 2 || nb != path[path.size() - 2]) {
        path.push_back(nb);
        break;
      }
  }
  std::vector<int> labels;
  for (int i = 0; i + 1 < n; ++i) labels.push_back(M.m(v[path[i]], v[path[i + 1]]));
  const auto special = std::find_if(labels.begin(), labels.end(), [](int m) { return m != 3; });
  if (special == labels.end()) return finite("A" + std::to_string(n), factorial(n + 1));
  const auto pos = special - labels.begin();
  const bool at_end = pos == 0 || pos == static_cast<long>(labels.size()) - 1;
  if (*special == 4) {
    if (at_end)
      return finite("B" + std::to_string(n), checked_mul(factorial(n), std::uint64_t{1} << n));
    if (n == 4) return finite("F4", 1152);
    return infinite("interior label 4");
  }
  // label 5
  if (at_end && n == 3) return finite("H3", 120);
  if (at_end && n == 4) return finite("H4", 14400);
  return infinite("label 5 outside H3/H4");
}

bool is_spherical(const CoxeterMatrix& M, GenSet T) {
  for (GenSet c : M.components(T))
    if (!classify_component(M, c).finite) return false;
  return true;
}

std::optional<std::uint64_t> spherical_order(const CoxeterMatrix& M, GenSet T) {
  std::optional<std::uint64_t> out = 1;
  for (GenSet c : M.components(T)) {
    const auto type = classify_component(M, c);
    if (!type.finite || !type.order) return std::nullopt;
    out = checked_mul(out, *type.order);
  }
  return out;
}

namespace {

std::vector<std::vector<Surd>> cosine_matrix(const CoxeterMatrix& M, GenSet T) {
  const auto v = T.members();
  const std::size_t n = v.size();
  std::vector<std::vector<Surd>> g(n, std::vector<Surd>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = Surd(1L);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) g[i][j] = -Surd::cos_pi_over(M.m(v[i], v[j]));
  }
  return g;
}

Surd determinant(std::vector<std::vector<Surd>> a) {
  const std::size_t n = a.size();
  Surd det(1L);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k].is_zero()) ++piv;
    if (piv == n) return Surd();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      det = -det;
    }
    det *= a[k][k];
    const Surd inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Surd f = a[i][k] * inv;
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

std::vector<Surd> cosine_gram_minors(const CoxeterMatrix& M, GenSet T) {
  const auto g = cosine_matrix(M, T);
  std::vector<Surd> out;
  for (std::size_t k = 1; k <= g.size(); ++k) {
    std::vector<std::vector<Surd>> sub(k, std::vector<Surd>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = g[i][j];
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

bool cosine_gram_definite(const CoxeterMatrix& M, GenSet T) {
  auto a = cosine_matrix(M, T);
  const std::size_t n = a.size();
  // Symmetric elimination without pivoting: pivot k equals D_k / D_{k-1}, so
  // all pivots are positive iff all leading principal minors are.
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].sign() <= 0) return false;
    const Surd inv = a[k][k].inverse();
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      const Surd f = a[i][k] * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a[k][j].is_zero()) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

SphericalPoset::SphericalPoset(const CoxeterMatrix& M) : generators_(M.all()) {
  std::vector<GenSet> level{GenSet()};
  std::unordered_map<std::uint64_t, bool> seen{{0, true}};
  while (!level.empty()) {
    std::vector<GenSet> next;
    for (GenSet T : level) {
      members_.push_back(T);
      for (int s : (generators_ - T).members()) {
        const GenSet U = T.with(s);
        if (seen.count(U.bits())) continue;
        const bool sph = is_spherical(M, U);
        seen[U.bits()] = sph;
        if (sph) next.push_back(U);
      }
    }
    level = std::move(next);
  }
  std::sort(members_.begin(), members_.end(), canonical_less);
}

bool SphericalPoset::contains(GenSet T) const { return index_of(T) >= 0; }

int SphericalPoset::index_of(GenSet T) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), T, canonical_less);
  if (it == members_.end() || *it != T) return -1;
  return static_cast<int>(it - members_.begin());
}

int SphericalPoset::max_size() const { return members_.empty() ? 0 : members_.back().size(); }

SphericalPoset spherical_poset(const CoxeterMatrix& M) { return SphericalPoset(M); }

}  // namespace coxtop
