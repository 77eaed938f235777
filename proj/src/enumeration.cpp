#include <deque>
#include <unordered_map>

#include "coxtop/coxeter.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

ElementTable::ElementTable(CoxeterMatrix M, GenSet T, std::vector<GroupElement> elements,
                           std::vector<std::vector<int>> right_mult)
    : matrix_(std::move(M)), generators_(T), elements_(std::move(elements)),
      right_mult_(std::move(right_mult)) {}

int ElementTable::times(int w, int s) const {
  if (!generators_.contains(s)) throw ValidationError("generator outside the special subgroup");
  return right_mult_[static_cast<std::size_t>(w)][static_cast<std::size_t>(s)];
}

int ElementTable::evaluate(const std::vector<int>& word, int start) const {
  int w = start;
  for (int s : word) w = times(w, s);
  return w;
}

int ElementTable::inverse(int w) const {
  const auto& word = elements_[static_cast<std::size_t>(w)].word;
  return evaluate(std::vector<int>(word.rbegin(), word.rend()));
}

int ElementTable::longest() const {
  int best = 0;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].length > elements_[static_cast<std::size_t>(best)].length) best = static_cast<int>(i);
  return best;
}

int ElementTable::max_length() const { return elements_[static_cast<std::size_t>(longest())].length; }

GenSet descent_set(const ElementTable& table, int w) { return table[static_cast<std::size_t>(w)].descents; }

namespace {

// Matrix of w in the geometric representation, stored column by column:
// column t holds w(alpha_t) in the simple-root basis.
using RootMatrix = std::vector<std::vector<Surd>>;

struct Rep {
  std::vector<int> gens;                // ambient indices
  std::vector<std::vector<Surd>> twice_cos;  // 2cos(pi/m) between local indices

  Rep(const CoxeterMatrix& M, GenSet T, bool allow_infinity) : gens(T.members()) {
    const std::size_t k = gens.size();
    twice_cos.assign(k, std::vector<Surd>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (i == j) continue;
        const int m = M.m(gens[i], gens[j]);
        if (m == kInfinity && !allow_infinity)
          throw ValidationError("infinite label inside a special subgroup");
        if (m != kInfinity && (m < 2 || m > 6))
          throw ValidationError("label " + std::to_string(m) +
                                " is outside the supported exact field");
        twice_cos[i][j] = Surd(2L) * Surd::cos_pi_over(m);
      }
  }

  RootMatrix identity() const {
    RootMatrix id(gens.size(), std::vector<Surd>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) id[i][i] = Surd(1L);
    return id;
  }

  // Matrix of w*s from that of w.
  RootMatrix times(const RootMatrix& w, std::size_t s) const {
    RootMatrix out = w;
    for (std::size_t t = 0; t < gens.size(); ++t) {
      if (t == s || twice_cos[s][t].is_zero()) continue;
      for (std::size_t r = 0; r < gens.size(); ++r)
        if (!w[s][r].is_zero()) out[t][r] += twice_cos[s][t] * w[s][r];
    }
    for (auto& x : out[s]) x = -x;
    return out;
  }

  static std::string key(const RootMatrix& w) {
    std::string out;
    for (const auto& col : w)
      for (const auto& x : col) {
        out += x.str();
        out += ';';
      }
    return out;
  }
};

int sign_of(const Surd& x) {
  if (x.is_rational()) return x.coord(0).sign();
  return x.sign();
}

// Alternating words in a dihedral group of order 2m.
ElementTable dihedral_table(const CoxeterMatrix& M, GenSet T) {
  const auto g = T.members();
  const int a = g[0];
  const int b = g[1];
  const int m = M.m(a, b);
  // Element (k, f): the alternating word of length k starting with letter f.
  std::vector<std::pair<int, int>> ids{{0, 0}};
  for (int k = 1; k < m; ++k) {
    ids.push_back({k, 0});
    ids.push_back({k, 1});
  }
  ids.push_back({m, 0});
  auto index_of = [m](int k, int f) {
    if (k == 0) return 0;
    if (k == m) return 2 * m - 1;
    return 2 * k - 1 + f;
  };
  auto letter = [](int pos, int f) { return pos % 2 == 1 ? f : 1 - f; };  // pos is 1-based

  const std::size_t n = M.rank() > 0 ? static_cast<std::size_t>(M.rank()) : 0;
  std::vector<GroupElement> elements;
  std::vector<std::vector<int>> right(ids.size(), std::vector<int>(n, -1));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto [k, f] = ids[i];
    GroupElement e;
    e.length = k;
    for (int pos = 1; pos <= k; ++pos) e.word.push_back(letter(pos, f) == 0 ? a : b);
    for (int x = 0; x < 2; ++x) {
      int res = 0;
      if (k == 0) {
        res = index_of(1, x);
      } else if (k < m) {
        if (letter(k, f) == x) res = index_of(k - 1, f);
        else res = index_of(k + 1, f);
      } else {
        const int start = letter(m, 0) == x ? 0 : 1;
        res = index_of(m - 1, start);
      }
      right[i][static_cast<std::size_t>(x == 0 ? a : b)] = res;
    }
    elements.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (int s : {a, b})
      if (elements[static_cast<std::size_t>(right[i][static_cast<std::size_t>(s)])].length < elements[i].length)
        elements[i].descents = elements[i].descents.with(s);
  return ElementTable(M, T, std::move(elements), std::move(right));
}

}  // namespace

ElementTable enumerate_group(const CoxeterMatrix& M, GenSet T) {
  if (!T.subset_of(M.all())) throw ValidationError("subset outside the generating set");
  if (!is_spherical(M, T)) throw ValidationError("W_" + M.name(T) + " is infinite");
  if (T.size() == 2) {
    const auto g = T.members();
    const int m = M.m(g[0], g[1]);
    if (m > 6) return dihedral_table(M, T);
  }
  const Rep rep(M, T, false);
  const std::size_t k = rep.gens.size();
  const std::size_t n = static_cast<std::size_t>(M.rank());

  std::vector<GroupElement> elements{GroupElement{}};
  std::vector<RootMatrix> mats{rep.identity()};
  std::unordered_map<std::string, int> index{{Rep::key(mats[0]), 0}};
  std::vector<std::vector<int>> right{std::vector<int>(n, -1)};
  // Elements are appended in shortlex order: parents are processed in that
  // order and generators in increasing index.
  for (std::size_t w = 0; w < elements.size(); ++w) {
    for (std::size_t s = 0; s < k; ++s) {
      RootMatrix ws = rep.times(mats[w], s);
      std::string key = Rep::key(ws);
      auto it = index.find(key);
      int target = 0;
      if (it == index.end()) {
        target = static_cast<int>(elements.size());
        GroupElement e;
        e.word = elements[w].word;
        e.word.push_back(rep.gens[s]);
        e.length = elements[w].length + 1;
        elements.push_back(std::move(e));
        mats.push_back(std::move(ws));
        right.emplace_back(n, -1);
        index.emplace(std::move(key), target);
      } else {
        target = it->second;
      }
      right[w][static_cast<std::size_t>(rep.gens[s])] = target;
    }
  }
  for (std::size_t w = 0; w < elements.size(); ++w)
    for (int s : rep.gens)
      if (elements[static_cast<std::size_t>(right[w][static_cast<std::size_t>(s)])].length < elements[w].length)
        elements[w].descents = elements[w].descents.with(s);
  return ElementTable(M, T, std::move(elements), std::move(right));
}

BallTable::BallTable(CoxeterMatrix M, int radius, std::vector<GroupElement> elements,
                     std::vector<std::vector<int>> right_mult)
    : matrix_(std::move(M)), radius_(radius), elements_(std::move(elements)),
      right_mult_(std::move(right_mult)) {}

std::vector<std::uint64_t> BallTable::counts_by_length() const {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(radius_) + 1, 0);
  for (const auto& e : elements_) ++out[static_cast<std::size_t>(e.length)];
  return out;
}

BallTable enumerate_ball(const CoxeterMatrix& M, int radius) {
  if (radius < 0) throw ValidationError("radius must be nonnegative");
  const Rep rep(M, M.all(), true);
  const std::size_t n = rep.gens.size();

  std::vector<GroupElement> elements{GroupElement{}};
  std::vector<RootMatrix> mats{rep.identity()};
  std::unordered_map<std::string, int> index{{Rep::key(mats[0]), 0}};
  std::vector<std::vector<int>> right{std::vector<int>(n, -1)};
  for (std::size_t w = 0; w < elements.size(); ++w) {
    // s is a descent of w iff w(alpha_s) is a negative root.
    GenSet desc;
    for (std::size_t s = 0; s < n; ++s) {
      for (const auto& x : mats[w][s]) {
        const int sg = sign_of(x);
        if (sg != 0) {
          if (sg < 0) desc = desc.with(static_cast<int>(s));
          break;
        }
      }
    }
    elements[w].descents = desc;
    for (std::size_t s = 0; s < n; ++s) {
      const bool down = desc.contains(static_cast<int>(s));
      if (!down && elements[w].length == radius) continue;
      RootMatrix ws = rep.times(mats[w], s);
      std::string key = Rep::key(ws);
      auto it = index.find(key);
      int target = 0;
      if (it != index.end()) {
        target = it->second;
      } else {
        if (down) throw ValidationError("internal: descent product missing from the ball");
        target = static_cast<int>(elements.size());
        GroupElement e;
        e.word = elements[w].word;
        e.word.push_back(static_cast<int>(s));
        e.length = elements[w].length + 1;
        elements.push_back(std::move(e));
        mats.push_back(std::move(ws));
        right.emplace_back(n, -1);
        index.emplace(std::move(key), target);
      }
      right[w][s] = target;
    }
  }
  return BallTable(M, radius, std::move(elements), std::move(right));
}

GenSet descent_set(const BallTable& table, int w) {
  const auto& e = table[static_cast<std::size_t>(w)];
  if (e.length >= table.radius())
    throw ValidationError("descent set by length comparison needs l(w) < radius");
  GenSet out;
  for (int s = 0; s < table.matrix().rank(); ++s) {
    const int ws = table.times(w, s);
    if (ws >= 0 && table[static_cast<std::size_t>(ws)].length < e.length) out = out.with(s);
  }
  return out;
}

}  // namespace coxtop
