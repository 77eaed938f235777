#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "coxtop/chamber_system.hpp"
#include "coxtop/errors.hpp"

namespace coxtop {

ChamberSystem::ChamberSystem(CoxeterMatrix type, std::size_t chambers, std::vector<std::vector<int>> panel_of)
    : type_(std::move(type)), size_(chambers), panel_of_(std::move(panel_of)) {
  if (static_cast<int>(panel_of_.size()) != type_.rank())
    throw ValidationError("one panel partition per generator is required");
  for (auto& row : panel_of_) {
    if (row.size() != size_) throw ValidationError("panel partition does not cover the chambers");
    std::map<int, int> renumber;
    for (auto& p : row) {
      auto [it, inserted] = renumber.emplace(p, static_cast<int>(renumber.size()));
      p = it->second;
    }
    counts_.push_back(renumber.size());
  }
}

std::vector<std::vector<std::size_t>> ChamberSystem::panels(int s) const {
  std::vector<std::vector<std::size_t>> out(panel_count(s));
  for (std::size_t c = 0; c < size_; ++c) out[static_cast<std::size_t>(panel(s, c))].push_back(c);
  return out;
}

Residues residues(const ChamberSystem& Phi, GenSet T) {
  const std::size_t n = Phi.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int s : T.members()) {
    std::vector<long> first(Phi.panel_count(s), -1);
    for (std::size_t c = 0; c < n; ++c) {
      auto& f = first[static_cast<std::size_t>(Phi.panel(s, c))];
      if (f < 0) {
        f = static_cast<long>(c);
      } else {
        const auto a = find(c);
        const auto b = find(static_cast<std::size_t>(f));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  Residues out;
  out.type = T;
  out.residue_of.assign(n, -1);
  std::map<std::size_t, int> id;
  for (std::size_t c = 0; c < n; ++c) {
    auto [it, inserted] = id.emplace(find(c), static_cast<int>(out.members.size()));
    if (inserted) out.members.emplace_back();
    out.residue_of[c] = it->second;
    out.members[static_cast<std::size_t>(it->second)].push_back(c);
  }
  return out;
}

ChamberSystem thin_building(const CoxeterMatrix& M, GenSet T) {
  if (!is_spherical(M, T)) throw ValidationError("thin building of an infinite group");
  const CoxeterMatrix type = M.restrict_to(T);
  const auto table = enumerate_group(type);
  std::vector<std::vector<int>> panel_of(static_cast<std::size_t>(type.rank()),
                                         std::vector<int>(table.size()));
  for (int s = 0; s < type.rank(); ++s)
    for (std::size_t w = 0; w < table.size(); ++w)
      panel_of[static_cast<std::size_t>(s)][w] = std::min(static_cast<int>(w), table.times(static_cast<int>(w), s));
  return ChamberSystem(type, table.size(), std::move(panel_of));
}

ChamberSystem digon_building(int p, int q, const std::string& s, const std::string& t) {
  if (p < 2 || q < 2) throw ValidationError("digon building needs p, q >= 2");
  CoxeterMatrix type({s, t});
  const auto n = static_cast<std::size_t>(p * q);
  std::vector<std::vector<int>> panel_of(2, std::vector<int>(n));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      panel_of[0][static_cast<std::size_t>(i * q + j)] = j;
      panel_of[1][static_cast<std::size_t>(i * q + j)] = i;
    }
  return ChamberSystem(type, n, std::move(panel_of));
}

ChamberSystem projective_plane_building(int q, const std::string& s, const std::string& t) {
  if (q != 2 && q != 3) throw ValidationError("projective planes are supported for q = 2, 3");
  // Normalized nonzero vectors of F_q^3, in lexicographic order.
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        const std::array<int, 3> v{a, b, c};
        const auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
        if (lead != v.end() && *lead == 1) pts.push_back(v);
      }
  std::vector<std::vector<int>> panel_of(2);
  std::size_t n = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const int dot = pts[i][0] * pts[j][0] + pts[i][1] * pts[j][1] + pts[i][2] * pts[j][2];
      if (dot % q != 0) continue;
      panel_of[0].push_back(static_cast<int>(i));
      panel_of[1].push_back(static_cast<int>(j));
      ++n;
    }
  CoxeterMatrix type({s, t});
  type.set(0, 1, 3);
  return ChamberSystem(type, n, std::move(panel_of));
}

ChamberSystem product_building(const ChamberSystem& a, const ChamberSystem& b) {
  const CoxeterMatrix type = a.type().block_sum(b.type());
  const std::size_t n = a.size() * b.size();
  std::vector<std::vector<int>> panel_of;
  for (int s = 0; s < a.type().rank(); ++s) {
    auto& row = panel_of.emplace_back(n);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y)
        row[x * b.size() + y] = a.panel(s, x) * static_cast<int>(b.size()) + static_cast<int>(y);
  }
  for (int s = 0; s < b.type().rank(); ++s) {
    auto& row = panel_of.emplace_back(n);
    for (std::size_t x = 0; x < a.size(); ++x)
      for (std::size_t y = 0; y < b.size(); ++y)
        row[x * b.size() + y] = static_cast<int>(x) * static_cast<int>(b.panel_count(s)) + b.panel(s, y);
  }
  return ChamberSystem(type, n, std::move(panel_of));
}

WDistanceRow w_distances_from(const ChamberSystem& Phi, const ElementTable& table, std::size_t phi) {
  if (table.matrix() != Phi.type() || table.generators() != Phi.type().all())
    throw ValidationError("element table does not match the chamber system type");
  const std::size_t n = Phi.size();
  const int rank = Phi.type().rank();
  std::vector<std::vector<std::vector<std::size_t>>> members;
  for (int s = 0; s < rank; ++s) members.push_back(Phi.panels(s));

  std::vector<int> dist(n, -1);
  std::vector<std::vector<int>> found(n);
  dist[phi] = 0;
  found[phi] = {0};
  std::deque<std::size_t> queue{phi};
  while (!queue.empty()) {
    const std::size_t c = queue.front();
    queue.pop_front();
    for (int s = 0; s < rank; ++s)
      for (std::size_t d : members[static_cast<std::size_t>(s)][static_cast<std::size_t>(Phi.panel(s, c))]) {
        if (d == c) continue;
        if (dist[d] == -1) {
          dist[d] = dist[c] + 1;
          queue.push_back(d);
        }
        if (dist[d] != dist[c] + 1) continue;
        for (int w : found[c]) {
          const int ws = table.times(w, s);
          auto& f = found[d];
          if (std::find(f.begin(), f.end(), ws) == f.end()) f.push_back(ws);
        }
      }
  }
  WDistanceRow out;
  out.element.assign(n, -1);
  out.consistent.assign(n, false);
  for (std::size_t d = 0; d < n; ++d) {
    if (dist[d] < 0) continue;
    std::sort(found[d].begin(), found[d].end());
    out.element[d] = found[d].front();
    out.consistent[d] = found[d].size() == 1 && table[static_cast<std::size_t>(found[d].front())].length == dist[d];
  }
  return out;
}

WDistance w_distance(const ChamberSystem& Phi, const ElementTable& table, std::size_t phi, std::size_t psi) {
  const auto row = w_distances_from(Phi, table, phi);
  return {row.element[psi], row.consistent[psi]};
}

bool BuildingReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const BuildingCheck& c) { return c.passed; });
}

namespace {

// Girth and diameter of the s/t incidence multigraph of one residue: nodes
// are s-panels and t-panels, edges are chambers.
std::pair<int, int> girth_and_diameter(const ChamberSystem& Phi, const std::vector<std::size_t>& chambers, int s,
                                       int t) {
  std::map<int, int> s_node;
  std::map<int, int> t_node;
  for (std::size_t c : chambers) {
    s_node.emplace(Phi.panel(s, c), 0);
    t_node.emplace(Phi.panel(t, c), 0);
  }
  int k = 0;
  for (auto& [p, id] : s_node) id = k++;
  for (auto& [p, id] : t_node) id = k++;
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(static_cast<std::size_t>(k));
  for (std::size_t e = 0; e < chambers.size(); ++e) {
    const int a = s_node[Phi.panel(s, chambers[e])];
    const int b = t_node[Phi.panel(t, chambers[e])];
    adj[static_cast<std::size_t>(a)].push_back({b, e});
    adj[static_cast<std::size_t>(b)].push_back({a, e});
  }
  int girth = -1;
  int diameter = 0;
  for (int root = 0; root < k; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(k), -1);
    std::vector<long> via(static_cast<std::size_t>(k), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, e] : adj[static_cast<std::size_t>(u)]) {
        if (static_cast<long>(e) == via[static_cast<std::size_t>(u)]) continue;
        if (dist[static_cast<std::size_t>(v)] == -1) {
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          via[static_cast<std::size_t>(v)] = static_cast<long>(e);
          queue.push_back(v);
        } else {
          const int cycle = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (girth < 0 || cycle < girth) girth = cycle;
        }
      }
    }
    for (int d : dist) {
      if (d < 0) return {girth, -1};
      diameter = std::max(diameter, d);
    }
  }
  return {girth, diameter};
}

}  // namespace

BuildingReport verify_building(const ChamberSystem& Phi) {
  BuildingReport report;
  const CoxeterMatrix& M = Phi.type();

  BuildingCheck thick{"panels have at least two chambers", true, false, ""};
  for (int s = 0; s < M.rank() && thick.passed; ++s)
    for (const auto& p : Phi.panels(s))
      if (p.size() < 2) {
        thick.passed = false;
        thick.detail = "an " + M.label(s) + "-panel containing chamber " + std::to_string(p.front()) +
                       " has one chamber";
        break;
      }
  report.checks.push_back(thick);

  BuildingCheck polygons{"rank-2 residues are generalized m-gons", true, false, ""};
  for (int s = 0; s < M.rank() && polygons.passed; ++s)
    for (int t = s + 1; t < M.rank() && polygons.passed; ++t) {
      const int m = M.m(s, t);
      if (m == kInfinity) continue;
      const auto R = residues(Phi, GenSet::single(s).with(t));
      for (const auto& members : R.members) {
        const auto [girth, diameter] = girth_and_diameter(Phi, members, s, t);
        if (girth != 2 * m || diameter != m) {
          polygons.passed = false;
          polygons.detail = "residue of type " + M.name(GenSet::single(s).with(t)) + " containing chamber " +
                            std::to_string(members.front()) + ": girth " +
                            (girth < 0 ? std::string("inf") : std::to_string(girth)) + ", diameter " +
                            std::to_string(diameter) + ", expected " + std::to_string(2 * m) + " and " +
                            std::to_string(m);
          break;
        }
      }
    }
  report.checks.push_back(polygons);

  BuildingCheck distance{"W-distance is well defined", true, false, ""};
  if (!is_spherical(M, M.all())) {
    distance.skipped = true;
    distance.detail = "infinite type";
  } else {
    const auto table = enumerate_group(M);
    std::vector<WDistanceRow> rows;
    for (std::size_t phi = 0; phi < Phi.size(); ++phi) rows.push_back(w_distances_from(Phi, table, phi));
    for (std::size_t phi = 0; phi < Phi.size() && distance.passed; ++phi)
      for (std::size_t psi = 0; psi < Phi.size(); ++psi) {
        const int w = rows[phi].element[psi];
        if (w < 0) {
          distance.passed = false;
          distance.detail = "chamber system is not connected";
          break;
        }
        if (!rows[phi].consistent[psi] || rows[psi].element[phi] != table.inverse(w)) {
          distance.passed = false;
          distance.detail = "chambers " + std::to_string(phi) + " and " + std::to_string(psi);
          break;
        }
      }
  }
  report.checks.push_back(distance);
  return report;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

ChamberSystem parse_chamber_system(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      lines.emplace_back(text.substr(pos, end - pos));
      pos = end + 1;
    }
  }
  auto strip = [](std::string line) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    return line;
  };
  std::size_t chambers_line = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto toks = split_ws(strip(lines[i]));
    if (!toks.empty() && toks[0] == "chambers") {
      chambers_line = i;
      break;
    }
  }
  if (chambers_line == lines.size())
    throw ParseError(static_cast<int>(lines.size()), "missing 'chambers <n>' line");
  std::string head;
  for (std::size_t i = 0; i < chambers_line; ++i) head += lines[i] + "\n";
  const CoxeterMatrix M = parse_coxeter_matrix(head);

  const int n_line = static_cast<int>(chambers_line) + 1;
  const auto ctoks = split_ws(strip(lines[chambers_line]));
  if (ctoks.size() != 2 || ctoks[1].find_first_not_of("0123456789") != std::string::npos || ctoks[1].size() > 9)
    throw ParseError(n_line, "expected 'chambers <n>'");
  const auto n = static_cast<std::size_t>(std::stoul(ctoks[1]));
  if (n == 0) throw ParseError(n_line, "a chamber system needs at least one chamber");

  std::vector<std::vector<int>> panel_of(static_cast<std::size_t>(M.rank()));
  for (std::size_t i = chambers_line + 1; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    std::string line = strip(lines[i]);
    if (split_ws(line).empty()) continue;
    const auto colon = line.find(':');
    const auto head_toks = split_ws(line.substr(0, colon == std::string::npos ? line.size() : colon));
    if (colon == std::string::npos || head_toks.size() != 2 || head_toks[0] != "panel")
      throw ParseError(line_no, "expected 'panel <s>: {i,j,...} ...'");
    int s = 0;
    try {
      s = M.index_of(head_toks[1]);
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
    auto& row = panel_of[static_cast<std::size_t>(s)];
    if (!row.empty()) throw ParseError(line_no, "second panel line for generator " + head_toks[1]);
    row.assign(n, -1);
    std::string body = line.substr(colon + 1);
    int cls = 0;
    std::size_t pos = 0;
    while (true) {
      const auto open = body.find('{', pos);
      if (open == std::string::npos) {
        if (!split_ws(body.substr(pos)).empty()) throw ParseError(line_no, "text outside braces");
        break;
      }
      if (!split_ws(body.substr(pos, open - pos)).empty()) throw ParseError(line_no, "text outside braces");
      const auto close = body.find('}', open);
      if (close == std::string::npos) throw ParseError(line_no, "unterminated '{'");
      std::string inner = body.substr(open + 1, close - open - 1);
      std::replace(inner.begin(), inner.end(), ',', ' ');
      const auto members = split_ws(inner);
      if (members.empty()) throw ParseError(line_no, "empty panel");
      for (const auto& tok : members) {
        if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
          throw ParseError(line_no, "bad chamber index '" + tok + "'");
        const auto c = static_cast<std::size_t>(std::stoul(tok));
        if (c >= n) throw ParseError(line_no, "chamber index " + tok + " out of range");
        if (row[c] != -1) throw ParseError(line_no, "chamber " + tok + " appears in two panels");
        row[c] = cls;
      }
      ++cls;
      pos = close + 1;
    }
    for (std::size_t c = 0; c < n; ++c)
      if (row[c] == -1) throw ParseError(line_no, "chamber " + std::to_string(c) + " is in no panel");
  }
  for (int s = 0; s < M.rank(); ++s)
    if (panel_of[static_cast<std::size_t>(s)].empty())
      throw ParseError(static_cast<int>(lines.size()), "no panel line for generator " + M.label(s));
  return ChamberSystem(M, n, std::move(panel_of));
}

std::string to_text(const ChamberSystem& Phi) {
  std::ostringstream os;
  os << Phi.type().to_text();
  os << "chambers " << Phi.size() << '\n';
  for (int s = 0; s < Phi.type().rank(); ++s) {
    os << "panel " << Phi.type().label(s) << ':';
    for (const auto& p : Phi.panels(s)) {
      os << " {";
      for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
      os << '}';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace coxtop
