#include "coxtop/coxeter_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "coxtop/errors.hpp"

namespace coxtop {

CoxeterMatrix::CoxeterMatrix(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("a Coxeter matrix needs at least one generator");
  if (labels_.size() > GenSet::kMaxGenerators)
    throw ValidationError("at most 64 generators are supported");
  std::vector<std::string> sorted = labels_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("duplicate generator label");
  const int n = rank();
  entries_.assign(static_cast<std::size_t>(n * n), 2);
  for (int s = 0; s < n; ++s) entries_[static_cast<std::size_t>(s * n + s)] = 1;
}

void CoxeterMatrix::set(int s, int t, int m) {
  if (s == t) throw ValidationError("diagonal entries are fixed at 1");
  if (m < 2) throw ValidationError("off-diagonal entry must be >= 2 or inf");
  entries_[static_cast<std::size_t>(s * rank() + t)] = m;
  entries_[static_cast<std::size_t>(t * rank() + s)] = m;
}

int CoxeterMatrix::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("unknown generator label '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

GenSet CoxeterMatrix::subset(std::string_view text) const {
  GenSet out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out = out.with(index_of(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}' || c == '\t') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

std::vector<std::string> CoxeterMatrix::names(GenSet T) const {
  std::vector<std::string> out;
  for (int s : T.members()) out.push_back(label(s));
  return out;
}

std::string CoxeterMatrix::name(GenSet T) const {
  std::string out = "{";
  bool first = true;
  for (int s : T.members()) {
    if (!first) out += ',';
    out += label(s);
    first = false;
  }
  return out + "}";
}

CoxeterMatrix CoxeterMatrix::restrict_to(GenSet T) const {
  const auto idx = T.members();
  if (idx.empty()) throw ValidationError("cannot restrict a Coxeter matrix to the empty set");
  std::vector<std::string> labels;
  for (int s : idx) labels.push_back(label(s));
  CoxeterMatrix out(std::move(labels));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      out.set(static_cast<int>(i), static_cast<int>(j), m(idx[i], idx[j]));
  return out;
}

CoxeterMatrix CoxeterMatrix::block_sum(const CoxeterMatrix& other) const {
  std::vector<std::string> labels = labels_;
  for (const auto& l : other.labels_) {
    if (std::find(labels_.begin(), labels_.end(), l) != labels_.end())
      throw ValidationError("generator label collision: '" + l + "'");
    labels.push_back(l);
  }
  CoxeterMatrix out(std::move(labels));
  const int n = rank();
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t) out.set(s, t, m(s, t));
  for (int s = 0; s < other.rank(); ++s)
    for (int t = s + 1; t < other.rank(); ++t) out.set(n + s, n + t, other.m(s, t));
  return out;
}

std::vector<GenSet> CoxeterMatrix::components(GenSet T) const {
  std::vector<GenSet> out;
  GenSet remaining = T;
  while (!remaining.empty()) {
    GenSet comp = GenSet::single(remaining.first());
    GenSet frontier = comp;
    while (!frontier.empty()) {
      const int s = frontier.first();
      frontier = frontier.without(s);
      for (int t : (remaining - comp).members()) {
        if (m(s, t) != 2) {
          comp = comp.with(t);
          frontier = frontier.with(t);
        }
      }
    }
    out.push_back(comp);
    remaining = remaining - comp;
  }
  return out;
}

std::string CoxeterMatrix::to_text() const {
  std::ostringstream os;
  os << "gens";
  for (const auto& l : labels_) os << ' ' << l;
  os << '\n';
  for (int s = 0; s < rank(); ++s)
    for (int t = s + 1; t < rank(); ++t) {
      const int v = m(s, t);
      if (v == 2) continue;
      os << label(s) << ' ' << label(t) << ' ';
      if (v == kInfinity)
        os << "inf";
      else
        os << v;
      os << '\n';
    }
  return os.str();
}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_order(const std::string& tok, int line) {
  if (tok == "inf" || tok == "infinity" || tok == "oo") return kInfinity;
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "expected an integer order or 'inf', got '" + tok + "'");
  if (tok.size() > 9) throw ParseError(line, "order too large: " + tok);
  const int m = std::stoi(tok);
  if (m < 2) throw ParseError(line, "off-diagonal entry must be >= 2, got " + tok);
  return m;
}

}  // namespace

CoxeterMatrix parse_coxeter_matrix(std::string_view text) {
  std::optional<CoxeterMatrix> out;
  std::vector<std::vector<bool>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = tokenize(line);
    if (toks.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (!out) {
      if (toks[0] != "gens") throw ParseError(line_no, "first line must be 'gens <name>...'");
      if (toks.size() == 1) throw ParseError(line_no, "empty generator list");
      try {
        out.emplace(std::vector<std::string>(toks.begin() + 1, toks.end()));
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
      seen.assign(toks.size() - 1, std::vector<bool>(toks.size() - 1, false));
    } else {
      if (toks.size() != 3) throw ParseError(line_no, "expected '<name> <name> <m>'");
      int s = 0;
      int t = 0;
      try {
        s = out->index_of(toks[0]);
        t = out->index_of(toks[1]);
      } catch (const ValidationError& e) {
        throw ParseError(line_no, e.what());
      }
      if (s == t) throw ParseError(line_no, "diagonal entries are fixed at 1");
      const int m = parse_order(toks[2], line_no);
      if (seen[s][t] && out->m(s, t) != m)
        throw ParseError(line_no, "conflicting entries for pair " + toks[0] + " " + toks[1]);
      out->set(s, t, m);
      seen[s][t] = seen[t][s] = true;
    }
    if (end == text.size()) break;
  }
  if (!out) throw ParseError(line_no, "missing 'gens' line");
  return *out;
}

}  // namespace coxtop
