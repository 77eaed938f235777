#include <algorithm>
#include <set>

#include "coxtop/errors.hpp"
#include "coxtop/integer_matrix.hpp"

namespace coxtop {

namespace {

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Smith reduction; U, U_inv and V are updated only when `track` is set.
struct Reducer {
  IntMatrix D, U, U_inv, V;
  bool track;

  Reducer(const IntMatrix& A, bool t) : D(A), track(t) {
    if (track) {
      U = IntMatrix::identity(A.rows());
      U_inv = U;
      V = IntMatrix::identity(A.cols());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    D.swap_rows(a, b);
    if (track) {
      U.swap_rows(a, b);
      U_inv.swap_cols(a, b);
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    D.swap_cols(a, b);
    if (track) V.swap_cols(a, b);
  }
  // row a += f * row b
  void add_row(std::size_t a, std::size_t b, const Integer& f) {
    D.add_row(a, b, f);
    if (track) {
      U.add_row(a, b, f);
      U_inv.add_col(b, a, -f);
    }
  }
  void add_col(std::size_t a, std::size_t b, const Integer& f) {
    D.add_col(a, b, f);
    if (track) V.add_col(a, b, f);
  }
  void negate_row(std::size_t a) {
    D.negate_row(a);
    if (track) {
      U.negate_row(a);
      U_inv.negate_col(a);
    }
  }

  // Moves the smallest nonzero |entry| of the block [t.., t..] to (t, t).
  bool bring_min_to(std::size_t t) {
    std::size_t bi = 0;
    std::size_t bj = 0;
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < D.rows(); ++i)
      for (std::size_t j = t; j < D.cols(); ++j) {
        const Integer& x = D.at(i, j);
        if (x == 0) continue;
        const Integer a = abs_of(x);
        if (!found || a < best) {
          found = true;
          best = a;
          bi = i;
          bj = j;
          if (best == 1) goto done;
        }
      }
  done:
    if (!found) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void run() {
    const std::size_t lim = std::min(D.rows(), D.cols());
    for (std::size_t t = 0; t < lim; ++t) {
      if (!bring_min_to(t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < D.rows(); ++i) {
          if (D.at(i, t) == 0) continue;
          const Integer q = D.at(i, t) / D.at(t, t);
          add_row(i, t, -q);
          if (D.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
          if (D.at(t, j) == 0) continue;
          const Integer q = D.at(t, j) / D.at(t, t);
          add_col(j, t, -q);
          if (D.at(t, j) != 0) clean = false;
        }
        if (!clean) {
          // A remainder smaller than the pivot is left in row or column t.
          std::size_t bi = t;
          std::size_t bj = t;
          Integer best = abs_of(D.at(t, t));
          for (std::size_t i = t + 1; i < D.rows(); ++i)
            if (D.at(i, t) != 0 && abs_of(D.at(i, t)) < best) {
              best = abs_of(D.at(i, t));
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < D.cols(); ++j)
            if (D.at(t, j) != 0 && abs_of(D.at(t, j)) < best) {
              best = abs_of(D.at(t, j));
              bi = t;
              bj = j;
            }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        // Divisibility of the remaining block by the pivot.
        bool divides = true;
        for (std::size_t i = t + 1; i < D.rows() && divides; ++i)
          for (std::size_t j = t + 1; j < D.cols(); ++j)
            if (D.at(i, j) % D.at(t, t) != 0) {
              add_row(t, i, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      if (D.at(t, t) < 0) negate_row(t);
    }
  }
};

}  // namespace

SNFResult smith_normal_form(const IntMatrix& A) {
  Reducer r(A, true);
  r.run();
  SNFResult out{std::move(r.U), std::move(r.U_inv), std::move(r.D), std::move(r.V), {}};
  for (std::size_t t = 0; t < std::min(out.D.rows(), out.D.cols()); ++t)
    if (out.D.at(t, t) != 0) out.invariants.push_back(out.D.at(t, t));
  return out;
}

std::vector<Integer> invariant_factors(const IntMatrix& A) {
  Reducer r(A, false);
  r.run();
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(r.D.rows(), r.D.cols()); ++t)
    if (r.D.at(t, t) != 0) out.push_back(r.D.at(t, t));
  return out;
}

Integer determinant(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw ValidationError("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  // Fraction-free Bareiss elimination.
  IntMatrix M = A;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && M.at(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      M.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
      M.at(i, k) = 0;
    }
    prev = M.at(k, k);
  }
  return sign * M.at(n - 1, n - 1);
}

IntMatrix hermite_normal_form(const IntMatrix& A) {
  IntMatrix M = A;
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    // Euclid on column c among rows r..
    for (;;) {
      std::size_t best = M.rows();
      for (std::size_t i = r; i < M.rows(); ++i)
        if (M.at(i, c) != 0 && (best == M.rows() || abs_of(M.at(i, c)) < abs_of(M.at(best, c)))) best = i;
      if (best == M.rows()) break;
      M.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < M.rows(); ++i) {
        if (M.at(i, c) == 0) continue;
        M.add_row(i, r, -(M.at(i, c) / M.at(r, c)));
        if (M.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r >= M.rows() || M.at(r, c) == 0) continue;
    if (M.at(r, c) < 0) M.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = M.at(i, c) / M.at(r, c);
      if (M.at(i, c) - q * M.at(r, c) < 0) q -= 1;
      M.add_row(i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, M.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(i, j);
  return out;
}

QuotientStructure quotient_structure(std::size_t n, const std::vector<std::vector<Integer>>& generators) {
  QuotientStructure out;
  if (generators.empty()) {
    out.free_rank = n;
    return out;
  }
  const auto inv = invariant_factors(IntMatrix::from_columns(n, generators));
  out.free_rank = n - inv.size();
  for (const auto& d : inv)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

IntMatrix span_basis(std::size_t n, const std::vector<std::vector<Integer>>& generators) {
  if (generators.empty()) return IntMatrix(n, 0);
  const auto snf = smith_normal_form(IntMatrix::from_columns(n, generators));
  IntMatrix out(n, snf.rank());
  for (std::size_t j = 0; j < snf.rank(); ++j)
    for (std::size_t i = 0; i < n; ++i) out.at(i, j) = snf.invariants[j] * snf.U_inv.at(i, j);
  return hermite_normal_form(out.transpose()).transpose();
}

IntMatrix direct_complement(std::size_t n, const std::vector<std::vector<Integer>>& generators) {
  if (generators.empty()) return IntMatrix::identity(n);
  const auto snf = smith_normal_form(IntMatrix::from_columns(n, generators));
  for (const auto& d : snf.invariants)
    if (d != 1) throw TheoremViolation("submodule is not a direct summand (quotient has torsion)");
  const std::size_t r = snf.rank();
  if (r == n) return IntMatrix(n, 0);
  return hermite_normal_form(snf.U_inv.column_block(r, n - r).transpose()).transpose();
}

std::optional<std::vector<Integer>> coordinates_in(const IntMatrix& basis, const std::vector<Integer>& v) {
  if (v.size() != basis.rows()) throw ValidationError("vector length mismatch");
  if (basis.cols() == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return std::vector<Integer>{};
  }
  const auto snf = smith_normal_form(basis);
  if (snf.rank() != basis.cols()) throw ValidationError("basis columns are linearly dependent");
  std::vector<Integer> uv(basis.rows(), 0);
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t k = 0; k < basis.rows(); ++k)
      if (snf.U.at(i, k) != 0 && v[k] != 0) uv[i] += snf.U.at(i, k) * v[k];
  std::vector<Integer> y(basis.cols(), 0);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (i < snf.rank()) {
      if (uv[i] % snf.invariants[i] != 0) return std::nullopt;
      y[i] = uv[i] / snf.invariants[i];
    } else if (uv[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<Integer> x(basis.cols(), 0);
  for (std::size_t i = 0; i < basis.cols(); ++i)
    for (std::size_t k = 0; k < basis.cols(); ++k)
      if (snf.V.at(i, k) != 0 && y[k] != 0) x[i] += snf.V.at(i, k) * y[k];
  return x;
}

std::vector<Integer> invariant_factors(const SparseIntMatrix& A) {
  const std::size_t R = A.rows();
  const std::size_t C = A.cols();
  std::vector<std::map<std::size_t, Integer>> rows(R);
  std::vector<std::set<std::size_t>> cols(C);
  for (std::size_t i = 0; i < R; ++i) {
    rows[i] = A.row(i);
    for (const auto& [j, v] : rows[i]) cols[j].insert(i);
  }
  std::vector<bool> row_alive(R, true);
  std::size_t units = 0;

  for (;;) {
    // Unit pivot with the smallest fill-in estimate; first found wins ties.
    std::size_t pr = R;
    std::size_t pc = C;
    std::size_t best = 0;
    for (std::size_t i = 0; i < R && !(pr < R && best == 0); ++i) {
      if (!row_alive[i]) continue;
      for (const auto& [j, v] : rows[i]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (rows[i].size() - 1) * (cols[j].size() - 1);
        if (pr == R || cost < best) {
          pr = i;
          pc = j;
          best = cost;
          if (cost == 0) break;
        }
      }
    }
    if (pr == R) break;
    const Integer u = rows[pr].at(pc);
    const auto pivot_row = rows[pr];
    const std::vector<std::size_t> targets(cols[pc].begin(), cols[pc].end());
    for (std::size_t i : targets) {
      if (i == pr) continue;
      const Integer f = rows[i].at(pc) * u;  // u^-1 == u
      for (const auto& [j, v] : pivot_row) {
        auto [it, inserted] = rows[i].emplace(j, -f * v);
        if (inserted) {
          cols[j].insert(i);
        } else {
          it->second -= f * v;
          if (it->second == 0) {
            rows[i].erase(it);
            cols[j].erase(i);
          }
        }
      }
    }
    for (const auto& [j, v] : pivot_row) cols[j].erase(pr);
    rows[pr].clear();
    row_alive[pr] = false;
    ++units;
  }

  std::vector<std::size_t> live_rows;
  std::vector<std::size_t> live_cols;
  for (std::size_t i = 0; i < R; ++i)
    if (row_alive[i] && !rows[i].empty()) live_rows.push_back(i);
  for (std::size_t j = 0; j < C; ++j)
    if (!cols[j].empty()) live_cols.push_back(j);
  std::vector<Integer> out(units, Integer(1));
  if (!live_rows.empty()) {
    IntMatrix core(live_rows.size(), live_cols.size());
    for (std::size_t a = 0; a < live_cols.size(); ++a)
      for (std::size_t b = 0; b < live_rows.size(); ++b) {
        auto it = rows[live_rows[b]].find(live_cols[a]);
        if (it != rows[live_rows[b]].end()) core.at(b, a) = it->second;
      }
    for (auto& d : invariant_factors(core)) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace coxtop
