#include <doctest.h>

#include <random>

#include "coxtop/errors.hpp"
#include "coxtop/graded_group.hpp"
#include "coxtop/integer_matrix.hpp"
#include "oracles.hpp"

using namespace coxtop;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, int zero_percent) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_int_distribution<int> pct(0, 99);
  IntMatrix A(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) A.at(i, j) = pct(rng) < zero_percent ? 0 : val(rng);
  return A;
}

std::vector<std::vector<Integer>> rows_of(const IntMatrix& A) {
  std::vector<std::vector<Integer>> out(A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out[i].push_back(A.at(i, j));
  return out;
}

}  // namespace

TEST_CASE("Smith normal form on a fixed example") {
  IntMatrix A(2, 2);
  A.at(0, 0) = 2;
  A.at(0, 1) = 4;
  A.at(1, 0) = 6;
  A.at(1, 1) = 8;
  const auto r = smith_normal_form(A);
  CHECK(r.invariants == std::vector<Integer>{2, 4});
  CHECK(r.U * A * r.V == r.D);
  CHECK(r.U * r.U_inv == IntMatrix::identity(2));
  CHECK(determinant(A) == -8);
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = 1 + rng() % 4;
    const std::size_t c = 1 + rng() % 4;
    const auto A = random_matrix(rng, r, c, -6, 6, 30);
    CAPTURE(A.str());
    const auto res = smith_normal_form(A);
    CHECK(res.invariants == oracle::invariant_factors_by_minors(A));
    CHECK(res.U * A * res.V == res.D);
    CHECK(res.U * res.U_inv == IntMatrix::identity(r));
    CHECK(abs(determinant(res.U)) == 1);
    CHECK(abs(determinant(res.V)) == 1);
    for (std::size_t k = 1; k < res.invariants.size(); ++k) CHECK(res.invariants[k] % res.invariants[k - 1] == 0);
    CHECK(invariant_factors(A) == res.invariants);
  }
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto A = random_matrix(rng, n, n, -9, 9, 20);
    CHECK(determinant(A) == oracle::leibniz_det(rows_of(A)));
  }
}

TEST_CASE("sparse invariant factors agree with the dense computation") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t r = 1 + rng() % 9;
    const std::size_t c = 1 + rng() % 9;
    // boundary-like entries: mostly 0 and +-1 with the odd larger value
    const auto A = random_matrix(rng, r, c, -2, 2, 60);
    SparseIntMatrix S(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (A.at(i, j) != 0) S.add(i, j, A.at(i, j));
    CHECK(S.to_dense() == A);
    CHECK(invariant_factors(S) == invariant_factors(A));
  }
}

TEST_CASE("Hermite normal form spans the same lattice") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    const auto A = random_matrix(rng, 3, 4, -5, 5, 25);
    const auto H = hermite_normal_form(A);
    // same row lattice: each matrix's rows are integer combinations of the other's
    for (std::size_t i = 0; i < A.rows(); ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(A.at(i, j));
      CHECK(coordinates_in(H.transpose(), row).has_value());
    }
    for (std::size_t i = 0; i < H.rows(); ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < H.cols(); ++j) row.push_back(H.at(i, j));
      CHECK(coordinates_in(A.transpose(), row).has_value());
    }
    CHECK(H.rows() == smith_normal_form(A).rank());
  }
}

TEST_CASE("quotients, spans and complements") {
  // span of (2,0,0) and (0,3,0) in Z^3: Z^1 free part and torsion 2,3 -> Z/6
  const std::vector<std::vector<Integer>> gens = {{2, 0, 0}, {0, 3, 0}};
  const auto q = quotient_structure(3, gens);
  CHECK(q.free_rank == 1);
  CHECK(q.torsion == std::vector<Integer>{6});
  CHECK_THROWS_AS(direct_complement(3, gens), TheoremViolation);

  const std::vector<std::vector<Integer>> summand = {{1, 1, 0}, {0, 1, 1}};
  const auto B = span_basis(3, summand);
  const auto C = direct_complement(3, summand);
  CHECK(B.cols() == 2);
  CHECK(C.cols() == 1);
  IntMatrix joined(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    joined.at(i, 0) = B.at(i, 0);
    joined.at(i, 1) = B.at(i, 1);
    joined.at(i, 2) = C.at(i, 0);
  }
  CHECK(abs(determinant(joined)) == 1);

  const auto coords = coordinates_in(B, {1, 2, 1});
  REQUIRE(coords.has_value());
  CHECK_FALSE(coordinates_in(B, {1, 0, 0}).has_value());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    // random unimodular change of basis; the first k columns span a summand
    IntMatrix U = IntMatrix::identity(5);
    for (int step = 0; step < 12; ++step) {
      const std::size_t a = rng() % 5;
      const std::size_t b = rng() % 5;
      if (a != b) U.add_col(a, b, static_cast<long>(rng() % 5) - 2);
    }
    const std::size_t k = 1 + rng() % 4;
    std::vector<std::vector<Integer>> cols;
    for (std::size_t j = 0; j < k; ++j) cols.push_back(U.column(j));
    const auto S = span_basis(5, cols);
    const auto D = direct_complement(5, cols);
    CHECK(S.cols() == k);
    CHECK(D.cols() == 5 - k);
    IntMatrix all(5, 5);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < k; ++j) all.at(i, j) = S.at(i, j);
      for (std::size_t j = 0; j < 5 - k; ++j) all.at(i, k + j) = D.at(i, j);
    }
    CHECK(abs(determinant(all)) == 1);
  }
}

TEST_CASE("cochain complexes") {
  // the circle as two vertices and two edges
  CochainComplex C;
  C.first_degree = 0;
  C.dims = {2, 2};
  SparseIntMatrix d0(2, 2);
  d0.add(0, 0, -1);
  d0.add(0, 1, 1);
  d0.add(1, 0, -1);
  d0.add(1, 1, 1);
  C.d = {d0};
  const auto h = cochain_cohomology(C);
  CHECK(h.at(0) == GroupEntry{1, {}, {}});
  CHECK(h.at(1) == GroupEntry{1, {}, {}});

  // RP^2-like torsion: Z --2--> Z gives H^1 = Z/2
  CochainComplex T;
  T.dims = {1, 1};
  SparseIntMatrix two(1, 1);
  two.add(0, 0, 2);
  T.d = {two};
  const auto ht = cochain_cohomology(T);
  CHECK(ht.at(0).is_zero());
  CHECK(ht.at(1).torsion == std::vector<Integer>{2});

  // d^2 != 0 is rejected
  CochainComplex bad;
  bad.dims = {1, 1, 1};
  SparseIntMatrix one(1, 1);
  one.add(0, 0, 1);
  bad.d = {one, one};
  CHECK_THROWS_AS(bad.check(), TheoremViolation);
}

TEST_CASE("graded groups and omega arithmetic") {
  CHECK(normalize_torsion({6, 4}) == std::vector<Integer>{2, 12});
  CHECK(normalize_torsion({1, 1}).empty());
  GroupEntry e{2, {3}, {}};
  const auto tripled = scaled(e, Rank(3));
  CHECK(tripled.free_rank == Rank(6));
  CHECK(tripled.torsion == std::vector<Integer>{3, 3, 3});
  const auto big = scaled(e, Rank::omega());
  CHECK(big.free_rank.is_omega());
  CHECK(big.torsion.empty());
  CHECK(big.omega_torsion == std::vector<Integer>{3});
  CHECK(scaled(GroupEntry{0, {}, {}}, Rank::omega()).is_zero());
  CHECK((Rank(0) * Rank::omega()).is_zero());
  CHECK((Rank(2) + Rank::omega()).is_omega());
  CHECK(Rank::omega().str() == "omega");

  GradedAbelianGroup g;
  g.set(1, GroupEntry{2, {}, {}});
  g.set(0, GroupEntry{0, {}, {}});
  CHECK(g.entries().size() == 1);
  CHECK(g.top_degree() == 1);
  CHECK(g.str() == "H^1 = Z^2");
}
