#include <doctest.h>

#include <random>

#include "coxtop/complexes.hpp"
#include "coxtop/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coxtop;

namespace {

std::vector<Integer> free_ranks(const GradedAbelianGroup& g, int top) {
  std::vector<Integer> out;
  for (int k = 0; k <= top; ++k) out.push_back(g.at(k).free_rank.value());
  return out;
}

std::vector<Integer> as_integers(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("void complex differs from the complex with only the empty face") {
  const SimplicialComplex none;
  const auto empty = SimplicialComplex::generated_by({});
  CHECK(none.is_void());
  CHECK_FALSE(empty.is_void());
  CHECK(empty.dimension() == -1);
  CHECK(empty.num_faces(-1) == 1);
  CHECK_FALSE(none == empty);
  CHECK(reduced_cohomology(none).is_void);
  // reduced cohomology of {empty face} is Z in degree -1
  CHECK(reduced_cohomology(empty).groups.at(-1).free_rank == Rank(1));
}

TEST_CASE("closure and face bookkeeping") {
  const auto X = SimplicialComplex::generated_by({{"c", "a", "b"}, {"c", "d"}});
  CHECK(X.vertices() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(X.num_faces(0) == 4);
  CHECK(X.num_faces(1) == 4);
  CHECK(X.num_faces(2) == 1);
  CHECK(X.contains({"b", "a"}));
  CHECK_FALSE(X.contains({"a", "d"}));
  const auto Y = SimplicialComplex::generated_by({{"a", "b"}});
  CHECK(Y.is_subcomplex_of(X));
  CHECK_FALSE(X.is_subcomplex_of(Y));
  CHECK(union_of(X, Y) == X);
  CHECK(intersection_of(X, Y) == Y);
  CHECK(oracle::euler_from_faces(X) == 1);
}

TEST_CASE("cohomology agrees with prime-field ranks and face counts") {
  std::mt19937 rng(31);
  const std::vector<std::string> names = {"a", "b", "c", "d", "e", "f"};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::vector<std::string>> gens;
    const int count = 1 + static_cast<int>(rng() % 7);
    for (int g = 0; g < count; ++g) {
      std::vector<std::string> f;
      for (const auto& n : names)
        if (rng() % 3 == 0) f.push_back(n);
      if (!f.empty()) gens.push_back(f);
    }
    const auto X = SimplicialComplex::generated_by(gens);
    const auto h = cohomology(X);
    const auto betti = oracle::betti(X);
    CHECK(free_ranks(h, X.dimension()) == as_integers(betti));
    long chi = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long>(betti[k]);
    CHECK(chi == oracle::euler_from_faces(X));
  }
}

TEST_CASE("known spaces") {
  // boundary of a tetrahedron is S^2
  const auto S2 = SimplicialComplex::generated_by({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
  const auto h = cohomology(S2);
  CHECK(h.at(0).free_rank == Rank(1));
  CHECK(h.at(1).is_zero());
  CHECK(h.at(2).free_rank == Rank(1));

  // a 6-vertex RP^2 has H^2 = Z/2
  const auto RP2 = SimplicialComplex::generated_by({{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                                                    {"1", "2", "6"}, {"2", "3", "5"}, {"2", "4", "5"}, {"2", "4", "6"},
                                                    {"3", "4", "6"}, {"3", "5", "6"}});
  const auto hp = cohomology(RP2);
  CHECK(hp.at(0).free_rank == Rank(1));
  CHECK(hp.at(1).is_zero());
  CHECK(hp.at(2).free_rank == Rank(0));
  CHECK(hp.at(2).torsion == std::vector<Integer>{2});

  // relative: (edge, endpoints) has H^1 = Z
  const auto E = SimplicialComplex::generated_by({{"a", "b"}});
  const auto ends = SimplicialComplex::generated_by({{"a"}, {"b"}});
  const auto rel = relative_cohomology(E, ends);
  CHECK(rel.at(0).is_zero());
  CHECK(rel.at(1).free_rank == Rank(1));
  CHECK(free_ranks(rel, 1) == as_integers(oracle::relative_betti(E, ends)));
  CHECK_THROWS_AS(relative_cohomology(ends, E), ValidationError);
}

TEST_CASE("nerve and chambers of standard examples") {
  const auto free3 = test::matrix("freeprod3");
  const auto L = nerve(free3);
  CHECK(L.dimension() == 0);
  CHECK(L.num_faces(0) == 3);

  const auto tri = test::matrix("triangle333");
  const auto Lt = nerve(tri);
  CHECK(Lt.dimension() == 1);
  CHECK(oracle::betti(Lt) == std::vector<std::size_t>{1, 1});

  const auto sq = nerve(test::matrix("square"));
  CHECK(sq.num_faces(1) == 4);
  CHECK(oracle::betti(sq) == std::vector<std::size_t>{1, 1});

  // K for the free product is the cone on three points: a tripod
  const auto K = davis_chamber(free3);
  CHECK(K.complex().num_faces(0) == 4);
  CHECK(K.complex().num_faces(1) == 3);
  for (int s = 0; s < 3; ++s) CHECK(K.mirror(s).num_faces(0) == 1);
  CHECK(K.empty_face_label() == free3.all());

  // classical chamber: vertices are labels, Delta_s is the face opposite s
  const auto D = classical_chamber(test::matrix("a3"));
  CHECK(D.complex().dimension() == 2);
  CHECK(D.mirror(0).contains({"t", "u"}));
  CHECK_FALSE(D.mirror(0).contains({"s"}));

  const auto Ka = davis_chamber(test::matrix("a2"));
  CHECK(Ka.complex().num_faces(0) == 4);
  const auto vertex = Ka.complex().vertex_index("{s,t}");
  CHECK(Ka.label(0, static_cast<std::size_t>(vertex)) == test::matrix("a2").all());
}

TEST_CASE("relative groups of the Davis chamber") {
  // (K, K^{S}) for the free product: tripod rel three leaves, H^1 = Z^2
  const auto M = test::matrix("freeprod3");
  const auto K = davis_chamber(M);
  const auto h = relative_cohomology(K.complex(), mirror_union(K, M.all()));
  CHECK(h.at(1).free_rank == Rank(2));
  CHECK(h.at(0).is_zero());
  CHECK(mirror_union(K, GenSet()).is_void());

  // (3,3,3): (K, boundary) is a disk rel its boundary
  const auto T = test::matrix("triangle333");
  const auto KT = davis_chamber(T);
  const auto hd = relative_cohomology(KT.complex(), mirror_union(KT, T.all()));
  CHECK(hd.entries().size() == 1);
  CHECK(hd.at(2).free_rank == Rank(1));
  CHECK(free_ranks(hd, 2) == as_integers(oracle::relative_betti(KT.complex(), mirror_union(KT, T.all()))));
}

TEST_CASE("punctured nerve homology") {
  const auto M = test::matrix("freeprod3");
  const auto p = punctured_nerve_homology(M);
  REQUIRE(p.size() == 4);
  // T = {} : three points, reduced H^0 = Z^2
  CHECK(p[0].second.groups.at(0).free_rank == Rank(2));
  // T = {s}: two points
  CHECK(p[1].second.groups.at(0).free_rank == Rank(1));
}

TEST_CASE("metric flag check holds on every test matrix") {
  for (const char* name : {"a2", "a3", "b3", "h3", "triangle333", "freeprod3", "square", "mixed", "dinf"}) {
    CAPTURE(name);
    const auto r = metric_flag_check(test::matrix(name));
    CHECK(r.ok);
    CHECK(r.mismatches.empty());
  }
  // four generators pairwise m = 3: every triangle is affine, so L is K_4 as a graph
  const auto M = parse_coxeter_matrix("gens a b c d\na b 3\na c 3\na d 3\nb c 3\nb d 3\nc d 3");
  const auto r = metric_flag_check(M);
  CHECK(r.ok);
  CHECK(r.cliques_checked == 15);
}
