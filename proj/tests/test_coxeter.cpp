#include <doctest.h>

#include "coxtop/coxeter.hpp"
#include "coxtop/errors.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coxtop;

TEST_CASE("parse_coxeter_matrix transcribes entries and defaults to 2") {
  const auto M = parse_coxeter_matrix("gens a b\n a b 3");
  CHECK(M.rank() == 2);
  CHECK(M.m(0, 1) == 3);
  CHECK(M.m(1, 0) == 3);
  CHECK(M.m(0, 0) == 1);

  const auto tri = parse_coxeter_matrix("gens a b c\n a b 3\n b c 3\n a c 3");
  for (int s = 0; s < 3; ++s)
    for (int t = 0; t < 3; ++t) CHECK(tri.m(s, t) == (s == t ? 1 : 3));

  const auto sparse = parse_coxeter_matrix("# comment\n\ngens x y z # trailing\nx z inf\n");
  CHECK(sparse.m(0, 1) == 2);
  CHECK(sparse.m(0, 2) == kInfinity);
  CHECK(parse_coxeter_matrix(sparse.to_text()) == sparse);
}

TEST_CASE("parse_coxeter_matrix rejects bad documents with line numbers") {
  auto line_of = [](const char* text) {
    try {
      parse_coxeter_matrix(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("gens a b\n a b 1") == 2);
  CHECK(line_of("gens a b\na c 3") == 2);
  CHECK(line_of("gens") == 1);
  CHECK(line_of("gens a b\na b 3\nb a 4") == 3);
  CHECK(line_of("gens a a") == 1);
  CHECK(line_of("a b 3") == 1);
  CHECK(line_of("gens a b\na b three") == 2);
  CHECK(line_of("gens a b\na a 3") == 2);
  CHECK(line_of("") >= 0);
  // A repeated identical entry is not a conflict.
  CHECK_NOTHROW(parse_coxeter_matrix("gens a b\na b 3\nb a 3"));
  CHECK_THROWS_AS(parse_coxeter_matrix("gens a b\n a b 1"), ValidationError);
}

TEST_CASE("subset names round trip") {
  const auto M = test::matrix("a3");
  const GenSet T = M.subset("{s,u}");
  CHECK(T.size() == 2);
  CHECK(M.name(T) == "{s,u}");
  CHECK(M.subset("").empty());
  CHECK(M.subset("{}").empty());
  CHECK_THROWS_AS(M.subset("s,x"), ValidationError);
}

TEST_CASE("classification matches known diagram types") {
  struct Case {
    const char* text;
    const char* name;
    std::uint64_t order;
  };
  const std::vector<Case> cases = {
      {"gens a", "A1", 2},
      {"gens a b\na b 3", "A2", 6},
      {"gens a b\na b 4", "B2", 8},
      {"gens a b\na b 6", "G2", 12},
      {"gens a b\na b 5", "I2(5)", 10},
      {"gens a b\na b 8", "I2(8)", 16},
      {"gens a b c\na b 3\nb c 3", "A3", 24},
      {"gens a b c\na b 4\nb c 3", "B3", 48},
      {"gens a b c\na b 5\nb c 3", "H3", 120},
      {"gens a b c d\na b 3\nb c 4\nc d 3", "F4", 1152},
      {"gens a b c d\na b 5\nb c 3\nc d 3", "H4", 14400},
      {"gens a b c d\na b 3\nb c 3\nb d 3", "D4", 192},
      {"gens a b c d e f\na b 3\nb c 3\nc d 3\nd e 3\nc f 3", "E6", 51840},
  };
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto M = parse_coxeter_matrix(c.text);
    const auto type = classify_component(M, M.all());
    CHECK(type.name == c.name);
    REQUIRE(spherical_order(M, M.all()).has_value());
    CHECK(*spherical_order(M, M.all()) == c.order);
  }
  for (const char* affine : {"gens a b\na b inf", "gens a b c\na b 3\nb c 3\na c 3",
                             "gens a b c\na b 4\nb c 4", "gens a b c\na b 3\nb c 6",
                             "gens a b c d\na b 3\nb c 3\nb d 3\nc d 3"}) {
    CAPTURE(affine);
    const auto M = parse_coxeter_matrix(affine);
    CHECK_FALSE(is_spherical(M, M.all()));
  }
}

TEST_CASE("cosine Gram determinant is zero on affine diagrams and positive on spherical ones") {
  const auto tri = test::matrix("triangle333");
  const auto minors = cosine_gram_minors(tri, tri.all());
  REQUIRE(minors.size() == 3);
  CHECK(minors[2].is_zero());
  CHECK_FALSE(cosine_gram_definite(tri, tri.all()));
  const auto h3 = test::matrix("h3");
  for (const auto& m : cosine_gram_minors(h3, h3.all())) CHECK(m.sign() > 0);
}

TEST_CASE("group enumeration agrees with the floating-point oracle") {
  for (const char* name : {"a2", "b2", "a3", "h3", "a1a2"}) {
    CAPTURE(name);
    const auto M = test::matrix(name);
    const auto table = enumerate_group(M);
    const oracle::FloatGroup ref(M, 100);
    REQUIRE(ref.complete);
    CHECK(table.size() == ref.size());
    CHECK(table.size() == *spherical_order(M, M.all()));
    // descent-set distribution, T by T
    for (GenSet T : all_subsets(M.all())) {
      std::size_t count = 0;
      for (std::size_t w = 0; w < table.size(); ++w)
        if (descent_set(table, static_cast<int>(w)) == T) ++count;
      CHECK(count == ref.count_with_descents(T.bits()));
    }
  }
}

TEST_CASE("element table invariants") {
  const auto M = test::matrix("b3");
  const auto table = enumerate_group(M);
  CHECK(table.size() == 48);
  for (std::size_t w = 0; w < table.size(); ++w) {
    const auto& e = table[w];
    CHECK(static_cast<int>(e.word.size()) == e.length);
    CHECK(table.evaluate(e.word) == static_cast<int>(w));
    CHECK(e.descents.empty() == (w == 0));
    for (int s = 0; s < M.rank(); ++s) {
      const int ws = table.times(static_cast<int>(w), s);
      CHECK(std::abs(table[static_cast<std::size_t>(ws)].length - e.length) == 1);
      CHECK(e.descents.contains(s) == (table[static_cast<std::size_t>(ws)].length < e.length));
    }
    CHECK(table.multiply(static_cast<int>(w), table.inverse(static_cast<int>(w))) == 0);
  }
  const int w0 = table.longest();
  CHECK(table[static_cast<std::size_t>(w0)].length == 9);
  CHECK(table[static_cast<std::size_t>(w0)].descents == M.all());

  // special subgroups
  const auto sub = enumerate_group(M, M.subset("s,t"));
  CHECK(sub.size() == 8);
  CHECK_THROWS_AS(enumerate_group(test::matrix("triangle333")), ValidationError);
}

TEST_CASE("large dihedral groups use the closed form") {
  const auto M = parse_coxeter_matrix("gens a b\na b 12");
  const auto table = enumerate_group(M);
  CHECK(table.size() == 24);
  CHECK(table[static_cast<std::size_t>(table.longest())].length == 12);
}

TEST_CASE("balls in infinite groups agree with the oracle") {
  for (const char* name : {"triangle333", "freeprod3", "square", "dinf", "mixed"}) {
    CAPTURE(name);
    const auto M = test::matrix(name);
    const int N = 6;
    const auto ball = enumerate_ball(M, N);
    const oracle::FloatGroup ref(M, N);
    CHECK(ball.size() == ref.size());
    std::vector<std::uint64_t> by_length(N + 1, 0);
    for (int l : ref.length) ++by_length[static_cast<std::size_t>(l)];
    CHECK(ball.counts_by_length() == by_length);
    for (std::size_t w = 0; w < ball.size(); ++w)
      if (ball[w].length < N) CHECK(descent_set(ball, static_cast<int>(w)) == ball[w].descents);
  }
  const auto tri = enumerate_ball(test::matrix("triangle333"), 4);
  CHECK(tri.counts_by_length() == std::vector<std::uint64_t>{1, 3, 6, 9, 12});
  // boundary elements have undetermined descents
  CHECK_THROWS_AS(descent_set(tri, static_cast<int>(tri.size()) - 1), ValidationError);
}

TEST_CASE("spherical poset") {
  const auto P = SphericalPoset(test::matrix("freeprod3"));
  CHECK(P.size() == 4);
  CHECK_FALSE(P.group_is_finite());
  CHECK(P.max_size() == 1);
  const auto Q = SphericalPoset(test::matrix("a3"));
  CHECK(Q.size() == 8);
  CHECK(Q.group_is_finite());
  for (std::size_t i = 1; i < Q.members().size(); ++i) CHECK(canonical_less(Q.members()[i - 1], Q.members()[i]));
}
