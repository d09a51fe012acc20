#include <doctest.h>

#include "support.hpp"

using namespace pdc;
using fixtures::code;

TEST_CASE("signed notation") {
  const auto t = parse(fixtures::trefoil, Flavor::PaperSigned);
  CHECK(serialize(t, Flavor::PaperSigned) == fixtures::trefoil);
  CHECK(parse(" { [ +4 , -2,-5,+1 ] ,\n[+2,-6,-3,+5],[+6,-4,-1,+3] } ") == t);
  CHECK(parse("{[+4,\xE2\x88\x92" "2,\xE2\x88\x92" "5,+1],[+2,-6,-3,+5],[+6,-4,-1,+3]}") == t);
  CHECK(parse("{[(1,+4),(1,-2),(1,-5),(1,+1)],[+2,-6,-3,+5],[+6,-4,-1,+3]}") == t);

  const auto l = parse(fixtures::link7);
  CHECK(l.mu() == 2);
  CHECK(l.arc_count(1) == 10);
  CHECK(l.arc_count(2) == 4);
  CHECK(serialize(code(fixtures::hopf), Flavor::PaperSigned) ==
        "{[(2,+2),(1,-2),(2,-1),(1,+1)],[(1,+2),(2,-2),(1,-1),(2,+1)]}");
}

TEST_CASE("syntax errors carry a position") {
  for (const char* bad : {"{[+4,-2,-5,+1]", "{[+4,-2,-5+1]}", "{[4,-2,-5,+1]}", "[+1,+2,-2,-1]",
                          "{[+1,+2,-2,-1]} x", "{[(1,+2),(2,-2),(1,-1),(2 +1)]}"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse(bad, Flavor::PaperSigned), SyntaxError);
  }
  try {
    parse("{[+4,-2,-5,+1]", Flavor::PaperSigned);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 14);
    CHECK(e.code() == Errc::Syntax);
  }
}

TEST_CASE("invalid codes pass through the validator error") {
  CHECK_THROWS_AS(parse("{[+1,-2,-1,+2]}"), InvalidCode);
  CHECK(parse_raw("{[+1,-2,-1,+2]}").size() == 1);
  try {
    parse("{[+4,-2,-5]}");
    FAIL("expected an invalid code");
  } catch (const InvalidCode& e) {
    CHECK(e.code() == Errc::Malformed);
  }
}

TEST_CASE("knottheory notation") {
  const auto t = code(fixtures::trefoil);
  CHECK(serialize(t, Flavor::KnotTheoryUnsigned) == "PD[X[4,2,5,1],X[2,6,3,5],X[6,4,1,3]]");
  CHECK(parse("PD[X[4,2,5,1],X[2,6,3,5],X[6,4,1,3]]") == t);
  CHECK(parse("PD[X[6,4,1,3], X[4,2,5,1], X[2,6,3,5]]") == t);
  CHECK(serialize(code(fixtures::hopf), Flavor::KnotTheoryUnsigned) == "PD[X[4,2,3,1],X[2,4,1,3]]");
  CHECK_THROWS_AS(parse("PD[X[4,2,5,1],X[2,6,3,5],X[6,4,1]]"), SyntaxError);
}

TEST_CASE("knottheory arcs occupy contiguous blocks per component") {
  const auto l = code(fixtures::link7);
  const std::string kt = serialize(l, Flavor::KnotTheoryUnsigned);
  for (std::size_t i = 0; i < l.crossings(); ++i)
    for (const auto& lab : l[i]) {
      const int global = l.arc_offset(lab.component) + lab.arc;
      if (lab.component == 1) CHECK((global >= 1 && global <= 10));
      if (lab.component == 2) CHECK((global >= 11 && global <= 14));
    }
  CHECK(parse(kt) == l);
}

TEST_CASE("split_global_numbering") {
  const auto u = split_global_numbering({{4, 2, 3, 1}, {2, 4, 1, 3}});
  CHECK(u == strip_signs(code(fixtures::hopf)));
}

TEST_CASE("json notation") {
  const auto h = code(fixtures::hopf);
  const std::string j = serialize(h, Flavor::Json);
  CHECK(j.back() == '\n');
  CHECK(j.rfind("{\"mu\":2,\"arc_counts\":[2,2],\"quadruples\":[[{\"c\":2,\"j\":2,\"s\":1}", 0) == 0);
  CHECK(detect_flavor(j) == Flavor::Json);
  CHECK(parse(j) == h);
  CHECK_THROWS_AS(parse("{\"mu\":3,\"quadruples\":[[{\"c\":1,\"j\":1,\"s\":1},{\"c\":1,\"j\":2,\"s\":1},"
                        "{\"c\":1,\"j\":2,\"s\":-1},{\"c\":1,\"j\":1,\"s\":-1}]]}"),
                  InvalidCode);
  CHECK_THROWS_AS(parse("{\"mu\":1,", Flavor::Json), SyntaxError);
}

TEST_CASE("flavor detection") {
  CHECK(detect_flavor(fixtures::trefoil) == Flavor::PaperSigned);
  CHECK(detect_flavor("  PD[X[1,2,2,1]]") == Flavor::KnotTheoryUnsigned);
  CHECK(detect_flavor("{ \"mu\": 1 }") == Flavor::Json);
  CHECK(parse_flavor_name("knottheory") == Flavor::KnotTheoryUnsigned);
  CHECK_FALSE(parse_flavor_name("dt").has_value());
}

TEST_CASE("round trip on published codes") {
  for (const auto& c : fixtures::published_codes())
    for (Flavor f : {Flavor::PaperSigned, Flavor::KnotTheoryUnsigned, Flavor::Json}) {
      CAPTURE(flavor_name(f));
      CHECK(parse(serialize(c, f), f) == c);
    }
}

TEST_CASE("round trip on random codes") {
  Rng rng(20240611);
  const auto seeds = fixtures::seeds();
  int tested = 0;
  while (tested < 1000) {
    const auto c = random_code(seeds, rng, 6, 8);
    if (!fixtures::sign_recoverable(c)) continue;
    ++tested;
    for (Flavor f : {Flavor::PaperSigned, Flavor::KnotTheoryUnsigned, Flavor::Json})
      REQUIRE(parse(serialize(c, f), f) == c);
  }
}

TEST_CASE("gauss code") {
  const auto g = to_gauss(code(fixtures::trefoil));
  REQUIRE(g.components.size() == 1);
  REQUIRE(g.components[0].size() == 6);
  for (std::size_t k = 0; k < 6; ++k) {
    CHECK(g.components[0][k].over != g.components[0][(k + 1) % 6].over);
    CHECK(g.components[0][k].sign == Sign::Positive);
  }
  CHECK(format_gauss(g) == "O1+ U2+ O3+ U1+ O2+ U3+");

  CHECK(format_gauss(to_gauss(code(fixtures::kink))) == "U1- O1-");

  const auto h = to_gauss(code(fixtures::hopf));
  REQUIRE(h.components.size() == 2);
  CHECK(h.components[0].size() == 2);
  CHECK(h.components[1].size() == 2);
  for (const auto& comp : h.components)
    for (const auto& e : comp) CHECK(e.sign == Sign::Positive);
}

TEST_CASE("gauss entries pair up") {
  for (const auto& c : fixtures::published_codes()) {
    std::map<int, std::pair<int, int>> seen;
    std::map<int, Sign> sign;
    for (const auto& comp : to_gauss(c).components)
      for (const auto& e : comp) {
        (e.over ? seen[e.crossing].first : seen[e.crossing].second)++;
        if (sign.count(e.crossing)) CHECK(sign[e.crossing] == e.sign);
        sign[e.crossing] = e.sign;
      }
    CHECK(seen.size() == c.crossings());
    for (const auto& [id, counts] : seen) CHECK(counts == std::pair<int, int>{1, 1});
  }
}
