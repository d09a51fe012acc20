#include <doctest.h>

#include "pdcode/surface.hpp"
#include "support.hpp"

using namespace pdc;
using fixtures::code;

namespace {

std::set<Face> as_set(const FaceSet& fs) { return {fs.begin(), fs.end()}; }

Face knot_face(std::initializer_list<int> arcs) {
  Face f;
  for (int a : arcs) f.push_back(a > 0 ? pos(1, a) : neg(1, -a));
  return canonical_rotation(f);
}

}  // namespace

TEST_CASE("trefoil faces") {
  const auto t = code(fixtures::trefoil);
  const std::set<Face> expected{knot_face({1, -4}), knot_face({-1, -3, -5}), knot_face({-2, 5}),
                                knot_face({2, 6, 4}), knot_face({-6, 3})};
  CHECK(as_set(faces(t)) == expected);
  CHECK(as_set(faces(t)) == oracle::faces(t.quadruples()));
  CHECK(euler_characteristic(t) == 2);
}

TEST_CASE("torus faces") {
  const auto t = code(fixtures::torus);
  const std::set<Face> expected{knot_face({1, -4, -6, 3}), knot_face({2, 6, -3, -5, -1, 4}),
                                knot_face({5, -2})};
  CHECK(as_set(faces(t)) == expected);
  CHECK(euler_characteristic(t) == 0);
  const auto r = surface_report(t);
  CHECK(r.genus == std::vector<int>{1});
  CHECK_FALSE(r.spherical);
}

TEST_CASE("hopf faces") {
  const auto h = code(fixtures::hopf);
  const std::set<Face> expected{{pos(1, 2), pos(2, 2)},
                                {pos(1, 1), neg(2, 2)},
                                {neg(1, 1), neg(2, 1)},
                                {neg(1, 2), pos(2, 1)}};
  CHECK(as_set(faces(h)) == expected);
  CHECK(euler_characteristic(h) == 2);
}

TEST_CASE("faces start at their least label and are sorted") {
  for (const auto& c : fixtures::published_codes()) {
    const auto fs = faces(c);
    for (const auto& f : fs) CHECK(f == canonical_rotation(f));
    CHECK(std::is_sorted(fs.begin(), fs.end()));
  }
  CHECK(canonical_rotation(knot_face({-3, 2, 6})) == knot_face({2, 6, -3}));
}

TEST_CASE("surface reports") {
  const auto t = surface_report(code(fixtures::trefoil));
  CHECK(t.vertices == 3);
  CHECK(t.edges == 6);
  CHECK(t.face_count == 5);
  CHECK(t.chi == 2);
  CHECK(t.components.size() == 1);
  CHECK(t.genus == std::vector<int>{0});
  CHECK(t.spherical);

  const auto l = surface_report(code(fixtures::link7));
  CHECK(l.components.size() == 1);
  CHECK(l.chi == 2);
  CHECK(l.total_genus == 0);
  CHECK(l.spherical);
}

TEST_CASE("disconnected codes") {
  // Two one-crossing kinks on separate components.
  const auto c = code("{[(1,+1),(1,+2),(1,-2),(1,-1)],[(2,+1),(2,+2),(2,-2),(2,-1)]}");
  const auto r = surface_report(c);
  CHECK(r.components.size() == 2);
  CHECK(r.component_chi == std::vector<int>{2, 2});
  CHECK(r.chi == 4);
  CHECK(r.total_genus == 0);
  CHECK_FALSE(r.spherical);
}

TEST_CASE("diagram traversal") {
  const auto t = trace_diagram(code(fixtures::trefoil));
  REQUIRE(t.traversals.size() == 1);
  CHECK(t.traversals[0].size() == 6);
  for (int j = 1; j <= 6; ++j) CHECK(t.traversals[0][j - 1] == Arc{1, j});
  CHECK(std::all_of(t.crossing_signs.begin(), t.crossing_signs.end(),
                    [](Sign s) { return s == Sign::Positive; }));

  const auto h = trace_diagram(code(fixtures::hopf));
  CHECK(h.traversals == std::vector<std::vector<Arc>>{{{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}});
  CHECK(h.crossing_signs == std::vector<Sign>{Sign::Positive, Sign::Positive});

  const auto l = code(fixtures::link7);
  const auto d = trace_diagram(l);
  CHECK(d.traversals[0].size() == 10);
  CHECK(d.traversals[1].size() == 4);
  for (int c = 1; c <= 2; ++c) {
    const auto arcs = oracle::trace(l.quadruples(), c);
    REQUIRE(arcs.size() == d.traversals[c - 1].size());
    for (std::size_t k = 0; k < arcs.size(); ++k) CHECK(d.traversals[c - 1][k].arc == arcs[k]);
  }
}

TEST_CASE("surface invariants on random codes") {
  Rng rng(7);
  const auto seeds = fixtures::seeds();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_code(seeds, rng, 8, 9);
    const auto fs = faces(c);
    std::size_t total = 0;
    for (const auto& f : fs) total += f.size();
    REQUIRE(total == 4 * c.crossings());
    REQUIRE(as_set(fs) == oracle::faces(c.quadruples()));

    const auto r = surface_report(c);
    int chi_sum = 0;
    for (std::size_t k = 0; k < r.components.size(); ++k) {
      CHECK(r.component_chi[k] <= 2);
      CHECK(r.component_chi[k] % 2 == 0);
      CHECK(r.genus[k] >= 0);
      chi_sum += r.component_chi[k];
    }
    CHECK(chi_sum == r.chi);
    CHECK(r.spherical == (r.components.size() == 1 && r.chi == 2));

    const auto d = trace_diagram(c);
    for (int k = 1; k <= c.mu(); ++k) CHECK(d.traversals[k - 1].size() == static_cast<std::size_t>(c.arc_count(k)));
  }
}
