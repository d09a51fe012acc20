#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "pdcode/surface.hpp"
#include "support.hpp"

using namespace pdc;
using fixtures::code;

namespace {

struct Criterion {
  const char* title;
  std::function<bool(std::ostream&)> check;
};

Face knot_face(std::initializer_list<int> arcs) {
  Face f;
  for (int a : arcs) f.push_back(a > 0 ? pos(1, a) : neg(1, -a));
  return canonical_rotation(f);
}

bool same_faces(const FaceSet& got, std::initializer_list<std::initializer_list<int>> want) {
  std::set<Face> a(got.begin(), got.end()), b;
  for (auto f : want) b.insert(knot_face(f));
  return a == b;
}

bool fixes(const std::vector<WhittenElement>& stab, const WhittenElement& g) {
  return std::find(stab.begin(), stab.end(), g) != stab.end();
}

std::vector<WhittenElement> exhaustive_stabilizer(const PDCode& c) {
  std::vector<WhittenElement> out;
  for (const auto& g : whitten_group(c.mu()))
    if (act(g, c) == c) out.push_back(g);
  return out;
}

bool c1(std::ostream& note) {
  const auto t = code(fixtures::trefoil);
  const auto r = surface_report(t);
  note << "F=" << r.face_count << " chi=" << r.chi;
  return same_faces(r.faces, {{1, -4}, {-1, -3, -5}, {-2, 5}, {2, 6, 4}, {-6, 3}}) && r.chi == 2 &&
         r.total_genus == 0 && r.spherical;
}

bool c2(std::ostream& note) {
  const auto t = code(fixtures::torus);
  const auto r = surface_report(t);
  note << "F=" << r.face_count << " chi=" << r.chi << " genus=" << r.total_genus;
  return same_faces(r.faces, {{1, -4, -6, 3}, {2, 6, -3, -5, -1, 4}, {5, -2}}) && r.chi == 0 &&
         r.total_genus == 1 && !r.spherical;
}

bool c3(std::ostream& note) {
  const auto l = code(fixtures::link7);
  const auto r = surface_report(l);
  note << "mu=" << l.mu() << " n=(" << l.arc_count(1) << "," << l.arc_count(2) << ") chi=" << r.chi;
  const bool oracle_chi =
      static_cast<int>(oracle::faces(l.quadruples()).size()) - static_cast<int>(l.crossings()) == 2;
  return l.mu() == 2 && l.arc_count(1) == 10 && l.arc_count(2) == 4 && r.components.size() == 1 &&
         r.chi == 2 && oracle_chi && r.spherical;
}

bool c4(std::ostream& note) {
  const auto got = act(parse_whitten("(-1,-1)"), code(fixtures::trefoil));
  note << serialize(got, Flavor::PaperSigned);
  return oracle::same_set(got.quadruples(), code(fixtures::mirror_trefoil).quadruples());
}

bool c5(std::ostream& note) {
  const auto h = code(fixtures::hopf);
  const auto stab = stabilizer(h);
  note << "|stabilizer|=" << stab.size() << " of " << whitten_group(2).size();
  return whitten_group(2).size() == 16 && stab == exhaustive_stabilizer(h) &&
         fixes(stab, parse_whitten("(1,1,1,(12))"));
}

bool c6(std::ostream& note) {
  bool ok = true;
  for (const char* text : {fixtures::trefoil, fixtures::hopf}) {
    const auto c = code(text);
    const auto sf = symmetry_free_form(c);
    const auto stab = exhaustive_stabilizer(sf.code);
    note << "n=" << sf.code.crossings() << " |stab|=" << stab.size() << " of "
         << whitten_group(c.mu()).size() << "; ";
    ok = ok && stab.size() == 1 && stab.front().is_identity();
  }
  return ok;
}

bool c7(std::ostream& note) {
  const auto g = whitten_group(2);
  const auto id = WhittenElement::identity(2);
  std::size_t triples = 0;
  bool ok = g.size() == 16;
  for (const auto& a : g) {
    ok = ok && multiply(a, id) == a && multiply(id, a) == a;
    ok = ok && multiply(a, inverse(a)) == id && multiply(inverse(a), a) == id;
    for (const auto& b : g) {
      ok = ok && multiply(a, b) == oracle::multiply(a, b);
      for (const auto& c : g) {
        ok = ok && multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
        ++triples;
      }
    }
  }
  note << triples << " triples";
  return ok;
}

bool c8(std::ostream& note) {
  Rng rng(8);
  const std::vector<PDCode> hopf{code(fixtures::hopf)};
  const PDCode random = random_code(hopf, rng, 6, 7);
  const auto g = whitten_group(2);
  std::size_t pairs = 0;
  bool ok = true;
  for (const auto& c : {code(fixtures::hopf), random})
    for (const auto& a : g)
      for (const auto& b : g) {
        ok = ok && act(a, act(b, c)) == act(multiply(a, b), c);
        ++pairs;
      }
  note << pairs << " pairs; random code n=" << random.crossings();
  return ok;
}

bool c9(std::ostream& note) {
  Rng rng(424242);
  const auto seeds = fixtures::seeds();
  std::map<std::string, int> kinds;
  int failures = 0;
  auto check_pair = [&](const PDCode& c, const Move& m) {
    const auto applied = apply_move_with_inverse(c, m);
    std::vector<RawQuadruple> raw;
    for (const auto& q : applied.code.quadruples()) raw.emplace_back(q.begin(), q.end());
    const auto before = surface_report(c);
    const auto after = surface_report(applied.code);
    const bool self_inverse = m.kind != MoveKind::R3 || applied.inverse.kind == MoveKind::R3;
    const bool ok = validate(raw).ok() && after.chi == before.chi &&
                    after.total_genus == before.total_genus && self_inverse &&
                    canonical_relabel(apply_move(applied.code, applied.inverse)) ==
                        canonical_relabel(c);
    failures += !ok;
    ++kinds[std::string(kind_name(m.kind)) + " " + std::string(direction_name(m.direction))];
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_code(seeds, rng, 6, 8);
    const auto step = random_step(c, rng, 10);
    if (!step) {
      ++failures;
      continue;
    }
    check_pair(c, step->move);
  }
  // R3 sites are rare under uniform move choice; check every one met on further walks.
  int r3 = 0;
  for (int trial = 0; trial < 3000 && r3 < 50; ++trial) {
    const auto c = random_code(seeds, rng, 8, 8);
    for (const auto& m : enumerate_moves(c))
      if (m.kind == MoveKind::R3) {
        check_pair(c, m);
        ++r3;
      }
  }
  for (const auto& [k, n] : kinds) note << k << ":" << n << " ";
  note << "failures=" << failures;
  return failures == 0 && r3 > 0;
}

bool c10(std::ostream& note) {
  int exact = 0, ambiguous = 0, failures = 0;
  for (const auto& c : fixtures::published_codes()) {
    if (infer_signs(strip_signs(c)) == c)
      ++exact;
    else
      ++failures;
  }
  Rng rng(20240611);
  const auto seeds = fixtures::seeds();
  for (int trial = 0; trial < 1000; ++trial) {
    const auto c = random_code(seeds, rng, 6, 8);
    const auto u = strip_signs(c);
    try {
      if (infer_signs(u) == c)
        ++exact;
      else
        ++failures;
    } catch (const AmbiguousSigning& e) {
      // Only an over-only component with at most two arcs leaves a choice.
      const auto& cs = e.candidates();
      if (!fixtures::sign_recoverable(c) && std::find(cs.begin(), cs.end(), c) != cs.end())
        ++ambiguous;
      else
        ++failures;
    }
  }
  note << "recovered=" << exact << " ambiguous=" << ambiguous << " failures=" << failures;
  return failures == 0;
}

bool c11(std::ostream& note) {
  int checked = 0;
  bool ok = true;
  for (const auto& c : fixtures::published_codes())
    for (Flavor f : {Flavor::PaperSigned, Flavor::KnotTheoryUnsigned, Flavor::Json}) {
      const std::string s = serialize(c, f);
      ok = ok && parse(s, f) == c && serialize(parse(s, f), f) == s;
      ++checked;
    }
  note << checked << " round trips";
  return ok;
}

bool c12(std::ostream& note) {
  const auto t = code(fixtures::trefoil);
  const auto one = equivalent_bounded(t, code(fixtures::trefoil_kink), 4, 10000);
  const auto mirror = equivalent_bounded(t, code(fixtures::mirror_trefoil), 6, 10000);
  note << "kink length=" << (one.found() ? static_cast<long>(one.sequence->steps.size()) : -1)
       << "; mirror visited=" << mirror.stats.visited << " expanded=" << mirror.stats.expanded
       << " frontier=" << mirror.stats.frontier << " depth=" << mirror.stats.depth
       << " budget_exceeded=" << (mirror.stats.budget_exceeded ? "yes" : "no");
  return one.found() && one.sequence->steps.size() == 1 && !mirror.found() &&
         mirror.stats.visited > 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"trefoil faces, chi 2, genus 0, spherical", c1},
      {"torus code faces, chi 0, genus 1, not spherical", c2},
      {"two-component link code: mu 2, n (10,4), connected, chi 2, spherical", c3},
      {"act((-1,-1), trefoil) is the mirror code", c4},
      {"(1,1,1,(12)) fixes the Hopf link", c5},
      {"symmetry-free forms have trivial stabilizer", c6},
      {"group axioms over all of Gamma_2", c7},
      {"action consistency over all 256 pairs", c8},
      {"random moves: validity, chi, genus, inverses, R3 self-inverse", c9},
      {"sign inference on published codes and 1000 random codes", c10},
      {"parse/serialize round trip in all flavors", c11},
      {"bounded search: kink found, mirror not found", c12},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream note;
    bool ok = false;
    try {
      ok = criteria[i].check(note);
    } catch (const std::exception& e) {
      note << "exception: " << e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << ' ' << (i + 1) << ". " << criteria[i].title << " ["
              << note.str() << "]\n";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " passed in " << secs
            << " s\n";
  return failed == 0 ? 0 : 1;
}
