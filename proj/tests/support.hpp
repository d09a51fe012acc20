#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pdcode/notation.hpp"
#include "pdcode/pd_code.hpp"
#include "pdcode/random.hpp"
#include "pdcode/symmetry.hpp"

namespace fixtures {

inline constexpr const char* trefoil = "{[+4,-2,-5,+1],[+2,-6,-3,+5],[+6,-4,-1,+3]}";
inline constexpr const char* mirror_trefoil = "{[+6,+3,-1,-4],[+2,+5,-3,-6],[+4,+1,-5,-2]}";
inline constexpr const char* torus = "{[+5,+2,-6,-3],[+3,-1,-4,+6],[+1,+4,-2,-5]}";
inline constexpr const char* hopf = "{[(1,+2),(2,-2),(1,-1),(2,+1)],[(2,+2),(1,-2),(2,-1),(1,+1)]}";
inline constexpr const char* link7 =
    "{[(1,+6),(1,-2),(1,-7),(1,+1)],[(1,+2),(1,-8),(1,-3),(1,+7)],"
    "[(2,+1),(1,-9),(2,-2),(1,+8)],[(1,+9),(2,-1),(1,-10),(2,+4)],"
    "[(1,+10),(1,-6),(1,-1),(1,+5)],[(2,+2),(1,-4),(2,-3),(1,+3)],"
    "[(1,+4),(2,-4),(1,-5),(2,+3)]}";
inline constexpr const char* trefoil_kink = "{[+1,-3,-2,+2],[+6,-4,-7,+3],[+4,-8,-5,+7],[+8,-6,-1,+5]}";
inline constexpr const char* kink = "{[+1,+2,-2,-1]}";

inline pdc::PDCode code(const char* text) { return pdc::parse(text); }

inline std::vector<pdc::PDCode> published_codes() {
  return {code(trefoil), code(link7), code(hopf), code(torus)};
}

inline std::vector<pdc::PDCode> seeds() { return {code(trefoil), code(hopf), code(torus)}; }

/// Random codes from the seeds whose sign pattern is recoverable: every
/// component has three or more arcs or passes under somewhere.
inline bool sign_recoverable(const pdc::PDCode& c) {
  std::vector<bool> under(c.mu() + 1, false);
  for (const auto& q : c.quadruples()) under[q[0].component] = true;
  for (int k = 1; k <= c.mu(); ++k)
    if (c.arc_count(k) <= 2 && !under[k]) return false;
  return true;
}

}  // namespace fixtures

/// Reference implementations written directly from the definitions, used
/// to cross-check the library.
namespace oracle {

using pdc::Label;
using pdc::Quadruple;

inline std::map<int, int> arc_counts(const std::vector<Quadruple>& quads) {
  std::map<int, int> n;
  for (const auto& q : quads)
    for (const auto& l : q) n[l.component] = std::max(n[l.component], l.arc);
  return n;
}

/// Properties 1-4, cyclic reading.
inline bool valid(const std::vector<Quadruple>& quads) {
  if (quads.empty()) return false;
  auto n = arc_counts(quads);
  for (int c = 1; c <= static_cast<int>(n.size()); ++c)
    if (!n.count(c)) return false;
  std::map<Label, int> seen;
  for (const auto& q : quads)
    for (const auto& l : q) {
      if (l.arc < 1) return false;
      ++seen[l];
    }
  for (const auto& [c, count] : n)
    for (int j = 1; j <= count; ++j)
      if (seen[pdc::pos(c, j)] != 1 || seen[pdc::neg(c, j)] != 1) return false;
  for (const auto& q : quads) {
    int plus = 0;
    for (const auto& l : q) plus += l.positive();
    if (plus != 2 || !q[0].positive()) return false;
    for (int a : {0, 1}) {
      const Label x = q[a], y = q[a + 2];
      if (x.component != y.component || x.sign == y.sign) return false;
      const Label p = x.positive() ? x : y, m = x.positive() ? y : x;
      if (p.arc % n[p.component] + 1 != m.arc) return false;
    }
  }
  return true;
}

inline std::vector<Label> rotate_to_min(std::vector<Label> f) {
  std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
  return f;
}

/// Successor orbits, found by scanning the quadruple list for each step.
inline std::set<std::vector<Label>> faces(const std::vector<Quadruple>& quads) {
  auto successor = [&](const Label& l) {
    for (const auto& q : quads)
      for (int k = 0; k < 4; ++k)
        if (q[k] == l) return q[(k + 1) % 4].negated();
    return l;
  };
  std::set<Label> left;
  for (const auto& q : quads)
    for (const auto& l : q) left.insert(l);
  std::set<std::vector<Label>> out;
  while (!left.empty()) {
    std::vector<Label> f;
    for (Label l = *left.begin(); left.count(l); l = successor(l)) {
      left.erase(l);
      f.push_back(l);
    }
    out.insert(rotate_to_min(f));
  }
  return out;
}

/// Follows component c from arc 1 through non-adjacent slots.
inline std::vector<int> trace(const std::vector<Quadruple>& quads, int c) {
  std::vector<int> arcs;
  int j = 1;
  do {
    arcs.push_back(j);
    int next = -1;
    for (const auto& q : quads)
      for (int k = 0; k < 4; ++k)
        if (q[k] == pdc::pos(c, j)) next = q[(k + 2) % 4].arc;
    j = next;
  } while (j != 1 && j > 0 && arcs.size() < 1000);
  return arcs;
}

/// Every assignment of signs to the unsigned labels that passes `valid`.
inline std::vector<std::vector<Quadruple>> signings(const std::vector<Quadruple>& unsigned_quads) {
  const std::size_t slots = 4 * unsigned_quads.size();
  std::vector<std::vector<Quadruple>> out;
  for (unsigned long mask = 0; mask < (1ul << slots); ++mask) {
    auto quads = unsigned_quads;
    for (std::size_t s = 0; s < slots; ++s)
      quads[s / 4][s % 4].sign = (mask >> s) & 1ul ? pdc::Sign::Negative : pdc::Sign::Positive;
    if (valid(quads)) out.push_back(quads);
  }
  return out;
}

/// Same quadruples as sets of labels.
inline bool same_set(std::vector<Quadruple> a, std::vector<Quadruple> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Least code over all per-component cyclic shifts.
inline pdc::PDCode canonical(const pdc::PDCode& code) {
  std::optional<pdc::PDCode> best;
  std::vector<int> shift(code.mu(), 0);
  for (;;) {
    std::vector<Quadruple> quads = code.quadruples();
    for (auto& q : quads)
      for (auto& l : q) {
        const int n = code.arc_count(l.component);
        l.arc = (l.arc - 1 + shift[l.component - 1]) % n + 1;
      }
    std::vector<int> counts(code.arc_counts().begin(), code.arc_counts().end());
    auto c = pdc::PDCode::from_quadruples(quads, counts);
    if (!best || c < *best) best = c;
    int k = 0;
    while (k < code.mu() && ++shift[k] == code.arc_count(k + 1)) shift[k++] = 0;
    if (k == code.mu()) break;
  }
  return *best;
}

/// The printed product formula, with permutations as maps.
inline pdc::WhittenElement multiply(const pdc::WhittenElement& g, const pdc::WhittenElement& h) {
  std::map<int, int> p, q;
  for (int i = 1; i <= g.mu(); ++i) {
    p[i] = g.perm[i - 1];
    q[i] = h.perm[i - 1];
  }
  pdc::WhittenElement out = g;
  out.eps0 = pdc::Sign(pdc::to_int(g.eps0) * pdc::to_int(h.eps0));
  for (int i = 1; i <= g.mu(); ++i) {
    out.eps[i - 1] = pdc::Sign(pdc::to_int(g.eps[i - 1]) * pdc::to_int(h.eps[p[i] - 1]));
    out.perm[i - 1] = q[p[i]];
  }
  return out;
}

inline pdc::WhittenElement inverse(const pdc::WhittenElement& g) {
  const auto id = pdc::WhittenElement::identity(g.mu());
  for (const auto& h : pdc::whitten_group(g.mu()))
    if (oracle::multiply(g, h) == id) return h;
  return id;
}

}  // namespace oracle
