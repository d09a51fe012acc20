#include "pdcode/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "pdcode/surface.hpp"

namespace pdc {

std::string_view kind_name(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R1a: return "R1a";
    case MoveKind::R1b: return "R1b";
    case MoveKind::R2: return "R2";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string_view direction_name(Direction d) noexcept {
  switch (d) {
    case Direction::Insert: return "insert";
    case Direction::Remove: return "remove";
    case Direction::Replace: return "replace";
  }
  return "?";
}

std::optional<MoveKind> parse_kind(std::string_view s) noexcept {
  for (MoveKind k : {MoveKind::R1a, MoveKind::R1b, MoveKind::R2, MoveKind::R3})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

std::optional<Direction> parse_direction(std::string_view s) noexcept {
  for (Direction d : {Direction::Insert, Direction::Remove, Direction::Replace})
    if (direction_name(d) == s) return d;
  return std::nullopt;
}

std::string to_string(const Move& m) {
  std::string out(kind_name(m.kind));
  if (m.mirrored) out += "'";
  out += ' ';
  out += direction_name(m.direction);
  for (const auto& a : m.site) out += ' ' + to_string(a);
  return out;
}

namespace {

[[noreturn]] void not_applicable(const Move& m, const std::string& why) {
  throw Error(Errc::NotApplicable, to_string(m) + ": " + why);
}

/// A code under surgery. Arc numbers are keys: fresh keys are appended past
/// the current arc count and removals merge keys.
class Work {
 public:
  explicit Work(const PDCode& code) : quads_(code.quadruples()), parent_(code.mu()) {
    for (int c = 1; c <= code.mu(); ++c) {
      auto& p = parent_[c - 1];
      p.resize(code.arc_count(c) + 1);
      std::iota(p.begin(), p.end(), 0);
    }
  }

  std::vector<Quadruple>& quads() noexcept { return quads_; }

  int fresh(int c) {
    auto& p = parent_[c - 1];
    p.push_back(static_cast<int>(p.size()));
    return p.back();
  }

  int find(int c, int key) {
    auto& p = parent_[c - 1];
    while (p[key] != key) key = p[key] = p[p[key]];
    return key;
  }

  /// Merges b into a's class; a's representative survives.
  void merge(int c, int a, int b) {
    const int ra = find(c, a);
    const int rb = find(c, b);
    if (ra != rb) parent_[c - 1][rb] = ra;
  }

  void replace(const Label& from, const Label& to) {
    for (auto& q : quads_)
      for (auto& l : q)
        if (l == from) {
          l = to;
          return;
        }
  }

  void erase(std::vector<std::size_t> indices) {
    std::sort(indices.rbegin(), indices.rend());
    for (auto i : indices) quads_.erase(quads_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  /// Rewrites merged keys, then renumbers each component along its
  /// traversal starting from the class of key 1.
  PDCode finish(const Move& m) {
    const int mu = static_cast<int>(parent_.size());
    for (auto& q : quads_)
      for (auto& l : q) l.arc = find(l.component, l.arc);

    std::vector<std::vector<Occurrence>> at(mu);
    std::vector<int> label_count(mu, 0);
    for (int c = 1; c <= mu; ++c) at[c - 1].assign(parent_[c - 1].size(), {0, -1});
    for (std::size_t i = 0; i < quads_.size(); ++i)
      for (int s = 0; s < 4; ++s) {
        const Label& l = quads_[i][s];
        ++label_count[l.component - 1];
        if (l.positive()) at[l.component - 1][l.arc] = {i, s};
      }

    renumber_.assign(mu, {});
    std::vector<int> counts(mu, 0);
    for (int c = 1; c <= mu; ++c) {
      if (label_count[c - 1] == 0)
        not_applicable(m, "component " + std::to_string(c) + " would have no crossings");
      auto& map = renumber_[c - 1];
      map.assign(parent_[c - 1].size(), 0);
      const int anchor = find(c, 1);
      int key = anchor;
      int n = 0;
      do {
        const Occurrence o = at[c - 1][key];
        if (o.slot < 0 || map[key] != 0) not_applicable(m, "result does not trace");
        map[key] = ++n;
        const Label& exit = quads_[o.quadruple][(o.slot + 2) % 4];
        if (exit.positive() || exit.component != c) not_applicable(m, "result does not trace");
        key = exit.arc;
      } while (key != anchor);
      if (2 * n != label_count[c - 1]) not_applicable(m, "result does not trace");
      counts[c - 1] = n;
    }

    for (auto& q : quads_)
      for (auto& l : q) l.arc = renumber_[l.component - 1][l.arc];
    try {
      return PDCode::from_quadruples(quads_, counts);
    } catch (const InvalidCode& e) {
      not_applicable(m, std::string("result is not a valid code: ") + e.what());
    }
  }

  /// New arc of an old or fresh key, valid after finish().
  Arc renumbered(int c, int key) { return {c, renumber_[c - 1][find(c, key)]}; }

 private:
  std::vector<Quadruple> quads_;
  std::vector<std::vector<int>> parent_;
  std::vector<std::vector<int>> renumber_;
};

bool arc_exists(const PDCode& code, const Arc& a) {
  return a.component >= 1 && a.component <= code.mu() && a.arc >= 1 &&
         a.arc <= code.arc_count(a.component);
}

Label plus(const Arc& a) { return pos(a.component, a.arc); }
Label minus(const Arc& a) { return neg(a.component, a.arc); }

/// A kink: the strand enters on `in`, runs around `loop`, leaves on `out`.
struct Kink {
  Arc loop;
  Arc in;
  Arc out;
  MoveKind kind;
  bool mirrored;
};

std::optional<Kink> kink_at(const PDCode& code, std::size_t index) {
  const Quadruple& q = code[index];
  for (int a = 0; a < 4; ++a) {
    if (!q[a].positive()) continue;
    for (int b : {(a + 1) % 4, (a + 3) % 4}) {
      if (q[b] != q[a].negated()) continue;
      Kink k{q[a].unsigned_arc(), q[(b + 2) % 4].unsigned_arc(), q[(a + 2) % 4].unsigned_arc(),
             MoveKind::R1a, false};
      // -x in slot 2 is the R1a shape; +x in slot 1 means the loop leaves under.
      if (b == 2) {
        k.kind = MoveKind::R1a;
        k.mirrored = a == 1;
      } else {
        k.kind = MoveKind::R1b;
        k.mirrored = b == 3;
      }
      return k;
    }
  }
  return std::nullopt;
}

Quadruple kink_quadruple(MoveKind kind, bool mirrored, const Label& i, const Label& alpha,
                         const Label& beta) {
  const Label pi = i, pa = alpha, ma = alpha.negated(), mb = beta.negated();
  if (kind == MoveKind::R1a) return mirrored ? Quadruple{pi, pa, ma, mb} : Quadruple{pi, mb, ma, pa};
  return mirrored ? Quadruple{pa, pi, mb, ma} : Quadruple{pa, ma, mb, pi};
}

bool in_same_face(const RotationGraph& graph, const Label& a, const Label& b) {
  Label l = a;
  do {
    if (l == b) return true;
    l = graph.successor(l);
  } while (l != a);
  return false;
}

/// The two printed triples for the triangle (i, j, k).
std::array<std::array<Quadruple, 3>, 2> r3_triples(const PDCode& code, const Arc& i, const Arc& j,
                                                   const Arc& k) {
  const Arc im = code.prev(i), ip = code.next(i);
  const Arc jm = code.prev(j), jp = code.next(j);
  const Arc km = code.prev(k), kp = code.next(k);
  return {{{{{plus(jm), plus(i), minus(j), minus(ip)},
             {plus(j), minus(k), minus(jp), plus(km)},
             {plus(k), minus(i), minus(kp), plus(im)}}},
           {{{plus(jm), minus(kp), minus(j), plus(k)},
             {plus(km), minus(ip), minus(k), plus(i)},
             {plus(j), plus(im), minus(jp), minus(i)}}}}};
}

/// Index of each quadruple of `triple` in the code, or nullopt if any is missing.
std::optional<std::array<std::size_t, 3>> locate(const PDCode& code, const RotationGraph& graph,
                                                 const std::array<Quadruple, 3>& triple) {
  std::array<std::size_t, 3> where{};
  for (int t = 0; t < 3; ++t) {
    const Occurrence o = graph.find(triple[t][0]);
    if (o.slot != 0 || code[o.quadruple] != triple[t]) return std::nullopt;
    where[t] = o.quadruple;
  }
  if (where[0] == where[1] || where[1] == where[2] || where[0] == where[2]) return std::nullopt;
  return where;
}

/// Whether every component keeps a label outside the given quadruples.
bool survives(const PDCode& code, const std::vector<std::size_t>& removed) {
  std::vector<bool> kept(code.mu(), false);
  for (std::size_t i = 0; i < code.crossings(); ++i) {
    if (std::find(removed.begin(), removed.end(), i) != removed.end()) continue;
    for (const auto& l : code[i]) kept[l.component - 1] = true;
  }
  return std::all_of(kept.begin(), kept.end(), [](bool b) { return b; });
}

struct R2Pair {
  std::size_t first;
  std::size_t second;
  Label j, alpha, gamma, i, delta, beta;
};

/// Matches {[+j,-a,-g,+i],[+g,+a,-d,-b]} with `first` the positive crossing.
std::optional<R2Pair> r2_pair_at(const PDCode& code, const RotationGraph& graph,
                                 std::size_t first) {
  const Quadruple& q1 = code[first];
  if (crossing_sign(q1) != Sign::Positive) return std::nullopt;
  const Label alpha = q1[1].negated(), gamma = q1[2].negated();
  const Occurrence o = graph.find(gamma);
  if (o.slot != 0) return std::nullopt;
  const Quadruple& q2 = code[o.quadruple];
  if (q2[1] != alpha || q2[2].positive() || q2[3].positive()) return std::nullopt;
  return R2Pair{first, o.quadruple, q1[0], alpha, gamma, q1[3], q2[2].negated(),
                q2[3].negated()};
}

Applied apply_r1_insert(const PDCode& code, const Move& m) {
  if (m.site.size() != 1 || !arc_exists(code, m.site[0])) not_applicable(m, "bad site");
  const Arc i = m.site[0];
  const int c = i.component;
  Work w(code);
  const int alpha = w.fresh(c), beta = w.fresh(c);
  w.replace(plus(i), pos(c, beta));
  w.quads().push_back(kink_quadruple(m.kind, m.mirrored, plus(i), pos(c, alpha), pos(c, beta)));
  PDCode out = w.finish(m);
  return {std::move(out), Move{m.kind, Direction::Remove, {w.renumbered(c, alpha)}, m.mirrored}};
}

Applied apply_r1_remove(const PDCode& code, const Move& m) {
  if (m.site.size() != 1 || !arc_exists(code, m.site[0])) not_applicable(m, "bad site");
  const RotationGraph graph(code);
  const Arc x = m.site[0];
  const Occurrence o = graph.find(plus(x));
  const auto k = kink_at(code, o.quadruple);
  if (!k || k->loop != x || graph.find(minus(x)).quadruple != o.quadruple)
    not_applicable(m, "no kink on this arc");
  if (k->kind != m.kind || k->mirrored != m.mirrored)
    not_applicable(m, "kink has a different shape");
  const int c = x.component;
  Work w(code);
  w.erase({o.quadruple});
  w.merge(c, k->in.arc, k->loop.arc);
  w.merge(c, k->in.arc, k->out.arc);
  PDCode out = w.finish(m);
  return {std::move(out), Move{m.kind, Direction::Insert, {w.renumbered(c, k->in.arc)}, m.mirrored}};
}

Applied apply_r2_insert(const PDCode& code, const Move& m) {
  if (m.site.size() != 2 || !arc_exists(code, m.site[0]) || !arc_exists(code, m.site[1]))
    not_applicable(m, "bad site");
  const Arc i = m.site[0], j = m.site[1];
  if (i == j) not_applicable(m, "the two arcs coincide");
  const RotationGraph graph(code);
  if (!in_same_face(graph, plus(i), minus(j))) not_applicable(m, "+i and -j share no face");
  Work w(code);
  const int ci = i.component, cj = j.component;
  const int alpha = w.fresh(ci), beta = w.fresh(ci);
  const int gamma = w.fresh(cj), delta = w.fresh(cj);
  w.replace(plus(i), pos(ci, beta));
  w.replace(plus(j), pos(cj, delta));
  w.quads().push_back({plus(j), neg(ci, alpha), neg(cj, gamma), plus(i)});
  w.quads().push_back({pos(cj, gamma), pos(ci, alpha), neg(cj, delta), neg(ci, beta)});
  PDCode out = w.finish(m);
  return {std::move(out),
          Move{MoveKind::R2, Direction::Remove, {w.renumbered(ci, alpha), w.renumbered(cj, gamma)}}};
}

Applied apply_r2_remove(const PDCode& code, const Move& m) {
  if (m.site.size() != 2 || !arc_exists(code, m.site[0]) || !arc_exists(code, m.site[1]))
    not_applicable(m, "bad site");
  const RotationGraph graph(code);
  const Occurrence o = graph.find(minus(m.site[0]));
  const auto p = o.slot == 1 ? r2_pair_at(code, graph, o.quadruple) : std::nullopt;
  if (!p || p->gamma.unsigned_arc() != m.site[1]) not_applicable(m, "no bigon at this site");
  Work w(code);
  w.erase({p->first, p->second});
  const int ci = p->i.component, cj = p->j.component;
  w.merge(ci, p->i.arc, p->alpha.arc);
  w.merge(ci, p->i.arc, p->beta.arc);
  w.merge(cj, p->j.arc, p->gamma.arc);
  w.merge(cj, p->j.arc, p->delta.arc);
  PDCode out = w.finish(m);
  return {std::move(out),
          Move{MoveKind::R2, Direction::Insert, {w.renumbered(ci, p->i.arc), w.renumbered(cj, p->j.arc)}}};
}

Applied apply_r3(const PDCode& code, const Move& m) {
  if (m.site.size() != 3 || !std::all_of(m.site.begin(), m.site.end(),
                                         [&](const Arc& a) { return arc_exists(code, a); }))
    not_applicable(m, "bad site");
  const RotationGraph graph(code);
  const auto triples = r3_triples(code, m.site[0], m.site[1], m.site[2]);
  for (int t = 0; t < 2; ++t) {
    const auto where = locate(code, graph, triples[t]);
    if (!where) continue;
    std::vector<Quadruple> quads;
    for (std::size_t q = 0; q < code.crossings(); ++q)
      if (std::find(where->begin(), where->end(), q) == where->end()) quads.push_back(code[q]);
    for (const auto& q : triples[1 - t]) quads.push_back(q);
    std::vector<int> counts(code.arc_counts().begin(), code.arc_counts().end());
    try {
      return {PDCode::from_quadruples(std::move(quads), counts), m};
    } catch (const InvalidCode& e) {
      not_applicable(m, std::string("result is not a valid code: ") + e.what());
    }
  }
  not_applicable(m, "no triangle matches either triple");
}

}  // namespace

std::vector<std::size_t> r1_loops(const PDCode& code) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < code.crossings(); ++i)
    if (kink_at(code, i)) out.push_back(i);
  return out;
}

Move r1_removal_at(const PDCode& code, std::size_t index) {
  const auto k = index < code.crossings() ? kink_at(code, index) : std::nullopt;
  if (!k)
    throw Error(Errc::NotApplicable, "quadruple " + std::to_string(index) + " is not a kink");
  return Move{k->kind, Direction::Remove, {k->loop}, k->mirrored};
}

std::vector<Move> enumerate_moves(const PDCode& code) {
  std::vector<Move> out;
  const RotationGraph graph(code);

  for (int c = 1; c <= code.mu(); ++c)
    for (int j = 1; j <= code.arc_count(c); ++j) {
      out.push_back({MoveKind::R1a, Direction::Insert, {{c, j}}});
      out.push_back({MoveKind::R1b, Direction::Insert, {{c, j}}});
    }

  for (std::size_t i : r1_loops(code)) out.push_back(r1_removal_at(code, i));

  const FaceSet fs = faces(code);
  for (const auto& face : fs)
    for (const auto& a : face)
      for (const auto& b : face)
        if (a.positive() && !b.positive() && a.unsigned_arc() != b.unsigned_arc())
          out.push_back({MoveKind::R2, Direction::Insert, {a.unsigned_arc(), b.unsigned_arc()}});

  for (std::size_t i = 0; i < code.crossings(); ++i)
    if (const auto p = r2_pair_at(code, graph, i))
      out.push_back({MoveKind::R2, Direction::Remove,
                     {p->alpha.unsigned_arc(), p->gamma.unsigned_arc()}});

  for (const auto& face : fs) {
    if (face.size() != 3 || face[0].sign != face[1].sign || face[1].sign != face[2].sign) continue;
    const bool positive = face[0].positive();
    for (int r = 0; r < 3; ++r) {
      const Arc a = face[r].unsigned_arc(), b = face[(r + 1) % 3].unsigned_arc(),
                c = face[(r + 2) % 3].unsigned_arc();
      // A positive triangle reads (+i,+j,+k); a negative one (-j,-k,-i).
      const Arc i = positive ? a : c, j = positive ? b : a, k = positive ? c : b;
      if (locate(code, graph, r3_triples(code, i, j, k)[positive ? 0 : 1]))
        out.push_back({MoveKind::R3, Direction::Replace, {i, j, k}});
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Applied apply_move_with_inverse(const PDCode& code, const Move& move) {
  switch (move.kind) {
    case MoveKind::R1a:
    case MoveKind::R1b:
      if (move.direction == Direction::Insert) return apply_r1_insert(code, move);
      if (move.direction == Direction::Remove) return apply_r1_remove(code, move);
      break;
    case MoveKind::R2:
      if (move.mirrored) break;
      if (move.direction == Direction::Insert) return apply_r2_insert(code, move);
      if (move.direction == Direction::Remove) return apply_r2_remove(code, move);
      break;
    case MoveKind::R3:
      if (move.direction == Direction::Replace && !move.mirrored) return apply_r3(code, move);
      break;
  }
  not_applicable(move, "unsupported kind and direction");
}

PDCode apply_move(const PDCode& code, const Move& move) {
  return apply_move_with_inverse(code, move).code;
}

MoveSequence remove_all_r1_loops(const PDCode& code) {
  MoveSequence seq{code, {}};
  for (;;) {
    const PDCode& cur = seq.end();
    const auto loops = r1_loops(cur);
    if (loops.empty()) break;
    if (!survives(cur, {loops.front()}))
      throw Error(Errc::IrreducibleToEmpty,
                  "removing the kink at quadruple " + std::to_string(loops.front()) +
                      " leaves a component without crossings");
    Move m = r1_removal_at(cur, loops.front());
    PDCode next = apply_move(cur, m);
    seq.steps.push_back({std::move(m), std::move(next)});
  }
  return seq;
}

void replay(const MoveSequence& seq) {
  PDCode cur = seq.start;
  for (std::size_t s = 0; s < seq.steps.size(); ++s) {
    cur = apply_move(cur, seq.steps[s].move);
    if (cur != seq.steps[s].result)
      throw Error(Errc::NotApplicable,
                  "step " + std::to_string(s + 1) + " does not reproduce its recorded result");
  }
}

namespace {

int crossing_delta(const Move& m) {
  const int size = m.kind == MoveKind::R2 ? 2 : m.kind == MoveKind::R3 ? 0 : 1;
  if (m.direction == Direction::Insert) return size;
  if (m.direction == Direction::Remove) return -size;
  return 0;
}

}  // namespace

SearchResult equivalent_bounded(const PDCode& a, const PDCode& b, int max_crossings,
                                std::size_t max_codes) {
  if (max_crossings < static_cast<int>(std::max(a.crossings(), b.crossings())))
    throw Error(Errc::NotApplicable, "crossing bound is below the size of an input code");
  SearchResult result;
  if (a.mu() != b.mu()) return result;

  struct Node {
    PDCode code;
    std::size_t parent;
    Move move;
    int depth;
  };
  const PDCode target = canonical_relabel(b);
  std::vector<Node> nodes{{a, 0, {}, 0}};
  std::map<PDCode, std::size_t> seen{{canonical_relabel(a), 0}};

  auto build = [&](std::size_t at) {
    MoveSequence seq{a, {}};
    for (; at != 0; at = nodes[at].parent) seq.steps.push_back({nodes[at].move, nodes[at].code});
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
  };

  std::size_t head = 0;
  bool done = seen.begin()->first == target;
  if (done) result.sequence = build(0);
  while (!done && head < nodes.size()) {
    const std::size_t at = head++;
    ++result.stats.expanded;
    result.stats.depth = std::max(result.stats.depth, nodes[at].depth);
    const PDCode cur = nodes[at].code;
    for (const Move& m : enumerate_moves(cur)) {
      if (static_cast<int>(cur.crossings()) + crossing_delta(m) > max_crossings) continue;
      std::optional<PDCode> applied;
      try {
        applied = apply_move(cur, m);
      } catch (const Error& e) {
        if (e.code() != Errc::NotApplicable) throw;
        continue;
      }
      PDCode next = std::move(*applied);
      PDCode key = canonical_relabel(next);
      if (seen.count(key)) continue;
      if (nodes.size() >= max_codes) {
        result.stats.budget_exceeded = true;
        done = true;
        break;
      }
      seen.emplace(key, nodes.size());
      nodes.push_back({std::move(next), at, m, nodes[at].depth + 1});
      if (key == target) {
        result.stats.depth = nodes.back().depth;
        result.sequence = build(nodes.size() - 1);
        done = true;
        break;
      }
    }
  }
  result.stats.visited = nodes.size();
  result.stats.frontier = nodes.size() - head;
  return result;
}

}  // namespace pdc
