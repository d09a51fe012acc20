#include "pdcode/surface.hpp"

#include <algorithm>
#include <numeric>

namespace pdc {

RotationGraph::RotationGraph(const PDCode& code) : code_(code), offset_(code.mu() + 1, 0) {
  for (int c = 1; c <= code.mu(); ++c) offset_[c] = offset_[c - 1] + code.arc_count(c);
  where_.resize(2 * static_cast<std::size_t>(offset_.back()));
  for (std::size_t i = 0; i < code.crossings(); ++i)
    for (int s = 0; s < 4; ++s) where_[index(code[i][s])] = {i, s};
}

std::size_t RotationGraph::index(const Label& l) const noexcept {
  return 2 * static_cast<std::size_t>(offset_[l.component - 1] + l.arc - 1) +
         (l.positive() ? 0 : 1);
}

Label RotationGraph::successor(const Label& l) const noexcept {
  const Occurrence at = find(l);
  return code_[at.quadruple][(at.slot + 1) % 4].negated();
}

Face canonical_rotation(Face face) {
  auto least = std::min_element(face.begin(), face.end());
  std::rotate(face.begin(), least, face.end());
  return face;
}

FaceSet faces(const PDCode& code) {
  const RotationGraph graph(code);
  std::vector<bool> seen(2 * static_cast<std::size_t>(code.total_arcs()), false);
  FaceSet out;
  // Labels are visited in increasing order, so each orbit starts at its least label.
  for (int c = 1; c <= code.mu(); ++c) {
    for (int j = 1; j <= code.arc_count(c); ++j) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        const Label start{c, j, s};
        if (seen[graph.index(start)]) continue;
        Face face;
        for (Label l = start; !seen[graph.index(l)]; l = graph.successor(l)) {
          seen[graph.index(l)] = true;
          face.push_back(l);
        }
        out.push_back(std::move(face));
      }
    }
  }
  return out;
}

int euler_characteristic(const PDCode& code) {
  return static_cast<int>(faces(code).size()) - static_cast<int>(code.crossings());
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

SurfaceReport surface_report(const PDCode& code) {
  const RotationGraph graph(code);
  SurfaceReport r;
  r.faces = faces(code);
  r.vertices = static_cast<int>(code.crossings());
  r.edges = 2 * r.vertices;
  r.face_count = static_cast<int>(r.faces.size());
  r.chi = r.face_count - r.vertices;

  // Each edge must bound the faces once with each orientation.
  std::vector<int> balance(code.total_arcs(), 0);
  std::vector<int> seen(2 * static_cast<std::size_t>(code.total_arcs()), 0);
  for (const auto& face : r.faces)
    for (const auto& l : face) {
      balance[code.arc_offset(l.component) + l.arc - 1] += to_int(l.sign);
      ++seen[graph.index(l)];
    }
  if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; }) ||
      std::any_of(seen.begin(), seen.end(), [](int k) { return k != 1; }))
    throw Error(Errc::InternalOrientabilityFailure,
                "face boundaries do not pair every edge positively and negatively");

  std::vector<std::size_t> parent(code.crossings());
  std::iota(parent.begin(), parent.end(), 0);
  for (int c = 1; c <= code.mu(); ++c)
    for (int j = 1; j <= code.arc_count(c); ++j) {
      const auto a = find_root(parent, graph.find(pos(c, j)).quadruple);
      const auto b = find_root(parent, graph.find(neg(c, j)).quadruple);
      parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<int> component_of(code.crossings(), -1);
  for (std::size_t i = 0; i < code.crossings(); ++i) {
    const auto root = find_root(parent, i);
    if (component_of[root] < 0) {
      component_of[root] = static_cast<int>(r.components.size());
      r.components.emplace_back();
    }
    component_of[i] = component_of[root];
    r.components[component_of[i]].push_back(i);
  }

  std::vector<int> face_count(r.components.size(), 0);
  for (const auto& face : r.faces) ++face_count[component_of[graph.find(face.front()).quadruple]];
  for (std::size_t k = 0; k < r.components.size(); ++k) {
    const int chi = face_count[k] - static_cast<int>(r.components[k].size());
    if (chi > 2 || chi % 2 != 0)
      throw Error(Errc::InternalOrientabilityFailure,
                  "component Euler characteristic " + std::to_string(chi) +
                      " is not that of a closed orientable surface");
    r.component_chi.push_back(chi);
    r.genus.push_back((2 - chi) / 2);
  }
  r.total_genus = std::accumulate(r.genus.begin(), r.genus.end(), 0);
  r.spherical = r.components.size() == 1 && r.chi == 2;
  return r;
}

DiagramData trace_diagram(const PDCode& code) {
  DiagramData d{{}, {}, RotationGraph(code)};
  const RotationGraph& graph = d.rotation;
  for (int c = 1; c <= code.mu(); ++c) {
    std::vector<Arc> cycle;
    int arc = 1;
    do {
      cycle.push_back({c, arc});
      if (static_cast<int>(cycle.size()) > code.arc_count(c)) break;
      const Occurrence at = graph.find(pos(c, arc));
      const Label& exit = code[at.quadruple][(at.slot + 2) % 4];
      if (exit.positive() || exit.component != c)
        throw Error(Errc::TraceMismatch, "strand through " + to_string(pos(c, arc)) +
                                             " does not leave along its component");
      arc = exit.arc;
    } while (arc != 1);
    for (int j = 1; j <= static_cast<int>(cycle.size()); ++j)
      if (static_cast<int>(cycle.size()) != code.arc_count(c) || cycle[j - 1].arc != j)
        throw Error(Errc::TraceMismatch,
                    "component " + std::to_string(c) + " is not traversed in arc order");
    d.traversals.push_back(std::move(cycle));
  }
  for (const auto& q : code.quadruples()) d.crossing_signs.push_back(crossing_sign(q));
  return d;
}

}  // namespace pdc
