#pragma once

#include <cstddef>
#include <vector>

#include "pdcode/pd_code.hpp"

namespace pdc {

/// A position in the code: quadruple index and slot.
struct Occurrence {
  std::size_t quadruple;
  int slot;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// The 4-regular graph of a code together with the cyclic order of edge ends
/// at each vertex. Each signed label occurs exactly once.
class RotationGraph {
 public:
  explicit RotationGraph(const PDCode& code);

  const PDCode& code() const noexcept { return code_; }
  Occurrence find(const Label& l) const noexcept { return where_[index(l)]; }

  /// s(label at slot k) = -(label at slot k+1 mod 4): walk along an edge and
  /// turn right at the next vertex.
  Label successor(const Label& l) const noexcept;

  /// Dense index of a signed label in [0, 2 * total_arcs).
  std::size_t index(const Label& l) const noexcept;

 private:
  PDCode code_;
  std::vector<int> offset_;
  std::vector<Occurrence> where_;
};

/// A successor-map orbit, rotated to start at its least label.
using Face = std::vector<Label>;
/// Faces sorted by their first label.
using FaceSet = std::vector<Face>;

FaceSet faces(const PDCode& code);

/// Rotates a cyclic sequence to start at its least element.
Face canonical_rotation(Face face);

/// V - E + F = |faces| - n.
int euler_characteristic(const PDCode& code);

struct SurfaceReport {
  int vertices = 0;
  int edges = 0;
  int face_count = 0;
  int chi = 0;
  /// Quadruple indices of each connected component, components ordered by least index.
  std::vector<std::vector<std::size_t>> components;
  std::vector<int> component_chi;
  std::vector<int> genus;
  int total_genus = 0;
  bool spherical = false;
  FaceSet faces;
};

/// Throws Error(InternalOrientabilityFailure) if the face boundaries do not
/// pair every edge once positively and once negatively.
SurfaceReport surface_report(const PDCode& code);

struct DiagramData {
  /// Per component, arcs in traversal order starting at arc 1.
  std::vector<std::vector<Arc>> traversals;
  std::vector<Sign> crossing_signs;
  RotationGraph rotation;
};

/// Follows each component through the non-adjacent slot at every crossing.
/// Throws Error(TraceMismatch) if a traversal does not visit 1..n_c in order.
DiagramData trace_diagram(const PDCode& code);

}  // namespace pdc
