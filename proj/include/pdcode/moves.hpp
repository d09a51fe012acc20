#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdcode/pd_code.hpp"

namespace pdc {

enum class MoveKind { R1a, R1b, R2, R3 };
enum class Direction { Insert, Remove, Replace };

std::string_view kind_name(MoveKind k) noexcept;       // "R1a", "R1b", "R2", "R3"
std::string_view direction_name(Direction d) noexcept;  // "insert", "remove", "replace"
std::optional<MoveKind> parse_kind(std::string_view s) noexcept;
std::optional<Direction> parse_direction(std::string_view s) noexcept;

/// Site conventions (all labels unsigned):
///   R1 insert   {i}        the arc that receives the loop
///   R1 remove   {x}        the loop arc; its quadruple holds +x and -x
///   R2 insert   {i, j}     +i and -j bound a common face; i passes over
///   R2 remove   {a, g}     the bigon arcs: alpha (over) and gamma (under)
///   R3 replace  {i, j, k}  the triangle, in either printed triple
/// `mirrored` selects the negative-crossing kink for R1 moves. Enumeration
/// only offers the printed (positive) kinks for insertion.
struct Move {
  MoveKind kind = MoveKind::R1a;
  Direction direction = Direction::Insert;
  std::vector<Arc> site;
  bool mirrored = false;

  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

/// Every move whose pattern matches, sorted. A removal that would leave a
/// component without crossings is listed but fails in apply_move.
std::vector<Move> enumerate_moves(const PDCode& code);

struct Applied {
  PDCode code;
  Move inverse;
};

/// Applies the move and renumbers every touched component to 1..n_c so that
/// the surviving initial segment of old arc 1 stays arc 1.
/// Throws Error(NotApplicable) if the move does not match the code or the
/// result cannot be represented.
Applied apply_move_with_inverse(const PDCode& code, const Move& move);
PDCode apply_move(const PDCode& code, const Move& move);

/// Indices of quadruples holding both +x and -x for some x.
std::vector<std::size_t> r1_loops(const PDCode& code);

/// The R1 removal move for the loop at quadruple `index`.
Move r1_removal_at(const PDCode& code, std::size_t index);

struct MoveStep {
  Move move;
  PDCode result;
};

struct MoveSequence {
  PDCode start;
  std::vector<MoveStep> steps;

  const PDCode& end() const noexcept { return steps.empty() ? start : steps.back().result; }
};

/// Removes kinks one at a time, always the first in r1_loops order.
/// Throws Error(IrreducibleToEmpty) if a removal would leave a component
/// without crossings.
MoveSequence remove_all_r1_loops(const PDCode& code);

/// Re-applies every move from `seq.start` and checks each recorded result.
/// Throws Error(NotApplicable) on the first mismatch.
void replay(const MoveSequence& seq);

struct SearchStats {
  std::size_t visited = 0;   // distinct codes discovered
  std::size_t expanded = 0;  // codes whose moves were generated
  std::size_t frontier = 0;  // discovered but not expanded at termination
  int depth = 0;             // deepest layer reached
  bool budget_exceeded = false;
};

struct SearchResult {
  std::optional<MoveSequence> sequence;
  SearchStats stats;

  bool found() const noexcept { return sequence.has_value(); }
};

/// Breadth-first search over codes up to cyclic relabeling. Moves are tried
/// in sorted order and no intermediate code exceeds `max_crossings`.
/// A missing sequence only means the budget ran out or the bounded space
/// was exhausted.
SearchResult equivalent_bounded(const PDCode& a, const PDCode& b, int max_crossings,
                                std::size_t max_codes);

}  // namespace pdc
