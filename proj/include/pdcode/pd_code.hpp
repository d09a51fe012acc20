#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdcode/error.hpp"

namespace pdc {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

/// An unsigned edge label: arc `arc` (1-based) of component `component` (1-based).
struct Arc {
  int component = 1;
  int arc = 1;

  friend constexpr bool operator==(const Arc&, const Arc&) = default;
  friend constexpr auto operator<=>(const Arc&, const Arc&) = default;
};

/// A signed edge label. Positive marks the incoming end of an arc at a
/// crossing, negative the outgoing end.
struct Label {
  int component = 1;
  int arc = 1;
  Sign sign = Sign::Positive;

  constexpr Arc unsigned_arc() const noexcept { return {component, arc}; }
  constexpr Label negated() const noexcept { return {component, arc, -sign}; }
  constexpr bool positive() const noexcept { return sign == Sign::Positive; }

  friend constexpr bool operator==(const Label&, const Label&) = default;
};

/// Labels order component-major, then by arc, with + before -.
constexpr std::strong_ordering operator<=>(const Label& a, const Label& b) noexcept {
  if (auto c = a.component <=> b.component; c != 0) return c;
  if (auto c = a.arc <=> b.arc; c != 0) return c;
  return (a.sign == Sign::Positive ? 0 : 1) <=> (b.sign == Sign::Positive ? 0 : 1);
}

constexpr Label pos(int component, int arc) noexcept { return {component, arc, Sign::Positive}; }
constexpr Label neg(int component, int arc) noexcept { return {component, arc, Sign::Negative}; }

/// The four labels around a crossing, counterclockwise from the incoming
/// under-edge. Slots (0,2) are the under strand, (1,3) the over strand.
using Quadruple = std::array<Label, 4>;

/// +1 for sign pattern (+,-,-,+), -1 for (+,+,-,-).
Sign crossing_sign(const Quadruple& q) noexcept;

/// Least positive label of the quadruple; the key of the canonical quadruple order.
Label first_incoming(const Quadruple& q) noexcept;

enum class Property {
  Malformed,
  EmptyCode,
  LabelOccurrence,  // every label exactly once with each sign
  SignPattern,      // two positive, two negative, slot 0 positive
  Consecutive,      // non-adjacent labels share a component and are consecutive
  Successor,        // non-adjacent signs opposite, positive arc + 1 = partner
};

/// "MALFORMED", "EMPTY_CODE", "P1" .. "P4".
std::string_view property_name(Property p) noexcept;

struct Violation {
  Property property;
  std::optional<std::size_t> quadruple;
  std::string detail;
};

class InvalidCode : public Error {
 public:
  explicit InvalidCode(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

struct Validation;
using RawQuadruple = std::vector<Label>;
class PDCode;
Validation validate(std::span<const RawQuadruple> raw,
                    std::optional<std::vector<int>> arc_counts);
PDCode canonical_relabel(const PDCode& code);

/// A validated PD-code. Quadruples are kept in canonical order (by least
/// incoming label), so equality is set equality of quadruples.
class PDCode {
 public:
  /// Validates and throws InvalidCode on any violation.
  static PDCode from_quadruples(std::vector<Quadruple> quadruples,
                                std::optional<std::vector<int>> arc_counts = std::nullopt);

  const std::vector<Quadruple>& quadruples() const noexcept { return quads_; }
  const Quadruple& operator[](std::size_t i) const noexcept { return quads_[i]; }
  std::size_t crossings() const noexcept { return quads_.size(); }
  int mu() const noexcept { return static_cast<int>(arc_counts_.size()); }
  std::span<const int> arc_counts() const noexcept { return arc_counts_; }
  int arc_count(int component) const noexcept { return arc_counts_[component - 1]; }
  int total_arcs() const noexcept;

  /// Offset of component c in a flat 0-based arc numbering (sum of earlier arc counts).
  int arc_offset(int component) const noexcept;

  /// Arc following `a` along its component's orientation.
  Arc next(Arc a) const noexcept;
  Arc prev(Arc a) const noexcept;

  friend bool operator==(const PDCode&, const PDCode&) = default;
  /// Lexicographic order on (arc counts, canonical quadruple sequence).
  friend std::strong_ordering operator<=>(const PDCode& a, const PDCode& b);

 private:
  friend Validation validate(std::span<const RawQuadruple>, std::optional<std::vector<int>>);
  friend PDCode canonical_relabel(const PDCode& code);
  PDCode(std::vector<Quadruple> quadruples, std::vector<int> arc_counts);

  std::vector<Quadruple> quads_;
  std::vector<int> arc_counts_;
};

/// "(c,+j)" form with an explicit component.
std::string to_string(const Label& l);
std::string to_string(const Arc& a);

struct Validation {
  std::optional<PDCode> code;
  std::vector<Violation> violations;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return code.has_value(); }
};

/// Checks admissibility properties 1-4 under the cyclic reading of property 4.
/// Component count is the largest component index; each component's arc
/// count is its largest arc index unless `arc_counts` is given.
Validation validate(std::span<const RawQuadruple> raw,
                    std::optional<std::vector<int>> arc_counts = std::nullopt);

using UnsignedQuadruple = std::array<Arc, 4>;

std::vector<UnsignedQuadruple> strip_signs(const PDCode& code);

/// Every signing of `unsigned_quads` that passes validate, in canonical order.
std::vector<PDCode> all_signings(std::span<const UnsignedQuadruple> unsigned_quads);

class AmbiguousSigning : public Error {
 public:
  explicit AmbiguousSigning(std::vector<PDCode> candidates);
  const std::vector<PDCode>& candidates() const noexcept { return candidates_; }

 private:
  std::vector<PDCode> candidates_;
};

/// The unique valid signing. Throws Error(NoValidSigning) or AmbiguousSigning.
PDCode infer_signs(std::span<const UnsignedQuadruple> unsigned_quads);

/// Lexicographically least code reachable by cyclically shifting each
/// component's arc numbering independently.
PDCode canonical_relabel(const PDCode& code);

/// Rewrites every label through `map` (indexed [component-1][arc-1]) and re-validates.
PDCode relabel_arcs(const PDCode& code, const std::vector<std::vector<int>>& map);

}  // namespace pdc
