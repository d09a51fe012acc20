#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pdcode/pd_code.hpp"

namespace pdc {

enum class Flavor { PaperSigned, KnotTheoryUnsigned, Json };

std::string_view flavor_name(Flavor f) noexcept;  // "paper", "knottheory", "json"
std::optional<Flavor> parse_flavor_name(std::string_view name) noexcept;

/// JSON first, then KnotTheory (`PD[` prefix), then the signed notation.
Flavor detect_flavor(std::string_view text);

/// Grammar (whitespace-insensitive, '-' or U+2212 for minus):
///   code  := '{' quad (',' quad)* '}'
///   quad  := '[' label ',' label ',' label ',' label ']'
///   label := signed-int | '(' int ',' signed-int ')'
/// KnotTheory form: PD[X[a,b,c,d], ...] with one global arc numbering.
/// Throws SyntaxError, or the validation/sign-inference error of the parsed code.
PDCode parse(std::string_view text, Flavor flavor);
PDCode parse(std::string_view text);

/// Parses the signed notation without validating. Used by the CLI's validate
/// subcommand so that every violation can be reported.
std::vector<RawQuadruple> parse_raw(std::string_view text);

/// Byte-deterministic: canonical quadruple order, no whitespace except the
/// trailing newline of the JSON flavor. Knots use the single-integer shorthand.
std::string serialize(const PDCode& code, Flavor flavor);

/// "+4" for knots, "(1,+4)" otherwise.
std::string format_label(const Label& l, bool shorthand);

struct GaussEntry {
  int crossing;  // 1-based index in canonical quadruple order
  bool over;
  Sign sign;

  friend bool operator==(const GaussEntry&, const GaussEntry&) = default;
};

/// One cyclic sequence per component, starting where arc 1 enters its crossing.
struct GaussCode {
  std::vector<std::vector<GaussEntry>> components;
};

GaussCode to_gauss(const PDCode& code);

/// "O1+ U2+ ..." per component, components separated by " | ".
std::string format_gauss(const GaussCode& gauss);

/// Splits a global KnotTheory arc numbering into per-component numbering.
/// Components are the cycles of the non-adjacent-slot graph, ordered by their
/// least global label; each is numbered from its least label along its
/// orientation.
std::vector<UnsignedQuadruple> split_global_numbering(
    const std::vector<std::array<int, 4>>& global);

}  // namespace pdc
