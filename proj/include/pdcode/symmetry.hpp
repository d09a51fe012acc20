#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "pdcode/moves.hpp"
#include "pdcode/pd_code.hpp"

namespace pdc {

/// (eps0, eps_1..eps_mu, p): mirror, per-component reversal, component
/// permutation. perm[i-1] = p(i).
struct WhittenElement {
  Sign eps0 = Sign::Positive;
  std::vector<Sign> eps;
  std::vector<int> perm;

  static WhittenElement identity(int mu);

  int mu() const noexcept { return static_cast<int>(eps.size()); }
  bool is_identity() const noexcept;

  friend bool operator==(const WhittenElement&, const WhittenElement&) = default;
};

/// Orders by eps0, then eps, then perm, with +1 before -1.
std::strong_ordering operator<=>(const WhittenElement& a, const WhittenElement& b);

/// "(e0; e1,...,emu; cycles)" e.g. "(-1; -1; id)" or "(1; 1,1; (12))".
std::string to_string(const WhittenElement& g);

/// Accepts the form above and the flat form "(e0,e1,...,emu[,cycles])",
/// e.g. "(-1,-1)" or "(1,1,1,(12))". Throws SyntaxError.
WhittenElement parse_whitten(std::string_view text);

/// (e0 e0', e_i e'_{p(i)}, qp) with (qp)(x) = q(p(x)). Throws Error(MuMismatch).
WhittenElement multiply(const WhittenElement& g, const WhittenElement& h);
WhittenElement inverse(const WhittenElement& g);

/// All 2^(mu+1) mu! elements in ascending order; the identity comes first.
std::vector<WhittenElement> whitten_group(int mu);

/// Component relabeling, mirror, then reversal of each component with
/// eps_i = -1. act(g, act(h, C)) = act(multiply(g, h), C).
/// Throws Error(MuMismatch).
PDCode act(const WhittenElement& g, const PDCode& code);

/// Elements fixing the code label for label, in ascending order.
std::vector<WhittenElement> stabilizer(const PDCode& code);

struct SymmetryFree {
  PDCode code;
  MoveSequence moves;
};

/// Strips every kink, then adds k R1a kinks on arc 1 of component k.
/// Throws Error(IrreducibleToEmpty) or Error(PostconditionFailed) if the
/// result still has a non-trivial stabilizer.
SymmetryFree symmetry_free_form(const PDCode& code);

}  // namespace pdc
