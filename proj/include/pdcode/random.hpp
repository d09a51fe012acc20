#pragma once

#include <optional>
#include <random>
#include <span>

#include "pdcode/moves.hpp"
#include "pdcode/pd_code.hpp"
#include "pdcode/symmetry.hpp"

namespace pdc {

using Rng = std::mt19937_64;

/// A uniformly chosen applicable move among those that keep the code within
/// `max_crossings`, with its result. Nullopt if there is none.
std::optional<MoveStep> random_step(const PDCode& code, Rng& rng, int max_crossings);

/// Applies up to `steps` random moves.
PDCode random_walk(const PDCode& start, int steps, Rng& rng, int max_crossings);

WhittenElement random_element(int mu, Rng& rng);

/// A random walk of up to `max_steps` moves from a random seed, followed by a
/// random group element.
PDCode random_code(std::span<const PDCode> seeds, Rng& rng, int max_steps, int max_crossings);

}  // namespace pdc
