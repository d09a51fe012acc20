#include "pdcode/random.hpp"

#include <vector>

namespace pdc {

std::optional<MoveStep> random_step(const PDCode& code, Rng& rng, int max_crossings) {
  std::vector<Move> fits;
  const int n = static_cast<int>(code.crossings());
  for (auto& m : enumerate_moves(code)) {
    const int grow = m.direction != Direction::Insert ? 0 : m.kind == MoveKind::R2 ? 2 : 1;
    if (n + grow <= max_crossings) fits.push_back(std::move(m));
  }
  while (!fits.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, fits.size() - 1);
    const std::size_t k = pick(rng);
    try {
      PDCode next = apply_move(code, fits[k]);
      return MoveStep{fits[k], std::move(next)};
    } catch (const Error& e) {
      if (e.code() != Errc::NotApplicable) throw;
      fits.erase(fits.begin() + static_cast<std::ptrdiff_t>(k));
    }
  }
  return std::nullopt;
}

PDCode random_walk(const PDCode& start, int steps, Rng& rng, int max_crossings) {
  PDCode cur = start;
  for (int s = 0; s < steps; ++s) {
    auto step = random_step(cur, rng, max_crossings);
    if (!step) break;
    cur = std::move(step->result);
  }
  return cur;
}

WhittenElement random_element(int mu, Rng& rng) {
  const auto group = whitten_group(mu);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  return group[pick(rng)];
}

PDCode random_code(std::span<const PDCode> seeds, Rng& rng, int max_steps, int max_crossings) {
  std::uniform_int_distribution<std::size_t> seed(0, seeds.size() - 1);
  std::uniform_int_distribution<int> steps(0, max_steps);
  const PDCode& start = seeds[seed(rng)];
  PDCode walked = random_walk(start, steps(rng), rng, max_crossings);
  return act(random_element(walked.mu(), rng), walked);
}

}  // namespace pdc
