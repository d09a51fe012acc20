#include "pdcode/symmetry.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace pdc {

WhittenElement WhittenElement::identity(int mu) {
  WhittenElement g;
  g.eps.assign(mu, Sign::Positive);
  g.perm.resize(mu);
  std::iota(g.perm.begin(), g.perm.end(), 1);
  return g;
}

bool WhittenElement::is_identity() const noexcept {
  if (eps0 != Sign::Positive) return false;
  for (int i = 0; i < mu(); ++i)
    if (eps[i] != Sign::Positive || perm[i] != i + 1) return false;
  return true;
}

namespace {

int rank(Sign s) noexcept { return s == Sign::Positive ? 0 : 1; }

}  // namespace

std::strong_ordering operator<=>(const WhittenElement& a, const WhittenElement& b) {
  if (auto c = rank(a.eps0) <=> rank(b.eps0); c != 0) return c;
  if (auto c = a.mu() <=> b.mu(); c != 0) return c;
  for (int i = 0; i < a.mu(); ++i)
    if (auto c = rank(a.eps[i]) <=> rank(b.eps[i]); c != 0) return c;
  return a.perm <=> b.perm;
}

std::string to_string(const WhittenElement& g) {
  auto sign = [](Sign s) { return s == Sign::Positive ? std::string("1") : std::string("-1"); };
  std::string out = "(" + sign(g.eps0) + ";";
  for (int i = 0; i < g.mu(); ++i) out += (i ? "," : " ") + sign(g.eps[i]);
  out += "; ";
  std::vector<bool> done(g.mu() + 1, false);
  std::string cycles;
  for (int start = 1; start <= g.mu(); ++start) {
    if (done[start] || g.perm[start - 1] == start) continue;
    cycles += '(';
    for (int x = start; !done[x]; x = g.perm[x - 1]) {
      if (cycles.back() != '(' && g.mu() > 9) cycles += ' ';
      cycles += std::to_string(x);
      done[x] = true;
    }
    cycles += ')';
  }
  return out + (cycles.empty() ? "id" : cycles) + ")";
}

namespace {

class WhittenParser {
 public:
  explicit WhittenParser(std::string_view text) : text_(text) {}

  WhittenElement parse() {
    skip();
    expect('(');
    std::vector<Sign> signs;
    std::optional<std::vector<std::vector<int>>> cycles;
    signs.push_back(sign());
    skip();
    if (peek() == ';') {
      ++pos_;
      signs_list(signs, ',');
      skip();
      if (peek() == ';') {
        ++pos_;
        cycles = perm();
      }
    } else {
      while (skip(), peek() == ',') {
        ++pos_;
        skip();
        if (peek() == '(' || peek() == 'i' || peek() == 'e') {
          cycles = perm();
          break;
        }
        signs.push_back(sign());
      }
    }
    skip();
    expect(')');
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, "end of input");

    const int mu = static_cast<int>(signs.size()) - 1;
    if (mu < 1) throw SyntaxError(pos_, "at least one component sign");
    WhittenElement g = WhittenElement::identity(mu);
    g.eps0 = signs[0];
    std::copy(signs.begin() + 1, signs.end(), g.eps.begin());
    std::vector<bool> used(mu + 1, false);
    for (const auto& cycle : cycles.value_or(std::vector<std::vector<int>>{})) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const int x = cycle[k];
        if (x < 1 || x > mu || used[x])
          throw SyntaxError(pos_, "a permutation of 1.." + std::to_string(mu));
        used[x] = true;
        g.perm[x - 1] = cycle[(k + 1) % cycle.size()];
      }
    }
    return g;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw SyntaxError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  Sign sign() {
    skip();
    bool negative = false;
    if (peek() == '+') {
      ++pos_;
    } else if (peek() == '-') {
      negative = true;
      ++pos_;
    } else if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      negative = true;
      pos_ += 3;
    }
    expect('1');
    return negative ? Sign::Negative : Sign::Positive;
  }

  void signs_list(std::vector<Sign>& out, char sep) {
    out.push_back(sign());
    while (skip(), peek() == sep) {
      ++pos_;
      out.push_back(sign());
    }
  }

  std::vector<std::vector<int>> perm() {
    skip();
    std::vector<std::vector<int>> cycles;
    if (text_.substr(pos_, 2) == "id") {
      pos_ += 2;
      return cycles;
    }
    if (peek() == 'e') {
      ++pos_;
      return cycles;
    }
    while (skip(), peek() == '(') {
      const std::size_t open = ++pos_;
      const std::size_t close = text_.find(')', open);
      if (close == std::string_view::npos) throw SyntaxError(text_.size(), "')'");
      const std::string_view body = text_.substr(open, close - open);
      std::vector<int> cycle;
      const bool separated = body.find_first_of(" ,") != std::string_view::npos;
      std::size_t k = 0;
      while (k < body.size()) {
        if (body[k] == ' ' || body[k] == ',') {
          ++k;
          continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(body[k])))
          throw SyntaxError(open + k, "a component index");
        std::size_t end = k + 1;
        if (separated)
          while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
        cycle.push_back(std::stoi(std::string(body.substr(k, end - k))));
        k = end;
      }
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
      pos_ = close + 1;
    }
    if (cycles.empty() && text_.substr(pos_ - 1, 1) != ")")
      throw SyntaxError(pos_, "permutation cycles or 'id'");
    return cycles;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

WhittenElement parse_whitten(std::string_view text) { return WhittenParser(text).parse(); }

WhittenElement multiply(const WhittenElement& g, const WhittenElement& h) {
  if (g.mu() != h.mu())
    throw Error(Errc::MuMismatch, "group elements for " + std::to_string(g.mu()) + " and " +
                                      std::to_string(h.mu()) + " components");
  WhittenElement out = WhittenElement::identity(g.mu());
  out.eps0 = g.eps0 * h.eps0;
  for (int i = 0; i < g.mu(); ++i) {
    out.eps[i] = g.eps[i] * h.eps[g.perm[i] - 1];
    out.perm[i] = h.perm[g.perm[i] - 1];
  }
  return out;
}

WhittenElement inverse(const WhittenElement& g) {
  WhittenElement out = WhittenElement::identity(g.mu());
  out.eps0 = g.eps0;
  for (int i = 0; i < g.mu(); ++i) {
    out.perm[g.perm[i] - 1] = i + 1;
    out.eps[g.perm[i] - 1] = g.eps[i];
  }
  return out;
}

std::vector<WhittenElement> whitten_group(int mu) {
  std::vector<WhittenElement> out;
  std::vector<int> perm(mu);
  for (Sign e0 : {Sign::Positive, Sign::Negative})
    for (unsigned mask = 0; mask < (1u << mu); ++mask) {
      std::iota(perm.begin(), perm.end(), 1);
      do {
        WhittenElement g = WhittenElement::identity(mu);
        g.eps0 = e0;
        for (int i = 0; i < mu; ++i)
          g.eps[i] = (mask >> (mu - 1 - i)) & 1u ? Sign::Negative : Sign::Positive;
        g.perm = perm;
        out.push_back(std::move(g));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  return out;
}

PDCode act(const WhittenElement& g, const PDCode& code) {
  const int mu = code.mu();
  if (g.mu() != mu)
    throw Error(Errc::MuMismatch, "group element for " + std::to_string(g.mu()) +
                                      " components acting on a code with " + std::to_string(mu));
  // New component i is old component p(i).
  std::vector<int> to_new(mu + 1);
  std::vector<int> counts(mu);
  for (int i = 1; i <= mu; ++i) {
    to_new[g.perm[i - 1]] = i;
    counts[i - 1] = code.arc_count(g.perm[i - 1]);
  }
  std::vector<Quadruple> quads = code.quadruples();
  for (auto& q : quads)
    for (auto& l : q) l.component = to_new[l.component];

  if (g.eps0 == Sign::Negative)
    for (auto& q : quads) {
      if (crossing_sign(q) == Sign::Positive)
        std::rotate(q.begin(), q.begin() + 3, q.end());
      else
        std::rotate(q.begin(), q.begin() + 1, q.end());
    }

  for (int i = 1; i <= mu; ++i) {
    if (g.eps[i - 1] == Sign::Positive) continue;
    const int n = counts[i - 1];
    for (auto& q : quads)
      for (auto& l : q)
        if (l.component == i && l.arc != 1) l.arc = n + 2 - l.arc;
    for (auto& q : quads)
      if (q[0].component == i) std::rotate(q.begin(), q.begin() + 2, q.end());
    for (auto& q : quads)
      for (auto& l : q)
        if (l.component == i) l.sign = -l.sign;
  }
  return PDCode::from_quadruples(std::move(quads), counts);
}

std::vector<WhittenElement> stabilizer(const PDCode& code) {
  std::vector<WhittenElement> out;
  for (auto& g : whitten_group(code.mu()))
    if (act(g, code) == code) out.push_back(std::move(g));
  return out;
}

SymmetryFree symmetry_free_form(const PDCode& code) {
  MoveSequence seq = remove_all_r1_loops(code);
  for (int k = 1; k <= code.mu(); ++k)
    for (int t = 0; t < k; ++t) {
      Move m{MoveKind::R1a, Direction::Insert, {{k, 1}}};
      PDCode next = apply_move(seq.end(), m);
      seq.steps.push_back({std::move(m), std::move(next)});
    }
  const auto stab = stabilizer(seq.end());
  if (stab.size() != 1)
    throw Error(Errc::PostconditionFailed,
                "result is fixed by " + std::to_string(stab.size()) + " group elements");
  return {seq.end(), std::move(seq)};
}

}  // namespace pdc
