#include "pdcode/pd_code.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace pdc {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Malformed: return "MALFORMED";
    case Errc::EmptyCode: return "EMPTY_CODE";
    case Errc::InvalidCode: return "INVALID_CODE";
    case Errc::NoValidSigning: return "NO_VALID_SIGNING";
    case Errc::Ambiguous: return "AMBIGUOUS";
    case Errc::Syntax: return "SYNTAX";
    case Errc::NotApplicable: return "NOT_APPLICABLE";
    case Errc::IrreducibleToEmpty: return "IRREDUCIBLE_TO_EMPTY";
    case Errc::MuMismatch: return "MU_MISMATCH";
    case Errc::PostconditionFailed: return "POSTCONDITION_FAILED";
    case Errc::InternalOrientabilityFailure: return "INTERNAL_ORIENTABILITY_FAILURE";
    case Errc::TraceMismatch: return "TRACE_MISMATCH";
  }
  return "UNKNOWN";
}

std::string_view property_name(Property p) noexcept {
  switch (p) {
    case Property::Malformed: return "MALFORMED";
    case Property::EmptyCode: return "EMPTY_CODE";
    case Property::LabelOccurrence: return "P1";
    case Property::SignPattern: return "P2";
    case Property::Consecutive: return "P3";
    case Property::Successor: return "P4";
  }
  return "?";
}

std::string to_string(const Label& l) {
  return "(" + std::to_string(l.component) + "," + (l.positive() ? "+" : "-") +
         std::to_string(l.arc) + ")";
}

std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.component) + "," + std::to_string(a.arc) + ")";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::ostringstream os;
  os << "invalid PD-code";
  for (const auto& v : violations) {
    os << "; " << property_name(v.property);
    if (v.quadruple) os << " at quadruple " << *v.quadruple;
    os << ": " << v.detail;
  }
  return os.str();
}

void sort_canonical(std::vector<Quadruple>& quads) {
  std::sort(quads.begin(), quads.end(), [](const Quadruple& a, const Quadruple& b) {
    return first_incoming(a) < first_incoming(b);
  });
}

int cyclic_distance(int from, int to, int n) { return ((to - from) % n + n) % n; }

}  // namespace

namespace {

Errc errc_of(const std::vector<Violation>& vs) {
  auto all = [&](Property p) {
    return !vs.empty() &&
           std::all_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.property == p; });
  };
  if (all(Property::EmptyCode)) return Errc::EmptyCode;
  if (all(Property::Malformed)) return Errc::Malformed;
  return Errc::InvalidCode;
}

}  // namespace

InvalidCode::InvalidCode(std::vector<Violation> violations)
    : Error(errc_of(violations), summarize(violations)), violations_(std::move(violations)) {}

AmbiguousSigning::AmbiguousSigning(std::vector<PDCode> candidates)
    : Error(Errc::Ambiguous,
            std::to_string(candidates.size()) + " distinct signings are admissible"),
      candidates_(std::move(candidates)) {}

Sign crossing_sign(const Quadruple& q) noexcept {
  return q[1].positive() ? Sign::Negative : Sign::Positive;
}

Label first_incoming(const Quadruple& q) noexcept {
  Label best = q[0];
  for (const auto& l : q)
    if (l.positive() && l < best) best = l;
  return best;
}

PDCode::PDCode(std::vector<Quadruple> quadruples, std::vector<int> arc_counts)
    : quads_(std::move(quadruples)), arc_counts_(std::move(arc_counts)) {
  sort_canonical(quads_);
}

PDCode PDCode::from_quadruples(std::vector<Quadruple> quadruples,
                               std::optional<std::vector<int>> arc_counts) {
  std::vector<RawQuadruple> raw;
  raw.reserve(quadruples.size());
  for (const auto& q : quadruples) raw.emplace_back(q.begin(), q.end());
  auto v = validate(raw, std::move(arc_counts));
  if (!v.ok()) throw InvalidCode(std::move(v.violations));
  return std::move(*v.code);
}

int PDCode::total_arcs() const noexcept {
  return std::accumulate(arc_counts_.begin(), arc_counts_.end(), 0);
}

int PDCode::arc_offset(int component) const noexcept {
  return std::accumulate(arc_counts_.begin(), arc_counts_.begin() + (component - 1), 0);
}

Arc PDCode::next(Arc a) const noexcept {
  return {a.component, a.arc % arc_count(a.component) + 1};
}

Arc PDCode::prev(Arc a) const noexcept {
  const int n = arc_count(a.component);
  return {a.component, (a.arc - 2 + n) % n + 1};
}

std::strong_ordering operator<=>(const PDCode& a, const PDCode& b) {
  if (auto c = std::lexicographical_compare_three_way(
          a.arc_counts_.begin(), a.arc_counts_.end(), b.arc_counts_.begin(),
          b.arc_counts_.end());
      c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.quads_.begin(), a.quads_.end(),
                                                b.quads_.begin(), b.quads_.end());
}

Validation validate(std::span<const RawQuadruple> raw, std::optional<std::vector<int>> arc_counts) {
  Validation v;
  auto report = [&v](Property p, std::optional<std::size_t> q, std::string detail) {
    v.violations.push_back({p, q, std::move(detail)});
  };

  if (raw.empty()) {
    report(Property::EmptyCode, std::nullopt, "a PD-code needs at least one quadruple");
    return v;
  }

  int mu = 0;
  for (std::size_t qi = 0; qi < raw.size(); ++qi) {
    if (raw[qi].size() != 4) {
      report(Property::Malformed, qi,
             "quadruple has " + std::to_string(raw[qi].size()) + " labels, expected 4");
      continue;
    }
    for (const auto& l : raw[qi]) {
      if (l.component < 1 || l.arc < 1)
        report(Property::Malformed, qi, "indices are 1-based; got " + to_string(l));
      mu = std::max(mu, l.component);
    }
  }
  if (!v.violations.empty()) return v;

  std::vector<int> counts(mu, 0);
  if (arc_counts) {
    if (static_cast<int>(arc_counts->size()) != mu ||
        std::any_of(arc_counts->begin(), arc_counts->end(), [](int n) { return n < 1; })) {
      report(Property::Malformed, std::nullopt,
             "arc counts do not match the " + std::to_string(mu) + " components in use");
      return v;
    }
    counts = *arc_counts;
  } else {
    for (const auto& q : raw)
      for (const auto& l : q) counts[l.component - 1] = std::max(counts[l.component - 1], l.arc);
  }

  for (int c = 1; c <= mu; ++c)
    if (counts[c - 1] == 0)
      report(Property::LabelOccurrence, std::nullopt,
             "component " + std::to_string(c) + " has no labels");

  std::vector<int> offset(mu + 1, 0);
  for (int c = 0; c < mu; ++c) offset[c + 1] = offset[c] + counts[c];
  std::vector<int> plus(offset[mu], 0), minus(offset[mu], 0);
  for (std::size_t qi = 0; qi < raw.size(); ++qi) {
    for (const auto& l : raw[qi]) {
      if (l.arc > counts[l.component - 1]) {
        report(Property::LabelOccurrence, qi,
               to_string(l) + " exceeds the arc count of its component");
        continue;
      }
      auto& slot = l.positive() ? plus : minus;
      ++slot[offset[l.component - 1] + l.arc - 1];
    }
  }
  for (int c = 1; c <= mu; ++c) {
    for (int j = 1; j <= counts[c - 1]; ++j) {
      const int idx = offset[c - 1] + j - 1;
      if (plus[idx] != 1)
        report(Property::LabelOccurrence, std::nullopt,
               to_string(pos(c, j)) + " appears " + std::to_string(plus[idx]) + " times");
      if (minus[idx] != 1)
        report(Property::LabelOccurrence, std::nullopt,
               to_string(neg(c, j)) + " appears " + std::to_string(minus[idx]) + " times");
    }
  }

  for (std::size_t qi = 0; qi < raw.size(); ++qi) {
    const auto& q = raw[qi];
    const auto positives = std::count_if(q.begin(), q.end(), [](const Label& l) { return l.positive(); });
    if (!q[0].positive())
      report(Property::SignPattern, qi, "slot 0 (incoming under-edge) must be positive");
    if (positives != 2)
      report(Property::SignPattern, qi,
             std::to_string(positives) + " positive labels, expected 2");

    for (int first : {0, 1}) {
      const Label& a = q[first];
      const Label& b = q[first + 2];
      const std::string pair = "slots (" + std::to_string(first) + "," +
                               std::to_string(first + 2) + ") = " + to_string(a) + "," +
                               to_string(b);
      if (a.component != b.component) {
        report(Property::Consecutive, qi, pair + " lie on different components");
        continue;
      }
      const int n = counts[a.component - 1];
      if (a.arc > n || b.arc > n) continue;
      const int d = cyclic_distance(a.arc, b.arc, n);
      if (n > 1 && d != 1 && d != n - 1) {
        report(Property::Consecutive, qi, pair + " are not cyclically consecutive");
        continue;
      }
      if (a.sign == b.sign) {
        report(Property::Successor, qi, pair + " have equal signs");
        continue;
      }
      const Label& in = a.positive() ? a : b;
      const Label& out = a.positive() ? b : a;
      if (cyclic_distance(in.arc, out.arc, n) != 1 % n)
        report(Property::Successor, qi,
               pair + ": positive arc " + std::to_string(in.arc) +
                   " is not followed by " + std::to_string(out.arc));
    }
  }

  if (!v.violations.empty()) return v;

  for (int c = 1; c <= mu; ++c)
    if (counts[c - 1] == 1)
      v.warnings.push_back("component " + std::to_string(c) +
                           " has a single arc; properties 3-4 hold trivially modulo 1");

  std::vector<Quadruple> quads;
  quads.reserve(raw.size());
  for (const auto& q : raw) quads.push_back({q[0], q[1], q[2], q[3]});
  v.code = PDCode(std::move(quads), std::move(counts));
  return v;
}

std::vector<UnsignedQuadruple> strip_signs(const PDCode& code) {
  std::vector<UnsignedQuadruple> out;
  out.reserve(code.crossings());
  for (const auto& q : code.quadruples())
    out.push_back({q[0].unsigned_arc(), q[1].unsigned_arc(), q[2].unsigned_arc(),
                   q[3].unsigned_arc()});
  return out;
}

std::vector<PDCode> all_signings(std::span<const UnsignedQuadruple> unsigned_quads) {
  constexpr std::size_t kMaxSignings = 256;
  std::vector<PDCode> found;
  if (unsigned_quads.empty()) return found;

  int mu = 0;
  for (const auto& q : unsigned_quads)
    for (const auto& a : q) {
      if (a.component < 1 || a.arc < 1) return found;
      mu = std::max(mu, a.component);
    }
  std::vector<int> counts(mu, 0);
  for (const auto& q : unsigned_quads)
    for (const auto& a : q) counts[a.component - 1] = std::max(counts[a.component - 1], a.arc);
  std::vector<int> offset(mu + 1, 0);
  for (int c = 0; c < mu; ++c) offset[c + 1] = offset[c] + counts[c];
  auto index = [&](Arc a) { return offset[a.component - 1] + a.arc - 1; };
  auto follows = [&](Arc from, Arc to) {
    const int n = counts[from.component - 1];
    return from.component == to.component && cyclic_distance(from.arc, to.arc, n) == 1 % n;
  };

  // Slot 1 positive gives pattern (+,+,-,-); slot 3 positive gives (+,-,-,+).
  struct Options {
    bool slot1_positive;
    bool slot3_positive;
  };
  std::vector<Options> options;
  options.reserve(unsigned_quads.size());
  std::vector<int> plus(offset[mu], 0), minus(offset[mu], 0);
  for (const auto& q : unsigned_quads) {
    options.push_back({follows(q[1], q[3]), follows(q[3], q[1])});
    ++plus[index(q[0])];
    ++minus[index(q[2])];
  }

  std::vector<bool> choice(unsigned_quads.size(), false);
  std::function<void(std::size_t)> search = [&](std::size_t qi) {
    if (found.size() >= kMaxSignings) return;
    if (qi == unsigned_quads.size()) {
      std::vector<RawQuadruple> raw;
      raw.reserve(unsigned_quads.size());
      for (std::size_t i = 0; i < unsigned_quads.size(); ++i) {
        const auto& q = unsigned_quads[i];
        const Sign s1 = choice[i] ? Sign::Positive : Sign::Negative;
        raw.push_back({{q[0].component, q[0].arc, Sign::Positive},
                       {q[1].component, q[1].arc, s1},
                       {q[2].component, q[2].arc, Sign::Negative},
                       {q[3].component, q[3].arc, -s1}});
      }
      auto v = validate(raw, counts);
      if (v.ok()) found.push_back(std::move(*v.code));
      return;
    }
    const auto& q = unsigned_quads[qi];
    for (bool slot1_positive : {true, false}) {
      if (slot1_positive ? !options[qi].slot1_positive : !options[qi].slot3_positive) continue;
      const int p = index(slot1_positive ? q[1] : q[3]);
      const int m = index(slot1_positive ? q[3] : q[1]);
      if (plus[p] >= 1 || minus[m] >= 1) continue;
      ++plus[p];
      ++minus[m];
      choice[qi] = slot1_positive;
      search(qi + 1);
      --plus[p];
      --minus[m];
    }
  };
  search(0);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

PDCode infer_signs(std::span<const UnsignedQuadruple> unsigned_quads) {
  auto candidates = all_signings(unsigned_quads);
  if (candidates.empty())
    throw Error(Errc::NoValidSigning, "no sign assignment satisfies properties 1-4");
  if (candidates.size() > 1) throw AmbiguousSigning(std::move(candidates));
  return std::move(candidates.front());
}

PDCode canonical_relabel(const PDCode& code) {
  const int mu = code.mu();
  std::vector<int> shift(mu, 0);
  std::vector<Quadruple> best = code.quadruples();
  std::vector<Quadruple> candidate(best.size());
  auto less = [](const Quadruple& a, const Quadruple& b) {
    return first_incoming(a) < first_incoming(b);
  };

  for (;;) {
    int c = 0;
    while (c < mu && ++shift[c] == code.arc_counts()[c]) shift[c++] = 0;
    if (c == mu) break;

    for (std::size_t i = 0; i < best.size(); ++i) {
      for (int s = 0; s < 4; ++s) {
        Label l = code[i][s];
        const int n = code.arc_count(l.component);
        l.arc = (l.arc - 1 + shift[l.component - 1]) % n + 1;
        candidate[i][s] = l;
      }
    }
    std::sort(candidate.begin(), candidate.end(), less);
    if (candidate < best) best = candidate;
  }
  std::vector<int> counts(code.arc_counts().begin(), code.arc_counts().end());
  return PDCode(std::move(best), std::move(counts));
}

PDCode relabel_arcs(const PDCode& code, const std::vector<std::vector<int>>& map) {
  std::vector<Quadruple> quads = code.quadruples();
  for (auto& q : quads)
    for (auto& l : q) l.arc = map[l.component - 1][l.arc - 1];
  return PDCode::from_quadruples(std::move(quads),
                                 std::vector<int>(code.arc_counts().begin(), code.arc_counts().end()));
}

}  // namespace pdc
