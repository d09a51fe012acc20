#include "pdcode/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "json.hpp"

namespace pdc {

std::string_view flavor_name(Flavor f) noexcept {
  switch (f) {
    case Flavor::PaperSigned: return "paper";
    case Flavor::KnotTheoryUnsigned: return "knottheory";
    case Flavor::Json: return "json";
  }
  return "paper";
}

std::optional<Flavor> parse_flavor_name(std::string_view name) noexcept {
  if (name == "paper" || name == "signed") return Flavor::PaperSigned;
  if (name == "knottheory" || name == "kt") return Flavor::KnotTheoryUnsigned;
  if (name == "json") return Flavor::Json;
  return std::nullopt;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("end of input");
  }

  std::optional<Sign> accept_sign() {
    skip_ws();
    if (accept('+')) return Sign::Positive;
    if (accept('-') || accept("\xE2\x88\x92")) return Sign::Negative;
    return std::nullopt;
  }

  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000) fail("an integer below 10^9");
      ++pos_;
    }
    if (pos_ == start) fail("an integer");
    return static_cast<int>(value);
  }

  [[noreturn]] void fail(std::string expected) const {
    throw SyntaxError(pos_, std::move(expected));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Label signed_arc(Cursor& in, int component) {
  auto sign = in.accept_sign();
  if (!sign) in.fail("'+' or '-'");
  return {component, in.integer(), *sign};
}

Label paper_label(Cursor& in) {
  if (in.accept('(')) {
    const int component = in.integer();
    in.expect(',');
    Label l = signed_arc(in, component);
    in.expect(')');
    return l;
  }
  return signed_arc(in, 1);
}

std::vector<std::array<int, 4>> parse_knottheory(std::string_view text) {
  Cursor in(text);
  if (!in.accept("PD")) in.fail("'PD['");
  in.expect('[');
  std::vector<std::array<int, 4>> quads;
  do {
    if (!in.accept('X')) in.fail("'X['");
    in.expect('[');
    std::array<int, 4> q{};
    for (int s = 0; s < 4; ++s) {
      if (s > 0) in.expect(',');
      q[s] = in.integer();
    }
    in.expect(']');
    quads.push_back(q);
  } while (in.accept(','));
  in.expect(']');
  in.expect_end();
  return quads;
}

PDCode parse_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte, "well-formed JSON");
  }
  if (!doc.is_object() || !doc.contains("quadruples") || !doc["quadruples"].is_array())
    throw SyntaxError(0, "an object with a \"quadruples\" array");

  std::vector<RawQuadruple> raw;
  for (const auto& q : doc["quadruples"]) {
    if (!q.is_array()) throw SyntaxError(0, "each quadruple to be an array");
    RawQuadruple labels;
    for (const auto& l : q) {
      if (!l.is_object() || !l.contains("c") || !l.contains("j") || !l.contains("s") ||
          !l["c"].is_number_integer() || !l["j"].is_number_integer() ||
          !l["s"].is_number_integer())
        throw SyntaxError(0, "labels of the form {\"c\":int,\"j\":int,\"s\":+1|-1}");
      const int s = l["s"].get<int>();
      if (s != 1 && s != -1) throw SyntaxError(0, "\"s\" to be 1 or -1");
      labels.push_back({l["c"].get<int>(), l["j"].get<int>(),
                        s == 1 ? Sign::Positive : Sign::Negative});
    }
    raw.push_back(std::move(labels));
  }

  std::optional<std::vector<int>> counts;
  if (doc.contains("arc_counts")) {
    if (!doc["arc_counts"].is_array()) throw SyntaxError(0, "\"arc_counts\" to be an array");
    counts.emplace();
    for (const auto& n : doc["arc_counts"]) {
      if (!n.is_number_integer()) throw SyntaxError(0, "integer arc counts");
      counts->push_back(n.get<int>());
    }
  }
  if (doc.contains("mu")) {
    if (!doc["mu"].is_number_integer()) throw SyntaxError(0, "integer \"mu\"");
    const int mu = doc["mu"].get<int>();
    if (counts && static_cast<int>(counts->size()) != mu)
      throw InvalidCode({{Property::Malformed, std::nullopt,
                          "\"mu\" disagrees with the length of \"arc_counts\""}});
  }

  auto v = validate(raw, std::move(counts));
  if (!v.ok()) throw InvalidCode(std::move(v.violations));
  PDCode code = std::move(*v.code);
  if (doc.contains("mu") && doc["mu"].get<int>() != code.mu())
    throw InvalidCode({{Property::Malformed, std::nullopt,
                        "\"mu\" disagrees with the components in use"}});
  return code;
}

}  // namespace

Flavor detect_flavor(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return Flavor::PaperSigned;
  if (text[first] == '{') {
    const auto second = text.find_first_not_of(" \t\r\n", first + 1);
    if (second != std::string_view::npos && text[second] == '"') return Flavor::Json;
  }
  if (text.substr(first, 3) == "PD[" || text.substr(first, 2) == "PD") return Flavor::KnotTheoryUnsigned;
  return Flavor::PaperSigned;
}

std::vector<RawQuadruple> parse_raw(std::string_view text) {
  Cursor in(text);
  in.expect('{');
  std::vector<RawQuadruple> quads;
  do {
    in.expect('[');
    RawQuadruple q;
    do {
      q.push_back(paper_label(in));
    } while (in.accept(','));
    in.expect(']');
    quads.push_back(std::move(q));
  } while (in.accept(','));
  in.expect('}');
  in.expect_end();
  return quads;
}

std::vector<UnsignedQuadruple> split_global_numbering(
    const std::vector<std::array<int, 4>>& global) {
  // Edges of the strand graph: under pairs are directed (slot 0 -> slot 2),
  // over pairs undirected.
  struct Edge {
    int a, b;
    bool directed;
  };
  std::vector<Edge> edges;
  std::map<int, std::vector<int>> incident;
  for (const auto& q : global) {
    for (int s : {0, 1}) {
      if (q[s] < 1 || q[s + 2] < 1)
        throw InvalidCode({{Property::Malformed, std::nullopt, "arc labels are 1-based"}});
      const int id = static_cast<int>(edges.size());
      edges.push_back({q[s], q[s + 2], s == 0});
      incident[q[s]].push_back(id);
      incident[q[s + 2]].push_back(id);
    }
  }
  for (const auto& [label, es] : incident)
    if (es.size() != 2)
      throw InvalidCode({{Property::LabelOccurrence, std::nullopt,
                          "arc " + std::to_string(label) + " appears " +
                              std::to_string(es.size()) + " times"}});

  std::map<int, Arc> renumber;
  int component = 0;
  for (const auto& [start, _] : incident) {
    if (renumber.count(start)) continue;
    ++component;
    // Walk the cycle from its least label.
    std::vector<int> cycle{start};
    std::vector<int> via;
    int current = start;
    int came_by = -1;
    for (;;) {
      const auto& es = incident[current];
      const int e = (es[0] != came_by) ? es[0] : es[1];
      const int other = edges[e].a == current ? edges[e].b : edges[e].a;
      via.push_back(e);
      if (other == start) break;
      cycle.push_back(other);
      current = other;
      came_by = e;
    }

    bool forward = true;
    bool decided = false;
    for (std::size_t k = 0; k < via.size() && !decided; ++k) {
      const Edge& e = edges[via[k]];
      if (!e.directed) continue;
      // via[k] joins cycle[k] to cycle[k+1] in walk order.
      forward = e.a == cycle[k];
      decided = true;
    }
    if (!decided && cycle.size() > 1) forward = cycle[1] == start + 1 || cycle.back() != start + 1;
    if (!forward) std::reverse(cycle.begin() + 1, cycle.end());
    for (std::size_t k = 0; k < cycle.size(); ++k)
      renumber[cycle[k]] = {component, static_cast<int>(k) + 1};
  }

  std::vector<UnsignedQuadruple> out;
  out.reserve(global.size());
  for (const auto& q : global)
    out.push_back({renumber[q[0]], renumber[q[1]], renumber[q[2]], renumber[q[3]]});
  return out;
}

PDCode parse(std::string_view text, Flavor flavor) {
  switch (flavor) {
    case Flavor::Json: return parse_json(text);
    case Flavor::KnotTheoryUnsigned: {
      const auto unsigned_quads = split_global_numbering(parse_knottheory(text));
      return infer_signs(unsigned_quads);
    }
    case Flavor::PaperSigned: break;
  }
  auto v = validate(parse_raw(text));
  if (!v.ok()) throw InvalidCode(std::move(v.violations));
  return std::move(*v.code);
}

PDCode parse(std::string_view text) { return parse(text, detect_flavor(text)); }

std::string format_label(const Label& l, bool shorthand) {
  const std::string arc = (l.positive() ? "+" : "-") + std::to_string(l.arc);
  if (shorthand) return arc;
  return "(" + std::to_string(l.component) + "," + arc + ")";
}

std::string serialize(const PDCode& code, Flavor flavor) {
  std::string out;
  switch (flavor) {
    case Flavor::PaperSigned: {
      const bool shorthand = code.mu() == 1;
      out += '{';
      for (std::size_t i = 0; i < code.crossings(); ++i) {
        if (i) out += ',';
        out += '[';
        for (int s = 0; s < 4; ++s) {
          if (s) out += ',';
          out += format_label(code[i][s], shorthand);
        }
        out += ']';
      }
      out += '}';
      return out;
    }
    case Flavor::KnotTheoryUnsigned: {
      out += "PD[";
      for (std::size_t i = 0; i < code.crossings(); ++i) {
        if (i) out += ',';
        out += "X[";
        for (int s = 0; s < 4; ++s) {
          if (s) out += ',';
          const Label& l = code[i][s];
          out += std::to_string(code.arc_offset(l.component) + l.arc);
        }
        out += ']';
      }
      out += ']';
      return out;
    }
    case Flavor::Json: {
      nlohmann::ordered_json doc;
      doc["mu"] = code.mu();
      doc["arc_counts"] = std::vector<int>(code.arc_counts().begin(), code.arc_counts().end());
      auto quads = nlohmann::ordered_json::array();
      for (const auto& q : code.quadruples()) {
        auto labels = nlohmann::ordered_json::array();
        for (const auto& l : q)
          labels.push_back({{"c", l.component}, {"j", l.arc}, {"s", to_int(l.sign)}});
        quads.push_back(std::move(labels));
      }
      doc["quadruples"] = std::move(quads);
      return doc.dump() + "\n";
    }
  }
  return out;
}

GaussCode to_gauss(const PDCode& code) {
  // Where each arc enters a crossing: (crossing index, slot).
  std::vector<std::pair<int, int>> entry(code.total_arcs());
  for (std::size_t i = 0; i < code.crossings(); ++i)
    for (int s = 0; s < 4; ++s) {
      const Label& l = code[i][s];
      if (l.positive())
        entry[code.arc_offset(l.component) + l.arc - 1] = {static_cast<int>(i), s};
    }

  GaussCode gauss;
  for (int c = 1; c <= code.mu(); ++c) {
    std::vector<GaussEntry> seq;
    for (int j = 1; j <= code.arc_count(c); ++j) {
      const auto [q, slot] = entry[code.arc_offset(c) + j - 1];
      seq.push_back({q + 1, slot % 2 == 1, crossing_sign(code[q])});
    }
    gauss.components.push_back(std::move(seq));
  }
  return gauss;
}

std::string format_gauss(const GaussCode& gauss) {
  std::string out;
  for (std::size_t c = 0; c < gauss.components.size(); ++c) {
    if (c) out += " | ";
    for (std::size_t k = 0; k < gauss.components[c].size(); ++k) {
      const auto& e = gauss.components[c][k];
      if (k) out += ' ';
      out += e.over ? 'O' : 'U';
      out += std::to_string(e.crossing);
      out += e.sign == Sign::Positive ? '+' : '-';
    }
  }
  return out;
}

}  // namespace pdc
