#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "pdcode/moves.hpp"
#include "pdcode/notation.hpp"
#include "pdcode/random.hpp"
#include "pdcode/surface.hpp"
#include "pdcode/symmetry.hpp"

namespace pdc::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in_path;
  std::string code_text;
  std::string flavor;
  std::string format;
  std::string to = "paper";
  std::string gamma;
  std::string target;
  std::string target_in;
  std::string move;
  std::string moves_path;
  std::string report;
  int index = -1;
  int random = 0;
  std::uint64_t seed = 0;
  int max_crossings = -1;
  std::size_t max_codes = 10000;
  bool relabel = false;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string read_input(const Options& o, std::istream& in) {
  if (!o.code_text.empty()) return o.code_text;
  if (!o.in_path.empty()) return read_file(o.in_path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Flavor flavor_of(const std::string& name, std::string_view text) {
  if (name.empty()) return detect_flavor(text);
  return *parse_flavor_name(name);
}

PDCode load(const std::string& text, const std::string& flavor) {
  return parse(text, flavor_of(flavor, text));
}

bool json_format(const Options& o, bool json_default) {
  return o.format.empty() ? json_default : o.format == "json";
}

void emit_code(std::ostream& out, const PDCode& code, const std::string& to) {
  std::string s = serialize(code, *parse_flavor_name(to));
  if (s.empty() || s.back() != '\n') s += '\n';
  out << s;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

json label_json(const Label& l, bool knot) {
  const int j = l.positive() ? l.arc : -l.arc;
  if (knot) return j;
  return json::array({l.component, j});
}

json move_json(const Move& m) {
  json site = json::array();
  for (const auto& a : m.site) site.push_back(json::array({a.component, a.arc}));
  json j{{"kind", kind_name(m.kind)}, {"direction", direction_name(m.direction)}, {"site", site}};
  if (m.mirrored) j["mirrored"] = true;
  return j;
}

Move move_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("direction") || !j.contains("site"))
    throw UsageError("a move needs \"kind\", \"direction\" and \"site\"");
  Move m;
  const auto kind = parse_kind(j["kind"].get<std::string>());
  const auto dir = parse_direction(j["direction"].get<std::string>());
  if (!kind || !dir) throw UsageError("unknown move kind or direction");
  m.kind = *kind;
  m.direction = *dir;
  for (const auto& a : j["site"]) {
    if (a.is_number_integer())
      m.site.push_back({1, a.get<int>()});
    else if (a.is_array() && a.size() == 2)
      m.site.push_back({a[0].get<int>(), a[1].get<int>()});
    else
      throw UsageError("site entries are arc numbers or [component, arc] pairs");
  }
  m.mirrored = j.value("mirrored", false);
  return m;
}

json sequence_json(const MoveSequence& seq) {
  json steps = json::array();
  for (const auto& s : seq.steps) {
    json step = move_json(s.move);
    step["result"] = serialize(s.result, Flavor::PaperSigned);
    steps.push_back(std::move(step));
  }
  return json{{"start", serialize(seq.start, Flavor::PaperSigned)},
              {"steps", std::move(steps)},
              {"end", serialize(seq.end(), Flavor::PaperSigned)}};
}

json stats_json(const SearchStats& s) {
  return json{{"visited", s.visited},
              {"expanded", s.expanded},
              {"frontier", s.frontier},
              {"depth", s.depth},
              {"budget_exceeded", s.budget_exceeded}};
}

void print_violations(std::ostream& err, const std::vector<Violation>& vs) {
  for (const auto& v : vs) {
    err << property_name(v.property);
    if (v.quadruple) err << " quadruple " << *v.quadruple;
    err << ": " << v.detail << '\n';
  }
}

json violations_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const auto& v : vs) {
    json j{{"property", property_name(v.property)}};
    j["quadruple"] = v.quadruple ? json(*v.quadruple) : json(nullptr);
    j["detail"] = v.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_validate(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = read_input(o, in);
  const Flavor f = flavor_of(o.flavor, text);
  Validation v;
  if (f == Flavor::PaperSigned) {
    const auto raw = parse_raw(text);
    v = validate(raw);
  } else {
    try {
      v.code = parse(text, f);
    } catch (const InvalidCode& e) {
      v.violations = e.violations();
    }
  }
  if (json_format(o, true)) {
    json j{{"valid", v.ok()}};
    if (v.ok()) {
      j["mu"] = v.code->mu();
      j["arc_counts"] = std::vector<int>(v.code->arc_counts().begin(), v.code->arc_counts().end());
      j["crossings"] = v.code->crossings();
    }
    j["violations"] = violations_json(v.violations);
    j["warnings"] = v.warnings;
    emit_json(out, j);
  } else {
    out << (v.ok() ? "valid" : "invalid") << '\n';
    print_violations(out, v.violations);
    for (const auto& w : v.warnings) out << "warning: " << w << '\n';
  }
  return v.ok() ? 0 : 1;
}

json faces_json(const FaceSet& fs, bool knot) {
  json arr = json::array();
  for (const auto& f : fs) {
    json face = json::array();
    for (const auto& l : f) face.push_back(label_json(l, knot));
    arr.push_back(std::move(face));
  }
  return arr;
}

std::string face_text(const Face& f, bool knot) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + format_label(f[i], knot);
  return s + ")";
}

int cmd_info(const Options& o, std::istream& in, std::ostream& out) {
  const PDCode code = load(read_input(o, in), o.flavor);
  const SurfaceReport r = surface_report(code);
  const DiagramData d = trace_diagram(code);
  const bool knot = code.mu() == 1;
  if (json_format(o, true)) {
    json signs = json::array();
    for (Sign s : d.crossing_signs) signs.push_back(to_int(s));
    emit_json(out, json{{"mu", code.mu()},
                        {"arc_counts", std::vector<int>(code.arc_counts().begin(),
                                                        code.arc_counts().end())},
                        {"V", r.vertices},
                        {"E", r.edges},
                        {"F", r.face_count},
                        {"chi", r.chi},
                        {"components", r.components},
                        {"genus", r.genus},
                        {"total_genus", r.total_genus},
                        {"spherical", r.spherical},
                        {"crossing_signs", signs},
                        {"faces", faces_json(r.faces, knot)}});
  } else {
    out << "mu " << code.mu() << "\nV " << r.vertices << "\nE " << r.edges << "\nF "
        << r.face_count << "\nchi " << r.chi << "\ncomponents " << r.components.size()
        << "\ntotal_genus " << r.total_genus << "\nspherical " << (r.spherical ? "true" : "false")
        << '\n';
  }
  return 0;
}

int cmd_faces(const Options& o, std::istream& in, std::ostream& out) {
  const PDCode code = load(read_input(o, in), o.flavor);
  const FaceSet fs = faces(code);
  const bool knot = code.mu() == 1;
  if (json_format(o, true)) {
    emit_json(out, json{{"faces", faces_json(fs, knot)}});
  } else {
    for (const auto& f : fs) out << face_text(f, knot) << '\n';
  }
  return 0;
}

int cmd_convert(const Options& o, std::istream& in, std::ostream& out) {
  emit_code(out, load(read_input(o, in), o.flavor), o.to);
  return 0;
}

int cmd_gauss(const Options& o, std::istream& in, std::ostream& out) {
  const GaussCode g = to_gauss(load(read_input(o, in), o.flavor));
  if (json_format(o, false)) {
    json comps = json::array();
    for (const auto& c : g.components) {
      json seq = json::array();
      for (const auto& e : c)
        seq.push_back(json{{"crossing", e.crossing}, {"over", e.over}, {"sign", to_int(e.sign)}});
      comps.push_back(std::move(seq));
    }
    emit_json(out, json{{"components", comps}});
  } else {
    out << format_gauss(g) << '\n';
  }
  return 0;
}

int cmd_moves(const Options& o, std::istream& in, std::ostream& out) {
  const auto moves = enumerate_moves(load(read_input(o, in), o.flavor));
  if (json_format(o, true)) {
    json arr = json::array();
    for (const auto& m : moves) arr.push_back(move_json(m));
    emit_json(out, json{{"count", moves.size()}, {"moves", arr}});
  } else {
    for (const auto& m : moves) out << to_string(m) << '\n';
  }
  return 0;
}

json parse_json_arg(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(e.byte, "well-formed JSON in " + what);
  }
}

int cmd_apply(const Options& o, std::istream& in, std::ostream& out) {
  const int sources = !o.move.empty() + (o.index >= 0) + !o.moves_path.empty() + (o.random > 0);
  if (sources != 1) throw UsageError("apply takes exactly one of --move, --index, --moves, --random");

  std::optional<MoveSequence> seq;
  if (!o.moves_path.empty()) {
    const json doc = parse_json_arg(read_file(o.moves_path), o.moves_path);
    const json& steps = doc.is_array() ? doc : doc.value("steps", json::array());
    const PDCode start = doc.is_object() && doc.contains("start")
                             ? parse(doc["start"].get<std::string>())
                             : load(read_input(o, in), o.flavor);
    seq = MoveSequence{start, {}};
    for (const auto& s : steps) {
      Move m = move_from_json(s);
      PDCode next = apply_move(seq->end(), m);
      if (s.is_object() && s.contains("result") &&
          parse(s["result"].get<std::string>()) != next)
        throw Error(Errc::NotApplicable, "step " + std::to_string(seq->steps.size() + 1) +
                                             " does not reproduce its recorded result");
      seq->steps.push_back({std::move(m), std::move(next)});
    }
  } else {
    const PDCode code = load(read_input(o, in), o.flavor);
    seq = MoveSequence{code, {}};
    if (!o.move.empty()) {
      Move m = move_from_json(parse_json_arg(o.move, "--move"));
      PDCode next = apply_move(code, m);
      seq->steps.push_back({std::move(m), std::move(next)});
    } else if (o.index >= 0) {
      const auto moves = enumerate_moves(code);
      if (static_cast<std::size_t>(o.index) >= moves.size())
        throw UsageError("--index " + std::to_string(o.index) + " out of range (" +
                         std::to_string(moves.size()) + " moves)");
      seq->steps.push_back({moves[o.index], apply_move(code, moves[o.index])});
    } else {
      Rng rng(o.seed);
      const int cap = o.max_crossings >= 0 ? o.max_crossings
                                           : static_cast<int>(code.crossings()) + 6;
      for (int s = 0; s < o.random; ++s) {
        auto step = random_step(seq->end(), rng, cap);
        if (!step) break;
        seq->steps.push_back(std::move(*step));
      }
    }
  }
  if (json_format(o, false))
    emit_json(out, sequence_json(*seq));
  else
    emit_code(out, seq->end(), o.to);
  return 0;
}

int cmd_equiv(const Options& o, std::istream& in, std::ostream& out) {
  if (o.target.empty() == o.target_in.empty())
    throw UsageError("equiv takes exactly one of --target, --target-in");
  const PDCode a = load(read_input(o, in), o.flavor);
  const std::string target_text = o.target.empty() ? read_file(o.target_in) : o.target;
  const PDCode b = parse(target_text);
  const int cap = o.max_crossings >= 0
                      ? o.max_crossings
                      : static_cast<int>(std::max(a.crossings(), b.crossings())) + 2;
  const SearchResult r = equivalent_bounded(a, b, cap, o.max_codes);
  if (json_format(o, true)) {
    json j{{"status", r.found() ? "found" : "not_found"}};
    j["length"] = r.found() ? json(r.sequence->steps.size()) : json(nullptr);
    j["sequence"] = r.found() ? sequence_json(*r.sequence) : json(nullptr);
    j["stats"] = stats_json(r.stats);
    emit_json(out, j);
  } else if (r.found()) {
    out << "found " << r.sequence->steps.size() << '\n';
    for (const auto& s : r.sequence->steps) out << to_string(s.move) << '\n';
  } else {
    out << "not_found visited " << r.stats.visited << " expanded " << r.stats.expanded
        << " frontier " << r.stats.frontier << " depth " << r.stats.depth
        << (r.stats.budget_exceeded ? " budget_exceeded" : " exhausted") << '\n';
  }
  return 0;
}

int cmd_act(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const WhittenElement g = parse_whitten(o.gamma);
  const PDCode code = load(read_input(o, in), o.flavor);
  const PDCode result = act(g, code);
  const bool spherical = surface_report(code).spherical;
  if (json_format(o, false)) {
    emit_json(out, json{{"gamma", to_string(g)},
                        {"code", serialize(result, Flavor::PaperSigned)},
                        {"spherical_input", spherical}});
  } else {
    if (!spherical) err << "warning: input code is not spherical\n";
    emit_code(out, result, o.to);
  }
  return 0;
}

int cmd_stabilizer(const Options& o, std::istream& in, std::ostream& out) {
  const PDCode code = load(read_input(o, in), o.flavor);
  const auto stab = stabilizer(code);
  if (json_format(o, true)) {
    json elems = json::array();
    for (const auto& g : stab) elems.push_back(to_string(g));
    emit_json(out, json{{"mu", code.mu()},
                        {"group_order", whitten_group(code.mu()).size()},
                        {"size", stab.size()},
                        {"elements", elems},
                        {"spherical", surface_report(code).spherical}});
  } else {
    for (const auto& g : stab) out << to_string(g) << '\n';
  }
  return 0;
}

int cmd_canonicalize(const Options& o, std::istream& in, std::ostream& out) {
  const PDCode code = load(read_input(o, in), o.flavor);
  if (o.relabel) {
    emit_code(out, canonical_relabel(code), o.to);
    return 0;
  }
  const SymmetryFree sf = symmetry_free_form(code);
  if (json_format(o, false))
    emit_json(out, sequence_json(sf.moves));
  else
    emit_code(out, sf.code, o.to);
  return 0;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

int cmd_batch(const Options& o, std::istream& in, std::ostream& out) {
  const std::string text = o.in_path.empty() ? read_input(o, in) : read_file(o.in_path);
  const json table = parse_json_arg(text, "the batch table");
  if (!table.is_array()) throw UsageError("the batch table is a JSON array of {name, notation, flavor}");

  std::ostringstream csv;
  csv << "name,n,mu,chi,genus,spherical,stabilizer_size,status\n";
  bool all_ok = true;
  for (const auto& row : table) {
    const std::string name = row.value("name", "");
    const std::string notation = row.value("notation", "");
    const std::string flavor = row.value("flavor", "");
    csv << csv_field(name) << ',';
    try {
      if (!flavor.empty() && !parse_flavor_name(flavor))
        throw UsageError("unknown flavor " + flavor);
      const PDCode code = load(notation, flavor);
      const SurfaceReport r = surface_report(code);
      csv << code.crossings() << ',' << code.mu() << ',' << r.chi << ',' << r.total_genus << ','
          << (r.spherical ? "true" : "false") << ',' << stabilizer(code).size() << ",ok\n";
    } catch (const Error& e) {
      all_ok = false;
      csv << ",,,,,," << errc_name(e.code()) << '\n';
    } catch (const UsageError&) {
      all_ok = false;
      csv << ",,,,,,USAGE\n";
    }
  }
  if (o.report.empty()) {
    out << csv.str();
  } else {
    std::ofstream f(o.report, std::ios::binary);
    if (!f) throw UsageError("cannot write " + o.report);
    f << csv.str();
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Planar diagram code toolkit", "pd"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) {
    sub->add_option("--in", o.in_path, "Input file (default: standard input)");
    sub->add_option("--code", o.code_text, "Code given inline");
    sub->add_option("--flavor", o.flavor, "Input notation (default: detect)")
        ->check(CLI::IsMember({"paper", "knottheory", "json"}));
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  };
  auto output = [&](CLI::App* sub) {
    sub->add_option("--to", o.to, "Output notation")
        ->check(CLI::IsMember({"paper", "knottheory", "json"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a code and list every violation");
  input(validate_cmd);
  auto* info_cmd = app.add_subcommand("info", "Surface report: faces, chi, genus, sphericity");
  input(info_cmd);
  auto* faces_cmd = app.add_subcommand("faces", "Orbits of the successor map");
  input(faces_cmd);
  auto* convert_cmd = app.add_subcommand("convert", "Rewrite a code in another notation");
  input(convert_cmd);
  output(convert_cmd);
  auto* gauss_cmd = app.add_subcommand("gauss", "Gauss code of each component");
  input(gauss_cmd);
  auto* moves_cmd = app.add_subcommand("moves", "List applicable moves");
  input(moves_cmd);
  auto* apply_cmd = app.add_subcommand("apply", "Apply or replay moves");
  input(apply_cmd);
  output(apply_cmd);
  apply_cmd->add_option("--move", o.move, "Move as JSON");
  apply_cmd->add_option("--index", o.index, "Index into the enumerated moves");
  apply_cmd->add_option("--moves", o.moves_path, "Move sequence file to replay");
  apply_cmd->add_option("--random", o.random, "Number of random moves");
  apply_cmd->add_option("--seed", o.seed, "Random seed");
  apply_cmd->add_option("--max-crossings", o.max_crossings, "Crossing bound for random moves");
  auto* equiv_cmd = app.add_subcommand("equiv", "Bounded search for a move sequence");
  input(equiv_cmd);
  equiv_cmd->add_option("--target", o.target, "Target code given inline");
  equiv_cmd->add_option("--target-in", o.target_in, "Target code file");
  equiv_cmd->add_option("--max-crossings", o.max_crossings, "Crossing bound");
  equiv_cmd->add_option("--max-codes", o.max_codes, "Bound on distinct codes visited");
  auto* act_cmd = app.add_subcommand("act", "Act by a Whitten group element");
  input(act_cmd);
  output(act_cmd);
  act_cmd->add_option("--gamma", o.gamma, "Element, e.g. \"(1; 1,1; (12))\"")->required();
  auto* stabilizer_cmd = app.add_subcommand("stabilizer", "Group elements fixing the code");
  input(stabilizer_cmd);
  auto* canon_cmd = app.add_subcommand("canonicalize", "Symmetry-free form of the code");
  input(canon_cmd);
  output(canon_cmd);
  canon_cmd->add_flag("--relabel", o.relabel, "Only pick the least cyclic relabeling");
  auto* batch_cmd = app.add_subcommand("batch", "Report on a table of codes");
  batch_cmd->add_option("--in", o.in_path, "JSON array of {name, notation, flavor}");
  batch_cmd->add_option("--report", o.report, "CSV output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(o, in, out);
    if (info_cmd->parsed()) return cmd_info(o, in, out);
    if (faces_cmd->parsed()) return cmd_faces(o, in, out);
    if (convert_cmd->parsed()) return cmd_convert(o, in, out);
    if (gauss_cmd->parsed()) return cmd_gauss(o, in, out);
    if (moves_cmd->parsed()) return cmd_moves(o, in, out);
    if (apply_cmd->parsed()) return cmd_apply(o, in, out);
    if (equiv_cmd->parsed()) return cmd_equiv(o, in, out);
    if (act_cmd->parsed()) return cmd_act(o, in, out, err);
    if (stabilizer_cmd->parsed()) return cmd_stabilizer(o, in, out);
    if (canon_cmd->parsed()) return cmd_canonicalize(o, in, out);
    if (batch_cmd->parsed()) return cmd_batch(o, in, out);
  } catch (const SyntaxError& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return 2;
  } catch (const InvalidCode& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    print_violations(err, e.violations());
    return 1;
  } catch (const AmbiguousSigning& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    for (const auto& c : e.candidates()) err << serialize(c, Flavor::PaperSigned) << '\n';
    return 1;
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << '\n';
    return 1;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    err << "usage: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace pdc::cli
