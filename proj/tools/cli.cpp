#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "emit.hpp"
#include "soficshift/constructions.hpp"
#include "soficshift/covers.hpp"
#include "soficshift/error.hpp"
#include "soficshift/graph_io.hpp"
#include "soficshift/graph_ops.hpp"
#include "soficshift/invariants.hpp"
#include "soficshift/language.hpp"

namespace soficshift::cli {

namespace {

constexpr const char* kSchema = "soficshift-report/1";

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct Settings {
  bool json = false;
  bool strict = false;
  std::string dot_path;
  std::size_t subset_cap = kDefaultSubsetCap;
  std::size_t monoid_cap = kDefaultMonoidCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

/// State of one command: inputs seen, warnings, and what to print.
class Session {
 public:
  explicit Session(const Settings& s) : settings_(s) {}

  CoverOptions cover_options() const {
    CoverOptions o;
    o.subset_cap = settings_.subset_cap;
    o.monoid_cap = settings_.monoid_cap;
    return o;
  }

  std::string read(const std::string& path) {
    std::string text = read_text_file(path);
    inputs_ += text;
    have_input_ = true;
    return text;
  }

  LabelledGraph load(const std::string& path) {
    std::string text = read(path);
    return parse_graph(text, std::filesystem::path(path).stem().string());
  }

  /// Trims non-essential input, or refuses under --strict.
  LabelledGraph essential(LabelledGraph g) {
    if (is_essential(g)) return g;
    if (settings_.strict) {
      fail(ErrorCode::NotEssential, "graph '" + g.name() + "' is not essential (--strict)");
    }
    const std::size_t before = g.vertex_count();
    LabelledGraph t = trim_to_essential(g);
    warn("trimmed " + std::to_string(before - t.vertex_count()) +
         " non-essential vertices from '" + g.name() + "'");
    return t;
  }

  LabelledGraph load_essential(const std::string& path) { return essential(load(path)); }

  void warn(std::string w) { warnings_.push_back(std::move(w)); }
  void note_arguments(std::string args) { arguments_ = std::move(args); }
  void dot(std::string text) { dot_ = std::move(text); }

  std::string digest() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(have_input_ ? inputs_ : arguments_)));
    return buf;
  }

  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::optional<std::string>& dot_text() const { return dot_; }

 private:
  const Settings& settings_;
  std::string inputs_;
  bool have_input_ = false;
  std::string arguments_;
  std::vector<std::string> warnings_;
  std::optional<std::string> dot_;
};

struct Outcome {
  Json results = Json::object();
  std::string text;
  int code = kOk;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

CoverResult layered(const CoverResult& c, const CoverOptions& opts) {
  const CoverResult foundation = generalized_fischer_cover(krieger_cover(*c.base, opts));
  return layers(c, foundation);
}

std::string cover_text(const CoverResult& c) {
  std::ostringstream out;
  out << serialize_graph(c.graph);
  for (VertexId v = 0; v < c.vertices.size(); ++v) {
    const auto& cv = c.vertices[v];
    out << "# " << c.graph.vertex_name(v) << "  " << cv.display_name;
    if (cv.layer) out << "  layer " << *cv.layer;
    out << "  key " << cv.class_key.hex() << "\n";
  }
  return out.str();
}

Outcome cmd_check(Session& s, const std::string& file) {
  const LabelledGraph g = s.load(file);
  const Predicates p = predicates(g);
  if (!p.essential) s.warn("predecessor separation is undefined for non-essential graphs");
  Outcome o;
  o.results = Json{{"vertex_count", g.vertex_count()},
                   {"edge_count", g.edge_count()},
                   {"predicates", predicates_json(p)}};
  std::ostringstream t;
  t << "left_resolving: " << yes_no(p.left_resolving) << "\n"
    << "right_resolving: " << yes_no(p.right_resolving) << "\n"
    << "essential: " << yes_no(p.essential) << "\n"
    << "irreducible_graph: " << yes_no(p.irreducible_graph) << "\n"
    << "predecessor_separated: "
    << (p.predecessor_separated ? yes_no(*p.predecessor_separated) : std::string("undefined")) << "\n";
  o.text = t.str();
  const bool all = p.left_resolving && p.right_resolving && p.essential && p.irreducible_graph &&
                   p.predecessor_separated.value_or(false);
  o.code = all ? kOk : kPropertyFalse;
  s.dot(dot_graph(g));
  return o;
}

Outcome cmd_cover(Session& s, const std::string& kind, const std::string& file) {
  const LabelledGraph g = s.load_essential(file);
  const CoverOptions opts = s.cover_options();
  CoverResult c;
  if (kind == "pastset") {
    c = layered(past_set_cover(g, opts), opts);
  } else if (kind == "krieger") {
    c = layered(krieger_cover(g, opts), opts);
  } else if (kind == "fischer") {
    c = layered(fischer_cover(g, opts), opts);
  } else if (kind == "gfc") {
    c = layered(generalized_fischer_cover(g, opts), opts);
  } else {
    c = multiplicity_set_cover(g, opts);
  }
  Outcome o;
  o.results = cover_json(c);
  if (c.kind == CoverKind::Multiplicity) {
    const auto derived = derived_shift_presentation(c);
    o.results["derived_shift"] = derived ? graph_json(*derived) : Json(nullptr);
  }
  o.text = cover_text(c);
  s.dot(dot_cover(c));
  return o;
}

Outcome cmd_layers(Session& s, const std::string& file) {
  const LabelledGraph g = s.load_essential(file);
  const CoverOptions opts = s.cover_options();
  const CoverResult k = krieger_cover(g, opts);
  const CoverResult foundation = generalized_fischer_cover(k);
  const CoverResult c = layers(k, foundation);
  Outcome o;
  Json histogram = Json::object();
  std::ostringstream t;
  for (const auto& [layer, count] : c.layer_histogram()) {
    histogram[std::to_string(layer)] = count;
    t << "layer " << layer << ": " << count << "\n";
  }
  Json vertices = Json::array();
  for (VertexId v = 0; v < c.vertices.size(); ++v) {
    vertices.push_back(Json{{"name", c.graph.vertex_name(v)},
                            {"display_name", c.vertices[v].display_name},
                            {"layer", *c.vertices[v].layer}});
    t << "  " << c.vertices[v].display_name << "  (layer " << *c.vertices[v].layer << ")\n";
  }
  o.results = Json{{"layer_histogram", std::move(histogram)},
                   {"foundation", std::string(to_string(foundation.kind))},
                   {"foundation_size", foundation.vertices.size()},
                   {"vertices", std::move(vertices)}};
  o.text = t.str();
  s.dot(dot_cover(c));
  return o;
}

Outcome cmd_pcg(Session& s, const std::string& file, std::size_t lattice_cap) {
  const LabelledGraph g = s.load_essential(file);
  const CoverOptions opts = s.cover_options();
  const CoverResult k = krieger_cover(g, opts);
  const ProperCommunicationGraph p = proper_communication_graph(k.graph);
  const CoverResult l = layers(k, generalized_fischer_cover(k));
  Outcome o;
  o.results = pcg_json(p);
  Json histogram = Json::object();
  for (const auto& [layer, count] : l.layer_histogram()) histogram[std::to_string(layer)] = count;
  o.results["layer_histogram"] = std::move(histogram);
  if (k.graph.vertex_count() <= lattice_cap) {
    o.results["ideal_count"] = hereditary_saturated_subsets(k.graph, lattice_cap).size();
  } else {
    o.results["ideal_count"] = nullptr;
    s.warn("ideal lattice skipped: Krieger cover exceeds " + std::to_string(lattice_cap) + " vertices");
  }
  std::ostringstream t;
  t << "nodes: " << p.node_count() << "\narcs: " << p.arc_count() << "\nroot: "
    << (p.root ? p.names[*p.root] : std::string("none")) << "\n";
  for (std::size_t i = 0; i < p.node_count(); ++i) t << "  node " << p.names[i] << "\n";
  for (const auto& [u, v] : p.closure.arcs) t << "  arc " << p.names[u] << " -> " << p.names[v] << "\n";
  o.text = t.str();
  s.dot(dot_pcg(p));
  return o;
}

Outcome cmd_ideals(Session& s, const std::string& file, std::size_t cap) {
  const LabelledGraph g = s.load_essential(file);
  const CoverResult k = krieger_cover(g, s.cover_options());
  const IdealLattice lattice = hereditary_saturated_subsets(k.graph, cap);
  Outcome o;
  o.results = lattice_json(k.graph, lattice);
  std::ostringstream t;
  t << "ideals: " << lattice.size() << "\n";
  for (const auto& e : lattice.elements) t << "  " << set_name(k.graph, e) << "\n";
  o.text = t.str();
  s.dot(dot_hasse(k.graph, lattice));
  return o;
}

Outcome cmd_condstar(Session& s, const std::string& file) {
  const LabelledGraph g = s.load_essential(file);
  const ConditionStar c = condition_star(g, s.cover_options());
  Outcome o;
  o.results = Json{{"holds", c.holds}};
  if (c.witness) {
    o.results["witness"] = Json{{"class_key", c.witness->hex()},
                                {"vertex", c.witness_name},
                                {"side", c.witness_in_krieger ? "krieger" : "past_set_essential"}};
  } else {
    o.results["witness"] = nullptr;
  }
  o.text = c.holds ? "condition (*): holds\n"
                   : "condition (*): fails, witness " + c.witness_name +
                         (c.witness_in_krieger ? " (Krieger only)\n" : " (past set only)\n");
  o.code = c.holds ? kOk : kPropertyFalse;
  s.dot(dot_cover(krieger_cover(g, s.cover_options())));
  return o;
}

Outcome cmd_condk(Session& s, const std::string& file) {
  const LabelledGraph g = s.load_essential(file);
  const CoverResult k = krieger_cover(g, s.cover_options());
  const bool holds = condition_K(k.graph);
  Outcome o;
  o.results = Json{{"holds", holds}, {"krieger_vertex_count", k.graph.vertex_count()}};
  o.text = std::string("condition (K): ") + (holds ? "holds\n" : "fails\n");
  o.code = holds ? kOk : kPropertyFalse;
  s.dot(dot_graph(k.graph));
  return o;
}

Outcome cmd_expand(Session& s, const std::string& file, const std::string& symbol,
                   std::string fresh) {
  const LabelledGraph g = s.load_essential(file);
  if (fresh.empty()) fresh = fresh_symbol(g);
  const LabelledGraph e = symbol_expand(g, symbol, fresh);
  Outcome o;
  o.results = Json{{"symbol", symbol}, {"fresh", fresh}, {"graph", graph_json(e)}};
  o.text = serialize_graph(e);
  s.dot(dot_graph(e));
  return o;
}

Outcome cmd_equiv(Session& s, const std::string& f1, const std::string& f2) {
  const LabelledGraph g1 = s.load_essential(f1);
  const LabelledGraph g2 = s.load_essential(f2);
  const auto diff = language_difference(g1, g2, s.cover_options().subset_cap);
  Outcome o;
  o.results = Json{{"equal", !diff.has_value()}};
  o.results["witness"] = diff ? Json(*diff) : Json(nullptr);
  if (diff) {
    std::string w;
    for (const auto& a : *diff) w += (w.empty() ? "" : " ") + a;
    o.results["witness_in"] = word_presentable(g1, *diff) ? "first" : "second";
    o.text = "languages differ; shortest witness: " + w + "\n";
    o.code = kPropertyFalse;
  } else {
    o.text = "languages equal\n";
  }
  return o;
}

Outcome graph_outcome(Session& s, const LabelledGraph& g) {
  Outcome o;
  o.results = Json{{"graph", graph_json(g)}, {"predicates", predicates_json(predicates(g))}};
  o.text = serialize_graph(g);
  s.dot(dot_graph(g));
  return o;
}

Outcome cmd_construct(Session& s, const std::string& what, const std::string& dag_file,
                      const std::string& returns, const std::string& charge) {
  if (what == "charge") {
    if (charge.empty()) fail(ErrorCode::InvalidArgument, "construct charge needs a bound");
    std::size_t c = 0;
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(charge, &pos);
      if (pos != charge.size() || v < 1 || v > 4096) throw std::invalid_argument(charge);
      c = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "charge bound must be an integer in 1..4096");
    }
    return graph_outcome(s, charge_constrained(c));
  }
  if (dag_file.empty()) fail(ErrorCode::InvalidArgument, "construct " + what + " needs --dag");
  const RootedDag dag = parse_dag(s.read(dag_file));
  ReturnEdges mode = what == "pcg" ? ReturnEdges::AllNonRoot : ReturnEdges::SinksOnly;
  if (returns == "sinks") mode = ReturnEdges::SinksOnly;
  if (returns == "all") mode = ReturnEdges::AllNonRoot;
  const LabelledGraph g = what == "pcg" ? realize_pcg(dag, mode) : realize_ideal_lattice(dag, mode);
  Outcome o = graph_outcome(s, g);
  o.results["returns"] = mode == ReturnEdges::SinksOnly ? "sinks" : "all";
  return o;
}

Outcome cmd_fixture(Session& s, const std::string& name, bool list) {
  if (list || name.empty()) {
    Outcome o;
    o.results = Json{{"fixtures", fixture_names()}};
    for (const auto& n : fixture_names()) o.text += n + "\n";
    return o;
  }
  return graph_outcome(s, fixture(name));
}

int exit_code_for(const Error& e) {
  return e.is_resource_limit() ? kCapExceeded : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings settings;
  CLI::App app{"Covers and flow invariants of sofic shifts", "soficshift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", settings.json, "Print a JSON report instead of text");
  app.add_option("--dot", settings.dot_path, "Write a DOT rendering to this file");
  app.add_flag("--strict", settings.strict, "Reject non-essential input instead of trimming it");
  app.add_option("--subset-cap", settings.subset_cap, "Limit on subset-construction states")
      ->check(CLI::PositiveNumber);
  app.add_option("--monoid-cap", settings.monoid_cap, "Limit on transition-monoid relations")
      ->check(CLI::PositiveNumber);
  app.add_option("--lattice-cap", settings.lattice_cap, "Vertex limit for the ideal lattice scan")
      ->check(CLI::PositiveNumber);

  std::string file, file2, kind = "krieger", symbol, fresh, dag, returns, what, charge, name;
  bool list = false;

  auto* check = app.add_subcommand("check", "Structural predicates of a graph");
  check->add_option("file", file, "Graph file")->required();
  auto* cover = app.add_subcommand("cover", "Compute a canonical cover");
  cover->add_option("--kind", kind, "Cover kind")
      ->check(CLI::IsMember({"fischer", "gfc", "krieger", "pastset", "multiplicity"}));
  cover->add_option("file", file, "Graph file")->required();
  auto* layer_cmd = app.add_subcommand("layers", "Layer sizes of the Krieger cover");
  layer_cmd->add_option("file", file, "Graph file")->required();
  auto* pcg = app.add_subcommand("pcg", "Proper communication graph of the Krieger cover");
  pcg->add_option("file", file, "Graph file")->required();
  auto* ideals = app.add_subcommand("ideals", "Hereditary saturated subsets of the Krieger cover");
  ideals->add_option("file", file, "Graph file")->required();
  auto* condstar = app.add_subcommand("condstar", "Condition (*)");
  condstar->add_option("file", file, "Graph file")->required();
  auto* condk = app.add_subcommand("condk", "Condition (K) on the Krieger cover");
  condk->add_option("file", file, "Graph file")->required();
  auto* expand = app.add_subcommand("expand", "Symbol expansion");
  expand->add_option("--symbol", symbol, "Symbol to expand")->required();
  expand->add_option("--fresh", fresh, "Name of the new symbol");
  expand->add_option("file", file, "Graph file")->required();
  auto* equiv = app.add_subcommand("equiv", "Compare presented shift languages");
  equiv->add_option("first", file, "Graph file")->required();
  equiv->add_option("second", file2, "Graph file")->required();
  auto* construct = app.add_subcommand("construct", "Build a presentation");
  construct->add_option("what", what, "pcg, ideal or charge")
      ->required()
      ->check(CLI::IsMember({"pcg", "ideal", "charge"}));
  construct->add_option("bound", charge, "Charge bound for 'construct charge'");
  construct->add_option("--dag", dag, "Rooted DAG file");
  construct->add_option("--returns", returns, "Return edges")->check(CLI::IsMember({"sinks", "all"}));
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a built-in fixture");
  fixture_cmd->add_option("name", name, "Fixture name");
  fixture_cmd->add_flag("--list", list, "List fixture names");

  std::vector<const char*> argv{"soficshift"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  Session session(settings);
  std::string command;
  {
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    session.note_arguments(joined);
  }
  Outcome outcome;
  try {
    if (check->parsed()) {
      command = "check";
      outcome = cmd_check(session, file);
    } else if (cover->parsed()) {
      command = "cover";
      outcome = cmd_cover(session, kind, file);
    } else if (layer_cmd->parsed()) {
      command = "layers";
      outcome = cmd_layers(session, file);
    } else if (pcg->parsed()) {
      command = "pcg";
      outcome = cmd_pcg(session, file, settings.lattice_cap);
    } else if (ideals->parsed()) {
      command = "ideals";
      outcome = cmd_ideals(session, file, settings.lattice_cap);
    } else if (condstar->parsed()) {
      command = "condstar";
      outcome = cmd_condstar(session, file);
    } else if (condk->parsed()) {
      command = "condk";
      outcome = cmd_condk(session, file);
    } else if (expand->parsed()) {
      command = "expand";
      outcome = cmd_expand(session, file, symbol, fresh);
    } else if (equiv->parsed()) {
      command = "equiv";
      outcome = cmd_equiv(session, file, file2);
    } else if (construct->parsed()) {
      command = "construct";
      outcome = cmd_construct(session, what, dag, returns, charge);
    } else {
      command = "fixture";
      outcome = cmd_fixture(session, name, list);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  if (!settings.dot_path.empty()) {
    if (session.dot_text()) {
      std::ofstream dot(settings.dot_path, std::ios::binary);
      if (!dot) {
        err << "error: cannot write " << settings.dot_path << "\n";
        return kInputError;
      }
      dot << *session.dot_text();
    } else {
      session.warn("--dot ignored: '" + command + "' has no graph to render");
    }
  }

  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (settings.json) {
    Json report{{"schema", kSchema},
                {"command", command},
                {"input_digest", session.digest()},
                {"results", std::move(outcome.results)},
                {"warnings", session.warnings()},
                {"timings", Json{{"total_ms", ms}}}};
    out << report.dump(2) << "\n";
  } else {
    for (const auto& w : session.warnings()) err << "warning: " << w << "\n";
    out << outcome.text;
  }
  return outcome.code;
}

}  // namespace soficshift::cli
