#include "cli.hpp"

#include "nsa/audit.hpp"
#include "nsa/bqf.hpp"
#include "nsa/error.hpp"
#include "nsa/fintop.hpp"
#include "nsa/germs.hpp"
#include "nsa/hull.hpp"
#include "nsa/hyperreal.hpp"
#include "nsa/io.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>

namespace nsa::cli {

namespace {

using io::Json;

enum class Format { Json, Table, Dot };

// "a.b[0].c  value" lines, one per leaf.
void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && !std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

void emit(const Json& j, Format format, std::ostream& out) {
  if (format == Format::Table)
    flatten(j, "", out);
  else
    out << j.dump(2) << '\n';
}

// Inline JSON when the argument starts with '{', a file path otherwise.
Json json_argument(const std::string& arg) {
  auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') {
    try {
      return Json::parse(arg);
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::InvalidInput, e.what());
    }
  }
  return io::read_json_file(arg);
}

std::pair<std::string, std::string> split_assignment(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidInput, "expected NAME=VALUE, got " + text);
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::string verdict_text(germs::AeVerdict v) { return std::string(germs::to_string(v)); }

struct Options {
  std::string format;  // empty: json, or dot for topo dot
  // hyper
  std::string expr;
  unsigned long root_n = 2;
  // germ
  std::string germ_a, germ_b, relation;
  std::vector<std::string> assignments;
  // bqf
  std::string formula, bound, variable, bindings_file;
  std::vector<std::string> binds;
  // topo
  std::string space, property, family;
  bool stone_cech = false, hewitt = false, t0_reflect = false;
  // audit
  std::size_t max_points = 3;
  std::uint64_t seed = 1;
  bool serial = false;
};

bqf::Bindings read_bindings(const Options& o) {
  bqf::Bindings b;
  if (!o.bindings_file.empty()) {
    auto j = json_argument(o.bindings_file);
    if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "bindings must be a JSON object");
    for (const auto& [name, value] : j.items()) b[name] = io::entity_from_json(value);
  }
  for (const auto& text : o.binds) {
    auto [name, value] = split_assignment(text);
    b[name] = bqf::parse_entity(value);
  }
  return b;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact hyperreals, germs, bounded formulas and finite topological spaces"};
  app.name("nsa");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));

  std::function<int()> action;
  auto bind = [&](CLI::App* sub, std::function<int()> fn) { sub->callback([&action, fn] { action = fn; }); };

  auto* hyper = app.add_subcommand("hyper", "Hyperreal arithmetic")->require_subcommand(1);
  auto* h_eval = hyper->add_subcommand("eval", "Canonical form, classification, standard part");
  h_eval->add_option("expr", o.expr)->required();
  auto* h_st = hyper->add_subcommand("st", "Standard part");
  h_st->add_option("expr", o.expr)->required();
  auto* h_root = hyper->add_subcommand("root", "Exact n-th root");
  h_root->add_option("expr", o.expr)->required();
  h_root->add_option("n", o.root_n)->check(CLI::PositiveNumber);

  auto* germ = app.add_subcommand("germ", "Sequence germs modulo almost-everywhere agreement")->require_subcommand(1);
  auto* g_cmp = germ->add_subcommand("compare", "Compare two germs; exit 1 unless true-ae");
  g_cmp->add_option("a", o.germ_a)->required();
  g_cmp->add_option("b", o.germ_b)->required();
  g_cmp->add_option("relation", o.relation)->required()->check(CLI::IsMember({"eq", "lt"}));
  auto* g_cls = germ->add_subcommand("classify", "Classify a germ");
  g_cls->add_option("germ", o.germ_a)->required();
  auto* g_los = germ->add_subcommand("los", "Evaluate a quantifier-free formula; exit 1 unless true-ae");
  g_los->add_option("formula", o.formula)->required();
  g_los->add_option("--assign", o.assignments, "NAME=GERM");

  auto* bqf_cmd = app.add_subcommand("bqf", "Bounded quantifier formulas over finite sets")->require_subcommand(1);
  auto* b_eval = bqf_cmd->add_subcommand("eval", "Truth value; exit 1 when false");
  b_eval->add_option("formula", o.formula)->required();
  auto* b_def = bqf_cmd->add_subcommand("define", "The set {x in bound : formula}");
  b_def->add_option("formula", o.formula)->required();
  b_def->add_option("--bound", o.bound, "Entity or bound name")->required();
  b_def->add_option("--var", o.variable);
  for (auto* sub : {b_eval, b_def}) {
    sub->add_option("--bind", o.binds, "NAME=ENTITY, e.g. A={a,b}");
    sub->add_option("--bindings", o.bindings_file, "JSON object of entities (file or inline)");
  }

  auto* topo = app.add_subcommand("topo", "Finite topological spaces")->require_subcommand(1);
  auto* t_check = topo->add_subcommand("check", "Separation properties; exit 1 when one is false");
  t_check->add_option("space", o.space, "Space JSON (file or inline)")->required();
  t_check->add_option("property", o.property)->check(CLI::IsMember(fintop::property_names()));
  auto* t_hull = topo->add_subcommand("hull", "Hull quotient of a family of functions");
  t_hull->add_option("space", o.space)->required();
  auto* fam = t_hull->add_option("--family", o.family, "Family JSON (file or inline)");
  auto* sc = t_hull->add_flag("--stone-cech", o.stone_cech);
  auto* hw = t_hull->add_flag("--hewitt", o.hewitt);
  auto* tr = t_hull->add_flag("--t0-reflect", o.t0_reflect);
  fam->excludes(sc, hw, tr);
  sc->excludes(hw, tr);
  hw->excludes(tr);
  auto* t_reflect = topo->add_subcommand("reflect", "T0 reflection");
  t_reflect->add_option("space", o.space)->required();
  auto* t_dot = topo->add_subcommand("dot", "Specialization order as Graphviz DOT");
  t_dot->add_option("space", o.space)->required();

  auto* audit_cmd = app.add_subcommand("audit", "Check the theorem suite on every small space");
  audit_cmd->add_option("--max-points", o.max_points)->check(CLI::PositiveNumber);
  audit_cmd->add_option("--seed", o.seed);
  audit_cmd->add_flag("--serial", o.serial, "Single-threaded reference run");

  Format format = Format::Json;
  auto emit_out = [&](const Json& j) { emit(j, format, out); };
  auto load_space = [&] { return io::space_from_json(json_argument(o.space)); };

  bind(h_eval, [&] {
    emit_out(io::hyper_report(hyper::parse(o.expr)));
    return kOk;
  });
  bind(h_st, [&] {
    auto a = hyper::parse(o.expr);
    emit_out(Json{{"canonical", a.to_string()}, {"st", hyper::st(a).to_string()}});
    return kOk;
  });
  bind(h_root, [&] {
    auto a = hyper::parse(o.expr);
    emit_out(Json{{"canonical", a.to_string()}, {"n", o.root_n}, {"root", hyper::nth_root(a, o.root_n).to_string()}});
    return kOk;
  });

  bind(g_cmp, [&] {
    auto a = germs::parse_germ(o.germ_a), b = germs::parse_germ(o.germ_b);
    auto v = o.relation == "eq" ? germs::ae_equal(a, b) : germs::ae_less(a, b);
    emit_out(Json{{"a", a.to_string()}, {"b", b.to_string()}, {"relation", o.relation}, {"verdict", verdict_text(v)}});
    return v == germs::AeVerdict::TrueAE ? kOk : kFalse;
  });
  bind(g_cls, [&] {
    auto a = germs::parse_germ(o.germ_a);
    Json j{{"germ", a.to_string()}};
    j["classification"] = io::to_json(germs::classify_germ(a));
    emit_out(j);
    return kOk;
  });
  bind(g_los, [&] {
    auto f = germs::parse_qf(o.formula);
    germs::Assignment assignment;
    Json assigned = Json::object();
    for (const auto& text : o.assignments) {
      auto [name, value] = split_assignment(text);
      auto g = germs::parse_germ(value);
      assigned[name] = g.to_string();
      assignment.insert_or_assign(name, std::move(g));
    }
    auto v = germs::los_check_qf(f, assignment);
    auto pointwise = germs::los_check_pointwise(f, assignment);
    emit_out(Json{{"assignment", assigned},
                  {"verdict", verdict_text(v)},
                  {"pointwise_verdict", verdict_text(pointwise)},
                  {"stabilization_bound", germs::stabilization_bound(f, assignment)},
                  {"agree", v == pointwise}});
    return v == germs::AeVerdict::TrueAE && v == pointwise ? kOk : kFalse;
  });

  bind(b_eval, [&] {
    auto b = read_bindings(o);
    auto f = bqf::parse(o.formula);
    bool value = bqf::eval(f, b);
    auto transfer = bqf::check_transfer_finite(f, b);
    emit_out(Json{{"formula", bqf::to_string(f)},
                  {"value", value},
                  {"star_value", transfer.star_value},
                  {"transfer_holds", transfer.standard_value == transfer.star_value}});
    return value ? kOk : kFalse;
  });
  bind(b_def, [&] {
    auto b = read_bindings(o);
    auto f = bqf::parse(o.formula);
    auto it = b.find(o.bound);
    bqf::Entity bound = it != b.end() ? it->second : bqf::parse_entity(o.bound);
    std::optional<std::string> var;
    if (!o.variable.empty()) var = o.variable;
    auto set = bqf::define_set(bound, f, b, var);
    emit_out(Json{{"formula", bqf::to_string(f)},
                  {"bound", bound.to_string()},
                  {"set", set.to_string()},
                  {"members", io::to_json(set)}});
    return kOk;
  });

  bind(t_check, [&] {
    auto s = load_space();
    std::vector<fintop::PropertyVerdict> verdicts;
    if (o.property.empty())
      verdicts = fintop::all_properties(s);
    else
      verdicts.push_back(fintop::check_property(s, o.property));
    Json list = Json::array();
    bool all = true;
    for (const auto& v : verdicts) {
      list.push_back(io::to_json(s, v));
      all = all && v.holds && v.consistent();
    }
    emit_out(Json{{"space", io::to_json(s)}, {"verdicts", list}, {"all_hold", all}});
    return all ? kOk : kFalse;
  });
  bind(t_hull, [&] {
    auto s = load_space();
    auto build = [&]() -> hull::Hull {
      if (o.stone_cech) return hull::stone_cech_finite(s);
      if (o.hewitt) return hull::hewitt_finite(s);
      if (o.t0_reflect) return hull::t0_reflection(s);
      if (!o.family.empty()) return hull::build_hull(s, io::family_from_json(json_argument(o.family), s));
      throw Error(ErrorKind::InvalidInput, "choose --family, --stone-cech, --hewitt or --t0-reflect");
    };
    auto h = build();
    emit_out(io::to_json(h));
    return h.ok() ? kOk : kFalse;
  });
  bind(t_reflect, [&] {
    auto h = hull::t0_reflection(load_space());
    emit_out(io::to_json(h));
    return h.ok() ? kOk : kFalse;
  });
  bind(t_dot, [&] {
    auto s = load_space();
    if (format == Format::Dot || format == Format::Table)
      out << fintop::to_dot(s);
    else
      emit_out(Json{{"dot", fintop::to_dot(s)}});
    return kOk;
  });

  bind(audit_cmd, [&] {
    auto r = o.serial ? audit::run_audit_serial(o.max_points, o.seed) : audit::run_audit(o.max_points, o.seed);
    emit_out(io::to_json(r));
    return r.passed() ? kOk : kFalse;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << '\n';
    return kInputError;
  }

  bool dot_command = t_dot->parsed();
  if (o.format.empty()) o.format = dot_command ? "dot" : "json";
  format = o.format == "table" ? Format::Table : o.format == "dot" ? Format::Dot : Format::Json;
  if (format == Format::Dot && !dot_command) {
    err << Json{{"error", "InvalidInput"}, {"message", "--format dot only applies to topo dot"}}.dump() << '\n';
    return kInputError;
  }
  try {
    return action();
  } catch (const Error& e) {
    err << io::to_json(e).dump() << '\n';
    return kInputError;
  }
}

}  // namespace nsa::cli
