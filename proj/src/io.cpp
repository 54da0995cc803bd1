#include "nsa/io.hpp"

#include <algorithm>
#include <fstream>

namespace nsa::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("point labels must be strings or integers, got " + j.dump());
}

Json labels(const fintop::FinSpace& s, fintop::PointSet a) {
  Json out = Json::array();
  for (auto x : a.members()) out.push_back(s.label(x));
  return out;
}

Json checks_json(const std::vector<std::pair<std::string, bool>>& checks) {
  Json out = Json::object();
  for (const auto& [name, ok] : checks) out[name] = ok;
  return out;
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

fintop::FinSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    bad("a space needs \"points\" and \"opens\"");
  const auto& jp = j.at("points");
  const auto& jo = j.at("opens");
  if (!jp.is_array() || !jo.is_array()) bad("\"points\" and \"opens\" must be arrays");
  if (jp.size() > fintop::kMaxPoints)
    throw Error(ErrorKind::TooLarge, "at most " + std::to_string(fintop::kMaxPoints) + " points, got " +
                                         std::to_string(jp.size()));
  std::vector<std::string> points;
  for (const auto& p : jp) points.push_back(label_of(p));
  std::vector<fintop::PointSet> opens;
  for (const auto& o : jo) {
    if (!o.is_array()) bad("every open must be an array of point labels, got " + o.dump());
    fintop::PointSet g;
    for (const auto& p : o) {
      auto name = label_of(p);
      auto it = std::find(points.begin(), points.end(), name);
      if (it == points.end()) bad("open " + o.dump() + " names unknown point " + name);
      g.insert(static_cast<std::size_t>(it - points.begin()));
    }
    opens.push_back(g);
  }
  return fintop::FinSpace::validate(std::move(points), std::move(opens));
}

Json to_json(const fintop::FinSpace& s) {
  Json opens = Json::array();
  for (auto g : s.opens()) opens.push_back(labels(s, g));
  return Json{{"points", s.labels()}, {"opens", opens}};
}

Json to_json(const fintop::FinSpace& s, fintop::PointSet a) { return labels(s, a); }

hull::Family family_from_json(const Json& j, const fintop::FinSpace& s) {
  if (!j.is_object() || j.empty()) bad("a family is a nonempty object of functions");
  hull::Family family;
  for (const auto& [name, table] : j.items()) {
    if (!table.is_object()) bad("function " + name + " must map point labels to values");
    std::vector<Rational> values(s.size());
    std::vector<bool> seen(s.size(), false);
    for (const auto& [point, value] : table.items()) {
      auto x = s.index_of(point);
      if (value.is_number_integer())
        values[x] = Rational(std::to_string(value.get<long long>()));
      else if (value.is_string())
        values[x] = parse_rational(value.get<std::string>());
      else
        bad("value of " + name + " at " + point + " must be an integer or a rational string");
      seen[x] = true;
    }
    for (std::size_t x = 0; x < s.size(); ++x)
      if (!seen[x]) throw Error(ErrorKind::NotTotal, "function " + name + " has no value at " + s.label(x));
    family.add(name, std::move(values));
  }
  return family;
}

Json to_json(const fintop::FinSpace& s, const fintop::PropertyVerdict& v) {
  Json out{{"property", v.property}, {"holds", v.holds}, {"oracle", v.oracle}, {"oracle_agrees", v.consistent()}};
  out["forms"] = checks_json(v.forms);
  out["checks"] = checks_json(v.checks);
  if (v.witness) {
    Json w{{"points", Json::array()}, {"sets", Json::array()}, {"description", v.witness->description}};
    for (auto x : v.witness->points) w["points"].push_back(s.label(x));
    for (auto a : v.witness->sets) w["sets"].push_back(labels(s, a));
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const hull::Hull& h) {
  Json classes = Json::array();
  for (auto c : h.classes) classes.push_back(labels(h.source, c));
  Json q = Json::object();
  for (std::size_t x = 0; x < h.source.size(); ++x) q[h.source.label(x)] = h.quotient.label(h.q[x]);
  Json lifted = Json::object();
  for (std::size_t i = 0; i < h.family.size(); ++i) {
    Json table = Json::object();
    for (std::size_t c = 0; c < h.classes.size(); ++c) table[h.quotient.label(c)] = to_string(h.lifted[i][c]);
    lifted[h.family.names[i]] = table;
  }
  return Json{{"source", to_json(h.source)},
              {"classes", classes},
              {"points", h.classes.size()},
              {"map", q},
              {"quotient", to_json(h.quotient)},
              {"lifted", lifted},
              {"checks", checks_json(h.checks)},
              {"facts", checks_json(h.facts)},
              {"notes", h.notes},
              {"ok", h.ok()}};
}

Json to_json(const audit::AuditReport& r) {
  Json sizes = Json::object();
  for (std::size_t n = 0; n < r.spaces_by_size.size(); ++n) sizes[std::to_string(n + 1)] = r.spaces_by_size[n];
  Json theorems = Json::array();
  for (const auto& t : r.theorems) {
    Json cex = Json::array();
    for (auto i : t.counterexamples) cex.push_back(to_json(r.spaces[i]));
    theorems.push_back(Json{{"name", t.name},
                            {"statement", t.statement},
                            {"asserted", t.asserted},
                            {"checked", t.checked},
                            {"passed", t.checked - t.counterexamples.size()},
                            {"counterexamples", cex}});
  }
  return Json{{"max_points", r.max_points},
              {"spaces", r.spaces.size()},
              {"spaces_with_max_points", r.spaces_by_size.empty() ? 0 : r.spaces_by_size.back()},
              {"spaces_by_size", sizes},
              {"theorems", theorems},
              {"passed", r.passed()}};
}

Json to_json(const hyper::Classification& c) {
  Json out{{"kind", hyper::to_string(c.kind)}};
  out["ord"] = c.ord ? Json(to_string(*c.ord)) : Json(nullptr);
  return out;
}

Json hyper_report(const hyper::Hyperreal& a) {
  Json out{{"canonical", a.to_string()}, {"classification", to_json(hyper::classify(a))}, {"st", hyper::st(a).to_string()}};
  auto sp = hyper::st(a);
  if (sp.kind == hyper::StandardPart::Kind::Real) {
    auto d = hyper::decompose(a);
    out["decomposition"] = Json{{"real", to_string(d.real_part)}, {"infinitesimal", d.infinitesimal_part.to_string()}};
  } else {
    out["decomposition"] = nullptr;
  }
  return out;
}

Json to_json(const germs::GermClassification& c) {
  Json out = Json::object();
  out["definite"] = c.definite ? to_json(*c.definite) : Json(nullptr);
  out["standard_part"] = c.standard_part ? Json(to_string(*c.standard_part)) : Json(nullptr);
  Json residues = Json::array();
  for (const auto& r : c.per_residue) residues.push_back(to_json(r));
  out["per_residue"] = residues;
  return out;
}

Json to_json(const bqf::Entity& e) {
  if (e.is_atom()) return e.name();
  Json out = Json::array();
  for (const auto& m : e.members()) out.push_back(to_json(m));
  return out;
}

bqf::Entity entity_from_json(const Json& j) {
  if (j.is_string()) return bqf::Entity::atom(j.get<std::string>());
  if (!j.is_array()) bad("an entity is an atom name or an array of entities, got " + j.dump());
  std::vector<bqf::Entity> members;
  for (const auto& m : j) members.push_back(entity_from_json(m));
  return bqf::Entity::set(std::move(members));
}

Json to_json(const Error& e) { return Json{{"error", to_string(e.kind())}, {"message", e.what()}}; }

}  // namespace nsa::io
