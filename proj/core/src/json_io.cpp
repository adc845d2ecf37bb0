#include "precat/json_io.hpp"

#include "precat/compose.hpp"
#include "precat/oracle.hpp"

namespace precat {

json cell_to_json(const CellPtr& u) {
  json j;
  j["dim"] = u->dim;
  switch (u->kind) {
    case Cell::Kind::Point:
      j["body"] = {{"kind", "point"}, {"name", u->point}};
      break;
    case Cell::Kind::Identity:
      j["body"] = {{"kind", "id"}, {"base", cell_to_json(u->base)}};
      break;
    case Cell::Kind::Whiskers: {
      json entries = json::array();
      for (const Entry& e : u->entries) {
        json ctx = json::array();
        for (const WhiskerPair& p : e.ctx.pairs)
          ctx.push_back({{"l", cell_to_json(p.left)}, {"r", cell_to_json(p.right)}});
        entries.push_back({{"gen", e.gen}, {"context", ctx}});
      }
      j["body"] = {{"kind", "whiskers"}, {"entries", entries}};
      break;
    }
  }
  return j;
}

CellPtr cell_from_json(const json& j) {
  try {
    Dim dim = j.at("dim").get<Dim>();
    const json& body = j.at("body");
    std::string kind = body.at("kind").get<std::string>();
    if (kind == "point") {
      if (dim != 0) throw InputError("point cell with nonzero dimension");
      return make_point(body.at("name").get<std::string>());
    }
    if (kind == "id") {
      CellPtr base = cell_from_json(body.at("base"));
      if (base->dim != dim - 1) throw InputError("identity base dimension mismatch");
      return make_identity_cell(base);
    }
    if (kind == "whiskers") {
      std::vector<Entry> entries;
      for (const json& je : body.at("entries")) {
        Entry e;
        e.gen = je.at("gen").get<std::string>();
        for (const json& jp : je.at("context"))
          e.ctx.pairs.push_back(
              {cell_from_json(jp.at("l")), cell_from_json(jp.at("r"))});
        entries.push_back(std::move(e));
      }
      return make_whiskers(dim, std::move(entries));
    }
    throw InputError("unknown cell kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed cell JSON: ") + e.what());
  }
}

json expr_to_json(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      return {{"op", "gen"}, {"name", e->gen}};
    case Expr::Kind::Id:
      return {{"op", "id"}, {"arg", expr_to_json(e->a)}};
    case Expr::Kind::Comp:
      return {{"op", "comp"},
              {"dim", e->comp_dim},
              {"args", json::array({expr_to_json(e->a), expr_to_json(e->b)})}};
  }
  throw InternalError("expr_to_json: bad kind");
}

ExprPtr expr_from_json(const json& j) {
  try {
    std::string op = j.at("op").get<std::string>();
    if (op == "gen") return mk_gen(j.at("name").get<std::string>());
    if (op == "id") return mk_id(expr_from_json(j.at("arg")));
    if (op == "comp") {
      const json& args = j.at("args");
      if (!args.is_array() || args.size() != 2)
        throw InputError("comp expects two args");
      return mk_comp(j.at("dim").get<int>(), expr_from_json(args[0]),
                     expr_from_json(args[1]));
    }
    throw InputError("unknown expression op '" + op + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed expression JSON: ") + e.what());
  }
}

ExprPtr expr_from_json_or_text(const json& j) {
  if (j.is_string()) return parse_expr(j.get<std::string>());
  return expr_from_json(j);
}

json polygraph_to_json(const Polygraph& P) {
  json gens = json::array();
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k)) {
      json jg = {{"name", g.name}, {"dim", k}};
      if (k >= 1) {
        jg["src"] = print_expr(cell_to_expr(g.src));
        jg["tgt"] = print_expr(cell_to_expr(g.tgt));
      }
      gens.push_back(jg);
    }
  return {{"generators", gens}};
}

std::pair<Polygraph, ValidationReport> polygraph_from_json(const json& j) {
  Polygraph P;
  ValidationReport rep;
  std::vector<json> gens;
  try {
    for (const json& jg : j.at("generators")) gens.push_back(jg);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polygraph JSON: ") + e.what());
  }
  std::stable_sort(gens.begin(), gens.end(), [](const json& a, const json& b) {
    return a.value("dim", 0) < b.value("dim", 0);
  });
  for (const json& jg : gens) {
    std::string name;
    Dim dim = 0;
    try {
      name = jg.at("name").get<std::string>();
      dim = jg.at("dim").get<Dim>();
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed generator JSON: ") + e.what());
    }
    Generator g{name, dim, nullptr, nullptr};
    if (dim >= 1) {
      if (!jg.contains("src") || !jg.contains("tgt")) {
        rep.error("generator '" + name + "': missing src/tgt");
        continue;
      }
      Polygraph lower = truncate(P, dim - 1);
      auto load_boundary = [&](const char* field) -> CellPtr {
        ExprPtr e = expr_from_json_or_text(jg.at(field));
        CellPtr c = normalize_expr(lower, e);
        if (c->dim != dim - 1)
          throw DomainError(std::string(field) + " has dimension " +
                            std::to_string(c->dim) + ", expected " +
                            std::to_string(dim - 1));
        return c;
      };
      try {
        g.src = load_boundary("src");
        g.tgt = load_boundary("tgt");
        if (dim >= 2) {
          bool par = equal(boundary(lower, g.src, Sign::Src, dim - 2),
                           boundary(lower, g.tgt, Sign::Src, dim - 2)) &&
                     equal(boundary(lower, g.src, Sign::Tgt, dim - 2),
                           boundary(lower, g.tgt, Sign::Tgt, dim - 2));
          if (!par) {
            rep.error("generator '" + name + "': source and target are not parallel");
            continue;
          }
        }
      } catch (const DomainError& e) {
        rep.error("generator '" + name + "': " + e.what());
        continue;
      }
    }
    if (P.find(dim, name))
      rep.error("generator '" + name + "': duplicate name within dimension " +
                std::to_string(dim));
    else
      P.add(std::move(g));
  }
  auto post = validate_polygraph(P);
  rep.issues.insert(rep.issues.end(), post.issues.begin(), post.issues.end());
  return {P, rep};
}

json polymap_to_json(const PolyMap& F) {
  json map = json::object();
  for (size_t k = 0; k < F.assign.size(); ++k) {
    if (F.assign[k].empty()) continue;
    json dimmap = json::object();
    for (const auto& [from, to] : F.assign[k]) dimmap[from] = to;
    map[std::to_string(k)] = dimmap;
  }
  return {{"src", polygraph_to_json(F.src)},
          {"tgt", polygraph_to_json(F.tgt)},
          {"map", map}};
}

std::pair<PolyMap, ValidationReport> polymap_from_json(const json& j) {
  PolyMap F;
  ValidationReport rep;
  try {
    auto [src, srep] = polygraph_from_json(j.at("src"));
    auto [tgt, trep] = polygraph_from_json(j.at("tgt"));
    F.src = std::move(src);
    F.tgt = std::move(tgt);
    rep.issues.insert(rep.issues.end(), srep.issues.begin(), srep.issues.end());
    rep.issues.insert(rep.issues.end(), trep.issues.begin(), trep.issues.end());
    for (const auto& [dimstr, dimmap] : j.at("map").items()) {
      Dim k = std::stoi(dimstr);
      for (const auto& [from, to] : dimmap.items())
        F.set(k, from, to.get<std::string>());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed polygraph morphism JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed polygraph morphism JSON: bad dimension key");
  }
  auto post = check_polymap(F);
  rep.issues.insert(rep.issues.end(), post.issues.begin(), post.issues.end());
  return {F, rep};
}

json report_to_json(const ValidationReport& rep) {
  json errors = json::array(), warnings = json::array();
  for (const ValidationIssue& i : rep.issues) {
    if (i.severity == ValidationIssue::Severity::Error)
      errors.push_back(i.message);
    else
      warnings.push_back(i.message);
  }
  return {{"ok", rep.ok()}, {"errors", errors}, {"warnings", warnings}};
}

json lifting_to_json(const PolyplexLifting& L) {
  return {{"shape", polygraph_to_json(L.shape.pol)},
          {"cell", print_expr(cell_to_expr(L.shape.cell))},
          {"map", polymap_to_json(L.map)}};
}

json makkai_to_json(const MakkaiReport& rep) {
  json gens = json::array();
  for (const MakkaiGenResult& r : rep.gens)
    gens.push_back({{"dim", r.gen.first},
                    {"name", r.gen.second},
                    {"plex_weight", r.plex_weight},
                    {"lifting_exists", r.lifted},
                    {"element_morphisms", r.morphisms},
                    {"unique_morphism", r.unique_morphism_ok},
                    {"liftings_isomorphic", r.liftings_isomorphic}});
  return {{"pass", rep.pass()},
          {"generators", gens},
          {"generator_count", rep.generator_count},
          {"hom_total", rep.hom_total},
          {"concrete", rep.concrete},
          {"violations", rep.violations}};
}

}  // namespace precat
