#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "precat/compose.hpp"
#include "precat/conduche.hpp"
#include "precat/json_io.hpp"
#include "precat/oracle.hpp"
#include "precat/polyplex.hpp"
#include "precat/presheaf.hpp"
#include "precat/support.hpp"

namespace precat::cli {

namespace {

Dim max_dim_bound() {
  if (const char* env = std::getenv("PRECAT_MAX_DIM")) {
    try {
      return std::max(0, std::stoi(env));
    } catch (...) {
      throw InputError("PRECAT_MAX_DIM is not a number");
    }
  }
  return 6;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return j;
}

Polygraph load_polygraph(const std::string& path) {
  auto [P, rep] = polygraph_from_json(read_json_file(path));
  if (!rep.ok()) {
    std::ostringstream os;
    for (const auto& i : rep.issues)
      if (i.severity == ValidationIssue::Severity::Error) os << i.message << "; ";
    throw DomainError("invalid polygraph '" + path + "': " + os.str());
  }
  if (P.top_dim() > max_dim_bound())
    throw InputError("polygraph exceeds PRECAT_MAX_DIM = " +
                     std::to_string(max_dim_bound()));
  return P;
}

PolyMap load_polymap(const std::string& path) {
  auto [F, rep] = polymap_from_json(read_json_file(path));
  if (!rep.ok()) {
    std::ostringstream os;
    for (const auto& i : rep.issues)
      if (i.severity == ValidationIssue::Severity::Error) os << i.message << "; ";
    throw DomainError("invalid polygraph morphism '" + path + "': " + os.str());
  }
  if (F.src.top_dim() > max_dim_bound() || F.tgt.top_dim() > max_dim_bound())
    throw InputError("polygraph morphism exceeds PRECAT_MAX_DIM = " +
                     std::to_string(max_dim_bound()));
  return F;
}

CellPtr load_cell(const Polygraph& P, const std::string& text) {
  return normalize_expr(P, parse_expr(text));
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

Sign parse_sign(const std::string& s) {
  if (s == "-" || s == "src") return Sign::Src;
  if (s == "+" || s == "tgt") return Sign::Tgt;
  throw InputError("sign must be '-' or '+'");
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"free precategory toolkit"};
  app.require_subcommand(1);

  std::string pol_path, map_path, expr_text, expr2_text, expr3_text, sign_text;
  int comp_index = 0, bnd_dim = 0;
  Dim plex_dim = 2;
  int plex_weight = 5;

  auto* c_validate = app.add_subcommand("validate", "validate a polygraph file");
  c_validate->add_option("polygraph", pol_path)->required();

  auto* c_normalize =
      app.add_subcommand("normalize", "normal form of an expression");
  c_normalize->add_option("polygraph", pol_path)->required();
  c_normalize->add_option("expr", expr_text)->required();

  auto* c_compose = app.add_subcommand("compose", "compose two cells");
  c_compose->add_option("polygraph", pol_path)->required();
  c_compose->add_option("u", expr_text)->required();
  c_compose->add_option("i", comp_index)->required();
  c_compose->add_option("v", expr2_text)->required();

  auto* c_boundary = app.add_subcommand("boundary", "iterated source or target");
  c_boundary->add_option("polygraph", pol_path)->required();
  c_boundary->add_option("expr", expr_text)->required();
  c_boundary->add_option("sign", sign_text)->required();
  c_boundary->add_option("dim", bnd_dim)->required();

  auto* c_support = app.add_subcommand("support", "support of a cell");
  c_support->add_option("polygraph", pol_path)->required();
  c_support->add_option("expr", expr_text)->required();

  auto* c_restrict =
      app.add_subcommand("restrict", "restriction to the support of a cell");
  c_restrict->add_option("polygraph", pol_path)->required();
  c_restrict->add_option("expr", expr_text)->required();

  auto* c_conduche =
      app.add_subcommand("conduche", "factorize a cell along a free functor");
  c_conduche->add_option("polymap", map_path)->required();
  c_conduche->add_option("u", expr_text)->required();
  c_conduche->add_option("i", comp_index)->required();
  c_conduche->add_option("v1", expr2_text)->required();
  c_conduche->add_option("v2", expr3_text)->required();

  auto* c_polyplex =
      app.add_subcommand("polyplex", "universal shape of a cell");
  c_polyplex->add_option("polygraph", pol_path)->required();
  c_polyplex->add_option("expr", expr_text)->required();

  auto* c_measure = app.add_subcommand("measure", "polyplex measure of a cell");
  c_measure->add_option("polygraph", pol_path)->required();
  c_measure->add_option("expr", expr_text)->required();

  auto* c_plexes = app.add_subcommand("plexes", "enumerate plexes");
  c_plexes->add_option("--dim", plex_dim);
  c_plexes->add_option("--weight", plex_weight);

  auto* c_presheaf =
      app.add_subcommand("presheaf", "hom-sets from plexes into a polygraph");
  c_presheaf->add_option("polygraph", pol_path)->required();
  c_presheaf->add_option("--dim", plex_dim);
  c_presheaf->add_option("--weight", plex_weight);

  auto* c_makkai = app.add_subcommand("makkai", "presheaf-category conditions");
  c_makkai->add_option("--input", pol_path)->required();

  auto* c_dot = app.add_subcommand("dot", "DOT rendering of the 1-skeleton");
  c_dot->add_option("polygraph", pol_path)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    out << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 2;
  }

  try {
    if (*c_validate) {
      auto [P, rep] = polygraph_from_json(read_json_file(pol_path));
      emit(out, report_to_json(rep));
      return 0;
    }
    if (*c_normalize) {
      Polygraph P = load_polygraph(pol_path);
      emit(out, cell_to_json(load_cell(P, expr_text)));
      return 0;
    }
    if (*c_compose) {
      Polygraph P = load_polygraph(pol_path);
      CellPtr u = load_cell(P, expr_text);
      CellPtr v = load_cell(P, expr2_text);
      emit(out, cell_to_json(compose(P, u, comp_index, v)));
      return 0;
    }
    if (*c_boundary) {
      Polygraph P = load_polygraph(pol_path);
      emit(out, cell_to_json(boundary(P, load_cell(P, expr_text),
                                      parse_sign(sign_text), bnd_dim)));
      return 0;
    }
    if (*c_support) {
      Polygraph P = load_polygraph(pol_path);
      json items = json::array();
      for (const auto& [k, name] : supp(P, load_cell(P, expr_text)))
        items.push_back({{"dim", k}, {"name", name}});
      emit(out, json{{"support", items}});
      return 0;
    }
    if (*c_restrict) {
      Polygraph P = load_polygraph(pol_path);
      Restriction r = restrict_to_support(P, load_cell(P, expr_text));
      emit(out, json{{"polygraph", polygraph_to_json(r.pol)},
                     {"inclusion", polymap_to_json(r.inclusion)},
                     {"cell", print_expr(cell_to_expr(r.cell))}});
      return 0;
    }
    if (*c_conduche) {
      PolyMap F = load_polymap(map_path);
      CellPtr u = load_cell(F.src, expr_text);
      CellPtr v1 = load_cell(F.tgt, expr2_text);
      CellPtr v2 = load_cell(F.tgt, expr3_text);
      auto [u1, u2] = conduche_factorize(F, u, v1, v2, comp_index);
      emit(out, json{{"u1", cell_to_json(u1)}, {"u2", cell_to_json(u2)}});
      return 0;
    }
    if (*c_polyplex) {
      Polygraph P = load_polygraph(pol_path);
      PolyplexLifting L = polyplex_lift_expr(P, parse_expr(expr_text));
      emit(out, lifting_to_json(L));
      return 0;
    }
    if (*c_measure) {
      Polygraph P = load_polygraph(pol_path);
      auto counts = polyplex_measure(Element{P, load_cell(P, expr_text)});
      json m = json::object();
      for (const auto& [ref, count] : counts) m[ref.second] = count;
      emit(out, json{{"measure", m}});
      return 0;
    }
    if (*c_plexes) {
      if (plex_dim > max_dim_bound())
        throw InputError("--dim exceeds PRECAT_MAX_DIM");
      PlexTable table = enumerate_plexes(plex_dim, plex_weight);
      json arr = json::array();
      for (const Plex& pl : table.plexes) {
        if (pl.shape.cell->dim != plex_dim) continue;
        arr.push_back({{"plex", polygraph_to_json(pl.shape.pol)},
                       {"cell", print_expr(cell_to_expr(pl.shape.cell))},
                       {"weight", pl.weight}});
      }
      emit(out, arr);
      return 0;
    }
    if (*c_presheaf) {
      Polygraph P = load_polygraph(pol_path);
      PlexTable table = enumerate_plexes(plex_dim, plex_weight);
      PresheafRealization re = realize_presheaf(P, table);
      json arr = json::array();
      for (const PlexHoms& ph : re.table) {
        json homs = json::array();
        for (const PolyMap& F : ph.homs) {
          json m = json::object();
          for (size_t k = 0; k < F.assign.size(); ++k) {
            if (F.assign[k].empty()) continue;
            json dimmap = json::object();
            for (const auto& [from, to] : F.assign[k]) dimmap[from] = to;
            m[std::to_string(k)] = dimmap;
          }
          homs.push_back(m);
        }
        arr.push_back({{"plex", polygraph_to_json(ph.plex.shape.pol)},
                       {"cell", print_expr(cell_to_expr(ph.plex.shape.cell))},
                       {"count", ph.homs.size()},
                       {"homs", homs}});
      }
      emit(out, arr);
      return 0;
    }
    if (*c_makkai) {
      Polygraph P = load_polygraph(pol_path);
      emit(out, makkai_to_json(makkai_check(P)));
      return 0;
    }
    if (*c_dot) {
      Polygraph P = load_polygraph(pol_path);
      out << "digraph polygraph {\n";
      for (const Generator& g : P.at_dim(0))
        out << "  \"" << dot_escape(g.name) << "\";\n";
      for (const Generator& g : P.at_dim(1))
        out << "  \"" << dot_escape(show(g.src)) << "\" -> \""
            << dot_escape(show(g.tgt)) << "\" [label=\"" << dot_escape(g.name)
            << "\"];\n";
      out << "}\n";
      return 0;
    }
  } catch (const InputError& e) {
    out << json{{"error", {{"kind", "input"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 2;
  } catch (const DomainError& e) {
    out << json{{"error", {{"kind", "domain"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    out << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2)
        << "\n";
    return 1;
  }
  return 2;
}

}  // namespace precat::cli
