#include "precat/presheaf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "precat/compose.hpp"
#include "precat/enumerate.hpp"
#include "precat/oracle.hpp"

namespace precat {

namespace {

std::string element_key(const Element& e) {
  std::ostringstream os;
  for (Dim k = 0; k <= e.pol.top_dim(); ++k)
    for (const Generator& g : e.pol.at_dim(k)) {
      os << k << ":" << g.name;
      if (k >= 1) os << "=" << show(g.src) << ">" << show(g.tgt);
      os << ";";
    }
  os << "|" << show(e.cell);
  return os.str();
}

int plex_weight_of(const PolyplexLifting& L) {
  return static_cast<int>(L.shape.pol.generator_count());
}

}  // namespace

Polygraph terminal_fragment(Dim dim_bound, int weight_bound) {
  if (dim_bound < 0 || weight_bound < 0)
    throw DomainError("terminal_fragment: bounds must be nonnegative");
  Polygraph T;
  T.add(Generator{"*", 0, nullptr, nullptr});
  for (Dim k = 1; k <= dim_bound; ++k) {
    // Pool bounds: paths at dimension 1 stay cheap for any budget; higher
    // pools grow quickly, so chain and slot bounds taper with dimension.
    EnumBounds bounds;
    if (k - 1 <= 1) {
      bounds.max_chain = std::max(1, weight_bound);
      bounds.max_slot_chain = 1;
    } else {
      bounds.max_chain = std::max(2, weight_bound / 3);
      bounds.max_slot_chain = std::max(1, weight_bound / 4);
    }
    std::vector<CellPtr> pool = enumerate_cells(T, k - 1, bounds);

    // Prune the pool: a boundary whose own plex is far above budget cannot
    // appear in a generator within budget (the gluing can only shrink the
    // boundary shape by the size of the lower gluing plexes).
    std::map<std::string, std::vector<CellPtr>> parallel;
    for (const CellPtr& c : pool) {
      PolyplexLifting L = polyplex_lift(Element{T, c});
      if (plex_weight_of(L) > 2 * weight_bound) continue;
      std::string key =
          k - 1 == 0 ? std::string("pt")
                     : show(boundary(T, c, Sign::Src, k - 2)) + ">" +
                           show(boundary(T, c, Sign::Tgt, k - 2));
      parallel[key].push_back(c);
    }

    std::vector<Generator> added;
    for (const auto& [key, bucket] : parallel) {
      for (const CellPtr& s : bucket)
        for (const CellPtr& t : bucket) {
          std::string name =
              "c" + std::to_string(k) + "(" + show(s) + "|" + show(t) + ")";
          Generator g{name, k, s, t};
          // Weight of the would-be plex: lift the generator over an
          // extension of the fragment.
          Polygraph ext = T;
          ext.add(g);
          PolyplexLifting L = polyplex_lift(Element{ext, generator_cell(ext, g)});
          if (plex_weight_of(L) <= weight_bound) added.push_back(g);
        }
    }
    std::sort(added.begin(), added.end(),
              [](const Generator& a, const Generator& b) { return a.name < b.name; });
    for (Generator& g : added) T.add(std::move(g));
    if (T.at_dim(k).empty()) break;
  }
  return T;
}

PlexTable enumerate_plexes(Dim dim_bound, int weight_bound) {
  Polygraph T = terminal_fragment(dim_bound, weight_bound);
  PlexTable table;
  std::map<std::string, bool> seen;
  for (Dim k = 0; k <= T.top_dim(); ++k)
    for (const Generator& g : T.at_dim(k)) {
      PolyplexLifting L = polyplex_lift(Element{T, generator_cell(T, g)});
      std::string key = element_key(L.shape);
      if (seen.count(key)) continue;
      seen[key] = true;
      table.plexes.push_back({L.shape, plex_weight_of(L)});
    }
  std::sort(table.plexes.begin(), table.plexes.end(),
            [](const Plex& a, const Plex& b) {
              Dim da = a.shape.cell->dim, db = b.shape.cell->dim;
              if (da != db) return da < db;
              if (a.weight != b.weight) return a.weight < b.weight;
              return element_key(a.shape) < element_key(b.shape);
            });
  return table;
}

std::vector<PolyMap> hom_polymaps(const Polygraph& A, const Polygraph& B) {
  std::vector<PolyMap> out;
  PolyMap partial;
  partial.src = A;
  partial.tgt = B;

  std::vector<GenRef> gens;
  for (Dim k = 0; k <= A.top_dim(); ++k)
    for (const Generator& g : A.at_dim(k)) gens.emplace_back(k, g.name);

  auto rec = [&](auto&& self, size_t at) -> void {
    if (at == gens.size()) {
      out.push_back(partial);
      return;
    }
    auto [k, name] = gens[at];
    const Generator& g = A.require(k, name);
    for (const Generator& h : B.at_dim(k)) {
      if (k >= 1) {
        if (!equal(apply_free(partial, g.src), h.src)) continue;
        if (!equal(apply_free(partial, g.tgt), h.tgt)) continue;
      }
      partial.set(k, name, h.name);
      self(self, at + 1);
      partial.assign[k].erase(name);
    }
  };
  rec(rec, 0);
  return out;
}

PresheafRealization realize_presheaf(const Polygraph& P, const PlexTable& plexes) {
  PresheafRealization re;
  for (const Plex& pl : plexes.plexes)
    re.table.push_back({pl, hom_polymaps(pl.shape.pol, P)});
  return re;
}

MakkaiReport makkai_check(const Polygraph& P) {
  MakkaiReport rep;
  rep.generator_count = P.generator_count();
  std::map<std::string, std::pair<int, size_t>> classes;  // key -> (weight, homs)

  for (Dim k = 0; k <= P.top_dim(); ++k) {
    for (const Generator& g : P.at_dim(k)) {
      MakkaiGenResult r;
      r.gen = {k, g.name};
      CellPtr cell = generator_cell(P, g);
      Element elem{P, cell};
      try {
        PolyplexLifting L = polyplex_lift(elem);
        r.lifted = true;
        r.plex_key = element_key(L.shape);
        r.plex_weight = plex_weight_of(L);

        std::vector<PolyMap> homs = hom_polymaps(L.shape.pol, P);
        size_t elem_homs = 0;
        for (const PolyMap& F : homs)
          if (equal(apply_free(F, L.shape.cell), cell)) ++elem_homs;
        r.morphisms = elem_homs;
        r.unique_morphism_ok = elem_homs == 1;
        if (!r.unique_morphism_ok)
          rep.violations.push_back("generator '" + g.name + "' has " +
                                   std::to_string(elem_homs) +
                                   " element morphisms from its plex");

        // A second lifting computed from a different formula for the same
        // cell; the two must be compatibly isomorphic.
        ExprPtr alt = cell_to_expr(cell);
        if (k >= 1)
          alt = mk_comp(k - 1, alt, mk_id(cell_to_expr(g.tgt)));
        PolyplexLifting L2 = polyplex_lift_expr(P, alt);
        PolyMap theta = element_iso(L2, L);
        r.liftings_isomorphic = is_iso(theta);
        if (!r.liftings_isomorphic)
          rep.violations.push_back("generator '" + g.name +
                                   "': liftings are not isomorphic");

        if (!classes.count(r.plex_key))
          classes[r.plex_key] = {r.plex_weight, homs.size()};
      } catch (const std::exception& e) {
        rep.violations.push_back("generator '" + g.name + "': " + e.what());
      }
      rep.gens.push_back(std::move(r));
    }
  }
  rep.hom_total = 0;
  for (const auto& [key, wc] : classes) rep.hom_total += wc.second;
  rep.concrete = rep.hom_total == rep.generator_count;
  if (!rep.concrete)
    rep.violations.push_back(
        "hom count " + std::to_string(rep.hom_total) +
        " does not match generator count " + std::to_string(rep.generator_count));
  return rep;
}

}  // namespace precat
