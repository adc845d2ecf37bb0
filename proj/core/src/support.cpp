#include "precat/support.hpp"

#include "precat/compose.hpp"

namespace precat {

namespace {

void collect(const Polygraph& P, const CellPtr& u, std::set<GenRef>& out);

void collect_gen(const Polygraph& P, Dim k, const std::string& name,
                 std::set<GenRef>& out) {
  if (!out.insert({k, name}).second) return;
  const Generator& g = P.require(k, name);
  if (k >= 1) {
    collect(P, g.src, out);
    collect(P, g.tgt, out);
  }
}

void collect(const Polygraph& P, const CellPtr& u, std::set<GenRef>& out) {
  switch (u->kind) {
    case Cell::Kind::Point:
      collect_gen(P, 0, u->point, out);
      return;
    case Cell::Kind::Identity:
      collect(P, u->base, out);
      return;
    case Cell::Kind::Whiskers:
      for (const Entry& e : u->entries) {
        collect_gen(P, u->dim, e.gen, out);
        for (const WhiskerPair& p : e.ctx.pairs) {
          collect(P, p.left, out);
          collect(P, p.right, out);
        }
      }
      return;
  }
}

}  // namespace

std::set<GenRef> supp_set(const Polygraph& P, const CellPtr& u) {
  std::set<GenRef> out;
  collect(P, u, out);
  return out;
}

std::vector<GenRef> supp(const Polygraph& P, const CellPtr& u) {
  auto s = supp_set(P, u);
  return {s.begin(), s.end()};
}

Restriction restrict_to_support(const Polygraph& P, const CellPtr& u) {
  std::set<GenRef> s = supp_set(P, u);
  Restriction res;
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k))
      if (s.count({k, g.name})) res.pol.add(g);
  res.inclusion.src = res.pol;
  res.inclusion.tgt = P;
  for (const auto& [k, name] : s) res.inclusion.set(k, name, name);
  res.cell = u;
  return res;
}

bool is_principal(const Element& e) {
  std::set<GenRef> s = supp_set(e.pol, e.cell);
  auto all = e.pol.all_generators();
  if (s.size() != all.size()) return false;
  for (const GenRef& g : all)
    if (!s.count(g)) return false;
  return true;
}

namespace {

struct Matcher {
  const Polygraph& P;
  const Polygraph& Q;
  PolyMap F;

  bool assign(Dim k, const std::string& from, const std::string& to) {
    if (F.has_image(k, from)) return F.image(k, from) == to;
    F.set(k, from, to);
    const Generator& g = P.require(k, from);
    const Generator* h = Q.find(k, to);
    if (!h) return false;
    if (k >= 1) {
      if (!match(g.src, h->src)) return false;
      if (!match(g.tgt, h->tgt)) return false;
    }
    return true;
  }

  bool match(const CellPtr& u, const CellPtr& v) {
    if (u->dim != v->dim || u->kind != v->kind) return false;
    switch (u->kind) {
      case Cell::Kind::Point:
        return assign(0, u->point, v->point);
      case Cell::Kind::Identity:
        return match(u->base, v->base);
      case Cell::Kind::Whiskers: {
        if (u->entries.size() != v->entries.size()) return false;
        for (size_t t = 0; t < u->entries.size(); ++t) {
          if (!assign(u->dim, u->entries[t].gen, v->entries[t].gen)) return false;
          const Context& cu = u->entries[t].ctx;
          const Context& cv = v->entries[t].ctx;
          for (size_t j = 0; j < cu.pairs.size(); ++j) {
            if (!match(cu.pairs[j].left, cv.pairs[j].left)) return false;
            if (!match(cu.pairs[j].right, cv.pairs[j].right)) return false;
          }
        }
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<PolyMap> unique_morphism(const Element& src, const Element& tgt) {
  if (!is_principal(src))
    throw DomainError("unique_morphism: source element is not principal");
  Matcher m{src.pol, tgt.pol, {}};
  m.F.src = src.pol;
  m.F.tgt = tgt.pol;
  if (!m.match(src.cell, tgt.cell)) return std::nullopt;
  // Principality makes the traversal total; still reject anything that does
  // not assemble into a valid morphism mapping the distinguished cell.
  if (!check_polymap(m.F).ok()) return std::nullopt;
  if (!equal(apply_free(m.F, src.cell), tgt.cell)) return std::nullopt;
  return m.F;
}

}  // namespace precat
