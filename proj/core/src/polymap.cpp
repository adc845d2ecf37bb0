#include "precat/polymap.hpp"

#include "precat/compose.hpp"

namespace precat {

const std::string& PolyMap::image(Dim k, const std::string& name) const {
  if (k >= 0 && static_cast<size_t>(k) < assign.size()) {
    auto it = assign[k].find(name);
    if (it != assign[k].end()) return it->second;
  }
  throw DomainError("polygraph morphism has no image for '" + name +
                    "' at dimension " + std::to_string(k));
}

bool PolyMap::has_image(Dim k, const std::string& name) const {
  return k >= 0 && static_cast<size_t>(k) < assign.size() &&
         assign[k].count(name) > 0;
}

void PolyMap::set(Dim k, const std::string& from, std::string to) {
  if (static_cast<size_t>(k) >= assign.size()) assign.resize(k + 1);
  assign[k][from] = std::move(to);
}

PolyMap identity_polymap(const Polygraph& P) {
  PolyMap F;
  F.src = P;
  F.tgt = P;
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k)) F.set(k, g.name, g.name);
  return F;
}

CellPtr apply_free(const PolyMap& F, const CellPtr& u) {
  switch (u->kind) {
    case Cell::Kind::Point:
      return make_point(F.image(0, u->point));
    case Cell::Kind::Identity:
      return make_identity_cell(apply_free(F, u->base));
    case Cell::Kind::Whiskers: {
      std::vector<Entry> entries;
      entries.reserve(u->entries.size());
      for (const Entry& e : u->entries) {
        Context ctx;
        ctx.pairs.reserve(e.ctx.pairs.size());
        for (const WhiskerPair& p : e.ctx.pairs)
          ctx.pairs.push_back({apply_free(F, p.left), apply_free(F, p.right)});
        entries.push_back({std::move(ctx), F.image(u->dim, e.gen)});
      }
      return make_whiskers(u->dim, std::move(entries));
    }
  }
  throw InternalError("apply_free: bad kind");
}

ValidationReport check_polymap(const PolyMap& F) {
  ValidationReport rep;
  for (Dim k = 0; k <= F.src.top_dim(); ++k) {
    for (const Generator& g : F.src.at_dim(k)) {
      std::string where = "generator '" + g.name + "' (dim " + std::to_string(k) + ")";
      if (!F.has_image(k, g.name)) {
        rep.error(where + ": no assigned image");
        continue;
      }
      const std::string& img = F.image(k, g.name);
      const Generator* h = F.tgt.find(k, img);
      if (!h) {
        rep.error(where + ": dangling assignment to '" + img + "'");
        continue;
      }
      if (k == 0) continue;
      try {
        if (!equal(apply_free(F, g.src), h->src))
          rep.error(where + ": source is not preserved");
        if (!equal(apply_free(F, g.tgt), h->tgt))
          rep.error(where + ": target is not preserved");
      } catch (const DomainError& e) {
        rep.error(where + ": " + e.what());
      }
    }
    // Assignments of names that do not exist in the source are suspicious.
    if (static_cast<size_t>(k) < F.assign.size())
      for (const auto& [from, to] : F.assign[k])
        if (!F.src.find(k, from))
          rep.warning("assignment for unknown generator '" + from +
                      "' at dimension " + std::to_string(k));
  }
  return rep;
}

PolyMap compose_polymap(const PolyMap& F, const PolyMap& G) {
  if (!(F.tgt == G.src))
    throw DomainError("compose_polymap: middle polygraphs differ");
  PolyMap H;
  H.src = F.src;
  H.tgt = G.tgt;
  for (Dim k = 0; k <= F.src.top_dim(); ++k)
    for (const Generator& g : F.src.at_dim(k))
      H.set(k, g.name, G.image(k, F.image(k, g.name)));
  return H;
}

std::optional<MonoWitness> mono_witness(const PolyMap& F) {
  for (Dim k = 0; k <= F.src.top_dim(); ++k) {
    std::map<std::string, std::string> seen;  // image -> preimage
    for (const Generator& g : F.src.at_dim(k)) {
      const std::string& img = F.image(k, g.name);
      auto [it, fresh] = seen.emplace(img, g.name);
      if (!fresh) return MonoWitness{k, it->second, g.name};
    }
  }
  return std::nullopt;
}

bool is_mono(const PolyMap& F) { return !mono_witness(F).has_value(); }

bool is_iso(const PolyMap& F) {
  if (mono_witness(F)) return false;
  for (Dim k = 0; k <= std::max(F.src.top_dim(), F.tgt.top_dim()); ++k)
    if (F.src.at_dim(k).size() != F.tgt.at_dim(k).size()) return false;
  return true;
}

PolyMap inverse(const PolyMap& F) {
  if (!is_iso(F)) throw DomainError("inverse: not an isomorphism");
  PolyMap G;
  G.src = F.tgt;
  G.tgt = F.src;
  for (Dim k = 0; k <= F.src.top_dim(); ++k)
    for (const Generator& g : F.src.at_dim(k))
      G.set(k, F.image(k, g.name), g.name);
  return G;
}

}  // namespace precat
