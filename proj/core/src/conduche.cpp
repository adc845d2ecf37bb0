#include "precat/conduche.hpp"

#include <optional>

#include "precat/compose.hpp"

namespace precat {

namespace {

// Factor u as u1 *_i u2 where u1 is determined by having image v1 under F
// (dim v1 = i+1). Walks the proof's case analysis: chains split by entry
// count, identities lift through their base, whisker entries factor slotwise
// with a shared left part. Returns nothing when the shape does not allow it.
struct LeftFactorer {
  const PolyMap& F;
  Dim i;
  const CellPtr& v1;
  size_t n1;  // entry count of v1 (0 for an identity)

  std::optional<CellPtr> common;

  bool merge(const CellPtr& c) {
    if (!common) {
      common = c;
      return true;
    }
    return equal(*common, c);
  }

  std::optional<std::pair<CellPtr, CellPtr>> run(const CellPtr& u) {
    auto rest = descend(u);
    if (!rest || !common) return std::nullopt;
    return std::make_pair(*common, *rest);
  }

  std::optional<CellPtr> descend(const CellPtr& u) {
    if (u->dim == i + 1) {
      if (n1 == 0) {
        if (!merge(make_identity_cell(boundary(F.src, u, Sign::Src, i))))
          return std::nullopt;
        return u;
      }
      if (!u->is_whiskers() || u->entries.size() < n1) return std::nullopt;
      std::vector<Entry> head(u->entries.begin(), u->entries.begin() + n1);
      CellPtr u1 = make_whiskers(i + 1, std::move(head));
      if (!merge(u1)) return std::nullopt;
      if (u->entries.size() == n1)
        return make_identity_cell(boundary(F.src, u, Sign::Tgt, i));
      std::vector<Entry> tail(u->entries.begin() + n1, u->entries.end());
      return make_whiskers(i + 1, std::move(tail));
    }
    if (u->is_identity()) {
      auto rest = descend(u->base);
      if (!rest) return std::nullopt;
      return make_identity_cell(*rest);
    }
    std::vector<Entry> entries;
    entries.reserve(u->entries.size());
    for (const Entry& e : u->entries) {
      Context ctx = e.ctx;
      auto l = descend(ctx.pairs[i].left);
      if (!l) return std::nullopt;
      ctx.pairs[i].left = *l;
      for (size_t j = i + 1; j < ctx.pairs.size(); ++j) {
        auto lj = descend(ctx.pairs[j].left);
        if (!lj) return std::nullopt;
        ctx.pairs[j].left = *lj;
        auto rj = descend(ctx.pairs[j].right);
        if (!rj) return std::nullopt;
        ctx.pairs[j].right = *rj;
      }
      entries.push_back({std::move(ctx), e.gen});
    }
    return make_whiskers(u->dim, std::move(entries));
  }
};

// Mirror image: u2 is determined by having image v2 (dim v2 = i+1); the
// shared part is pulled off the right.
struct RightFactorer {
  const PolyMap& F;
  Dim i;
  const CellPtr& v2;
  size_t n2;

  std::optional<CellPtr> common;

  bool merge(const CellPtr& c) {
    if (!common) {
      common = c;
      return true;
    }
    return equal(*common, c);
  }

  std::optional<std::pair<CellPtr, CellPtr>> run(const CellPtr& u) {
    auto rest = descend(u);
    if (!rest || !common) return std::nullopt;
    return std::make_pair(*rest, *common);
  }

  std::optional<CellPtr> descend(const CellPtr& u) {
    if (u->dim == i + 1) {
      if (n2 == 0) {
        if (!merge(make_identity_cell(boundary(F.src, u, Sign::Tgt, i))))
          return std::nullopt;
        return u;
      }
      if (!u->is_whiskers() || u->entries.size() < n2) return std::nullopt;
      size_t cut = u->entries.size() - n2;
      std::vector<Entry> tail(u->entries.begin() + cut, u->entries.end());
      CellPtr u2 = make_whiskers(i + 1, std::move(tail));
      if (!merge(u2)) return std::nullopt;
      if (cut == 0) return make_identity_cell(boundary(F.src, u, Sign::Src, i));
      std::vector<Entry> head(u->entries.begin(), u->entries.begin() + cut);
      return make_whiskers(i + 1, std::move(head));
    }
    if (u->is_identity()) {
      auto rest = descend(u->base);
      if (!rest) return std::nullopt;
      return make_identity_cell(*rest);
    }
    std::vector<Entry> entries;
    entries.reserve(u->entries.size());
    for (const Entry& e : u->entries) {
      Context ctx = e.ctx;
      auto r = descend(ctx.pairs[i].right);
      if (!r) return std::nullopt;
      ctx.pairs[i].right = *r;
      for (size_t j = i + 1; j < ctx.pairs.size(); ++j) {
        auto lj = descend(ctx.pairs[j].left);
        if (!lj) return std::nullopt;
        ctx.pairs[j].left = *lj;
        auto rj = descend(ctx.pairs[j].right);
        if (!rj) return std::nullopt;
        ctx.pairs[j].right = *rj;
      }
      entries.push_back({std::move(ctx), e.gen});
    }
    return make_whiskers(u->dim, std::move(entries));
  }
};

size_t chain_length(const CellPtr& u) {
  return u->is_whiskers() ? u->entries.size() : 0;
}

[[noreturn]] void bad_input(const std::string& what) {
  throw DomainError("conduche_factorize: " + what);
}

}  // namespace

std::pair<CellPtr, CellPtr> conduche_factorize(const PolyMap& F, const CellPtr& u,
                                               const CellPtr& v1, const CellPtr& v2,
                                               Dim i) {
  Dim d1 = v1->dim, d2 = v2->dim;
  if (i != std::min(d1, d2) - 1) bad_input("illegal composition index");
  CellPtr w = apply_free(F, u);
  CellPtr expected = compose(F.tgt, v1, i, v2);
  if (!equal(w, expected))
    bad_input("image of the cell is not the given composite");

  std::optional<std::pair<CellPtr, CellPtr>> result;
  if (d1 == d2) {
    if (v1->is_identity()) {
      result = {make_identity_cell(boundary(F.src, u, Sign::Src, i)), u};
    } else if (v2->is_identity()) {
      result = {u, make_identity_cell(boundary(F.src, u, Sign::Tgt, i))};
    } else {
      size_t n1 = v1->entries.size(), n2 = v2->entries.size();
      if (!u->is_whiskers() || u->entries.size() != n1 + n2)
        bad_input("chain lengths do not match");
      std::vector<Entry> head(u->entries.begin(), u->entries.begin() + n1);
      std::vector<Entry> tail(u->entries.begin() + n1, u->entries.end());
      result = {make_whiskers(u->dim, std::move(head)),
                make_whiskers(u->dim, std::move(tail))};
    }
  } else if (d1 < d2) {
    LeftFactorer lf{F, i, v1, chain_length(v1), std::nullopt};
    result = lf.run(u);
  } else {
    RightFactorer rf{F, i, v2, chain_length(v2), std::nullopt};
    result = rf.run(u);
  }
  if (!result) bad_input("cell does not factor along the given splitting");

  const auto& [u1, u2] = *result;
  if (!equal(apply_free(F, u1), v1) || !equal(apply_free(F, u2), v2))
    bad_input("factor images do not match");
  if (!equal(compose(F.src, u1, i, u2), u))
    throw InternalError("conduche_factorize: factors do not recompose");
  return *result;
}

CellPtr lift_identity(const PolyMap& F, const CellPtr& u, const CellPtr& v) {
  if (!equal(apply_free(F, u), make_identity_cell(v)))
    throw DomainError("lift_identity: image of the cell is not the given identity");
  if (!u->is_identity())
    throw DomainError("lift_identity: cell is not an identity");
  if (!equal(apply_free(F, u->base), v))
    throw InternalError("lift_identity: base image mismatch");
  return u->base;
}

std::vector<std::pair<CellPtr, CellPtr>> enumerate_splittings(const Polygraph& P,
                                                              const CellPtr& w,
                                                              Dim i) {
  Dim d = w->dim;
  if (i < 0 || i > d - 1)
    throw DomainError("enumerate_splittings: index out of range");
  std::vector<std::pair<CellPtr, CellPtr>> out;
  if (i == d - 1) {
    if (w->is_identity()) {
      out.emplace_back(w, w);
      return out;
    }
    size_t k = w->entries.size();
    for (size_t t = 0; t <= k; ++t) {
      CellPtr v1 =
          t == 0 ? make_identity_cell(boundary(P, w, Sign::Src, i))
                 : make_whiskers(d, std::vector<Entry>(w->entries.begin(),
                                                       w->entries.begin() + t));
      CellPtr v2 =
          t == k ? make_identity_cell(boundary(P, w, Sign::Tgt, i))
                 : make_whiskers(d, std::vector<Entry>(w->entries.begin() + t,
                                                       w->entries.end()));
      out.emplace_back(v1, v2);
    }
    return out;
  }
  if (w->is_identity()) {
    for (const auto& [a, b] : enumerate_splittings(P, w->base, i)) {
      if (a->dim == i + 1) out.emplace_back(a, make_identity_cell(b));
      if (b->dim == i + 1) out.emplace_back(make_identity_cell(a), b);
    }
    return out;
  }

  PolyMap id = identity_polymap(P);
  auto try_left = [&](const CellPtr& cand) {
    LeftFactorer lf{id, i, cand, chain_length(cand), std::nullopt};
    if (auto r = lf.run(w); r && equal(r->first, cand)) out.push_back(*r);
  };
  auto try_right = [&](const CellPtr& cand) {
    RightFactorer rf{id, i, cand, chain_length(cand), std::nullopt};
    if (auto r = rf.run(w); r && equal(r->second, cand)) out.push_back(*r);
  };

  const CellPtr& lslot = w->entries.front().ctx.pairs[i].left;
  try_left(make_identity_cell(boundary(P, lslot, Sign::Src, i)));
  if (lslot->is_whiskers())
    for (size_t t = 1; t <= lslot->entries.size(); ++t)
      try_left(make_whiskers(i + 1, std::vector<Entry>(lslot->entries.begin(),
                                                       lslot->entries.begin() + t)));

  const CellPtr& rslot = w->entries.back().ctx.pairs[i].right;
  try_right(make_identity_cell(boundary(P, rslot, Sign::Tgt, i)));
  if (rslot->is_whiskers())
    for (size_t t = 1; t <= rslot->entries.size(); ++t)
      try_right(make_whiskers(
          i + 1, std::vector<Entry>(rslot->entries.end() - t, rslot->entries.end())));
  return out;
}

}  // namespace precat
