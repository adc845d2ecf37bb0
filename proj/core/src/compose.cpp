#include "precat/compose.hpp"

#include <algorithm>

namespace precat {

namespace {

CellPtr compose_u(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v);

CellPtr eval_ctx_u(const Polygraph& P, const Context& E, CellPtr u) {
  for (size_t j = 1; j <= E.pairs.size(); ++j) {
    const WhiskerPair& p = E.pairs[j - 1];
    u = compose_u(P, p.left, static_cast<Dim>(j) - 1, u);
    u = compose_u(P, u, static_cast<Dim>(j) - 1, p.right);
  }
  return u;
}

CellPtr boundary_step(const Polygraph& P, const CellPtr& u, Sign s) {
  if (u->is_identity()) return u->base;
  const Entry& e = (s == Sign::Src) ? u->entries.front() : u->entries.back();
  const Generator& g = P.require(u->dim, e.gen);
  return eval_ctx_u(P, e.ctx, s == Sign::Src ? g.src : g.tgt);
}

// Composition on normal forms, boundary checks already done. Cases follow
// the relative dimensions:
//   (a) equal dimensions, i = m-1: absorb identities, else concatenate;
//   (b) dim u = i+1 < dim v: push u into the left whisker slots of every
//       entry of v, at level i+1 by plain concatenation and above it on
//       both sides;
//   (c) dim v = i+1 < dim u: mirror image of (b).
CellPtr compose_u(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v) {
  const Dim du = u->dim, dv = v->dim;
  if (du == dv) {
    if (u->is_identity()) return v;
    if (v->is_identity()) return u;
    std::vector<Entry> entries = u->entries;
    entries.insert(entries.end(), v->entries.begin(), v->entries.end());
    return make_whiskers(du, std::move(entries));
  }
  if (du < dv) {
    if (u->is_identity()) return v;
    if (v->is_identity()) return make_identity_cell(compose_u(P, u, i, v->base));
    std::vector<Entry> entries;
    entries.reserve(v->entries.size());
    for (const Entry& e : v->entries) {
      Context ctx = e.ctx;
      ctx.pairs[i].left = compose_u(P, u, i, ctx.pairs[i].left);
      for (size_t j = i + 1; j < ctx.pairs.size(); ++j) {
        ctx.pairs[j].left = compose_u(P, u, i, ctx.pairs[j].left);
        ctx.pairs[j].right = compose_u(P, u, i, ctx.pairs[j].right);
      }
      entries.push_back({std::move(ctx), e.gen});
    }
    return make_whiskers(dv, std::move(entries));
  }
  // du > dv
  if (v->is_identity()) return u;
  if (u->is_identity()) return make_identity_cell(compose_u(P, u->base, i, v));
  std::vector<Entry> entries;
  entries.reserve(u->entries.size());
  for (const Entry& e : u->entries) {
    Context ctx = e.ctx;
    ctx.pairs[i].right = compose_u(P, ctx.pairs[i].right, i, v);
    for (size_t j = i + 1; j < ctx.pairs.size(); ++j) {
      ctx.pairs[j].left = compose_u(P, ctx.pairs[j].left, i, v);
      ctx.pairs[j].right = compose_u(P, ctx.pairs[j].right, i, v);
    }
    entries.push_back({std::move(ctx), e.gen});
  }
  return make_whiskers(du, std::move(entries));
}

}  // namespace

CellPtr identity(const CellPtr& u) { return make_identity_cell(u); }

CellPtr boundary(const Polygraph& P, const CellPtr& u, Sign s, Dim k) {
  if (k < 0 || k > u->dim)
    throw DomainError("boundary: dimension " + std::to_string(k) +
                      " out of range for a cell of dimension " +
                      std::to_string(u->dim));
  CellPtr cur = u;
  while (cur->dim > k) cur = boundary_step(P, cur, s);
  return cur;
}

bool composable(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v) {
  if (i != std::min(u->dim, v->dim) - 1) return false;
  return equal(boundary(P, u, Sign::Tgt, i), boundary(P, v, Sign::Src, i));
}

CellPtr compose(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v) {
  if (i != std::min(u->dim, v->dim) - 1)
    throw DomainError("compose: illegal composition: *_" + std::to_string(i) +
                      " of cells of dimensions " + std::to_string(u->dim) +
                      " and " + std::to_string(v->dim));
  if (!equal(boundary(P, u, Sign::Tgt, i), boundary(P, v, Sign::Src, i)))
    throw DomainError("compose: cells are not " + std::to_string(i) +
                      "-composable");
  return compose_u(P, u, i, v);
}

CellPtr compose_many(const Polygraph& P, std::span<const CellPtr> cells, Dim i) {
  if (cells.empty()) throw DomainError("compose_many: empty list");
  CellPtr acc = cells[0];
  for (size_t t = 1; t < cells.size(); ++t) acc = compose(P, acc, i, cells[t]);
  return acc;
}

CellPtr eval_context(const Polygraph& P, const Context& E, const CellPtr& u) {
  if (u->dim < static_cast<Dim>(E.pairs.size()))
    throw DomainError("eval_context: cell dimension below context depth");
  CellPtr cur = u;
  for (size_t j = 1; j <= E.pairs.size(); ++j) {
    const WhiskerPair& p = E.pairs[j - 1];
    cur = compose(P, p.left, static_cast<Dim>(j) - 1, cur);
    cur = compose(P, cur, static_cast<Dim>(j) - 1, p.right);
  }
  return cur;
}

CellPtr generator_cell(const Polygraph& P, const Generator& g) {
  if (g.dim == 0) return make_point(g.name);
  Context ctx;
  ctx.pairs.reserve(g.dim - 1);
  for (Dim j = 1; j <= g.dim - 1; ++j) {
    CellPtr lb = boundary(P, g.src, Sign::Src, j - 1);
    CellPtr rb = boundary(P, g.tgt, Sign::Tgt, j - 1);
    ctx.pairs.push_back({make_identity_cell(lb), make_identity_cell(rb)});
  }
  return make_whiskers(g.dim, {Entry{std::move(ctx), g.name}});
}

CellPtr generator_cell(const Polygraph& P, Dim dim, const std::string& name) {
  return generator_cell(P, P.require(dim, name));
}

}  // namespace precat
