#include "precat/oracle.hpp"

#include <algorithm>
#include <map>

#include "precat/enumerate.hpp"

namespace precat {

namespace {

const Generator& resolve_gen(const Polygraph& P, const std::string& name) {
  const Generator* found = nullptr;
  for (Dim k = 0; k <= P.top_dim(); ++k) {
    if (const Generator* g = P.find(k, name)) {
      if (found)
        throw DomainError("ambiguous generator name '" + name +
                          "' (occurs in several dimensions)");
      found = g;
    }
  }
  if (!found) throw DomainError("unknown generator '" + name + "'");
  return *found;
}

Dim dim_of(const Polygraph& P, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      return resolve_gen(P, e->gen).dim;
    case Expr::Kind::Id:
      return dim_of(P, e->a) + 1;
    case Expr::Kind::Comp:
      return std::max(dim_of(P, e->a), dim_of(P, e->b));
  }
  throw InternalError("dim_of: bad kind");
}

// One-step boundary on expressions, by the case split of the boundary axiom.
ExprPtr bnd_step(const Polygraph& P, const ExprPtr& e, Sign s) {
  switch (e->kind) {
    case Expr::Kind::Gen: {
      const Generator& g = resolve_gen(P, e->gen);
      if (g.dim == 0) throw InternalError("bnd_step: 0-cell");
      return cell_to_expr(s == Sign::Src ? g.src : g.tgt);
    }
    case Expr::Kind::Id:
      return e->a;
    case Expr::Kind::Comp: {
      Dim da = dim_of(P, e->a), db = dim_of(P, e->b);
      if (da == db)
        return s == Sign::Src ? bnd_step(P, e->a, s) : bnd_step(P, e->b, s);
      if (da < db) return mk_comp(e->comp_dim, e->a, bnd_step(P, e->b, s));
      return mk_comp(e->comp_dim, bnd_step(P, e->a, s), e->b);
    }
  }
  throw InternalError("bnd_step: bad kind");
}

thread_local int rewrite_depth = 0;
struct DepthGuard {
  DepthGuard() {
    if (++rewrite_depth > 200000)
      throw InternalError("rewrite: depth bound exceeded (non-termination?)");
  }
  ~DepthGuard() { --rewrite_depth; }
};

// a and b are normal; returns the normal form of comp_i(a,b).
ExprPtr nf_comp(const Polygraph& P, Dim i, const ExprPtr& a, const ExprPtr& b) {
  DepthGuard guard;
  if (a->kind == Expr::Kind::Id) {
    if (dim_of(P, a->a) + 1 <= dim_of(P, b)) return b;
    return mk_id(nf_comp(P, i, a->a, b));
  }
  if (b->kind == Expr::Kind::Id) {
    if (dim_of(P, b->a) + 1 <= dim_of(P, a)) return a;
    return mk_id(nf_comp(P, i, a, b->a));
  }
  if (a->kind == Expr::Kind::Comp && a->comp_dim == i)
    return nf_comp(P, i, a->a, nf_comp(P, i, a->b, b));
  if (a->kind == Expr::Kind::Comp && a->comp_dim > i)
    return nf_comp(P, a->comp_dim, nf_comp(P, i, a->a, b), nf_comp(P, i, a->b, b));
  if (b->kind == Expr::Kind::Comp && b->comp_dim > i)
    return nf_comp(P, b->comp_dim, nf_comp(P, i, a, b->a), nf_comp(P, i, a, b->b));
  return mk_comp(i, a, b);
}

ExprPtr nf_rec(const Polygraph& P, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      return e;
    case Expr::Kind::Id:
      return mk_id(nf_rec(P, e->a));
    case Expr::Kind::Comp:
      return nf_comp(P, e->comp_dim, nf_rec(P, e->a), nf_rec(P, e->b));
  }
  throw InternalError("nf_rec: bad kind");
}

CellPtr readoff(const Polygraph& P, const ExprPtr& e);

CellPtr oracle_boundary_cell(const Polygraph& P, const ExprPtr& e, Sign s, Dim k) {
  ExprPtr cur = e;
  Dim d = dim_of(P, cur);
  while (d > k) {
    cur = bnd_step(P, cur, s);
    --d;
  }
  return readoff(P, nf_rec(P, cur));
}

void spine(const ExprPtr& e, Dim i, std::vector<ExprPtr>& out) {
  if (e->kind == Expr::Kind::Comp && e->comp_dim == i) {
    spine(e->a, i, out);
    spine(e->b, i, out);
  } else {
    out.push_back(e);
  }
}

// Parses one normal-form whisker word of dimension m into an Entry, filling
// absent slots with the identities forced by the boundary conditions.
Entry parse_word(const Polygraph& P, const ExprPtr& w, Dim m) {
  std::vector<std::vector<ExprPtr>> lefts(m - 1), rights(m - 1);
  ExprPtr cur = w;
  for (Dim j = m - 1; j >= 1; --j) {
    if (cur->kind == Expr::Kind::Comp && cur->comp_dim == j - 1) {
      std::vector<ExprPtr> parts;
      spine(cur, j - 1, parts);
      int core = -1;
      for (size_t t = 0; t < parts.size(); ++t) {
        if (dim_of(P, parts[t]) == m) {
          if (core >= 0) throw InternalError("parse_word: two cores in a word");
          core = static_cast<int>(t);
        } else if (dim_of(P, parts[t]) != j) {
          throw InternalError("parse_word: stray factor of dimension " +
                              std::to_string(dim_of(P, parts[t])));
        }
      }
      if (core < 0) throw InternalError("parse_word: no core in a word");
      lefts[j - 1].assign(parts.begin(), parts.begin() + core);
      rights[j - 1].assign(parts.begin() + core + 1, parts.end());
      cur = parts[core];
    } else if (cur->kind == Expr::Kind::Comp && cur->comp_dim >= j) {
      throw InternalError("parse_word: composition level out of order");
    }
  }
  if (cur->kind != Expr::Kind::Gen)
    throw InternalError("parse_word: core is not a generator");

  Entry entry;
  entry.gen = cur->gen;
  entry.ctx.pairs.resize(m - 1);
  for (Dim j = 1; j <= m - 1; ++j) {
    auto& pair = entry.ctx.pairs[j - 1];
    if (lefts[j - 1].empty()) {
      pair.left = make_identity_cell(oracle_boundary_cell(P, w, Sign::Src, j - 1));
    } else {
      std::vector<Entry> es;
      for (const ExprPtr& p : lefts[j - 1]) es.push_back(parse_word(P, p, j));
      pair.left = make_whiskers(j, std::move(es));
    }
    if (rights[j - 1].empty()) {
      pair.right = make_identity_cell(oracle_boundary_cell(P, w, Sign::Tgt, j - 1));
    } else {
      std::vector<Entry> es;
      for (const ExprPtr& p : rights[j - 1]) es.push_back(parse_word(P, p, j));
      pair.right = make_whiskers(j, std::move(es));
    }
  }
  return entry;
}

CellPtr readoff(const Polygraph& P, const ExprPtr& e) {
  if (e->kind == Expr::Kind::Id) return make_identity_cell(readoff(P, e->a));
  Dim d = dim_of(P, e);
  if (d == 0) {
    if (e->kind != Expr::Kind::Gen) throw InternalError("readoff: bad 0-cell");
    return make_point(e->gen);
  }
  std::vector<ExprPtr> factors;
  spine(e, d - 1, factors);
  std::vector<Entry> entries;
  entries.reserve(factors.size());
  for (const ExprPtr& f : factors) entries.push_back(parse_word(P, f, d));
  return make_whiskers(d, std::move(entries));
}

void typecheck_rec(const Polygraph& P, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      resolve_gen(P, e->gen);
      return;
    case Expr::Kind::Id:
      typecheck_rec(P, e->a);
      return;
    case Expr::Kind::Comp: {
      typecheck_rec(P, e->a);
      typecheck_rec(P, e->b);
      Dim da = dim_of(P, e->a), db = dim_of(P, e->b);
      if (e->comp_dim != std::min(da, db) - 1)
        throw DomainError("illegal composition: no *_" +
                          std::to_string(e->comp_dim) + " of a " +
                          std::to_string(da) + "-cell and a " +
                          std::to_string(db) + "-cell in '" + print_expr(e) + "'");
      Dim i = e->comp_dim;
      CellPtr t = oracle_boundary_cell(P, e->a, Sign::Tgt, i);
      CellPtr s = oracle_boundary_cell(P, e->b, Sign::Src, i);
      if (!equal(t, s))
        throw DomainError("boundary mismatch in '" + print_expr(e) +
                          "': target " + show(t) + " vs source " + show(s));
      return;
    }
  }
  throw InternalError("typecheck: bad kind");
}

}  // namespace

Dim expr_dim(const Polygraph& P, const ExprPtr& e) { return dim_of(P, e); }

void typecheck(const Polygraph& P, const ExprPtr& e) { typecheck_rec(P, e); }

ExprPtr boundary_expr(const Polygraph& P, const ExprPtr& e, Sign s, Dim k) {
  Dim d = dim_of(P, e);
  if (k < 0 || k > d)
    throw DomainError("boundary_expr: dimension out of range");
  ExprPtr cur = e;
  while (d > k) {
    cur = bnd_step(P, cur, s);
    --d;
  }
  return cur;
}

ExprPtr rewrite_nf(const Polygraph& P, const ExprPtr& e) { return nf_rec(P, e); }

CellPtr normalize_expr(const Polygraph& P, const ExprPtr& e) {
  typecheck_rec(P, e);
  return readoff(P, nf_rec(P, e));
}

ExprPtr cell_to_expr(const CellPtr& u) {
  switch (u->kind) {
    case Cell::Kind::Point:
      return mk_gen(u->point);
    case Cell::Kind::Identity:
      return mk_id(cell_to_expr(u->base));
    case Cell::Kind::Whiskers: {
      auto entry_expr = [](const Entry& e, auto&& self) -> ExprPtr {
        ExprPtr cur = mk_gen(e.gen);
        for (size_t j = 1; j <= e.ctx.pairs.size(); ++j) {
          const WhiskerPair& p = e.ctx.pairs[j - 1];
          std::vector<ExprPtr> parts;
          if (p.left->is_whiskers())
            for (const Entry& le : p.left->entries) parts.push_back(self(le, self));
          parts.push_back(cur);
          if (p.right->is_whiskers())
            for (const Entry& re : p.right->entries) parts.push_back(self(re, self));
          ExprPtr acc = parts.back();
          for (size_t t = parts.size() - 1; t-- > 0;)
            acc = mk_comp(static_cast<int>(j) - 1, parts[t], acc);
          cur = acc;
        }
        return cur;
      };
      std::vector<ExprPtr> es;
      for (const Entry& e : u->entries) es.push_back(entry_expr(e, entry_expr));
      ExprPtr acc = es.back();
      for (size_t t = es.size() - 1; t-- > 0;)
        acc = mk_comp(u->dim - 1, es[t], acc);
      return acc;
    }
  }
  throw InternalError("cell_to_expr: bad kind");
}

// ---------------- rewrite step enumeration ----------------

namespace {

// Root rewrite of comp_i(a,b), if any rule applies there.
std::vector<ExprPtr> root_steps(const Polygraph& P, const ExprPtr& e) {
  std::vector<ExprPtr> out;
  if (e->kind != Expr::Kind::Comp) return out;
  Dim i = e->comp_dim;
  const ExprPtr& a = e->a;
  const ExprPtr& b = e->b;
  if (a->kind == Expr::Kind::Id) {
    if (dim_of(P, a->a) + 1 <= dim_of(P, b))
      out.push_back(b);
    else
      out.push_back(mk_id(mk_comp(i, a->a, b)));
  }
  if (b->kind == Expr::Kind::Id) {
    if (dim_of(P, b->a) + 1 <= dim_of(P, a))
      out.push_back(a);
    else
      out.push_back(mk_id(mk_comp(i, a, b->a)));
  }
  if (a->kind == Expr::Kind::Comp && a->comp_dim == i)
    out.push_back(mk_comp(i, a->a, mk_comp(i, a->b, b)));
  if (a->kind == Expr::Kind::Comp && a->comp_dim > i)
    out.push_back(mk_comp(a->comp_dim, mk_comp(i, a->a, b), mk_comp(i, a->b, b)));
  if (b->kind == Expr::Kind::Comp && b->comp_dim > i)
    out.push_back(mk_comp(b->comp_dim, mk_comp(i, a, b->a), mk_comp(i, a, b->b)));
  return out;
}

}  // namespace

std::vector<ExprPtr> rewrite_one_steps(const Polygraph& P, const ExprPtr& e) {
  std::vector<ExprPtr> out = root_steps(P, e);
  switch (e->kind) {
    case Expr::Kind::Gen:
      break;
    case Expr::Kind::Id:
      for (const ExprPtr& a : rewrite_one_steps(P, e->a)) out.push_back(mk_id(a));
      break;
    case Expr::Kind::Comp:
      for (const ExprPtr& a : rewrite_one_steps(P, e->a))
        out.push_back(mk_comp(e->comp_dim, a, e->b));
      for (const ExprPtr& b : rewrite_one_steps(P, e->b))
        out.push_back(mk_comp(e->comp_dim, e->a, b));
      break;
  }
  return out;
}

// ---------------- random expressions ----------------

namespace {

using Path = std::vector<int>;  // 0 = a-child, 1 = b-child

ExprPtr subexpr(const ExprPtr& e, const Path& path) {
  ExprPtr cur = e;
  for (int step : path) cur = (step == 0) ? cur->a : cur->b;
  return cur;
}

ExprPtr replace_at(const ExprPtr& e, const Path& path, size_t at, const ExprPtr& sub) {
  if (at == path.size()) return sub;
  if (e->kind == Expr::Kind::Id)
    return mk_id(replace_at(e->a, path, at + 1, sub));
  if (path[at] == 0)
    return mk_comp(e->comp_dim, replace_at(e->a, path, at + 1, sub), e->b);
  return mk_comp(e->comp_dim, e->a, replace_at(e->b, path, at + 1, sub));
}

struct Move {
  Path path;
  int kind;   // see walk_expr
  int param;  // dimension parameter for identity insertion
};

void collect_moves(const Polygraph& P, const ExprPtr& e, Path& path,
                   std::vector<Move>& out) {
  Dim d = dim_of(P, e);
  if (d >= 1) {
    for (Dim i = 0; i <= d - 1; ++i) {
      out.push_back({path, 0, i});  // insert left identity at level i
      out.push_back({path, 1, i});  // insert right identity at level i
    }
  }
  if (e->kind == Expr::Kind::Id && e->a->kind == Expr::Kind::Comp) {
    // id(comp_i(x,y)) -> comp_i(id(x),y) or comp_i(x,id(y)) where legal
    Dim dx = dim_of(P, e->a->a), dy = dim_of(P, e->a->b);
    if (dx + 1 > dy) out.push_back({path, 6, 0});
    if (dy + 1 > dx) out.push_back({path, 7, 0});
  }
  if (e->kind == Expr::Kind::Comp) {
    Dim i = e->comp_dim;
    const ExprPtr& a = e->a;
    const ExprPtr& b = e->b;
    if (a->kind == Expr::Kind::Id && dim_of(P, a->a) + 1 <= dim_of(P, b))
      out.push_back({path, 2, 0});  // erase left identity
    if (b->kind == Expr::Kind::Id && dim_of(P, b->a) + 1 <= dim_of(P, a))
      out.push_back({path, 3, 0});  // erase right identity
    if (a->kind == Expr::Kind::Id && dim_of(P, a->a) + 1 > dim_of(P, b))
      out.push_back({path, 8, 0});  // comp_i(id(x),b) -> id(comp_i(x,b))
    if (b->kind == Expr::Kind::Id && dim_of(P, b->a) + 1 > dim_of(P, a))
      out.push_back({path, 9, 0});  // comp_i(a,id(y)) -> id(comp_i(a,y))
    if (a->kind == Expr::Kind::Comp && a->comp_dim == i)
      out.push_back({path, 4, 0});  // associate right
    if (b->kind == Expr::Kind::Comp && b->comp_dim == i &&
        std::min(dim_of(P, a), dim_of(P, b->a)) - 1 == i)
      out.push_back({path, 5, 0});  // associate left
    if (b->kind == Expr::Kind::Comp && b->comp_dim > i)
      out.push_back({path, 10, 0});  // distribute into right argument
    if (a->kind == Expr::Kind::Comp && a->comp_dim > i)
      out.push_back({path, 11, 0});  // distribute into left argument
    if (a->kind == Expr::Kind::Comp && b->kind == Expr::Kind::Comp &&
        a->comp_dim == b->comp_dim && a->comp_dim < i && equal(a->a, b->a) &&
        dim_of(P, a->a) == a->comp_dim + 1 &&
        std::min(dim_of(P, a->b), dim_of(P, b->b)) - 1 == i)
      out.push_back({path, 12, 0});  // factor common left whisker
    if (a->kind == Expr::Kind::Comp && b->kind == Expr::Kind::Comp &&
        a->comp_dim == b->comp_dim && a->comp_dim < i && equal(a->b, b->b) &&
        dim_of(P, a->b) == a->comp_dim + 1 &&
        std::min(dim_of(P, a->a), dim_of(P, b->a)) - 1 == i)
      out.push_back({path, 13, 0});  // factor common right whisker
  }
  if (e->kind == Expr::Kind::Id) {
    path.push_back(0);
    collect_moves(P, e->a, path, out);
    path.pop_back();
  } else if (e->kind == Expr::Kind::Comp) {
    path.push_back(0);
    collect_moves(P, e->a, path, out);
    path.pop_back();
    path.push_back(1);
    collect_moves(P, e->b, path, out);
    path.pop_back();
  }
}

ExprPtr apply_move(const Polygraph& P, const ExprPtr& root, const Move& m) {
  ExprPtr e = subexpr(root, m.path);
  ExprPtr ne;
  switch (m.kind) {
    case 0:
      ne = mk_comp(m.param, mk_id(boundary_expr(P, e, Sign::Src, m.param)), e);
      break;
    case 1:
      ne = mk_comp(m.param, e, mk_id(boundary_expr(P, e, Sign::Tgt, m.param)));
      break;
    case 2:
      ne = e->b;
      break;
    case 3:
      ne = e->a;
      break;
    case 4:
      ne = mk_comp(e->comp_dim, e->a->a, mk_comp(e->comp_dim, e->a->b, e->b));
      break;
    case 5:
      ne = mk_comp(e->comp_dim, mk_comp(e->comp_dim, e->a, e->b->a), e->b->b);
      break;
    case 6:
      ne = mk_comp(e->a->comp_dim, mk_id(e->a->a), e->a->b);
      break;
    case 7:
      ne = mk_comp(e->a->comp_dim, e->a->a, mk_id(e->a->b));
      break;
    case 8:
      ne = mk_id(mk_comp(e->comp_dim, e->a->a, e->b));
      break;
    case 9:
      ne = mk_id(mk_comp(e->comp_dim, e->a, e->b->a));
      break;
    case 10:
      ne = mk_comp(e->b->comp_dim, mk_comp(e->comp_dim, e->a, e->b->a),
                   mk_comp(e->comp_dim, e->a, e->b->b));
      break;
    case 11:
      ne = mk_comp(e->a->comp_dim, mk_comp(e->comp_dim, e->a->a, e->b),
                   mk_comp(e->comp_dim, e->a->b, e->b));
      break;
    case 12:
      ne = mk_comp(e->a->comp_dim, e->a->a,
                   mk_comp(e->comp_dim, e->a->b, e->b->b));
      break;
    case 13:
      ne = mk_comp(e->a->comp_dim,
                   mk_comp(e->comp_dim, e->a->a, e->b->a), e->a->b);
      break;
    default:
      throw InternalError("apply_move: bad move");
  }
  return replace_at(root, m.path, 0, ne);
}

}  // namespace

ExprPtr walk_expr(const Polygraph& P, const ExprPtr& e, std::mt19937_64& rng,
                  int steps) {
  ExprPtr cur = e;
  for (int s = 0; s < steps; ++s) {
    std::vector<Move> moves;
    Path path;
    collect_moves(P, cur, path, moves);
    if (moves.empty()) break;
    const Move& m = moves[rng() % moves.size()];
    cur = apply_move(P, cur, m);
  }
  return cur;
}

ExprPtr random_expr(const Polygraph& P, uint64_t seed, int size_budget) {
  std::mt19937_64 rng(seed);
  EnumBounds bounds;
  bounds.max_chain = std::max(1, std::min(3, size_budget / 4));
  bounds.max_slot_chain = 2;
  CellPtr cell = sample_cell(P, rng, bounds);
  if (!cell) throw DomainError("random_expr: polygraph has no cells to sample");
  ExprPtr e = cell_to_expr(cell);
  int steps = std::max(0, std::min(size_budget, 24));
  return walk_expr(P, e, rng, steps);
}

std::pair<ExprPtr, ExprPtr> random_equal_pair(const Polygraph& P, uint64_t seed,
                                              int walk_length) {
  std::mt19937_64 rng(seed);
  EnumBounds bounds;
  bounds.max_chain = 3;
  bounds.max_slot_chain = 2;
  CellPtr cell = sample_cell(P, rng, bounds);
  if (!cell)
    throw DomainError("random_equal_pair: polygraph has no cells to sample");
  ExprPtr base = cell_to_expr(cell);
  base = walk_expr(P, base, rng, std::min(walk_length, 6));
  ExprPtr e1 = walk_expr(P, base, rng, walk_length);
  ExprPtr e2 = walk_expr(P, base, rng, walk_length);
  return {e1, e2};
}

}  // namespace precat
