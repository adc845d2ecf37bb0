#include "precat/polyplex.hpp"

#include <algorithm>

#include "precat/compose.hpp"
#include "precat/oracle.hpp"

namespace precat {

namespace {

struct UnionFind {
  std::vector<int> parent;
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

PushoutResult pushout(const PolyMap& H, const PolyMap& K) {
  if (!(H.src == K.src))
    throw DomainError("pushout: the two maps have different sources");
  const Polygraph& R = H.src;
  const Polygraph& P = H.tgt;
  const Polygraph& Q = K.tgt;

  PushoutResult res;
  res.inl.src = P;
  res.inr.src = Q;

  Dim top = std::max(P.top_dim(), Q.top_dim());
  for (Dim k = 0; k <= top; ++k) {
    const auto& pg = P.at_dim(k);
    const auto& qg = Q.at_dim(k);
    size_t n = pg.size() + qg.size();
    UnionFind uf;
    uf.parent.resize(n);
    for (size_t t = 0; t < n; ++t) uf.parent[t] = static_cast<int>(t);
    auto pidx = [&](const std::string& name) {
      for (size_t t = 0; t < pg.size(); ++t)
        if (pg[t].name == name) return static_cast<int>(t);
      throw DomainError("pushout: dangling image '" + name + "' in left leg");
    };
    auto qidx = [&](const std::string& name) {
      for (size_t t = 0; t < qg.size(); ++t)
        if (qg[t].name == name) return static_cast<int>(pg.size() + t);
      throw DomainError("pushout: dangling image '" + name + "' in right leg");
    };
    for (const Generator& r : R.at_dim(k))
      uf.unite(pidx(H.image(k, r.name)), qidx(K.image(k, r.name)));

    auto tagged = [&](size_t t) {
      return t < pg.size() ? "L." + pg[t].name : "R." + qg[t - pg.size()].name;
    };
    // Class representative: the lexicographically least tagged member name.
    std::map<int, std::string> classname;
    for (size_t t = 0; t < n; ++t) {
      int c = uf.find(static_cast<int>(t));
      std::string nm = tagged(t);
      auto it = classname.find(c);
      if (it == classname.end() || nm < it->second) classname[c] = nm;
    }
    for (size_t t = 0; t < pg.size(); ++t)
      res.inl.set(k, pg[t].name, classname.at(uf.find(static_cast<int>(t))));
    for (size_t t = 0; t < qg.size(); ++t)
      res.inr.set(k, qg[t].name,
                  classname.at(uf.find(static_cast<int>(pg.size() + t))));

    // One generator per class, boundaries transported through the
    // injections; every member must transport to the same boundary.
    std::map<int, Generator> made;
    std::vector<int> order;
    for (size_t t = 0; t < n; ++t) {
      int c = uf.find(static_cast<int>(t));
      CellPtr src, tgt;
      if (k >= 1) {
        if (t < pg.size()) {
          src = apply_free(res.inl, pg[t].src);
          tgt = apply_free(res.inl, pg[t].tgt);
        } else {
          src = apply_free(res.inr, qg[t - pg.size()].src);
          tgt = apply_free(res.inr, qg[t - pg.size()].tgt);
        }
      }
      auto it = made.find(c);
      if (it == made.end()) {
        made.emplace(c, Generator{classname.at(c), k, src, tgt});
        order.push_back(c);
      } else if (!equal(it->second.src, src) || !equal(it->second.tgt, tgt)) {
        throw DomainError("pushout: identified generators '" +
                          classname.at(c) + "' transport to different boundaries");
      }
    }
    for (int c : order) res.sum.add(made.at(c));
  }
  res.sum.reserve_dims(top);
  res.inl.tgt = res.sum;
  res.inr.tgt = res.sum;
  return res;
}

PushoutResult coproduct(const Polygraph& P, const Polygraph& Q) {
  Polygraph empty;
  PolyMap H, K;
  H.src = empty;
  H.tgt = P;
  K.src = empty;
  K.tgt = Q;
  return pushout(H, K);
}

PolyMap mediate(const PushoutResult& po, const PolyMap& f, const PolyMap& g) {
  if (!(f.src == po.inl.src) || !(g.src == po.inr.src))
    throw DomainError("mediate: cocone legs do not match the pushout feet");
  if (!(f.tgt == g.tgt)) throw DomainError("mediate: cocone targets differ");
  PolyMap m;
  m.src = po.sum;
  m.tgt = f.tgt;
  for (Dim k = 0; k <= po.sum.top_dim(); ++k) {
    for (const Generator& p : f.src.at_dim(k)) {
      const std::string& cls = po.inl.image(k, p.name);
      const std::string& img = f.image(k, p.name);
      if (m.has_image(k, cls)) {
        if (m.image(k, cls) != img)
          throw DomainError("mediate: cocone does not commute on '" + cls + "'");
      } else {
        m.set(k, cls, img);
      }
    }
    for (const Generator& q : g.src.at_dim(k)) {
      const std::string& cls = po.inr.image(k, q.name);
      const std::string& img = g.image(k, q.name);
      if (m.has_image(k, cls)) {
        if (m.image(k, cls) != img)
          throw DomainError("mediate: cocone does not commute on '" + cls + "'");
      } else {
        m.set(k, cls, img);
      }
    }
  }
  return m;
}

PolyMap copair(const PushoutResult& co, const PolyMap& f, const PolyMap& g) {
  return mediate(co, f, g);
}

// ---------------- canonical relabeling ----------------

namespace {

struct Canonicalizer {
  const Polygraph& P;
  std::map<GenRef, std::string> names;
  std::vector<int> next_index;  // per dimension

  std::string fresh(Dim k) {
    if (static_cast<size_t>(k) >= next_index.size()) next_index.resize(k + 1, 0);
    return "g" + std::to_string(k) + "_" + std::to_string(next_index[k]++);
  }

  void visit_gen(Dim k, const std::string& name) {
    GenRef ref{k, name};
    if (names.count(ref)) return;
    names.emplace(ref, fresh(k));
    const Generator& g = P.require(k, name);
    if (k >= 1) {
      visit(g.src);
      visit(g.tgt);
    }
  }

  void visit(const CellPtr& u) {
    switch (u->kind) {
      case Cell::Kind::Point:
        visit_gen(0, u->point);
        return;
      case Cell::Kind::Identity:
        visit(u->base);
        return;
      case Cell::Kind::Whiskers:
        for (const Entry& e : u->entries) {
          visit_gen(u->dim, e.gen);
          for (const WhiskerPair& p : e.ctx.pairs) {
            visit(p.left);
            visit(p.right);
          }
        }
        return;
    }
  }
};

}  // namespace

Canonicalized canonicalize_element(const Element& e) {
  Canonicalizer c{e.pol, {}, {}};
  c.visit(e.cell);
  // Generators not reachable from the cell (non-principal elements) keep a
  // deterministic order after the reachable ones.
  for (Dim k = 0; k <= e.pol.top_dim(); ++k)
    for (const Generator& g : e.pol.at_dim(k)) c.visit_gen(k, g.name);

  PolyMap relabel;
  relabel.src = e.pol;
  for (const auto& [ref, nm] : c.names) relabel.set(ref.first, ref.second, nm);

  // Rebuild dimension by dimension so boundary cells can be renamed through
  // the partial map.
  Polygraph out;
  for (Dim k = 0; k <= e.pol.top_dim(); ++k) {
    std::vector<Generator> gens;
    for (const Generator& g : e.pol.at_dim(k)) {
      Generator ng;
      ng.name = relabel.image(k, g.name);
      ng.dim = k;
      if (k >= 1) {
        ng.src = apply_free(relabel, g.src);
        ng.tgt = apply_free(relabel, g.tgt);
      }
      gens.push_back(std::move(ng));
    }
    // order by traversal index (the numeric suffix; g*_2 before g*_10)
    std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
      size_t ua = a.name.rfind('_'), ub = b.name.rfind('_');
      return std::stoi(a.name.substr(ua + 1)) < std::stoi(b.name.substr(ub + 1));
    });
    for (Generator& g : gens) out.add(std::move(g));
  }
  out.reserve_dims(e.pol.top_dim());

  Canonicalized res;
  res.element.pol = out;
  res.element.cell = apply_free(relabel, e.cell);
  relabel.tgt = out;
  res.relabel = relabel;
  return res;
}

// ---------------- polyplex lifting ----------------

namespace {

PolyplexLifting canonical(PolyplexLifting L) {
  Canonicalized c = canonicalize_element(L.shape);
  PolyplexLifting out;
  out.shape = c.element;
  out.map = compose_polymap(inverse(c.relabel), L.map);
  return out;
}

Element boundary_element(const PolyplexLifting& L, Sign s, Dim k) {
  return Element{L.shape.pol, boundary(L.shape.pol, L.shape.cell, s, k)};
}

PolyMap forced_morphism(const Element& from, const Element& to,
                        const char* what) {
  auto m = unique_morphism(from, to);
  if (!m)
    throw InternalError(std::string("polyplex_lift: missing morphism (") + what +
                        ")");
  return *m;
}

PolyplexLifting lift_rec(const Polygraph& P, const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Id: {
      PolyplexLifting L = lift_rec(P, e->a);
      L.shape.cell = make_identity_cell(L.shape.cell);
      return L;  // already canonical: the traversal ignores identity layers
    }
    case Expr::Kind::Gen: {
      Dim k = expr_dim(P, e);
      const Generator& g = P.require(k, e->gen);
      if (k == 0) {
        PolyplexLifting L;
        L.shape.pol.add(Generator{"g0_0", 0, nullptr, nullptr});
        L.shape.cell = make_point("g0_0");
        L.map.src = L.shape.pol;
        L.map.tgt = P;
        L.map.set(0, "g0_0", g.name);
        return L;
      }
      PolyplexLifting Lm = lift_rec(P, cell_to_expr(g.src));
      PolyplexLifting Lp = lift_rec(P, cell_to_expr(g.tgt));
      PushoutResult po;
      PolyMap Gm, Gp;
      if (k == 1) {
        po = coproduct(Lm.shape.pol, Lp.shape.pol);
      } else {
        PolyplexLifting LS =
            lift_rec(Lm.shape.pol, cell_to_expr(boundary(
                                       Lm.shape.pol, Lm.shape.cell, Sign::Src, k - 2)));
        PolyplexLifting LT =
            lift_rec(Lm.shape.pol, cell_to_expr(boundary(
                                       Lm.shape.pol, Lm.shape.cell, Sign::Tgt, k - 2)));
        PolyMap Fmm = LS.map;  // (S,s) -> U^-
        PolyMap Fmt = LT.map;  // (T,t) -> U^-
        PolyMap Fpm = forced_morphism(LS.shape,
                                      boundary_element(Lp, Sign::Src, k - 2), "S+");
        PolyMap Fpt = forced_morphism(LT.shape,
                                      boundary_element(Lp, Sign::Tgt, k - 2), "T+");
        PushoutResult st = coproduct(LS.shape.pol, LT.shape.pol);
        PolyMap H = copair(st, Fmm, Fmt);  // S+T -> U^-
        PolyMap K = copair(st, Fpm, Fpt);  // S+T -> U^+
        po = pushout(H, K);
      }
      Gm = po.inl;
      Gp = po.inr;
      CellPtr src_cell = apply_free(Gm, Lm.shape.cell);
      CellPtr tgt_cell = apply_free(Gp, Lp.shape.cell);
      Polygraph U = po.sum;
      U.add(Generator{"top", k, src_cell, tgt_cell});
      PolyMap map = mediate(po, Lm.map, Lp.map);
      map.src = U;
      map.set(k, "top", g.name);
      PolyplexLifting L;
      L.shape.pol = U;
      L.shape.cell = generator_cell(U, k, "top");
      L.map = map;
      return canonical(std::move(L));
    }
    case Expr::Kind::Comp: {
      Dim i = e->comp_dim;
      PolyplexLifting La = lift_rec(P, e->a);
      PolyplexLifting Lb = lift_rec(P, e->b);
      PolyplexLifting Lw = lift_rec(
          La.shape.pol,
          cell_to_expr(boundary(La.shape.pol, La.shape.cell, Sign::Tgt, i)));
      PolyMap F1 = Lw.map;  // U' -> U_a
      PolyMap F2 =
          forced_morphism(Lw.shape, boundary_element(Lb, Sign::Src, i), "glue");
      PushoutResult po = pushout(F1, F2);
      CellPtr cell = compose(po.sum, apply_free(po.inl, La.shape.cell), i,
                             apply_free(po.inr, Lb.shape.cell));
      PolyplexLifting L;
      L.shape.pol = po.sum;
      L.shape.cell = cell;
      L.map = mediate(po, La.map, Lb.map);
      return canonical(std::move(L));
    }
  }
  throw InternalError("lift_rec: bad kind");
}

}  // namespace

PolyplexLifting polyplex_lift_expr(const Polygraph& P, const ExprPtr& formula) {
  typecheck(P, formula);
  PolyplexLifting L = lift_rec(P, formula);
  if (!is_principal(L.shape))
    throw InternalError("polyplex_lift: shape is not principal");
  return L;
}

PolyplexLifting polyplex_lift(const Element& e) {
  return polyplex_lift_expr(e.pol, cell_to_expr(e.cell));
}

PolyMap element_iso(const PolyplexLifting& L1, const PolyplexLifting& L2) {
  if (!(L1.map.tgt == L2.map.tgt))
    throw DomainError("element_iso: liftings target different polygraphs");
  if (!equal(apply_free(L1.map, L1.shape.cell), apply_free(L2.map, L2.shape.cell)))
    throw DomainError("element_iso: liftings realize different cells");
  auto theta = unique_morphism(L1.shape, L2.shape);
  auto theta_back = unique_morphism(L2.shape, L1.shape);
  if (!theta || !theta_back || !is_iso(*theta))
    throw InternalError("element_iso: no isomorphism between liftings");
  for (Dim k = 0; k <= L1.shape.pol.top_dim(); ++k)
    for (const Generator& g : L1.shape.pol.at_dim(k))
      if (L2.map.image(k, theta->image(k, g.name)) != L1.map.image(k, g.name))
        throw InternalError("element_iso: triangle does not commute");
  return *theta;
}

bool is_polyplex(const Element& e) {
  PolyplexLifting L = polyplex_lift(e);
  return is_iso(L.map);
}

bool is_generic(const Polygraph& P, const CellPtr& u) {
  return is_polyplex(Element{P, u});
}

std::map<GenRef, int> polyplex_measure(const Element& e) {
  PolyplexLifting L = polyplex_lift(e);
  std::map<GenRef, int> counts;
  for (Dim k = 0; k <= L.shape.pol.top_dim(); ++k)
    for (const Generator& g : L.shape.pol.at_dim(k))
      counts[{k, L.map.image(k, g.name)}] += 1;
  return counts;
}

Element build_Dn(Dim n) {
  if (n < 0) throw DomainError("build_Dn: negative dimension");
  Polygraph P;
  if (n == 0) {
    P.add(Generator{"c", 0, nullptr, nullptr});
    return {P, make_point("c")};
  }
  P.add(Generator{"s0", 0, nullptr, nullptr});
  P.add(Generator{"t0", 0, nullptr, nullptr});
  for (Dim k = 1; k < n; ++k) {
    CellPtr s = generator_cell(P, k - 1, "s" + std::to_string(k - 1));
    CellPtr t = generator_cell(P, k - 1, "t" + std::to_string(k - 1));
    P.add(Generator{"s" + std::to_string(k), k, s, t});
    P.add(Generator{"t" + std::to_string(k), k, s, t});
  }
  CellPtr s = generator_cell(P, n - 1, "s" + std::to_string(n - 1));
  CellPtr t = generator_cell(P, n - 1, "t" + std::to_string(n - 1));
  P.add(Generator{"c", n, s, t});
  return {P, generator_cell(P, n, "c")};
}

Element build_Dkl(Dim k, Dim l) {
  if (k < 1 || l < 1) throw DomainError("build_Dkl: dimensions must be >= 1");
  Dim i = std::min(k, l) - 1;
  Polygraph P;
  for (Dim j = 0; j < i; ++j) {
    if (j == 0) {
      P.add(Generator{"s0", 0, nullptr, nullptr});
      P.add(Generator{"t0", 0, nullptr, nullptr});
    } else {
      CellPtr s = generator_cell(P, j - 1, "s" + std::to_string(j - 1));
      CellPtr t = generator_cell(P, j - 1, "t" + std::to_string(j - 1));
      P.add(Generator{"s" + std::to_string(j), j, s, t});
      P.add(Generator{"t" + std::to_string(j), j, s, t});
    }
  }
  // Three generators at the gluing dimension: source side, shared middle,
  // target side.
  if (i == 0) {
    P.add(Generator{"a", 0, nullptr, nullptr});
    P.add(Generator{"b", 0, nullptr, nullptr});
    P.add(Generator{"c", 0, nullptr, nullptr});
  } else {
    CellPtr s = generator_cell(P, i - 1, "s" + std::to_string(i - 1));
    CellPtr t = generator_cell(P, i - 1, "t" + std::to_string(i - 1));
    P.add(Generator{"a", i, s, t});
    P.add(Generator{"b", i, s, t});
    P.add(Generator{"c", i, s, t});
  }
  auto build_side = [&](Dim topdim, const std::string& lo, const std::string& hi,
                        const std::string& prefix, const std::string& topname) {
    CellPtr s = generator_cell(P, i, lo);
    CellPtr t = generator_cell(P, i, hi);
    for (Dim j = i + 1; j < topdim; ++j) {
      P.add(Generator{prefix + "s" + std::to_string(j), j, s, t});
      P.add(Generator{prefix + "t" + std::to_string(j), j, s, t});
      s = generator_cell(P, j, prefix + "s" + std::to_string(j));
      t = generator_cell(P, j, prefix + "t" + std::to_string(j));
    }
    P.add(Generator{topname, topdim, s, t});
  };
  build_side(k, "a", "b", "p", "u1");
  build_side(l, "b", "c", "q", "u2");
  CellPtr cell = compose(P, generator_cell(P, k, "u1"), i, generator_cell(P, l, "u2"));
  return {P, cell};
}

}  // namespace precat
