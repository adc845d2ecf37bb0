#include "precat/polygraph.hpp"

#include <set>

#include "precat/compose.hpp"

namespace precat {

const std::vector<Generator> Polygraph::empty_{};

void Polygraph::add(Generator g) {
  if (g.dim < 0) throw DomainError("generator with negative dimension");
  if (static_cast<size_t>(g.dim) >= dims_.size()) {
    dims_.resize(g.dim + 1);
    index_.resize(g.dim + 1);
  }
  auto& idx = index_[g.dim];
  if (!idx.count(g.name)) idx.emplace(g.name, dims_[g.dim].size());
  dims_[g.dim].push_back(std::move(g));
}

void Polygraph::reserve_dims(Dim n) {
  if (n >= 0 && static_cast<size_t>(n) >= dims_.size()) {
    dims_.resize(n + 1);
    index_.resize(n + 1);
  }
}

Dim Polygraph::top_dim() const { return static_cast<Dim>(dims_.size()) - 1; }

const std::vector<Generator>& Polygraph::at_dim(Dim k) const {
  if (k < 0 || static_cast<size_t>(k) >= dims_.size()) return empty_;
  return dims_[k];
}

const Generator* Polygraph::find(Dim k, const std::string& name) const {
  if (k < 0 || static_cast<size_t>(k) >= dims_.size()) return nullptr;
  auto it = index_[k].find(name);
  if (it == index_[k].end()) return nullptr;
  return &dims_[k][it->second];
}

const Generator& Polygraph::require(Dim k, const std::string& name) const {
  const Generator* g = find(k, name);
  if (!g)
    throw DomainError("unknown generator '" + name + "' of dimension " +
                      std::to_string(k));
  return *g;
}

size_t Polygraph::generator_count() const {
  size_t n = 0;
  for (const auto& d : dims_) n += d.size();
  return n;
}

std::vector<GenRef> Polygraph::all_generators() const {
  std::vector<GenRef> out;
  for (Dim k = 0; k <= top_dim(); ++k)
    for (const auto& g : at_dim(k)) out.emplace_back(k, g.name);
  return out;
}

static bool gen_equal(const Generator& a, const Generator& b) {
  return a.name == b.name && a.dim == b.dim && equal(a.src, b.src) &&
         equal(a.tgt, b.tgt);
}

bool Polygraph::operator==(const Polygraph& other) const {
  if (top_dim() != other.top_dim()) return false;
  for (Dim k = 0; k <= top_dim(); ++k) {
    const auto& a = at_dim(k);
    const auto& b = other.at_dim(k);
    if (a.size() != b.size()) return false;
    for (size_t t = 0; t < a.size(); ++t)
      if (!gen_equal(a[t], b[t])) return false;
  }
  return true;
}

// ---------------- validation ----------------

namespace {

void validate_cell_rec(const Polygraph& P, const CellPtr& u,
                       ValidationReport& rep, const std::string& where) {
  switch (u->kind) {
    case Cell::Kind::Point: {
      if (u->dim != 0) {
        rep.error(where + ": point cell with nonzero dimension");
        return;
      }
      if (!P.find(0, u->point))
        rep.error(where + ": dangling reference to 0-generator '" + u->point + "'");
      return;
    }
    case Cell::Kind::Identity: {
      if (!u->base || u->base->dim != u->dim - 1) {
        rep.error(where + ": identity base has wrong dimension");
        return;
      }
      validate_cell_rec(P, u->base, rep, where);
      return;
    }
    case Cell::Kind::Whiskers: {
      if (u->dim < 1 || u->entries.empty()) {
        rep.error(where + ": malformed whisker cell");
        return;
      }
      for (const Entry& e : u->entries) {
        const Generator* g = P.find(u->dim, e.gen);
        if (!g) {
          rep.error(where + ": dangling reference to generator '" + e.gen +
                    "' of dimension " + std::to_string(u->dim));
          return;
        }
        if (static_cast<Dim>(e.ctx.pairs.size()) != u->dim - 1) {
          rep.error(where + ": context depth mismatch on '" + e.gen + "'");
          return;
        }
        for (size_t j = 1; j <= e.ctx.pairs.size(); ++j) {
          const WhiskerPair& p = e.ctx.pairs[j - 1];
          if (!p.left || !p.right || p.left->dim != static_cast<Dim>(j) ||
              p.right->dim != static_cast<Dim>(j)) {
            rep.error(where + ": whisker slot at level " + std::to_string(j) +
                      " has wrong dimension on '" + e.gen + "'");
            return;
          }
          validate_cell_rec(P, p.left, rep, where);
          validate_cell_rec(P, p.right, rep, where);
        }
      }
      if (!rep.ok()) return;
      // Boundary conditions at every nesting level, then chain composability.
      try {
        for (const Entry& e : u->entries) {
          const Generator& g = P.require(u->dim, e.gen);
          for (size_t j = 1; j <= e.ctx.pairs.size(); ++j) {
            Context partial{std::vector<WhiskerPair>(
                e.ctx.pairs.begin(), e.ctx.pairs.begin() + (j - 1))};
            CellPtr want_l = eval_context(
                P, partial, boundary(P, g.src, Sign::Src, static_cast<Dim>(j) - 1));
            CellPtr want_r = eval_context(
                P, partial, boundary(P, g.tgt, Sign::Tgt, static_cast<Dim>(j) - 1));
            const WhiskerPair& p = e.ctx.pairs[j - 1];
            if (!equal(boundary(P, p.left, Sign::Tgt, static_cast<Dim>(j) - 1), want_l))
              rep.error(where + ": left whisker at level " + std::to_string(j) +
                        " does not abut the generator '" + e.gen + "'");
            if (!equal(boundary(P, p.right, Sign::Src, static_cast<Dim>(j) - 1), want_r))
              rep.error(where + ": right whisker at level " + std::to_string(j) +
                        " does not abut the generator '" + e.gen + "'");
            if (p.left->is_identity() && !equal(p.left->base, want_l))
              rep.error(where + ": identity slot at level " + std::to_string(j) +
                        " stores the wrong boundary");
            if (p.right->is_identity() && !equal(p.right->base, want_r))
              rep.error(where + ": identity slot at level " + std::to_string(j) +
                        " stores the wrong boundary");
          }
        }
        for (size_t t = 0; t + 1 < u->entries.size(); ++t) {
          const Generator& g1 = P.require(u->dim, u->entries[t].gen);
          const Generator& g2 = P.require(u->dim, u->entries[t + 1].gen);
          CellPtr tgt1 = eval_context(P, u->entries[t].ctx, g1.tgt);
          CellPtr src2 = eval_context(P, u->entries[t + 1].ctx, g2.src);
          if (!equal(tgt1, src2))
            rep.error(where + ": consecutive whisker entries " +
                      std::to_string(t) + "," + std::to_string(t + 1) +
                      " are not composable");
        }
      } catch (const DomainError& e) {
        rep.error(where + ": " + e.what());
      }
      return;
    }
  }
}

}  // namespace

ValidationReport validate_cell(const Polygraph& P, const CellPtr& u) {
  ValidationReport rep;
  validate_cell_rec(P, u, rep, "cell");
  return rep;
}

ValidationReport validate_polygraph(const Polygraph& P) {
  ValidationReport rep;
  for (Dim k = 0; k <= P.top_dim(); ++k) {
    std::set<std::string> seen;
    for (const Generator& g : P.at_dim(k)) {
      std::string where = "generator '" + g.name + "' (dim " + std::to_string(k) + ")";
      if (g.name.empty()) rep.error(where + ": empty name");
      if (!seen.insert(g.name).second)
        rep.error(where + ": duplicate name within dimension " + std::to_string(k));
      if (g.dim != k) rep.error(where + ": inconsistent dimension field");
      for (Dim k2 = 0; k2 < k; ++k2)
        if (P.find(k2, g.name))
          rep.warning(where + ": name collides with a generator of dimension " +
                      std::to_string(k2));
      if (k == 0) {
        if (g.src || g.tgt) rep.error(where + ": 0-generator with boundary data");
        continue;
      }
      if (!g.src || !g.tgt) {
        rep.error(where + ": missing source or target");
        continue;
      }
      if (g.src->dim != k - 1 || g.tgt->dim != k - 1) {
        rep.error(where + ": boundary cells must have dimension " +
                  std::to_string(k - 1));
        continue;
      }
      // Boundaries live in the free precategory of the truncation below.
      Polygraph lower = truncate(P, k - 1);
      ValidationReport sub;
      validate_cell_rec(lower, g.src, sub, where + ", src");
      validate_cell_rec(lower, g.tgt, sub, where + ", tgt");
      rep.issues.insert(rep.issues.end(), sub.issues.begin(), sub.issues.end());
      if (!sub.ok()) continue;
      if (k >= 2) {
        try {
          bool par =
              equal(boundary(lower, g.src, Sign::Src, k - 2),
                    boundary(lower, g.tgt, Sign::Src, k - 2)) &&
              equal(boundary(lower, g.src, Sign::Tgt, k - 2),
                    boundary(lower, g.tgt, Sign::Tgt, k - 2));
          if (!par) rep.error(where + ": source and target are not parallel");
        } catch (const DomainError& e) {
          rep.error(where + ": " + e.what());
        }
      }
    }
  }
  return rep;
}

Polygraph truncate(const Polygraph& P, Dim n) {
  Polygraph out;
  for (Dim k = 0; k <= std::min(n, P.top_dim()); ++k)
    for (const Generator& g : P.at_dim(k)) out.add(g);
  return out;
}

Polygraph include_up(const Polygraph& P, Dim n) {
  for (Dim k = n + 1; k <= P.top_dim(); ++k)
    if (!P.at_dim(k).empty())
      throw DomainError("include_up: polygraph has generators above dimension " +
                        std::to_string(n));
  Polygraph out = P;
  out.reserve_dims(n);
  return out;
}

}  // namespace precat
