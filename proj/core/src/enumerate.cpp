#include "precat/enumerate.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "precat/compose.hpp"

namespace precat {

namespace {

std::string polygraph_key(const Polygraph& P) {
  std::ostringstream os;
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k)) {
      os << k << ":" << g.name;
      if (k >= 1) os << "=" << show(g.src) << ">" << show(g.tgt);
      os << ";";
    }
  return os.str();
}

void check_budget(size_t n, const EnumBounds& b) {
  if (n > b.max_cells)
    throw DomainError("enumerate_cells: bound exceeded (" + std::to_string(n) +
                      " cells)");
}

}  // namespace

std::vector<CellPtr> enumerate_cells(const Polygraph& P, Dim d, const EnumBounds& b) {
  if (d < 0) return {};
  std::vector<CellPtr> out;
  if (d == 0) {
    for (const Generator& g : P.at_dim(0)) out.push_back(make_point(g.name));
    return out;
  }
  std::vector<CellPtr> lower = enumerate_cells(P, d - 1, b);
  for (const CellPtr& c : lower) out.push_back(make_identity_cell(c));

  EnumBounds slot_bounds = b;
  slot_bounds.max_chain = b.max_slot_chain;

  // Whisker entries: per generator, fill context levels bottom-up; slot
  // candidates are constrained by the boundary they must abut.
  std::vector<std::vector<CellPtr>> slot_cells(d);  // by dimension 1..d-1
  for (Dim j = 1; j <= d - 1; ++j) slot_cells[j] = enumerate_cells(P, j, slot_bounds);

  std::vector<Entry> entries;
  for (const Generator& g : P.at_dim(d)) {
    std::vector<Context> partial{Context{}};
    for (Dim j = 1; j <= d - 1; ++j) {
      std::vector<Context> next;
      for (const Context& ctx : partial) {
        CellPtr S = eval_context(P, ctx, boundary(P, g.src, Sign::Src, j - 1));
        CellPtr T = eval_context(P, ctx, boundary(P, g.tgt, Sign::Tgt, j - 1));
        std::vector<CellPtr> lefts{make_identity_cell(S)};
        std::vector<CellPtr> rights{make_identity_cell(T)};
        for (const CellPtr& c : slot_cells[j]) {
          if (c->is_identity()) continue;
          if (equal(boundary(P, c, Sign::Tgt, j - 1), S)) lefts.push_back(c);
          if (equal(boundary(P, c, Sign::Src, j - 1), T)) rights.push_back(c);
        }
        for (const CellPtr& l : lefts)
          for (const CellPtr& r : rights) {
            Context c2 = ctx;
            c2.pairs.push_back({l, r});
            next.push_back(std::move(c2));
            check_budget(next.size(), b);
          }
      }
      partial = std::move(next);
    }
    for (Context& ctx : partial) entries.push_back({std::move(ctx), g.name});
    check_budget(entries.size(), b);
  }

  // Chains of composable entries up to the chain bound.
  std::vector<CellPtr> singles;
  std::vector<std::string> src_keys, tgt_keys;
  for (const Entry& e : entries) {
    CellPtr cell = make_whiskers(d, {e});
    singles.push_back(cell);
    src_keys.push_back(show(boundary(P, cell, Sign::Src, d - 1)));
    tgt_keys.push_back(show(boundary(P, cell, Sign::Tgt, d - 1)));
  }
  std::vector<std::pair<std::vector<Entry>, std::string>> frontier;
  for (size_t t = 0; t < entries.size(); ++t) {
    out.push_back(singles[t]);
    frontier.push_back({{entries[t]}, tgt_keys[t]});
  }
  for (int len = 2; len <= b.max_chain; ++len) {
    std::vector<std::pair<std::vector<Entry>, std::string>> next;
    for (const auto& [chain, tkey] : frontier) {
      for (size_t t = 0; t < entries.size(); ++t) {
        if (src_keys[t] != tkey) continue;
        std::vector<Entry> longer = chain;
        longer.push_back(entries[t]);
        out.push_back(make_whiskers(d, longer));
        check_budget(out.size(), b);
        next.push_back({std::move(longer), tgt_keys[t]});
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<CellPtr> enumerate_all_cells(const Polygraph& P, const EnumBounds& b) {
  std::vector<CellPtr> out;
  for (Dim d = 0; d <= P.top_dim() + 1; ++d) {
    auto cells = enumerate_cells(P, d, b);
    out.insert(out.end(), cells.begin(), cells.end());
  }
  return out;
}

CellPtr sample_cell(const Polygraph& P, std::mt19937_64& rng, const EnumBounds& b) {
  static std::mutex mu;
  static std::map<std::string, std::vector<CellPtr>> cache;
  std::string key = polygraph_key(P) + "#" + std::to_string(b.max_chain) + "," +
                    std::to_string(b.max_slot_chain);
  std::vector<CellPtr>* cells = nullptr;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_all_cells(P, b)).first;
    cells = &it->second;
  }
  if (cells->empty()) return nullptr;
  return (*cells)[rng() % cells->size()];
}

Polygraph random_polygraph(uint64_t seed, Dim max_dim, int max_per_dim) {
  std::mt19937_64 rng(seed);
  Polygraph P;
  if (max_per_dim < 1) max_per_dim = 1;
  int n0 = 1 + static_cast<int>(rng() % max_per_dim);
  for (int t = 0; t < n0; ++t)
    P.add(Generator{"x" + std::to_string(t), 0, nullptr, nullptr});
  EnumBounds bounds;
  bounds.max_chain = 2;
  bounds.max_slot_chain = 1;
  for (Dim k = 1; k <= max_dim; ++k) {
    std::vector<CellPtr> pool = enumerate_cells(P, k - 1, bounds);
    if (pool.empty()) break;
    std::map<std::string, std::vector<CellPtr>> parallel;
    for (const CellPtr& c : pool) {
      std::string key =
          k - 1 == 0 ? std::string("pt")
                     : show(boundary(P, c, Sign::Src, k - 2)) + ">" +
                           show(boundary(P, c, Sign::Tgt, k - 2));
      parallel[key].push_back(c);
    }
    int nk = static_cast<int>(rng() % (max_per_dim + 1));
    for (int t = 0; t < nk; ++t) {
      const CellPtr& s = pool[rng() % pool.size()];
      std::string key = k - 1 == 0 ? std::string("pt")
                                   : show(boundary(P, s, Sign::Src, k - 2)) + ">" +
                                         show(boundary(P, s, Sign::Tgt, k - 2));
      const auto& bucket = parallel.at(key);
      const CellPtr& tg = bucket[rng() % bucket.size()];
      P.add(Generator{"g" + std::to_string(k) + "_" + std::to_string(t), k, s, tg});
    }
  }
  return P;
}

Polygraph prefix_names(const Polygraph& P, const std::string& prefix) {
  PolyMap ren;
  ren.src = P;
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k)) ren.set(k, g.name, prefix + g.name);
  Polygraph out;
  for (Dim k = 0; k <= P.top_dim(); ++k)
    for (const Generator& g : P.at_dim(k)) {
      Generator ng;
      ng.name = prefix + g.name;
      ng.dim = k;
      if (k >= 1) {
        ng.src = apply_free(ren, g.src);
        ng.tgt = apply_free(ren, g.tgt);
      }
      out.add(std::move(ng));
    }
  return out;
}

Polygraph disjoint_union(const Polygraph& P, const Polygraph& Q) {
  Polygraph out = P;
  for (Dim k = 0; k <= Q.top_dim(); ++k)
    for (const Generator& g : Q.at_dim(k)) {
      if (out.find(k, g.name))
        throw DomainError("disjoint_union: name clash on '" + g.name + "'");
      out.add(g);
    }
  return out;
}

PolyMap random_polymap(const Polygraph& P, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Polygraph Q = P;
  PolyMap F = identity_polymap(P);

  int merges = static_cast<int>(rng() % 4);
  for (int m = 0; m < merges; ++m) {
    // Candidate pairs: distinct same-dimension generators of Q with equal
    // boundary cells.
    std::vector<std::tuple<Dim, std::string, std::string>> cands;
    for (Dim k = 0; k <= Q.top_dim(); ++k) {
      const auto& gens = Q.at_dim(k);
      for (size_t a = 0; a < gens.size(); ++a)
        for (size_t c = a + 1; c < gens.size(); ++c)
          if (equal(gens[a].src, gens[c].src) && equal(gens[a].tgt, gens[c].tgt))
            cands.emplace_back(k, gens[a].name, gens[c].name);
    }
    if (cands.empty()) break;
    auto [k, keep, drop] = cands[rng() % cands.size()];

    PolyMap ren;
    ren.src = Q;
    for (Dim j = 0; j <= Q.top_dim(); ++j)
      for (const Generator& g : Q.at_dim(j))
        ren.set(j, g.name, j == k && g.name == drop ? keep : g.name);
    Polygraph merged;
    for (Dim j = 0; j <= Q.top_dim(); ++j)
      for (const Generator& g : Q.at_dim(j)) {
        if (j == k && g.name == drop) continue;
        Generator ng = g;
        if (j >= 1) {
          ng.src = apply_free(ren, g.src);
          ng.tgt = apply_free(ren, g.tgt);
        }
        merged.add(std::move(ng));
      }
    merged.reserve_dims(Q.top_dim());
    for (Dim j = 0; j <= P.top_dim(); ++j)
      for (const Generator& g : P.at_dim(j))
        if (F.image(j, g.name) == drop && j == k) F.set(j, g.name, keep);
    Q = merged;
  }

  if (rng() % 2 == 0) {
    Polygraph junk = prefix_names(
        random_polygraph(rng(), std::max<Dim>(1, P.top_dim()), 2), "j.");
    Q = disjoint_union(Q, junk);
  }
  F.tgt = Q;
  return F;
}

}  // namespace precat
