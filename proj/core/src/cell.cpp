#include "precat/cell.hpp"

#include <sstream>

namespace precat {

CellPtr make_point(std::string name) {
  auto c = std::make_shared<Cell>();
  c->dim = 0;
  c->kind = Cell::Kind::Point;
  c->point = std::move(name);
  return c;
}

CellPtr make_identity_cell(CellPtr base) {
  if (!base) throw InternalError("make_identity_cell: null base");
  auto c = std::make_shared<Cell>();
  c->dim = base->dim + 1;
  c->kind = Cell::Kind::Identity;
  c->base = std::move(base);
  return c;
}

CellPtr make_whiskers(Dim dim, std::vector<Entry> entries) {
  if (dim < 1) throw InternalError("make_whiskers: dimension must be >= 1");
  if (entries.empty()) throw InternalError("make_whiskers: empty chain");
  for (const auto& e : entries)
    if (static_cast<Dim>(e.ctx.pairs.size()) != dim - 1)
      throw InternalError("make_whiskers: context depth does not match dimension");
  auto c = std::make_shared<Cell>();
  c->dim = dim;
  c->kind = Cell::Kind::Whiskers;
  c->entries = std::move(entries);
  return c;
}

bool equal(const Context& a, const Context& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (size_t j = 0; j < a.pairs.size(); ++j)
    if (!equal(a.pairs[j].left, b.pairs[j].left) ||
        !equal(a.pairs[j].right, b.pairs[j].right))
      return false;
  return true;
}

bool equal(const CellPtr& a, const CellPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->dim != b->dim || a->kind != b->kind) return false;
  switch (a->kind) {
    case Cell::Kind::Point:
      return a->point == b->point;
    case Cell::Kind::Identity:
      return equal(a->base, b->base);
    case Cell::Kind::Whiskers: {
      if (a->entries.size() != b->entries.size()) return false;
      for (size_t t = 0; t < a->entries.size(); ++t) {
        if (a->entries[t].gen != b->entries[t].gen) return false;
        if (!equal(a->entries[t].ctx, b->entries[t].ctx)) return false;
      }
      return true;
    }
  }
  return false;
}

static int compare_ctx(const Context& a, const Context& b) {
  if (a.pairs.size() != b.pairs.size())
    return a.pairs.size() < b.pairs.size() ? -1 : 1;
  for (size_t j = 0; j < a.pairs.size(); ++j) {
    if (int c = compare(a.pairs[j].left, b.pairs[j].left)) return c;
    if (int c = compare(a.pairs[j].right, b.pairs[j].right)) return c;
  }
  return 0;
}

int compare(const CellPtr& a, const CellPtr& b) {
  if (a.get() == b.get()) return 0;
  if (!a) return b ? -1 : 0;
  if (!b) return 1;
  if (a->dim != b->dim) return a->dim < b->dim ? -1 : 1;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case Cell::Kind::Point:
      return a->point.compare(b->point) < 0 ? -1 : (a->point == b->point ? 0 : 1);
    case Cell::Kind::Identity:
      return compare(a->base, b->base);
    case Cell::Kind::Whiskers: {
      if (a->entries.size() != b->entries.size())
        return a->entries.size() < b->entries.size() ? -1 : 1;
      for (size_t t = 0; t < a->entries.size(); ++t) {
        int c = a->entries[t].gen.compare(b->entries[t].gen);
        if (c) return c < 0 ? -1 : 1;
        if (int cc = compare_ctx(a->entries[t].ctx, b->entries[t].ctx)) return cc;
      }
      return 0;
    }
  }
  return 0;
}

Dim true_dim(const CellPtr& u) {
  const Cell* c = u.get();
  while (c->kind == Cell::Kind::Identity) c = c->base.get();
  return c->dim;
}

static void show_rec(const CellPtr& u, std::ostream& os) {
  switch (u->kind) {
    case Cell::Kind::Point:
      os << u->point;
      return;
    case Cell::Kind::Identity:
      os << "1(";
      show_rec(u->base, os);
      os << ")";
      return;
    case Cell::Kind::Whiskers: {
      bool first_entry = true;
      for (const auto& e : u->entries) {
        if (!first_entry) os << " * ";
        first_entry = false;
        os << "[";
        for (size_t j = 0; j < e.ctx.pairs.size(); ++j) {
          if (j) os << "|";
          show_rec(e.ctx.pairs[j].left, os);
          os << ",";
          show_rec(e.ctx.pairs[j].right, os);
        }
        os << "]" << e.gen;
      }
      return;
    }
  }
}

std::string show(const CellPtr& u) {
  std::ostringstream os;
  show_rec(u, os);
  return os.str();
}

bool context_is_all_identity(const Context& ctx) {
  for (const auto& p : ctx.pairs)
    if (!p.left->is_identity() || !p.right->is_identity()) return false;
  return true;
}

Classification classify(const CellPtr& u) {
  Classification cl;
  switch (u->kind) {
    case Cell::Kind::Point:
      cl.tag = Classification::Tag::IsGenerator;
      cl.name = u->point;
      return cl;
    case Cell::Kind::Identity:
      cl.tag = Classification::Tag::IsIdentity;
      cl.base = u->base;
      return cl;
    case Cell::Kind::Whiskers:
      if (u->entries.size() == 1 && context_is_all_identity(u->entries[0].ctx)) {
        cl.tag = Classification::Tag::IsGenerator;
        cl.name = u->entries[0].gen;
      } else {
        cl.tag = Classification::Tag::IsComposite;
      }
      return cl;
  }
  throw InternalError("classify: bad kind");
}

}  // namespace precat
