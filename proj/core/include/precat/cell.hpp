#ifndef PRECAT_CELL_HPP
#define PRECAT_CELL_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "precat/errors.hpp"

namespace precat {

using Dim = int;

struct Cell;
using CellPtr = std::shared_ptr<const Cell>;

// One whiskering level of a context: a pair of cells of equal dimension
// composed on the left and on the right of everything inside.
struct WhiskerPair {
  CellPtr left;
  CellPtr right;
};

// Nested whiskers around a generator of dimension m: pairs for levels
// 1..m-1, stored innermost first (pairs[j-1] has dimension j). Slots where
// nothing is composed hold explicit identity cells, never null.
struct Context {
  std::vector<WhiskerPair> pairs;
};

// One factor of a top-dimensional chain: a context applied to a generator.
struct Entry {
  Context ctx;
  std::string gen;
};

// A cell of a free precategory in normal form.
//
// dim 0:   Point(name of a 0-generator)
// dim m>0: Identity(base cell of dimension m-1), or a nonempty chain of
//          whiskered generators composed at dimension m-1.
struct Cell {
  enum class Kind { Point, Identity, Whiskers };

  Dim dim = 0;
  Kind kind = Kind::Point;
  std::string point;           // Kind::Point
  CellPtr base;                // Kind::Identity
  std::vector<Entry> entries;  // Kind::Whiskers

  bool is_point() const { return kind == Kind::Point; }
  bool is_identity() const { return kind == Kind::Identity; }
  bool is_whiskers() const { return kind == Kind::Whiskers; }
};

CellPtr make_point(std::string name);
CellPtr make_identity_cell(CellPtr base);
CellPtr make_whiskers(Dim dim, std::vector<Entry> entries);

bool equal(const CellPtr& a, const CellPtr& b);
bool equal(const Context& a, const Context& b);

// Total order on cells (structural, lexicographic); used for deterministic
// sorting and bucketing.
int compare(const CellPtr& a, const CellPtr& b);

// Dimension of the first non-identity layer: dim(u) minus the number of
// leading Identity wrappers.
Dim true_dim(const CellPtr& u);

// Compact single-line rendering, for diagnostics and deterministic keys.
std::string show(const CellPtr& u);

struct Classification {
  enum class Tag { IsIdentity, IsGenerator, IsComposite };
  Tag tag;
  CellPtr base;      // IsIdentity
  std::string name;  // IsGenerator
};

// IsGenerator iff u is a single whisker entry with all-identity context
// (0-cells count as generators); IsIdentity iff the top layer is an
// identity; IsComposite otherwise.
Classification classify(const CellPtr& u);

bool context_is_all_identity(const Context& ctx);

}  // namespace precat

#endif
