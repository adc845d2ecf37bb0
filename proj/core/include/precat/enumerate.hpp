#ifndef PRECAT_ENUMERATE_HPP
#define PRECAT_ENUMERATE_HPP

#include <random>
#include <vector>

#include "precat/polymap.hpp"

namespace precat {

// Bounds for exhaustive cell enumeration: chain length at the dimension
// being enumerated, and chain length inside whisker slots (applied at every
// nesting level).
struct EnumBounds {
  int max_chain = 3;
  int max_slot_chain = 2;
  size_t max_cells = 2000000;  // safety valve
};

// All cells of dimension d over P within the bounds, deterministically
// ordered. Includes identities of enumerated lower cells.
std::vector<CellPtr> enumerate_cells(const Polygraph& P, Dim d, const EnumBounds& b);

// Cells of every dimension 0..top_dim(P)+1.
std::vector<CellPtr> enumerate_all_cells(const Polygraph& P, const EnumBounds& b);

// Uniform draw from the enumerated cells (cached per polygraph and bounds);
// null when the polygraph has no cells.
CellPtr sample_cell(const Polygraph& P, std::mt19937_64& rng, const EnumBounds& b);

// Seeded random polygraph: at most max_per_dim generators per dimension up
// to max_dim, boundaries drawn from enumerated parallel pairs.
Polygraph random_polygraph(uint64_t seed, Dim max_dim, int max_per_dim);

// Seeded random valid morphism out of P, built by merging parallel
// generators with equal boundaries (possibly none) and optionally extending
// the target with generators outside the image.
PolyMap random_polymap(const Polygraph& P, uint64_t seed);

// Every generator name prefixed (boundaries rewritten accordingly).
Polygraph prefix_names(const Polygraph& P, const std::string& prefix);

// Disjoint union without renaming; caller guarantees name disjointness.
Polygraph disjoint_union(const Polygraph& P, const Polygraph& Q);

}  // namespace precat

#endif
