#ifndef PRECAT_PRESHEAF_HPP
#define PRECAT_PRESHEAF_HPP

#include <string>
#include <vector>

#include "precat/polyplex.hpp"

namespace precat {

// A fragment of the terminal polygraph: one 0-generator, and inductively
// one (k+1)-generator per parallel pair of k-cells of the fragment's free
// precategory whose plex stays within the weight budget (weight = number of
// generators of the plex). Generator names are derived from the boundary
// pair, so growing the budget only ever extends the fragment.
Polygraph terminal_fragment(Dim dim_bound, int weight_bound);

struct Plex {
  Element shape;  // canonical; the distinguished cell is a generator
  int weight;
};

struct PlexTable {
  std::vector<Plex> plexes;  // deduplicated up to isomorphism, sorted
};

// One plex per generator of the terminal fragment, deduplicated up to
// isomorphism of elements and sorted by (dim, weight, canonical key).
PlexTable enumerate_plexes(Dim dim_bound, int weight_bound);

// All polygraph morphisms A -> B, by backtracking over generator images.
std::vector<PolyMap> hom_polymaps(const Polygraph& A, const Polygraph& B);

struct PlexHoms {
  Plex plex;
  std::vector<PolyMap> homs;
};

struct PresheafRealization {
  std::vector<PlexHoms> table;
};

// The presheaf realized by P on the given shape fragment: for each plex U,
// the hom-set Hom_Pol(U.pol, P). Restrictions along plex morphisms are
// precompositions and need no extra data.
PresheafRealization realize_presheaf(const Polygraph& P, const PlexTable& plexes);

struct MakkaiGenResult {
  GenRef gen;
  std::string plex_key;   // canonical serialization of the plex shape
  int plex_weight = 0;
  size_t morphisms = 0;   // element morphisms plex -> (P, gen)
  bool lifted = false;            // (d) a plex lifting exists
  bool unique_morphism_ok = false;  // (e) all element morphisms coincide
  bool liftings_isomorphic = false;  // (f) liftings compare along an iso
};

struct MakkaiReport {
  std::vector<MakkaiGenResult> gens;
  size_t generator_count = 0;
  size_t hom_total = 0;  // sum of |Hom(U,P)| over distinct plex classes
  bool concrete = false;  // hom_total == generator_count
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

// Desk-scale verification of the presheaf-category conditions on P: per
// generator, a plex lifting exists, the element morphism from it is unique,
// and any two liftings are compatibly isomorphic; plus the counting
// consequence that generators of P are in bijection with plex-shaped homs.
MakkaiReport makkai_check(const Polygraph& P);

}  // namespace precat

#endif
