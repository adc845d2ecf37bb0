#ifndef PRECAT_POLYMAP_HPP
#define PRECAT_POLYMAP_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "precat/polygraph.hpp"

namespace precat {

// A morphism of polygraphs: dimensionwise assignment of generator names,
// compatible with boundaries.
struct PolyMap {
  Polygraph src;
  Polygraph tgt;
  std::vector<std::map<std::string, std::string>> assign;

  const std::string& image(Dim k, const std::string& name) const;
  bool has_image(Dim k, const std::string& name) const;
  void set(Dim k, const std::string& from, std::string to);
};

PolyMap identity_polymap(const Polygraph& P);

// Empty report iff F is a valid morphism: total on src generators, images
// exist in tgt, and boundaries are preserved by the free application.
ValidationReport check_polymap(const PolyMap& F);

// The free functor on cells: structural renaming of the normal form. On
// valid maps this is already normal (generators map to generators, identity
// whiskers stay identities).
CellPtr apply_free(const PolyMap& F, const CellPtr& u);

// G after F; requires F.tgt == G.src.
PolyMap compose_polymap(const PolyMap& F, const PolyMap& G);

struct MonoWitness {
  Dim dim;
  std::string a, b;  // distinct generators with a common image
};

// Dimensionwise injectivity, which characterizes monomorphisms of
// polygraphs and of the free precategories they generate.
std::optional<MonoWitness> mono_witness(const PolyMap& F);
bool is_mono(const PolyMap& F);

bool is_iso(const PolyMap& F);
PolyMap inverse(const PolyMap& F);  // requires is_iso

}  // namespace precat

#endif
