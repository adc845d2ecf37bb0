#ifndef PRECAT_SUPPORT_HPP
#define PRECAT_SUPPORT_HPP

#include <optional>
#include <set>
#include <vector>

#include "precat/polymap.hpp"

namespace precat {

// The set of generators occurring in u, closed under boundaries of the
// occurring generators; sorted by (dim, name).
std::vector<GenRef> supp(const Polygraph& P, const CellPtr& u);
std::set<GenRef> supp_set(const Polygraph& P, const CellPtr& u);

struct Restriction {
  Polygraph pol;      // the sub-polygraph on supp(u)
  PolyMap inclusion;  // mono into P
  CellPtr cell;       // u transported (same names)
};

Restriction restrict_to_support(const Polygraph& P, const CellPtr& u);

// supp(cell) covers every generator of the polygraph.
bool is_principal(const Element& e);

// The unique element morphism src -> tgt when one exists; requires src
// principal (throws DomainError otherwise). Built by parallel structural
// traversal of the two normal forms; any inconsistency yields nullopt.
std::optional<PolyMap> unique_morphism(const Element& src, const Element& tgt);

}  // namespace precat

#endif
