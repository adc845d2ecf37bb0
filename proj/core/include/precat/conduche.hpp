#ifndef PRECAT_CONDUCHE_HPP
#define PRECAT_CONDUCHE_HPP

#include <utility>
#include <vector>

#include "precat/polymap.hpp"

namespace precat {

// Given apply_free(F,u) = compose(v1,i,v2), returns the unique i-composable
// pair (u1,u2) with apply_free(F,u1)=v1, apply_free(F,u2)=v2 and
// compose(u1,i,u2)=u. Throws DomainError when the precondition fails.
std::pair<CellPtr, CellPtr> conduche_factorize(const PolyMap& F, const CellPtr& u,
                                               const CellPtr& v1, const CellPtr& v2,
                                               Dim i);

// Given apply_free(F,u) = identity(v), returns the unique u' with
// u = identity(u') and apply_free(F,u') = v.
CellPtr lift_identity(const PolyMap& F, const CellPtr& u, const CellPtr& v);

// All decompositions w = v1 *_i v2 of a normal form, including the two
// trivial ones with an identity factor.
std::vector<std::pair<CellPtr, CellPtr>> enumerate_splittings(const Polygraph& P,
                                                              const CellPtr& w,
                                                              Dim i);

}  // namespace precat

#endif
