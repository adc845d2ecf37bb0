#ifndef PRECAT_POLYPLEX_HPP
#define PRECAT_POLYPLEX_HPP

#include <map>

#include "precat/expr.hpp"
#include "precat/support.hpp"

namespace precat {

struct PushoutResult {
  Polygraph sum;
  PolyMap inl;  // P -> sum
  PolyMap inr;  // Q -> sum
};

// Dimensionwise set pushout of generator names along H: R->P and K: R->Q,
// with boundaries transported through the injections. Generators of the sum
// are named by tagged paths ("L.x", "R.y"), the least tagged name of each
// merged class. Throws DomainError when transported boundaries of an
// identified class disagree (invalid input diagram).
PushoutResult pushout(const PolyMap& H, const PolyMap& K);

// Binary coproduct: pushout along the empty polygraph.
PushoutResult coproduct(const Polygraph& P, const Polygraph& Q);

// The map sum -> Z induced by f: P -> Z and g: Q -> Z agreeing on R.
PolyMap mediate(const PushoutResult& po, const PolyMap& f, const PolyMap& g);

// The map R -> Z out of a coproduct given f: P -> Z and g: Q -> Z.
PolyMap copair(const PushoutResult& co, const PolyMap& f, const PolyMap& g);

// Canonical relabeling of a principal element: generators renamed to
// g<dim>_<index> in the order of a fixed traversal of the distinguished
// cell. Isomorphic principal elements relabel to identical values.
struct Canonicalized {
  Element element;
  PolyMap relabel;  // original -> canonical
};
Canonicalized canonicalize_element(const Element& e);

// The universal shape of a cell: a principal, primitive element together
// with the morphism realizing the cell.
struct PolyplexLifting {
  Element shape;  // canonical form
  PolyMap map;    // shape.pol -> target polygraph
};

// Lifting by structural recursion on a formula for the cell.
PolyplexLifting polyplex_lift_expr(const Polygraph& P, const ExprPtr& formula);

// Lifting of an element, using the canonical formula of its normal form.
PolyplexLifting polyplex_lift(const Element& e);

// The isomorphism between two liftings of the same element, commuting with
// their maps. Throws DomainError on mismatched liftings and InternalError
// if no isomorphism is found (the theory guarantees one).
PolyMap element_iso(const PolyplexLifting& L1, const PolyplexLifting& L2);

// True iff the lifting map of e is an isomorphism.
bool is_polyplex(const Element& e);

// A map out of the globe classifying u is generic iff (P,u) is a polyplex.
bool is_generic(const Polygraph& P, const CellPtr& u);

// Pushforward of the all-ones vector on the lifting shape: how many times
// each generator of P is used by the universal shape of the cell.
std::map<GenRef, int> polyplex_measure(const Element& e);

// The n-globe polygraph with its top generator cell.
Element build_Dn(Dim n);

// The composable-pair polygraph with one k-cell and one l-cell glued at
// dimension min(k,l)-1, together with their composite.
Element build_Dkl(Dim k, Dim l);

}  // namespace precat

#endif
