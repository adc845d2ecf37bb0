#ifndef PRECAT_ORACLE_HPP
#define PRECAT_ORACLE_HPP

#include <random>
#include <utility>
#include <vector>

#include "precat/compose.hpp"
#include "precat/expr.hpp"
#include "precat/polygraph.hpp"

namespace precat {

// The oracle evaluates formal composition expressions by orienting the
// precategory axioms as a rewriting system on expression trees. It is kept
// independent of the normal-form composition path: boundaries and identity
// slots are recovered through expression-level rewriting only, so that
// agreement between normalize_expr and compose is a meaningful check.

// Dimension of a well-formed expression (generator names resolved in P;
// ambiguous cross-dimension names are rejected).
Dim expr_dim(const Polygraph& P, const ExprPtr& e);

// Throws DomainError naming the offending subterm when e is not a valid
// cell expression over P (bad arity/dimension pairing or boundary mismatch).
void typecheck(const Polygraph& P, const ExprPtr& e);

// Expression for the iterated source/target of a well-typed expression.
ExprPtr boundary_expr(const Polygraph& P, const ExprPtr& e, Sign s, Dim k);

// Rewrites a well-typed expression to its normal form. The oriented rules,
// applied innermost-leftmost:
//   (A)  comp_i(comp_i(a,b),c)        -> comp_i(a,comp_i(b,c))
//   (IL) comp_i(id(a),b)              -> b                 if dim(a)+1 <= dim(b)
//                                     -> id(comp_i(a,b))   otherwise
//   (IR) comp_i(a,id(b))              -> a                 if dim(b)+1 <= dim(a)
//                                     -> id(comp_i(a,b))   otherwise
//   (DR) comp_i(comp_j(a,b),c), i<j   -> comp_j(comp_i(a,c),comp_i(b,c))
//   (DL) comp_i(a,comp_j(b,c)), i<j   -> comp_j(comp_i(a,b),comp_i(a,c))
// Rule order at a node: IL, IR, A, DR, DL.
ExprPtr rewrite_nf(const Polygraph& P, const ExprPtr& e);

// All expressions reachable from e by one rewrite step anywhere in the tree
// (for confluence testing).
std::vector<ExprPtr> rewrite_one_steps(const Polygraph& P, const ExprPtr& e);

// Typechecks, rewrites, and reads the resulting normal form off as a Cell.
CellPtr normalize_expr(const Polygraph& P, const ExprPtr& e);

// Canonical expression of a normal form; normalize_expr is a left inverse.
ExprPtr cell_to_expr(const CellPtr& u);

// A random well-typed expression over P, seeded; the budget bounds the size
// of the underlying cell and the amount of scrambling. Throws DomainError
// when P has no cells to draw from.
ExprPtr random_expr(const Polygraph& P, uint64_t seed, int size_budget);

// Two expressions denoting the same cell, obtained by two independent random
// walks of axiom instances from a common start. walk_length 0 gives two
// identical expressions.
std::pair<ExprPtr, ExprPtr> random_equal_pair(const Polygraph& P, uint64_t seed,
                                              int walk_length);

// One random walk over a given expression (used to produce alternative
// formulas for a fixed cell).
ExprPtr walk_expr(const Polygraph& P, const ExprPtr& e, std::mt19937_64& rng,
                  int steps);

}  // namespace precat

#endif
