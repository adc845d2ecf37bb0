#ifndef PRECAT_COMPOSE_HPP
#define PRECAT_COMPOSE_HPP

#include <span>
#include <vector>

#include "precat/polygraph.hpp"

namespace precat {

enum class Sign { Src, Tgt };

// The identity cell on u, one dimension up.
CellPtr identity(const CellPtr& u);

// Iterated source (Sign::Src) or target (Sign::Tgt) of u at dimension k,
// in normal form. boundary(u, s, dim u) is u itself.
CellPtr boundary(const Polygraph& P, const CellPtr& u, Sign s, Dim k);

// Normalizing composition u *_i v. Requires i = min(dim u, dim v) - 1 and
// matching boundaries at dimension i; throws DomainError otherwise.
CellPtr compose(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v);

// Left fold of compose over a nonempty list.
CellPtr compose_many(const Polygraph& P, std::span<const CellPtr> cells, Dim i);

// Evaluation of a context at a cell whose type matches: plugs u into the
// hole and normalizes.
CellPtr eval_context(const Polygraph& P, const Context& E, const CellPtr& u);

// The cell of the free precategory given by a bare generator: a point for
// dimension 0, otherwise a single whisker entry with all-identity context.
CellPtr generator_cell(const Polygraph& P, Dim dim, const std::string& name);
CellPtr generator_cell(const Polygraph& P, const Generator& g);

bool composable(const Polygraph& P, const CellPtr& u, Dim i, const CellPtr& v);

}  // namespace precat

#endif
