#ifndef PRECAT_POLYGRAPH_HPP
#define PRECAT_POLYGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "precat/cell.hpp"

namespace precat {

// A generator: name scoped per dimension, with boundary cells of the free
// precategory one dimension below (absent for dimension 0).
struct Generator {
  std::string name;
  Dim dim = 0;
  CellPtr src;  // null iff dim == 0
  CellPtr tgt;  // null iff dim == 0
};

using GenRef = std::pair<Dim, std::string>;

// Dimension-indexed tables of generators. The container is deliberately dumb:
// it can hold structurally broken data (dangling boundary names, non-parallel
// boundaries) so that validate_polygraph can report on it.
class Polygraph {
 public:
  Polygraph() = default;

  // Insertion order is preserved inside each dimension.
  void add(Generator g);

  // Ensures tables exist (possibly empty) up to dimension n.
  void reserve_dims(Dim n);

  Dim top_dim() const;  // -1 when empty
  const std::vector<Generator>& at_dim(Dim k) const;
  const Generator* find(Dim k, const std::string& name) const;
  const Generator& require(Dim k, const std::string& name) const;
  size_t generator_count() const;
  std::vector<GenRef> all_generators() const;  // sorted by (dim, table order)

  bool operator==(const Polygraph& other) const;

 private:
  std::vector<std::vector<Generator>> dims_;
  std::vector<std::map<std::string, size_t>> index_;
  static const std::vector<Generator> empty_;
};

// A cell together with the polygraph it lives over.
struct Element {
  Polygraph pol;
  CellPtr cell;
};

struct ValidationIssue {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const {
    for (const auto& i : issues)
      if (i.severity == ValidationIssue::Severity::Error) return false;
    return true;
  }
  void error(std::string msg) {
    issues.push_back({ValidationIssue::Severity::Error, std::move(msg)});
  }
  void warning(std::string msg) {
    issues.push_back({ValidationIssue::Severity::Warning, std::move(msg)});
  }
};

// Structural validation: boundary references resolve, boundary cells are
// well-formed, sources and targets are parallel (globularity), names are
// sane. Cross-dimension name collisions go to the warning channel.
ValidationReport validate_polygraph(const Polygraph& P);

// Checks that u is a well-formed normal form over P (dimensions, generator
// references, composability of consecutive entries, whisker boundary
// conditions, identity slots carrying the forced boundary identities).
ValidationReport validate_cell(const Polygraph& P, const CellPtr& u);

// Drops all generators of dimension > n.
Polygraph truncate(const Polygraph& P, Dim n);

// Reinterprets P as an n-polygraph with empty higher tables; throws
// DomainError when n is below the top dimension of P.
Polygraph include_up(const Polygraph& P, Dim n);

}  // namespace precat

#endif
