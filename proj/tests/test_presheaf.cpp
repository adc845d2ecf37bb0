#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "precat/compose.hpp"
#include "precat/polyplex.hpp"
#include "precat/presheaf.hpp"

using namespace precat;
using precat::testing::fix_eh;
using precat::testing::fix_int;
using precat::testing::nf;

TEST_CASE("terminal fragment at low dimensions", "[presheaf][terminal]") {
  Polygraph T0 = terminal_fragment(0, 5);
  REQUIRE(T0.generator_count() == 1);
  REQUIRE(T0.at_dim(0)[0].name == "*");

  Polygraph T1 = terminal_fragment(1, 5);
  REQUIRE(T1.at_dim(0).size() == 1);
  REQUIRE(T1.at_dim(1).size() == 1);  // one parallel pair (*,*)

  Polygraph T2 = terminal_fragment(2, 7);
  REQUIRE(T2.at_dim(1).size() == 1);
  // 2-generators for pairs of parallel 1-cells (powers of the edge) within
  // the weight budget
  REQUIRE(T2.at_dim(2).size() > 1);
  REQUIRE(validate_polygraph(T2).ok());
}

TEST_CASE("plex tables at dimensions 0 and 1", "[presheaf][plexes]") {
  PlexTable t = enumerate_plexes(1, 8);
  size_t d0 = 0, d1 = 0;
  for (const Plex& p : t.plexes) {
    if (p.shape.cell->dim == 0) ++d0;
    if (p.shape.cell->dim == 1) ++d1;
    REQUIRE(classify(p.shape.cell).tag == Classification::Tag::IsGenerator);
    REQUIRE(is_polyplex(p.shape));
  }
  REQUIRE(d0 == 1);
  REQUIRE(d1 == 1);
  // the dimension-1 plex is the interval
  for (const Plex& p : t.plexes)
    if (p.shape.cell->dim == 1) {
      REQUIRE(p.shape.pol.at_dim(0).size() == 2);
      REQUIRE(p.shape.pol.at_dim(1).size() == 1);
      REQUIRE(p.weight == 3);
    }
}

TEST_CASE("plex tables grow monotonically with the budget",
          "[presheaf][plexes]") {
  PlexTable small = enumerate_plexes(2, 5);
  PlexTable large = enumerate_plexes(2, 7);
  REQUIRE(small.plexes.size() <= large.plexes.size());
  // every small-budget plex appears in the large table
  for (const Plex& p : small.plexes) {
    bool found = false;
    for (const Plex& q : large.plexes)
      if (q.shape.pol == p.shape.pol && equal(q.shape.cell, p.shape.cell))
        found = true;
    REQUIRE(found);
  }
}

TEST_CASE("dimension-3 plexes at a small budget", "[presheaf][plexes]") {
  PlexTable t = enumerate_plexes(3, 4);
  size_t d3 = 0;
  for (const Plex& p : t.plexes)
    if (p.shape.cell->dim == 3) {
      ++d3;
      REQUIRE(is_polyplex(p.shape));
      REQUIRE(p.weight <= 4);
    }
  // the doubly-degenerate shape (a 3-generator over iterated identities on a
  // point) has weight 2 and must be present
  REQUIRE(d3 >= 1);
  bool tiny = false;
  for (const Plex& p : t.plexes)
    if (p.shape.cell->dim == 3 && p.weight == 2) tiny = true;
  REQUIRE(tiny);
}

TEST_CASE("hom enumeration by backtracking", "[presheaf][hom]") {
  Polygraph P = fix_int();
  Polygraph pt;
  pt.add(Generator{"*", 0, nullptr, nullptr});
  REQUIRE(hom_polymaps(pt, P).size() == 3);
  REQUIRE(hom_polymaps(pt, pt).size() == 1);

  Element d1 = build_Dn(1);
  REQUIRE(hom_polymaps(d1.pol, P).size() == 4);
  REQUIRE(hom_polymaps(d1.pol, pt).empty());  // no 1-generator to hit

  Element d2 = build_Dn(2);
  auto homs = hom_polymaps(d2.pol, P);
  REQUIRE(homs.size() == 2);  // phi and psi
  for (const PolyMap& F : homs) REQUIRE(check_polymap(F).ok());
}

TEST_CASE("presheaf realization of the fixtures", "[presheaf]") {
  PlexTable t = enumerate_plexes(2, 7);
  PresheafRealization re = realize_presheaf(fix_int(), t);
  size_t total = 0;
  for (const PlexHoms& ph : re.table) total += ph.homs.size();
  // every hom lands some plex generator on a generator of the target, and
  // generators are counted once each
  REQUIRE(total == fix_int().generator_count());
}

TEST_CASE("makkai conditions on the fixtures", "[presheaf][makkai]") {
  for (const Polygraph& P : {fix_int(), fix_eh(), build_Dkl(2, 2).pol}) {
    MakkaiReport rep = makkai_check(P);
    INFO(P.generator_count());
    for (const auto& v : rep.violations) INFO(v);
    REQUIRE(rep.pass());
    REQUIRE(rep.concrete);
    REQUIRE(rep.hom_total == rep.generator_count);
    for (const auto& r : rep.gens) {
      REQUIRE(r.lifted);
      REQUIRE(r.morphisms == 1);
      REQUIRE(r.liftings_isomorphic);
    }
  }
}

TEST_CASE("makkai on the point is trivial", "[presheaf][makkai]") {
  Polygraph pt;
  pt.add(Generator{"*", 0, nullptr, nullptr});
  MakkaiReport rep = makkai_check(pt);
  REQUIRE(rep.pass());
  REQUIRE(rep.generator_count == 1);
  REQUIRE(rep.hom_total == 1);
}

TEST_CASE("loop-source plex is the (0,1) shape", "[presheaf][makkai]") {
  Polygraph P = fix_eh();
  PolyplexLifting L = polyplex_lift({P, nf(P, "gen alpha")});
  REQUIRE(L.shape.pol.at_dim(0).size() == 1);
  REQUIRE(L.shape.pol.at_dim(1).size() == 1);
  REQUIRE(L.shape.pol.at_dim(2).size() == 1);
  const Generator& top = L.shape.pol.at_dim(2)[0];
  REQUIRE(top.src->is_identity());
  REQUIRE(top.tgt->is_whiskers());
}
