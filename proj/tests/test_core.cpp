#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "precat/compose.hpp"
#include "precat/enumerate.hpp"

using namespace precat;
using precat::testing::fix_eh;
using precat::testing::fix_int;
using precat::testing::nf;

TEST_CASE("fixture polygraphs validate cleanly", "[core][validate]") {
  REQUIRE(validate_polygraph(fix_int()).ok());
  REQUIRE(validate_polygraph(fix_eh()).ok());
  REQUIRE(validate_polygraph(fix_int()).issues.empty());
}

TEST_CASE("dangling boundary reference is reported", "[core][validate]") {
  Polygraph P;
  P.add(Generator{"x", 0, nullptr, nullptr});
  P.add(Generator{"f", 1, make_point("missing"), make_point("x")});
  auto rep = validate_polygraph(P);
  REQUIRE_FALSE(rep.ok());
  size_t errors = 0;
  for (const auto& i : rep.issues)
    if (i.severity == ValidationIssue::Severity::Error) ++errors;
  REQUIRE(errors == 1);
}

TEST_CASE("non-parallel boundaries are reported", "[core][validate]") {
  Polygraph P = fix_int();
  // src f : x -> y, tgt g : y -> z are not parallel
  P.add(Generator{"bad", 2, nf(fix_int(), "gen f"), nf(fix_int(), "gen g")});
  REQUIRE_FALSE(validate_polygraph(P).ok());
}

TEST_CASE("cross-dimension name collision warns", "[core][validate]") {
  Polygraph P;
  P.add(Generator{"a", 0, nullptr, nullptr});
  P.add(Generator{"a", 1, make_point("a"), make_point("a")});
  auto rep = validate_polygraph(P);
  REQUIRE(rep.ok());
  REQUIRE(rep.issues.size() == 1);
  REQUIRE(rep.issues[0].severity == ValidationIssue::Severity::Warning);
}

TEST_CASE("boundary of a generator is its stored data", "[core][boundary]") {
  Polygraph P = fix_int();
  CellPtr phi = nf(P, "gen phi");
  REQUIRE(equal(boundary(P, phi, Sign::Src, 1), nf(P, "gen f")));
  REQUIRE(equal(boundary(P, phi, Sign::Tgt, 1), nf(P, "gen f'")));
  REQUIRE(equal(boundary(P, phi, Sign::Src, 0), nf(P, "gen x")));
  REQUIRE(equal(boundary(P, phi, Sign::Tgt, 0), nf(P, "gen y")));
}

TEST_CASE("boundary through identities and composites", "[core][boundary]") {
  Polygraph P = fix_int();
  CellPtr f = nf(P, "gen f");
  REQUIRE(equal(boundary(P, identity(f), Sign::Src, 1), f));
  REQUIRE(equal(boundary(P, identity(f), Sign::Tgt, 1), f));

  CellPtr c = compose(P, nf(P, "gen phi"), 0, nf(P, "gen g"));
  CellPtr fg = nf(P, "comp_0(gen f,gen g)");
  REQUIRE(equal(boundary(P, c, Sign::Src, 1), fg));
  REQUIRE(fg->is_whiskers());
  REQUIRE(fg->entries.size() == 2);

  // boundary at the cell's own dimension is the cell
  REQUIRE(equal(boundary(P, c, Sign::Src, 2), c));
  REQUIRE_THROWS_AS(boundary(P, f, Sign::Src, 2), DomainError);
}

TEST_CASE("globularity and downward idempotence on sampled cells",
          "[core][boundary][property]") {
  Polygraph P = fix_int();
  EnumBounds b;
  b.max_chain = 3;
  b.max_slot_chain = 2;
  for (const CellPtr& u : enumerate_cells(P, 2, b)) {
    if (u->dim < 2) continue;
    for (Dim j = 0; j + 1 < u->dim; ++j) {
      for (Sign s : {Sign::Src, Sign::Tgt}) {
        CellPtr a = boundary(P, boundary(P, u, s, j + 1), Sign::Src, j);
        CellPtr b2 = boundary(P, boundary(P, u, s == Sign::Src ? Sign::Tgt : Sign::Src, j + 1),
                              Sign::Src, j);
        REQUIRE(equal(a, b2));
      }
      REQUIRE(equal(boundary(P, boundary(P, u, Sign::Src, j + 1), Sign::Src, j),
                    boundary(P, u, Sign::Src, j)));
    }
  }
}

TEST_CASE("eval_context examples", "[core][context]") {
  Polygraph P = fix_int();
  CellPtr x = nf(P, "gen x");
  REQUIRE(equal(eval_context(P, Context{}, x), x));

  Context E;
  E.pairs.push_back({make_identity_cell(x), nf(P, "gen g")});
  CellPtr phi = nf(P, "gen phi");
  REQUIRE(equal(eval_context(P, E, phi), nf(P, "comp_0(gen phi,gen g)")));

  Context bad;
  bad.pairs.push_back({nf(P, "gen f"), nf(P, "gen g")});  // f does not abut phi
  REQUIRE_THROWS_AS(eval_context(P, bad, phi), DomainError);
}

TEST_CASE("classify", "[core][classify]") {
  Polygraph P = fix_int();
  REQUIRE(classify(nf(P, "gen phi")).tag == Classification::Tag::IsGenerator);
  REQUIRE(classify(nf(P, "gen phi")).name == "phi");
  REQUIRE(classify(nf(P, "gen x")).tag == Classification::Tag::IsGenerator);
  auto cl = classify(nf(P, "id(gen f)"));
  REQUIRE(cl.tag == Classification::Tag::IsIdentity);
  REQUIRE(equal(cl.base, nf(P, "gen f")));
  REQUIRE(classify(nf(P, "comp_0(gen phi,gen g)")).tag ==
          Classification::Tag::IsComposite);
}

TEST_CASE("truncate and include_up", "[core][truncate]") {
  Polygraph P = fix_int();
  Polygraph P1 = truncate(P, 1);
  REQUIRE(P1.top_dim() == 1);
  REQUIRE(P1.generator_count() == 7);
  REQUIRE(truncate(P, 5) == P);
  Polygraph P2 = include_up(P1, 2);
  REQUIRE(P2.top_dim() == 2);
  REQUIRE(P2.at_dim(2).empty());
  REQUIRE_THROWS_AS(include_up(P, 1), DomainError);
}

TEST_CASE("cell validation catches malformed normal forms", "[core][validate]") {
  Polygraph P = fix_int();
  REQUIRE(validate_cell(P, nf(P, "comp_1(comp_0(gen phi,gen g),comp_0(gen f',gen psi))")).ok());

  // identity slot storing the wrong boundary
  Entry e;
  e.gen = "phi";
  e.ctx.pairs.push_back({make_identity_cell(make_point("y")),
                         make_identity_cell(make_point("y"))});
  REQUIRE_FALSE(validate_cell(P, make_whiskers(2, {e})).ok());

  // non-composable chain
  CellPtr phi = nf(P, "gen phi");
  std::vector<Entry> two{phi->entries[0], phi->entries[0]};
  REQUIRE_FALSE(validate_cell(P, make_whiskers(2, two)).ok());
}

TEST_CASE("true_dim sees through identity layers", "[core]") {
  Polygraph P = fix_int();
  CellPtr u = nf(P, "id(id(gen f))");
  REQUIRE(u->dim == 3);
  REQUIRE(true_dim(u) == 1);
}
