#include <doctest.h>

#include "complicial/catalog.hpp"
#include "complicial/categorify.hpp"
#include "complicial/standard.hpp"

using namespace complicial;

TEST_CASE("representables present the orientals") {
  for (int m = 0; m <= 3; ++m) {
    const auto p = categorify(standard(Shape::Delta, m, 0, 4));
    CHECK(validate(p).valid());
    const auto ev = evaluate(p);
    INFO("m=" << m << " " << ev.refusal);
    REQUIRE(ev.ok());
    CHECK(find_isomorphism(*ev.category, oriental2(m)).has_value());
  }
}

TEST_CASE("the marked edge presents the free adjoint equivalence") {
  for (int dim = 1; dim <= 4; ++dim) {
    const auto p = categorify(standard(Shape::DeltaT, 1, 0, dim));
    CHECK(structurally_equal(p, free_adjoint_equivalence_presentation()));
  }
}

TEST_CASE("the marked triangle presents the inverted triangle") {
  const auto p = categorify(standard(Shape::DeltaT, 2, 0, 3));
  CHECK(p.two_generators.size() == 2);
  CHECK(p.relations.size() == 2);
  const auto ev = evaluate(p);
  REQUIRE(ev.ok());
  CHECK(find_isomorphism(*ev.category, inverted_triangle()).has_value());
}

TEST_CASE("higher markings contribute nothing") {
  for (int m = 3; m <= 4; ++m) {
    const auto plain = categorify(standard(Shape::Delta, m, 0, 5));
    const auto marked = categorify(standard(Shape::DeltaT, m, 0, 5));
    CHECK(structurally_equal(plain, marked));
  }
}

TEST_CASE("the boundary of a triangle is free") {
  const auto p = categorify(standard(Shape::Boundary, 2, 0, 3));
  CHECK(p.one_generators.size() == 3);
  CHECK(p.two_generators.empty());
  CHECK(p.relations.empty());
  const auto ev = evaluate_free(p);
  REQUIRE(ev.ok());
  std::size_t non_identity = 0;
  for (Id f = 0; f < static_cast<Id>(ev.category->one_cell_count()); ++f) non_identity += !ev.category->one_cell(f).identity;
  CHECK(non_identity == 4);
}

TEST_CASE("degenerate simplices contribute no generators") {
  // Raising the truncation adds only degenerate simplices to Δ[2].
  const auto low = categorify(standard(Shape::Delta, 2, 0, 2));
  const auto high = categorify(standard(Shape::Delta, 2, 0, 5));
  CHECK(structurally_equal(low, high));
  CHECK(structurally_equal(categorify(standard(Shape::Delta, 0, 0, 4)), TwoPolygraph{{"0"}, {}, {}, {}, {}, {}}));
}

TEST_CASE("the counit satisfies every relation on the catalog") {
  for (const auto& nc : test_catalog()) {
    const CounitContext ctx(nc.category, 4);
    const auto rep = ctx.verify();
    INFO(nc.name);
    CHECK(rep.ok());
    CHECK(rep.relations_checked == ctx.presentation().relations.size());
    CHECK(validate(ctx.presentation()).valid());
  }
}

TEST_CASE("the counit of a point sends everything to identities") {
  const CounitContext ctx(chain(0), 4);
  CHECK(ctx.presentation().one_generators.empty());
  CHECK(ctx.presentation().two_generators.empty());
  CHECK(ctx.verify().ok());
}

TEST_CASE("the counit of an arrow") {
  const auto c = chain(1);
  const CounitContext ctx(c, 4);
  const auto& p = ctx.presentation();
  REQUIRE(p.one_generators.size() == 1);
  CHECK(!c.one_cell(ctx.assignment().one_cells[0]).identity);
  // Only identity completions exist, and those are zeta tokens.
  for (const auto& g : p.two_generators) CHECK(g.origin.kind == Origin::Triangle);
}

TEST_CASE("invertibility relations use actual inverses") {
  const auto& c = example("SigmaI");
  const CounitContext ctx(c, 4);
  std::size_t inverses = 0;
  for (Id g = 0; g < static_cast<Id>(ctx.presentation().two_generators.size()); ++g)
    if (ctx.presentation().two_generators[g].origin.kind == Origin::TriangleInverse) {
      ++inverses;
      const Id a = ctx.assignment().two_cells[g];
      CHECK(inverse_2cell(c, a) != kNone);
    }
  CHECK(inverses > 0);
  CHECK(ctx.verify().ok());
}

TEST_CASE("the section is the identity on hom-categories") {
  for (const auto& nc : test_catalog()) {
    const auto& c = nc.category;
    const CounitContext ctx(c, 3);
    for (Id x = 0; x < static_cast<Id>(c.object_count()); ++x)
      for (Id y = 0; y < static_cast<Id>(c.object_count()); ++y) {
        const auto r = ctx.section(x, y);
        INFO(nc.name << " " << x << "," << y);
        CHECK(r.ok());
        CHECK(r.one_cells_checked == c.hom(x, y).size());
      }
  }
  const auto& pp = example("Sigma[parallel]");
  const auto r = section_check(pp, 0, 1);
  CHECK(r.ok());
  CHECK(r.two_cells_checked >= 4);
}

TEST_CASE("derived identity composites evaluate to identities") {
  const CounitContext ctx(example("O2[2]"), 4);
  CHECK_FALSE(ctx.presentation().derived.empty());
  for (const auto& d : ctx.presentation().derived) {
    const Id v = ctx.eval(d.value);
    CHECK(ctx.category().two_cell(v).identity);
  }
}
