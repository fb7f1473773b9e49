#include <doctest.h>

#include "complicial/catalog.hpp"
#include "complicial/factorization.hpp"

using namespace complicial;

TEST_CASE("the replay passes on small examples") {
  for (const char* name : {"[0]", "[1]", "I", "SigmaI"}) {
    std::vector<Stage> trace;
    const auto rep = verify_factorization(example(name), 4, &trace);
    INFO(name);
    for (const auto& i : rep.issues) INFO(i);
    CHECK(rep.passed());
    CHECK(rep.final_isomorphic);
    CHECK(rep.composite_matches);
    REQUIRE(trace.size() == rep.stages.size());
    for (const auto& s : trace) CHECK(validate(s.set).valid());
  }
}

TEST_CASE("gluing simplices lie in the nerve") {
  const auto& c = example("SigmaI");
  const FactorizationReplay r(c, 4);
  for (const auto& p : invertible_2cells(c)) {
    if (c.two_cell(p.cell).identity) continue;
    CHECK(r.nerve().find(4, r.saturation_simplex(p.cell)) != kNone);
  }
  for (const auto& e : r.all_completions()) CHECK(r.nerve().find(3, r.equivalence_simplex(e)) != kNone);
  for (Id t : r.thinness_triangles()) CHECK(r.nerve().find(3, r.thinness_simplex(t)) != kNone);
}

TEST_CASE("the token quotient after the first stage is a retract") {
  const FactorizationReplay r(example("I"), 4);
  const auto p1 = r.stage_p1();
  RetractCheck check;
  const auto p2 = r.stage_p2(p1, &check);
  CHECK(check.ok());
  CHECK(is_stratified(p2.set));
}

TEST_CASE("stages keep the underlying simplicial set") {
  const FactorizationReplay r(example("OO2[2]"), 4);
  const auto p1 = r.stage_p1();
  const auto p2 = r.stage_p2(p1);
  const auto p3 = r.stage_p3(p2);
  const auto p4 = r.stage_p4(p3);
  for (const Stage* s : {&p1, &p2, &p3, &p4}) {
    INFO(s->name);
    for (int m = 0; m <= 4; ++m) CHECK(s->set.size(m) == r.rs().size(m));
    CHECK(is_identity_on_simplices(s->from_previous));
  }
  TDeltaMap iso;
  const auto fin = r.final_quotient(p3, p4, &iso);
  CHECK(is_bijective(iso, r.natural()));
}
