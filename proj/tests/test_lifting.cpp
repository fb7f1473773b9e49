#include <doctest.h>

#include <cstdlib>

#include "complicial/catalog.hpp"
#include "complicial/lifting.hpp"
#include "complicial/nerve.hpp"
#include "complicial/standard.hpp"

using namespace complicial;

TEST_CASE("the extension library has the expected members") {
  const auto lib = anodyne_library(2, 5);
  CHECK(lib.size() == 44);
  std::array<int, 4> per_class{};
  for (const auto& e : lib) {
    ++per_class[static_cast<int>(e.cls)];
    INFO(e.name);
    CHECK(validate(e.source).valid());
    CHECK(validate(e.target).valid());
    CHECK(validate_map(e.source, e.target, e.inclusion).valid());
    CHECK(is_injective(e.inclusion, e.target));
  }
  CHECK(per_class[0] == 20);  // horns, m = 1..5
  CHECK(per_class[1] == 18);  // thinness, m = 2..5
  CHECK(per_class[2] == 3);   // triviality, l = 3..5
  CHECK(per_class[3] == 3);   // saturation, l = -1..1
  CHECK_THROWS_AS(anodyne_library(2, 7), InputError);
}

TEST_CASE("natural nerves of small examples lift against everything") {
  for (const char* name : {"[0]", "[1]", "I", "SigmaI"}) {
    const auto x = natural_nerve(example(name), 4);
    const auto rep = is_precomplicial(x, 2, 4);
    INFO(name);
    CHECK(rep.passed());
    CHECK_FALSE(rep.budget_exceeded());
  }
}

TEST_CASE("the RS nerve of the free isomorphism is not saturated") {
  const auto x = rs_nerve(free_isomorphism(), 4);
  const auto rep = is_precomplicial(x, 2, 4);
  CHECK_FALSE(rep.passed());
  const auto* f = rep.first_failure();
  REQUIRE(f != nullptr);
  CHECK(f->cls == AnodyneClass::Saturation);
  REQUIRE(f->witness.has_value());
  // Every other class passes.
  for (AnodyneClass c : {AnodyneClass::Horn, AnodyneClass::Thinness, AnodyneClass::Triviality}) {
    const auto& t = rep.tallies[static_cast<int>(c)];
    CHECK(t.passed == t.extensions);
  }
}

TEST_CASE("parallel and serial checks agree") {
  const auto x = rs_nerve(example("SigmaI"), 4);
  for (const auto& e : anodyne_library(2, 4)) {
    const auto a = check_extension(e, x, {}, 4);
    const auto b = check_extension_serial(e, x);
    INFO(e.name);
    CHECK(a.maps == b.maps);
    CHECK(a.failures == b.failures);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("found lifts restrict to the given map") {
  const auto x = natural_nerve(example("O2[2]"), 4);
  const auto lib = anodyne_library(2, 4);
  for (const auto& e : lib) {
    if (e.cls != AnodyneClass::Horn || e.m > 3) continue;
    std::size_t tried = 0;
    for (const auto& f : maps(e.source, x)) {
      for (bool reverse : {false, true}) {
        const auto r = find_lift(e, x, f, {}, reverse);
        INFO(e.name);
        REQUIRE(r.status == LiftStatus::Found);
        REQUIRE(r.lift.has_value());
        CHECK(validate_map(e.target, x, *r.lift).valid());
        CHECK(compose(*r.lift, e.inclusion) == f);
      }
      if (++tried == 5) break;
    }
  }
}

TEST_CASE("a tiny search budget is reported") {
  const auto x = natural_nerve(example("O2[3]"), 4);
  const auto e = thinness_extension(3, 1, 4);
  SearchBudget tiny;
  tiny.max_nodes = 3;
  const auto r = check_extension(e, x, tiny, 2);
  CHECK_FALSE(r.passed());
  CHECK((r.budget_failures > 0 || !r.enumeration_exhausted));
}

TEST_CASE("the budget can be set from the environment") {
  ::setenv("COMPLICIAL_BUDGET", "1234", 1);
  CHECK(budget_from_environment().max_nodes == 1234);
  ::setenv("COMPLICIAL_BUDGET", "lots", 1);
  CHECK_THROWS_AS(budget_from_environment(), InputError);
  ::unsetenv("COMPLICIAL_BUDGET");
  CHECK(budget_from_environment().max_nodes == SearchBudget{}.max_nodes);
}

TEST_CASE("maps out of a standard simplex are its simplices") {
  for (const char* name : {"[2]", "SigmaI", "Z2"}) {
    const auto x = natural_nerve(example(name), 4);
    for (int m = 0; m <= 4; ++m) {
      INFO(name << " m=" << m);
      CHECK(count_maps(standard(Shape::Delta, m, 0, 4), x) == x.size(m));
    }
  }
}
