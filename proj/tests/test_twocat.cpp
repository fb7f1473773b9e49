#include <doctest.h>

#include <set>

#include "complicial/catalog.hpp"
#include "complicial/io.hpp"
#include "complicial/twocat.hpp"
#include "oracles.hpp"

using namespace complicial;

TEST_CASE("catalog categories satisfy the strict 2-category axioms") {
  const auto catalog = test_catalog();
  CHECK(catalog.size() == 10);
  for (const auto& nc : catalog) {
    INFO(nc.name);
    CHECK(validate(nc.category).valid());
    CHECK(oracle::interchange_holds(nc.category));
  }
}

TEST_CASE("oriental cell counts match subset enumeration") {
  for (int m = 0; m <= 4; ++m) {
    const auto o = oriental2(m);
    std::uint64_t ones = 0, twos = 0;
    for (Id f = 0; f < static_cast<Id>(o.one_cell_count()); ++f) ones += !o.one_cell(f).identity;
    for (Id a = 0; a < static_cast<Id>(o.two_cell_count()); ++a) twos += !o.two_cell(a).identity;
    CHECK(ones == oracle::oriental_one_cells(m));
    CHECK(twos == oracle::oriental_two_cells(m));
  }
  CHECK(oracle::oriental_one_cells(2) == 4);
  CHECK(oracle::oriental_one_cells(3) == 11);
  CHECK(oracle::oriental_two_cells(3) == 7);
}

TEST_CASE("functor counts agree with brute-force assignment") {
  const auto catalog = test_catalog();
  for (const auto& s : catalog)
    for (const auto& t : catalog) {
      if (s.category.two_cell_count() > 8 || t.category.two_cell_count() > 12) continue;
      INFO(s.name << " -> " << t.name);
      CHECK(count_two_functors(s.category, t.category) == oracle::count_functors(s.category, t.category));
    }
}

TEST_CASE("adjoint equivalence completions satisfy the triangle identities") {
  for (const auto& nc : test_catalog()) {
    const auto& c = nc.category;
    for (Id f = 0; f < static_cast<Id>(c.one_cell_count()); ++f) {
      const auto comps = adjoint_equivalence_completions(c, f);
      CHECK(comps.empty() == !is_one_equivalence(c, f));
      for (const auto& e : comps) {
        INFO(nc.name << " " << c.one_cell(f).name);
        const Id x = c.src_object(f), y = c.tgt_object(f);
        // (ε∗f)∘(f∗η) = id_f and (g∗ε)∘(η∗g) = id_g
        CHECK(c.vcompose(c.whisker_right(e.eps, f), c.whisker_left(f, e.eta)) == c.identity_two(f));
        CHECK(c.vcompose(c.whisker_left(e.g, e.eps), c.whisker_right(e.eta, e.g)) == c.identity_two(e.g));
        CHECK(c.two_cell(e.eta).src == c.identity_one(x));
        CHECK(c.two_cell(e.eps).tgt == c.identity_one(y));
        CHECK(inverse_2cell(c, e.eta) != kNone);
        CHECK(is_adjoint_equivalence(c, mirror(c, e)));
        CHECK(mirror(c, mirror(c, e)) == e);
      }
      if (c.one_cell(f).identity) CHECK(comps.front() == identity_completion(c, c.src_object(f)));
    }
  }
}

TEST_CASE("the free isomorphism has one completion per non-identity 1-cell") {
  const auto c = free_isomorphism();
  for (Id f = 0; f < static_cast<Id>(c.one_cell_count()); ++f) {
    CHECK(adjoint_equivalence_completions(c, f).size() == 1);
    CHECK(is_one_isomorphism(c, f));
  }
}

TEST_CASE("the Z/2 example has two completions of its identity") {
  const auto c = z2_two_cell();
  CHECK(adjoint_equivalence_completions(c, c.identity_one(0)).size() == 2);
}

TEST_CASE("isomorphism detection is invariant under relabelling") {
  for (const auto& nc : test_catalog()) {
    auto j = to_json(nc.category);
    // Reverse the listing order of every cell kind; names keep the tables intact.
    for (const char* key : {"objects", "one_cells", "two_cells", "comp1", "vcomp"}) {
      auto& arr = j[key];
      Json reversed = Json::array();
      for (auto it = arr.rbegin(); it != arr.rend(); ++it) reversed.push_back(*it);
      arr = reversed;
    }
    const auto permuted = category_from_json(j);
    INFO(nc.name);
    CHECK(find_isomorphism(nc.category, permuted).has_value());
  }
  CHECK_FALSE(find_isomorphism(suspended_isomorphism(), free_parallel_pair()).has_value());
  CHECK_FALSE(find_isomorphism(oriental2(2), inverted_triangle()).has_value());
}

TEST_CASE("breaking a unit entry is reported") {
  auto j = to_json(suspended_arrow());
  std::set<std::string> identities;
  for (const auto& cell : j["two_cells"])
    if (cell["identity"].get<bool>()) identities.insert(cell["id"].get<std::string>());
  // Redirect id ∘ α for a non-identity α to the identity itself.
  bool changed = false;
  for (auto& e : j["vcomp"])
    if (identities.count(e[0].get<std::string>()) && !identities.count(e[1].get<std::string>())) {
      e[2] = e[0];
      changed = true;
      break;
    }
  REQUIRE(changed);
  try {
    category_from_json(j);
    FAIL("the broken table was accepted");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("unit law") != std::string::npos);
  }
}

TEST_CASE("locally thin and suspension constructions") {
  FiniteCategory d;
  const Id a = d.add_object("a");
  const Id b = d.add_object("b");
  d.add_morphism("u", a, b);
  d.add_identities();
  d.finalize();
  const auto s = suspension(d);
  CHECK(s.object_count() == 2);
  CHECK(validate(s).valid());
  CHECK(find_isomorphism(s, suspended_arrow()).has_value());
}
