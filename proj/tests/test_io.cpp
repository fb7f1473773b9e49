#include <doctest.h>

#include "complicial/catalog.hpp"
#include "complicial/io.hpp"
#include "complicial/nerve.hpp"
#include "complicial/standard.hpp"

using namespace complicial;

TEST_CASE("2-categories round trip through JSON") {
  for (const auto& nc : standard_examples()) {
    const auto j = to_json(nc.category);
    const auto back = category_from_json(j);
    INFO(nc.name);
    CHECK(to_json(back) == j);
    CHECK(find_isomorphism(back, nc.category).has_value());
  }
}

TEST_CASE("2-category documents use the declared field names") {
  const auto j = to_json(example("SigmaI"));
  for (const char* key : {"objects", "one_cells", "comp1", "two_cells", "vcomp", "whisker_l", "whisker_r"})
    CHECK(j.contains(key));
  CHECK(j["one_cells"][0].contains("id"));
  CHECK(j["comp1"][0].contains("result"));
  CHECK(j["vcomp"][0].size() == 3);
}

TEST_CASE("missing composites are rejected") {
  auto j = to_json(example("[2]"));
  Json trimmed = Json::array();
  for (std::size_t i = 0; i + 1 < j["comp1"].size(); ++i) trimmed.push_back(j["comp1"][i]);
  j["comp1"] = trimmed;
  CHECK_THROWS_AS(category_from_json(j), InputError);
}

TEST_CASE("unknown names and malformed documents are input errors") {
  auto j = to_json(example("[1]"));
  j["one_cells"][0]["src"] = "nowhere";
  CHECK_THROWS_AS(category_from_json(j), InputError);
  CHECK_THROWS_AS(category_from_json(Json::parse("{\"objects\": 3}")), InputError);
  CHECK_THROWS_AS(tdelta_from_json(Json::parse("{}")), InputError);
}

TEST_CASE("tΔ-sets round trip through JSON") {
  const TDeltaSet sets[] = {standard(Shape::DeltaK, 3, 1, 4), natural_nerve(example("Z2"), 3),
                            rs_nerve(example("I"), 4)};
  for (const auto& x : sets) {
    const auto back = tdelta_from_json(to_json(x));
    CHECK(to_json(back) == to_json(x));
    CHECK(validate_map(x, back, identity_map(x)).valid());
  }
}

TEST_CASE("invalid tΔ-sets are rejected") {
  auto j = to_json(standard(Shape::Delta, 1, 0, 2));
  j["faces"][1][0][0] = 1;
  j["faces"][1][1][0] = 0;
  CHECK_THROWS_AS(tdelta_from_json(j), InputError);
}

TEST_CASE("presentations round trip through JSON") {
  const auto p = categorify(natural_nerve(example("SigmaI"), 4));
  const auto j = to_json(p);
  const auto back = polygraph_from_json(j);
  CHECK(structurally_equal(p, back));
  CHECK(to_json(back) == j);
}

TEST_CASE("maps round trip through JSON") {
  const auto x = standard(Shape::Horn, 3, 1, 3);
  const auto f = inclusion_by_name(x, standard(Shape::DeltaK, 3, 1, 3));
  CHECK(map_from_json(to_json(f)) == f);
}
