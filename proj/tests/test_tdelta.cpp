#include <doctest.h>

#include "complicial/standard.hpp"
#include "complicial/tdelta.hpp"
#include "oracles.hpp"

using namespace complicial;

namespace {

std::size_t nondegenerate(const TDeltaSet& x, int m) {
  const auto forms = degenerate_forms(x);
  std::size_t n = 0;
  for (const auto& f : forms[m]) n += f.base == kNone;
  return n;
}

}  // namespace

TEST_CASE("standard simplices have the expected simplex counts") {
  for (int n = 0; n <= 3; ++n)
    for (int dim = n; dim <= 4; ++dim) {
      const auto d = standard(Shape::Delta, n, 0, dim);
      INFO("n=" << n << " dim=" << dim);
      REQUIRE(validate(d).valid());
      CHECK(is_stratified(d));
      for (int m = 0; m <= dim; ++m) {
        CHECK(d.size(m) == oracle::monotone_maps(m, n));
        CHECK(nondegenerate(d, m) == oracle::binomial(n + 1, m + 1));
      }
    }
}

TEST_CASE("boundaries and horns drop the expected simplices") {
  for (int n = 1; n <= 3; ++n) {
    const auto b = standard(Shape::Boundary, n, 0, 4);
    REQUIRE(validate(b).valid());
    for (int m = 0; m <= 4; ++m)
      // A monotone map onto [n] from [m] is a choice of n jump positions.
      CHECK(b.size(m) == oracle::monotone_maps(m, n) - oracle::binomial(m, n));
    for (int k = 0; k <= n; ++k) {
      const auto h = standard(Shape::Horn, n, k, 4);
      REQUIRE(validate(h).valid());
      for (int m = 0; m <= 4; ++m)
        CHECK(h.size(m) == oracle::monotone_maps(m, n) - oracle::binomial(m, n) - oracle::binomial(m, n - 1));
    }
  }
}

TEST_CASE("every standard shape is a valid tΔ-set") {
  for (Shape s : {Shape::Delta, Shape::DeltaT, Shape::Boundary, Shape::Horn, Shape::DeltaK, Shape::DeltaKPrime,
                  Shape::DeltaKDoublePrime})
    for (int m = 2; m <= 4; ++m)
      for (int k = 0; k <= m; ++k) {
        const auto x = standard(s, m, k, 5);
        INFO("shape " << static_cast<int>(s) << " m=" << m << " k=" << k);
        CHECK(validate(x).valid());
        CHECK(is_stratified(x));
      }
  CHECK(validate(standard(Shape::Delta3Eq, 3, 0, 4)).valid());
  CHECK(validate(standard(Shape::Delta3Sharp, 3, 0, 4)).valid());
}

TEST_CASE("inclusions between standard shapes are monomorphisms") {
  for (int m = 2; m <= 4; ++m)
    for (int k = 0; k <= m; ++k) {
      const auto a = standard(Shape::DeltaKPrime, m, k, 5);
      const auto b = standard(Shape::DeltaKDoublePrime, m, k, 5);
      const auto i = inclusion_by_name(a, b);
      CHECK(validate_map(a, b, i).valid());
      CHECK(is_injective(i, b));
      CHECK(is_identity_on_simplices(i) == (a.total_simplices() == b.total_simplices()));
    }
}

TEST_CASE("identity maps are units for composition") {
  const auto x = standard(Shape::DeltaK, 3, 1, 4);
  const auto id = identity_map(x);
  CHECK(validate_map(x, x, id).valid());
  CHECK(compose(id, id) == id);
  CHECK(is_bijective(id, x));
}

TEST_CASE("coproducts add level sizes") {
  const auto a = standard(Shape::Delta, 1, 0, 3);
  const auto b = standard(Shape::Boundary, 2, 0, 3);
  const auto sum = coproduct({a, b}, {"a", "b"});
  REQUIRE(validate(sum.set).valid());
  for (int m = 0; m <= 3; ++m) CHECK(sum.set.size(m) == a.size(m) + b.size(m));
  CHECK(validate_map(a, sum.set, sum.injections[0]).valid());
  CHECK(validate_map(b, sum.set, sum.injections[1]).valid());
  const auto tri = standard(Shape::Delta, 2, 0, 3);
  const auto both = copair(sum, {inclusion_by_name(a, tri), inclusion_by_name(b, tri)});
  CHECK(validate_map(sum.set, tri, both).valid());
  CHECK(compose(both, sum.injections[1]) == inclusion_by_name(b, tri));
}

TEST_CASE("gluing two edges along their boundary") {
  const auto edge = standard(Shape::Delta, 1, 0, 3);
  const auto bd = standard(Shape::Boundary, 1, 0, 3);
  const auto i = inclusion_by_name(bd, edge);
  const auto p = pushout(bd, edge, edge, i, i);
  REQUIRE(validate(p.set).valid());
  CHECK(p.set.size(0) == 2);
  CHECK(nondegenerate(p.set, 1) == 2);
  CHECK(nondegenerate(p.set, 2) == 0);
  CHECK(validate_map(edge, p.set, p.from_x).valid());
  CHECK(validate_map(edge, p.set, p.from_b).valid());
  CHECK(compose(p.from_x, i) == compose(p.from_b, i));
}

TEST_CASE("marking twice then identifying restores stratification") {
  const auto edge = standard(Shape::Delta, 1, 0, 3);
  const auto marked = standard(Shape::DeltaT, 1, 0, 3);
  const auto i = inclusion_by_name(edge, marked);
  const auto p = pushout(edge, marked, marked, i, i);
  REQUIRE(validate(p.set).valid());
  const Id top = p.from_x.simplices[1][edge.find_simplex(1, "01")];
  CHECK(tokens_over(p.set)[1][top].size() == 2);
  CHECK_FALSE(is_stratified(p.set));

  const auto q = identify_markings(p.set);
  REQUIRE(validate(q.set).valid());
  CHECK(is_stratified(q.set));
  CHECK(validate_map(p.set, q.set, q.map).valid());
  CHECK(validate_map(q.set, p.set, q.section).valid());
  CHECK(compose(q.map, q.section) == identity_map(q.set));
}

TEST_CASE("the join of two points is an edge") {
  const auto pt = standard(Shape::Delta, 0, 0, 3);
  const auto j = join(pt, pt);
  REQUIRE(validate(j).valid());
  const auto edge = standard(Shape::Delta, 1, 0, 3);
  for (int m = 0; m <= 3; ++m) CHECK(j.size(m) == edge.size(m));
  const auto j3 = join(standard(Shape::Delta, 0, 0, 4), standard(Shape::Delta, 2, 0, 4));
  for (int m = 0; m <= 4; ++m) CHECK(j3.size(m) == oracle::monotone_maps(m, 3));
}

TEST_CASE("vertices and sub-simplices of a standard simplex") {
  const auto d = standard(Shape::Delta, 3, 0, 3);
  const Id top = d.find_simplex(3, "0123");
  REQUIRE(top != kNone);
  CHECK(vertices(d, 3, top).size() == 4);
  CHECK(d.name(1, sub_simplex(d, 3, top, {1, 3})) == "13");
  CHECK(d.name(2, sub_simplex(d, 3, top, {0, 2, 3})) == "023");
  for (int i = 0; i <= 3; ++i) CHECK(d.face(3, i, top) == sub_simplex(d, 3, top, [&] {
          std::vector<int> v;
          for (int j = 0; j <= 3; ++j)
            if (j != i) v.push_back(j);
          return v;
        }()));
}

TEST_CASE("malformed structure maps are reported") {
  auto d = standard(Shape::Delta, 1, 0, 2);
  d.levels[1].faces[0][0] = d.levels[1].faces[1][0] == 0 ? 1 : 0;
  CHECK_FALSE(validate(d).valid());
}
