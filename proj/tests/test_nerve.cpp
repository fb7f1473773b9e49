#include <doctest.h>

#include "complicial/catalog.hpp"
#include "complicial/nerve.hpp"
#include "oracles.hpp"

using namespace complicial;

TEST_CASE("nerve sizes count 2-functors out of orientals") {
  for (const auto& nc : test_catalog()) {
    const DuskinNerve n(nc.category, 3);
    for (int m = 0; m <= 2; ++m) {
      INFO(nc.name << " m=" << m);
      CHECK(n.size(m) == oracle::count_functors(oriental2(m), nc.category));
    }
  }
}

TEST_CASE("the nerve of a chain is the standard simplex") {
  for (int k = 0; k <= 3; ++k) {
    const DuskinNerve n(chain(k), 4);
    for (int m = 0; m <= 4; ++m) CHECK(n.size(m) == oracle::monotone_maps(m, k));
  }
}

TEST_CASE("marked nerves are valid tΔ-sets") {
  for (const auto& nc : test_catalog())
    for (Marking mk : {Marking::Degenerate, Marking::RobertsStreet, Marking::Natural}) {
      INFO(nc.name << " " << marking_name(mk));
      CHECK(validate(nerve(nc.category, 4, mk)).valid());
    }
}

TEST_CASE("faces are pullbacks along coface maps") {
  for (const auto& nc : test_catalog()) {
    const DuskinNerve n(nc.category, 3);
    const auto x = n.marked(Marking::Degenerate);
    for (int m = 1; m <= 3; ++m)
      for (Id s = 0; s < static_cast<Id>(n.size(m)); ++s)
        for (int i = 0; i <= m; ++i) {
          std::vector<int> theta;
          for (int j = 0; j <= m; ++j)
            if (j != i) theta.push_back(j);
          CHECK(n.find(m - 1, n.pullback(m, s, theta)) == x.face(m, i, s));
        }
  }
}

TEST_CASE("every found simplex satisfies the quadruple condition") {
  const auto& c = example("O2[3]");
  const DuskinNerve n(c, 4);
  for (int m = 0; m <= 4; ++m)
    for (Id s = 0; s < static_cast<Id>(n.size(m)); ++s) {
      const auto x = n.simplex(m, s);
      REQUIRE(n.is_simplex(m, x));
      CHECK(n.find(m, x) == s);
      for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
          for (int k = j + 1; k < m; ++k)
            for (int l = k + 1; l <= m; ++l) {
              const Id lhs = c.vcompose(c.whisker_right(n.cell(m, s, j, k, l), n.edge(m, s, i, j)), n.cell(m, s, i, j, l));
              const Id rhs = c.vcompose(c.whisker_left(n.edge(m, s, k, l), n.cell(m, s, i, j, k)), n.cell(m, s, i, k, l));
              CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("Roberts-Street marking") {
  for (const auto& nc : test_catalog()) {
    const auto& c = nc.category;
    const DuskinNerve n(c, 3);
    const auto rs = n.marked(Marking::RobertsStreet);
    const auto over = tokens_over(rs);
    INFO(nc.name);
    CHECK(is_stratified(rs));
    for (Id e = 0; e < static_cast<Id>(rs.size(1)); ++e)
      CHECK(over[1][e].size() == (c.one_cell(n.edge(1, e, 0, 1)).identity ? 1u : 0u));
    for (Id t = 0; t < static_cast<Id>(rs.size(2)); ++t)
      CHECK(over[2][t].size() == (c.two_cell(n.cell(2, t, 0, 1, 2)).identity ? 1u : 0u));
    for (Id s = 0; s < static_cast<Id>(rs.size(3)); ++s) CHECK(over[3][s].size() == 1);
  }
}

TEST_CASE("natural marking counts completions and invertible cells") {
  for (const auto& nc : test_catalog()) {
    const auto& c = nc.category;
    const DuskinNerve n(c, 3);
    std::vector<AdjointEquivalence> comps;
    const auto nat = n.marked(Marking::Natural, &comps);
    const auto over = tokens_over(nat);
    INFO(nc.name);
    REQUIRE(comps.size() == nat.token_count(1));
    for (Id e = 0; e < static_cast<Id>(nat.size(1)); ++e) {
      const Id f = n.edge(1, e, 0, 1);
      CHECK(over[1][e].size() == adjoint_equivalence_completions(c, f).size());
      for (Id t : over[1][e]) CHECK(comps[t].f == f);
      if (c.one_cell(f).identity) CHECK(comps[over[1][e].front()] == identity_completion(c, c.src_object(f)));
    }
    for (Id t = 0; t < static_cast<Id>(nat.size(2)); ++t)
      CHECK(over[2][t].size() == (inverse_2cell(c, n.cell(2, t, 0, 1, 2)) != kNone ? 1u : 0u));
  }
}

TEST_CASE("the Z/2 example carries two tokens over its identity") {
  const auto x = natural_nerve(z2_two_cell(), 3);
  CHECK_FALSE(is_stratified(x));
  const auto over = tokens_over(x);
  const auto forms = degenerate_forms(x);
  std::size_t doubled = 0;
  for (Id e = 0; e < static_cast<Id>(x.size(1)); ++e)
    if (over[1][e].size() == 2) {
      ++doubled;
      CHECK(forms[1][e].base != kNone);
    }
  CHECK(doubled == 1);
  CHECK(is_stratified(identify_markings(x).set));
}

TEST_CASE("the comparison from RS to natural markings") {
  for (const auto& nc : test_catalog()) {
    const auto rs = rs_nerve(nc.category, 3);
    const auto nat = natural_nerve(nc.category, 3);
    const auto f = rs_to_natural(rs, nat);
    INFO(nc.name);
    CHECK(validate_map(rs, nat, f).valid());
    CHECK(is_identity_on_simplices(f));
    CHECK(f == rs_to_natural(nc.category, 3));
  }
}

TEST_CASE("the identity functor induces the identity of nerves") {
  for (const auto& nc : test_catalog()) {
    const auto& c = nc.category;
    const DuskinNerve n(c, 3);
    TwoFunctor id;
    for (Id i = 0; i < static_cast<Id>(c.object_count()); ++i) id.objects.push_back(i);
    for (Id i = 0; i < static_cast<Id>(c.one_cell_count()); ++i) id.one_cells.push_back(i);
    for (Id i = 0; i < static_cast<Id>(c.two_cell_count()); ++i) id.two_cells.push_back(i);
    std::vector<AdjointEquivalence> comps;
    const auto nat = n.marked(Marking::Natural, &comps);
    CHECK(induced_map(n, nat, n, nat, id, Marking::Natural, comps, comps) == identity_map(nat));
    const auto rs = n.marked(Marking::RobertsStreet);
    CHECK(induced_map(n, rs, n, rs, id, Marking::RobertsStreet) == identity_map(rs));
  }
}

TEST_CASE("maps of RS nerves correspond to 2-functors on small pairs") {
  const char* names[] = {"[0]", "[1]", "SigmaI"};
  for (const char* a : names)
    for (const char* b : names) {
      const auto r = rs_fully_faithful_check(example(a), example(b), 3);
      INFO(a << " -> " << b);
      CHECK(r.agree());
      CHECK(r.functors == oracle::count_functors(example(a), example(b)));
    }
}

TEST_CASE("marking names round trip") {
  for (Marking m : {Marking::Degenerate, Marking::RobertsStreet, Marking::Natural})
    CHECK(parse_marking(marking_name(m)) == m);
  CHECK(parse_marking("street") == Marking::Degenerate);
  CHECK_THROWS_AS(parse_marking("sharp"), InputError);
}
