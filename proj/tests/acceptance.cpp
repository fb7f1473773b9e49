// Acceptance criteria, one PASS/FAIL line each. Reference values come from the
// brute-force oracles in oracles.hpp and from hand-checked simplex shapes.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "complicial/catalog.hpp"
#include "complicial/categorify.hpp"
#include "complicial/factorization.hpp"
#include "complicial/io.hpp"
#include "complicial/lifting.hpp"
#include "complicial/nerve.hpp"
#include "complicial/standard.hpp"
#include "oracles.hpp"

using namespace complicial;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > limit_seconds) o.require(false, "took longer than " + std::to_string(limit_seconds) + " s");
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), secs,
              o.pass ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

std::size_t count_non_identity_one(const FiniteTwoCategory& c) {
  std::size_t n = 0;
  for (Id f = 0; f < static_cast<Id>(c.one_cell_count()); ++f) n += !c.one_cell(f).identity;
  return n;
}

std::size_t count_non_identity_two(const FiniteTwoCategory& c) {
  std::size_t n = 0;
  for (Id a = 0; a < static_cast<Id>(c.two_cell_count()); ++a) n += !c.two_cell(a).identity;
  return n;
}

// The single non-degenerate simplex of top dimension in an extension source.
std::pair<int, Id> top_simplex(const TDeltaSet& x) {
  const auto forms = degenerate_forms(x);
  for (int m = x.dim; m >= 0; --m)
    for (Id s = 0; s < static_cast<Id>(x.size(m)); ++s)
      if (forms[m][s].base == kNone) return {m, s};
  return {-1, kNone};
}

// (x, y, x, y) with edges f, id, f, f⁻¹, id, f and identity cells.
bool is_equivalence_pattern(const FiniteTwoCategory& c, const NerveSimplex& s) {
  const auto& o = s.objects;
  const auto& e = s.edges;  // 01 02 03 12 13 23
  if (o.size() != 4 || o[0] == o[1] || o[2] != o[0] || o[3] != o[1]) return false;
  const Id f = e[0];
  if (c.one_cell(f).identity || e[2] != f || e[5] != f) return false;
  if (e[1] != c.identity_one(o[0]) || e[4] != c.identity_one(o[1])) return false;
  const Id g = e[3];
  if (c.compose(g, f) != c.identity_one(o[0]) || c.compose(f, g) != c.identity_one(o[1])) return false;
  for (Id a : s.cells)
    if (!c.two_cell(a).identity) return false;
  return true;
}

// (x, y, y, y, y) with a01 = a03 = f, a02 = a04 = g, identities among 1..4,
// cells φ, id, φ, φ⁻¹, id, φ on the triples through 0 and identities elsewhere.
bool is_saturation_pattern(const FiniteTwoCategory& c, const NerveSimplex& s) {
  const auto& o = s.objects;
  const auto& e = s.edges;  // 01 02 03 04 12 13 14 23 24 34
  const auto& a = s.cells;  // 012 013 014 023 024 034 123 124 134 234
  if (o.size() != 5 || o[0] == o[1]) return false;
  for (int i = 2; i <= 4; ++i)
    if (o[i] != o[1]) return false;
  for (int k = 4; k < 10; ++k)
    if (e[k] != c.identity_one(o[1])) return false;
  const Id f = e[0], g = e[1];
  if (f == g || e[2] != f || e[3] != g) return false;
  const Id phi = a[0];
  if (c.two_cell(phi).identity || a[2] != phi || a[5] != phi) return false;
  if (c.vcompose(phi, a[3]) != c.identity_two(c.two_cell(a[3]).src) ||
      c.vcompose(a[3], phi) != c.identity_two(c.two_cell(phi).src))
    return false;
  if (!c.two_cell(a[1]).identity || !c.two_cell(a[4]).identity) return false;
  for (int k = 6; k < 10; ++k)
    if (!c.two_cell(a[k]).identity) return false;
  return true;
}

std::string fibrancy_reports(const std::vector<NamedCategory>& catalog, int threads, Outcome* o) {
  std::string all;
  for (const auto& nc : catalog) {
    const auto x = natural_nerve(nc.category, 5);
    const auto rep = is_precomplicial(x, 2, 5, {}, threads);
    if (o) {
      o->require(rep.results.size() == 44, nc.name + ": library size");
      o->require(rep.passed(), nc.name + ": " + (rep.first_failure() ? rep.first_failure()->name : "budget"));
    }
    all += to_json(rep, x).dump() + "\n";
  }
  return all;
}

const char* kFactorizationCategories[] = {"[0]", "[1]", "SigmaI", "OO2[2]", "I"};

std::string factorization_reports(int threads, Outcome* o) {
  omp_set_num_threads(threads);
  std::string all;
  for (const char* name : kFactorizationCategories) {
    std::vector<Stage> trace;
    auto rep = verify_factorization(example(name), 5, &trace);
    rep.category = name;
    if (o) {
      o->require(rep.passed(), std::string(name) + (rep.issues.empty() ? "" : ": " + rep.issues.front()));
      o->require(rep.final_isomorphic && rep.composite_matches, std::string(name) + ": final comparison");
    }
    all += to_json(rep).dump() + "\n";
    for (const auto& s : trace) all += to_json(s.set).dump() + to_json(s.from_previous).dump() + "\n";
  }
  return all;
}

}  // namespace

int main() {
  const auto catalog = test_catalog();
  // At least four threads so the comparison in criterion 10 means something on small machines.
  const int default_threads = std::max(4, omp_get_max_threads());
  std::string fib_first, fac_first;

  criterion(1, "oriental cell counts against subset enumeration", 1.0, [] {
    Outcome o;
    for (int m = 0; m <= 4; ++m) {
      const auto c = oriental2(m);
      o.require(count_non_identity_one(c) == oracle::oriental_one_cells(m), "1-cells m=" + std::to_string(m));
      o.require(count_non_identity_two(c) == oracle::oriental_two_cells(m), "2-cells m=" + std::to_string(m));
    }
    o.require(count_non_identity_one(oriental2(2)) == 4 && count_non_identity_one(oriental2(3)) == 11, "1-cell values");
    o.require(count_non_identity_two(oriental2(2)) == 1 && count_non_identity_two(oriental2(3)) == 7, "2-cell values");
    return o;
  });

  criterion(2, "nerve sizes equal brute-force 2-functor counts for m <= 3", 60.0, [&] {
    Outcome o;
    for (const auto& nc : catalog) {
      const DuskinNerve n(nc.category, 3);
      for (int m = 0; m <= 3; ++m) {
        const auto expected = oracle::count_functors(oriental2(m), nc.category);
        o.require(n.size(m) == expected, nc.name + " m=" + std::to_string(m) + ": " + std::to_string(n.size(m)) +
                                             " vs " + std::to_string(expected));
      }
    }
    return o;
  });

  criterion(3, "natural nerves lift against all 44 elementary extensions", 600.0, [&] {
    Outcome o;
    fib_first = fibrancy_reports(catalog, default_threads, &o);
    return o;
  });

  criterion(4, "RS nerves fail saturation with the displayed witnesses", 120.0, [] {
    Outcome o;
    {
      const auto& c = free_isomorphism();
      const DuskinNerve n(c, 5);
      const auto x = n.marked(Marking::RobertsStreet);
      const auto e = saturation_extension(-1, 5);
      const auto r = check_extension(e, x);
      o.require(!r.passed() && r.witness.has_value(), "I: Delta[3]_eq extension lifted");
      if (r.witness) {
        const auto [m, s] = top_simplex(e.source);
        o.require(m == 3, "I: source top dimension");
        o.require(is_equivalence_pattern(c, n.simplex(3, r.witness->simplices[3][s])),
                  "I: witness " + n.label(3, r.witness->simplices[3][s]));
      }
    }
    {
      const auto& c = suspended_isomorphism();
      const DuskinNerve n(c, 5);
      const auto x = n.marked(Marking::RobertsStreet);
      const auto e = saturation_extension(0, 5);
      const auto r = check_extension(e, x);
      o.require(!r.passed() && r.witness.has_value(), "SigmaI: Delta[0]*Delta[3]_eq extension lifted");
      if (r.witness) {
        const auto [m, s] = top_simplex(e.source);
        o.require(m == 4, "SigmaI: source top dimension");
        o.require(is_saturation_pattern(c, n.simplex(4, r.witness->simplices[4][s])),
                  "SigmaI: witness " + n.label(4, r.witness->simplices[4][s]));
      }
    }
    return o;
  });

  criterion(5, "factorization replay on [0], [1], SigmaI, OO2[2], I", 600.0, [&] {
    Outcome o;
    fac_first = factorization_reports(default_threads, &o);
    return o;
  });

  criterion(6, "maps of RS nerves match 2-functors (N = 4)", 300.0, [] {
    Outcome o;
    const char* names[] = {"[0]", "[1]", "SigmaI", "O2[2]"};
    for (const char* a : names)
      for (const char* b : names) {
        const auto r = rs_fully_faithful_check(example(a), example(b), 4);
        const auto expected = oracle::count_functors(example(a), example(b));
        o.require(r.agree() && r.functors == expected,
                  std::string(a) + " -> " + b + ": " + std::to_string(r.nerve_maps) + " maps, " +
                      std::to_string(expected) + " functors");
      }
    return o;
  });

  criterion(7, "categorification of the marked edge, marked triangle and triangle boundary", 10.0, [] {
    Outcome o;
    o.require(structurally_equal(categorify(standard(Shape::DeltaT, 1, 0, 3)), free_adjoint_equivalence_presentation()),
              "marked edge");
    const auto tri = evaluate(categorify(standard(Shape::DeltaT, 2, 0, 3)));
    o.require(tri.ok() && find_isomorphism(*tri.category, inverted_triangle()).has_value(), "marked triangle");
    const auto bd = evaluate_free(categorify(standard(Shape::Boundary, 2, 0, 3)));
    o.require(bd.ok() && count_non_identity_one(*bd.category) == 4 && count_non_identity_two(*bd.category) == 0,
              "triangle boundary");
    return o;
  });

  criterion(8, "counit relations hold and the section is the identity", 60.0, [&] {
    Outcome o;
    for (const auto& nc : catalog) {
      const CounitContext ctx(nc.category, 4);
      const auto rep = ctx.verify();
      o.require(rep.ok(), nc.name + ": " + (rep.failures.empty() ? "" : rep.failures.front()));
      for (Id x = 0; x < static_cast<Id>(nc.category.object_count()); ++x)
        for (Id y = 0; y < static_cast<Id>(nc.category.object_count()); ++y) {
          const auto s = ctx.section(x, y);
          o.require(s.ok(), nc.name + ": section " + (s.mismatches.empty() ? "" : s.mismatches.front()));
        }
    }
    return o;
  });

  criterion(9, "the Z/2 example has two tokens over its identity until identified", 10.0, [] {
    Outcome o;
    const auto x = natural_nerve(z2_two_cell(), 5);
    o.require(!is_stratified(x), "stratified");
    const auto over = tokens_over(x);
    std::size_t doubled = 0, two = 0;
    for (Id e = 0; e < static_cast<Id>(x.size(1)); ++e) {
      doubled += over[1][e].size() > 1;
      two += over[1][e].size() == 2;
    }
    o.require(doubled == 1 && two == 1, "token multiplicities");
    o.require(is_stratified(identify_markings(x).set), "identification");
    return o;
  });

  criterion(10, "reports of criteria 3 and 5 are identical with one thread", 1200.0, [&] {
    Outcome o;
    o.require(!fib_first.empty() && fibrancy_reports(catalog, 1, nullptr) == fib_first, "fibrancy reports differ");
    o.require(!fac_first.empty() && factorization_reports(1, nullptr) == fac_first, "factorization reports differ");
    omp_set_num_threads(default_threads);
    return o;
  });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
