#pragma once

#include <string>
#include <vector>

#include "complicial/nerve.hpp"
#include "complicial/polygraph.hpp"
#include "complicial/tdelta.hpp"
#include "complicial/twocat.hpp"

namespace complicial {

// Presentation of the categorification of a truncated tΔ-set, glued from the
// representable pieces:
//   objects      X_0
//   [e]          each non-degenerate edge e: d1 e → d0 e
//   φ_x          each non-degenerate triangle x: [d1 x] ⇒ [d2 x][d0 x]
//   φ_x⁻¹        each free token over a non-degenerate triangle
//   g̃, η̃, ε̃     each free edge token t over e, with inverses for η̃ and ε̃,
//                invertibility relations and the two swap relations
// plus one relation per non-degenerate 3-simplex equating its two pastings.
// Degenerate edges and triangles are identities; every relation in which a
// degenerate face was dropped is counted in review_flags.
TwoPolygraph categorify(const TDeltaSet& x);

// Generator values of a presentation inside a 2-category.
struct CounitAssignment {
  std::vector<Id> objects;
  std::vector<Id> one_cells;
  std::vector<Id> two_cells;
};

struct CounitReport {
  std::size_t generators_checked = 0;
  std::size_t relations_checked = 0;
  std::size_t derived_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

struct SectionReport {
  Id x = kNone;
  Id y = kNone;
  std::size_t one_cells_checked = 0;
  std::size_t two_cells_checked = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// The presentation of the categorified natural nerve of C together with the
// counit assignment back into C. The presentation also carries the derived
// composites I[d1,d2] for composable pairs.
class CounitContext {
 public:
  CounitContext(const FiniteTwoCategory& c, int dim = 4);

  const FiniteTwoCategory& category() const { return c_; }
  const DuskinNerve& nerve() const { return nerve_; }
  const TDeltaSet& natural() const { return natural_; }
  const TwoPolygraph& presentation() const { return presentation_; }
  const CounitAssignment& assignment() const { return assignment_; }

  Id eval(const Word& w) const;
  Id eval(const Pasting& p) const;

  // Endpoints of every generator and every relation and derived composite.
  CounitReport verify() const;
  // Sends each cell of hom(x, y) to its generator and back through the counit.
  SectionReport section(Id x, Id y) const;

 private:
  FiniteTwoCategory c_;
  DuskinNerve nerve_;
  TDeltaSet natural_;
  std::vector<AdjointEquivalence> completions_;
  TwoPolygraph presentation_;
  CounitAssignment assignment_;
  std::vector<Id> edge_generator_;      // nerve 1-simplex → 1-generator or kNone
  std::vector<Id> triangle_generator_;  // nerve 2-simplex → 2-generator or kNone
};

CounitReport counit_check(const FiniteTwoCategory& c, int dim = 4);
SectionReport section_check(const FiniteTwoCategory& c, Id x, Id y, int dim = 3);

}  // namespace complicial
