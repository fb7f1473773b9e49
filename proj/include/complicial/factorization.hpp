#pragma once

#include <string>
#include <vector>

#include "complicial/lifting.hpp"
#include "complicial/nerve.hpp"
#include "complicial/tdelta.hpp"
#include "complicial/twocat.hpp"

namespace complicial {

// One step X → P of the replay.
struct Stage {
  std::string name;
  TDeltaSet set;
  TDeltaMap from_previous;
  std::size_t family = 0;  // number of glued extensions or identified classes
  // For pushout stages: each glued extension target mapped into set, in family order.
  std::vector<TDeltaMap> members;
};

// Checks that j2 = r∘j1: X → Q is a retract of j1: X → P, where r: P → Q is a
// token quotient with section s: r∘s = id, s∘j2 = j1.
struct RetractCheck {
  bool retraction_of_section = false;  // r∘s = id_Q
  bool section_on_image = false;       // s∘j2 = j1
  bool maps_valid = false;
  bool ok() const { return retraction_of_section && section_on_image && maps_valid; }
};
RetractCheck check_retract(const TDeltaSet& x, const TDeltaSet& p, const TDeltaMap& j1, const Quotient& q);

// Gluing families and stages for N_RS(C) → N♮(C).
class FactorizationReplay {
 public:
  FactorizationReplay(const FiniteTwoCategory& c, int dim);

  const DuskinNerve& nerve() const { return nerve_; }
  const TDeltaSet& rs() const { return rs_; }
  const TDeltaSet& natural() const { return natural_; }
  const std::vector<AdjointEquivalence>& natural_completions() const { return completions_; }

  // The 4-simplex over (x, y, y, y, y) attached to an invertible α: f ⇒ g.
  NerveSimplex saturation_simplex(Id alpha) const;
  // The 3-simplex over (x, y, z, z) attached to a triangle α: f ⇒ g2∘g1.
  NerveSimplex thinness_simplex(Id triangle) const;
  // The 3-simplex over (x, y, x, y) attached to a completion (f, g, η, ε).
  NerveSimplex equivalence_simplex(const AdjointEquivalence& e) const;

  // Pushout of saturation extensions over the non-identity invertible 2-cells.
  Stage stage_p1() const;
  // Collapses repeated tokens; the retract check is written to check.
  Stage stage_p2(const Stage& p1, RetractCheck* check = nullptr) const;
  // Pushout of thinness extensions Δ²[3]′ → Δ²[3]″ over invertible
  // non-identity triangles whose 0th face is non-degenerate.
  Stage stage_p3(const Stage& p2) const;
  // Pushout of Δ[3]_eq → Δ[3]♯ over every adjoint-equivalence completion.
  Stage stage_p4(const Stage& p3) const;
  // Identifies the 1-tokens contributed by each completion; returns the
  // quotient and writes the isomorphism onto the natural nerve.
  Stage final_quotient(const Stage& p3, const Stage& p4, TDeltaMap* to_natural, RetractCheck* check = nullptr) const;

  // Invertible-witness triangles whose 0th face is degenerate.
  std::vector<Id> degenerate_face_triangles() const;
  // Non-identity invertible triangles whose 0th face is non-degenerate.
  std::vector<Id> thinness_triangles() const;
  // Every completion of every 1-cell, by 1-cell id then completion order.
  std::vector<AdjointEquivalence> all_completions() const;

 private:
  Stage glue(const std::string& name, const TDeltaSet& x, const AnodyneExtension& ext,
             const std::vector<TDeltaMap>& maps, const std::vector<std::string>& tags) const;
  // The map out of a standard shape on vertices 0..n given by pulling back an
  // n-simplex along vertex sequences.
  TDeltaMap shape_map(const TDeltaSet& shape, int n, const NerveSimplex& top, const TDeltaSet& x) const;

  FiniteTwoCategory c_;
  int dim_;
  DuskinNerve nerve_;
  TDeltaSet rs_, natural_;
  std::vector<AdjointEquivalence> completions_;
};

struct StageReport {
  std::string name;
  std::size_t family = 0;
  std::size_t tokens = 0;
  bool underlying_unchanged = false;
  bool map_valid = false;
  bool monomorphism = false;
  bool characterization = false;
  bool stratified = false;
  bool retract_checked = false;
  bool retract_ok = false;
  std::vector<std::string> notes;
  bool ok() const {
    return underlying_unchanged && map_valid && characterization && (!retract_checked || retract_ok);
  }
};

struct FactorizationReport {
  std::string category;
  int dim = 5;
  std::vector<StageReport> stages;
  bool final_isomorphic = false;
  bool composite_matches = false;
  std::vector<std::string> issues;
  bool passed() const;
};

// Runs every stage. When trace is non-null it receives the stage objects.
FactorizationReport verify_factorization(const FiniteTwoCategory& c, int dim, std::vector<Stage>* trace = nullptr);

}  // namespace complicial
