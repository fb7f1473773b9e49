#pragma once

#include <optional>
#include <string>
#include <vector>

#include "complicial/common.hpp"
#include "complicial/twocat.hpp"

namespace complicial {

// Where a generator came from when the presentation was synthesised from a
// tΔ-set. level/index name the simplex (Edge, Triangle) or token (the rest).
enum class Origin {
  Manual,
  Edge,
  Triangle,
  TriangleInverse,
  EquivalenceInverse,     // g̃
  EquivalenceUnit,        // η̃
  EquivalenceCounit,      // ε̃
  EquivalenceUnitInv,     // η̃⁻¹
  EquivalenceCounitInv,   // ε̃⁻¹
};
std::string origin_name(Origin o);
Origin parse_origin(const std::string& name);

struct GeneratorOrigin {
  Origin kind = Origin::Manual;
  int level = -1;
  Id index = kNone;
  friend bool operator==(const GeneratorOrigin&, const GeneratorOrigin&) = default;
};

struct OneGenerator {
  std::string name;
  Id src = kNone;
  Id tgt = kNone;
  GeneratorOrigin origin;
};

struct TwoGenerator {
  std::string name;
  Word src;
  Word tgt;
  GeneratorOrigin origin;
};

// gen whiskered by pre (applied first, in path order) and post.
struct Whiskered {
  std::vector<Id> pre;
  Id gen = kNone;
  std::vector<Id> post;
  friend bool operator==(const Whiskered&, const Whiskered&) = default;
};

// A vertical composite of whiskered generators starting at source; no steps
// means the identity on source.
struct Pasting {
  Word source;
  std::vector<Whiskered> steps;
  friend bool operator==(const Pasting&, const Pasting&) = default;
};

struct Relation {
  std::string name;
  Pasting lhs;
  Pasting rhs;
};

struct NamedPasting {
  std::string name;
  Pasting value;
};

struct TwoPolygraph {
  std::vector<std::string> objects;
  std::vector<OneGenerator> one_generators;
  std::vector<TwoGenerator> two_generators;
  std::vector<Relation> relations;
  std::vector<NamedPasting> derived;       // named composites, not generators
  std::vector<std::string> review_flags;   // normalisations worth a second look

  // Word after applying every step; throws InputError when ill-typed.
  Word target(const Pasting& p) const;
  Word concat(const Word& first, const Word& then) const;
  Word identity_word(Id x) const { return Word{x, x, {}}; }
  Word letter(Id g) const;
};

ValidationReport validate(const TwoPolygraph& p);

// Equal up to renaming: same counts, endpoints, words and relation shapes,
// generators matched by position.
bool structurally_equal(const TwoPolygraph& a, const TwoPolygraph& b);

// Objects x, y; f, g; η: id ⇒ gf, ε: fg ⇒ id with inverses, invertibility
// relations and the swap relations f∗η = (ε∗f)⁻¹, g∗ε = (η∗g)⁻¹.
TwoPolygraph free_adjoint_equivalence_presentation();

struct Evaluation {
  std::optional<FiniteTwoCategory> category;
  std::string refusal;
  bool ok() const { return category.has_value(); }
};

// The free 2-category on a presentation without relations. Refuses when there
// are relations or when the 1-generator graph has a cycle.
Evaluation evaluate_free(const TwoPolygraph& p, std::size_t max_steps = 12);
// The presented 2-category when it is finite: relations of the form
// "a then b = identity" cancel adjacent pairs, every other relation is closed
// under whiskering and composition. Refuses when the 1-generator graph has a
// cycle or when reduced composites exceed max_steps steps.
Evaluation evaluate(const TwoPolygraph& p, std::size_t max_steps = 12);

}  // namespace complicial
