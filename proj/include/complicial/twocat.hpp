#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <string>
#include <vector>

#include "complicial/common.hpp"

namespace complicial {

// A finite 1-category with an explicit composition table.
class FiniteCategory {
 public:
  struct Morphism {
    std::string name;
    Id src = kNone;
    Id tgt = kNone;
    bool identity = false;
  };

  Id add_object(std::string name);
  Id add_morphism(std::string name, Id src, Id tgt, bool identity = false);
  // Adds identities for every object that lacks one.
  void add_identities();
  void set_compose(Id g, Id f, Id result);
  // Fills unit composites and checks that every composable pair has a result.
  void finalize();

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::string& object_name(Id x) const { return objects_[x]; }
  const Morphism& morphism(Id f) const { return morphisms_[f]; }
  Id identity(Id x) const { return identities_[x]; }
  // g∘f, or kNone when not composable.
  Id compose(Id g, Id f) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<Id> identities_;
  std::vector<Id> table_;
  std::vector<std::tuple<Id, Id, Id>> pending_;
};

struct OneCell {
  std::string name;
  Id src = kNone;
  Id tgt = kNone;
  bool identity = false;
};

struct TwoCell {
  std::string name;
  Id src = kNone;  // source 1-cell
  Id tgt = kNone;  // target 1-cell
  bool identity = false;
};

// Strict 2-category with finitely many cells. Horizontal composition is
// derived from whiskering: for α: a ⇒ b in hom(x,y) and β: c ⇒ d in hom(y,z),
// β ∗ α = (β ∗ b) ∘ (c ∗ α).
class FiniteTwoCategory {
 public:
  std::size_t object_count() const { return objects_.size(); }
  std::size_t one_cell_count() const { return one_cells_.size(); }
  std::size_t two_cell_count() const { return two_cells_.size(); }

  const std::string& object_name(Id x) const { return objects_[x]; }
  const OneCell& one_cell(Id f) const { return one_cells_[f]; }
  const TwoCell& two_cell(Id a) const { return two_cells_[a]; }

  Id identity_one(Id x) const { return id1_[x]; }
  Id identity_two(Id f) const { return id2_[f]; }

  // g∘f
  Id compose(Id g, Id f) const { return comp1_[g * n1() + f]; }
  // β∘α
  Id vcompose(Id beta, Id alpha) const { return vcomp_[beta * n2() + alpha]; }
  // c ∗ α, for c: y → z and α in hom(x,y)
  Id whisker_left(Id c, Id alpha) const { return wl_[c * n2() + alpha]; }
  // β ∗ a, for a: x → y and β in hom(y,z)
  Id whisker_right(Id beta, Id a) const { return wr_[beta * n1() + a]; }
  // β ∗ α
  Id hcompose(Id beta, Id alpha) const;

  std::span<const Id> hom(Id x, Id y) const { return homs_[x * object_count() + y]; }
  std::span<const Id> two_cells_between(Id a, Id b) const;

  Id src_object(Id f) const { return one_cells_[f].src; }
  Id tgt_object(Id f) const { return one_cells_[f].tgt; }

  Id find_object(const std::string& name) const;
  Id find_one_cell(const std::string& name) const;
  Id find_two_cell(const std::string& name) const;

 private:
  friend class TwoCategoryBuilder;
  std::size_t n1() const { return one_cells_.size(); }
  std::size_t n2() const { return two_cells_.size(); }
  void index();

  std::vector<std::string> objects_;
  std::vector<OneCell> one_cells_;
  std::vector<TwoCell> two_cells_;
  std::vector<Id> id1_, id2_;
  std::vector<Id> comp1_, vcomp_, wl_, wr_;
  std::vector<std::vector<Id>> homs_;
  std::vector<std::vector<Id>> parallel_;  // indexed by src 1-cell * n1 + tgt
};

class TwoCategoryBuilder {
 public:
  Id add_object(std::string name);
  Id add_one_cell(std::string name, Id src, Id tgt, bool identity = false);
  Id add_two_cell(std::string name, Id src, Id tgt, bool identity = false);
  void set_compose(Id g, Id f, Id result);
  void set_vcompose(Id beta, Id alpha, Id result);
  void set_whisker_left(Id c, Id alpha, Id result);
  void set_whisker_right(Id beta, Id a, Id result);

  // Adds missing identity cells and every table entry forced by the unit laws.
  void fill_units();

  std::size_t one_cell_count() const { return cat_.one_cells_.size(); }
  std::size_t two_cell_count() const { return cat_.two_cells_.size(); }
  const OneCell& one_cell(Id f) const { return cat_.one_cells_[f]; }
  const TwoCell& two_cell(Id a) const { return cat_.two_cells_[a]; }

  // Throws InputError if identities are missing or ambiguous, or if a table is
  // not total on composable pairs. Axioms are checked by validate().
  FiniteTwoCategory build();

 private:
  using Table = std::map<std::pair<Id, Id>, Id>;
  static void put(Table& t, Id a, Id b, Id result, const char* what);
  FiniteTwoCategory cat_;
  Table comp1_, vcomp_, wl_, wr_;
};

ValidationReport validate(const FiniteTwoCategory& c);

struct InvertiblePair {
  Id cell;
  Id inverse;
};

// Every invertible 2-cell paired with its inverse, in id order.
std::vector<InvertiblePair> invertible_2cells(const FiniteTwoCategory& c);
Id inverse_2cell(const FiniteTwoCategory& c, Id alpha);

struct AdjointEquivalence {
  Id f = kNone;
  Id g = kNone;
  Id eta = kNone;  // id_x ⇒ g∘f
  Id eps = kNone;  // f∘g ⇒ id_y
  friend bool operator==(const AdjointEquivalence&, const AdjointEquivalence&) = default;
  friend auto operator<=>(const AdjointEquivalence&, const AdjointEquivalence&) = default;
};

// All (g, η, ε) completing f to an adjoint equivalence, lexicographic in ids.
std::vector<AdjointEquivalence> adjoint_equivalence_completions(const FiniteTwoCategory& c, Id f);
bool is_adjoint_equivalence(const FiniteTwoCategory& c, const AdjointEquivalence& e);
// (g, f, ε⁻¹, η⁻¹)
AdjointEquivalence mirror(const FiniteTwoCategory& c, const AdjointEquivalence& e);
AdjointEquivalence identity_completion(const FiniteTwoCategory& c, Id x);

bool is_one_isomorphism(const FiniteTwoCategory& c, Id f);
bool is_one_equivalence(const FiniteTwoCategory& c, Id f);

struct TwoFunctor {
  std::vector<Id> objects;
  std::vector<Id> one_cells;
  std::vector<Id> two_cells;
  friend bool operator==(const TwoFunctor&, const TwoFunctor&) = default;
};

bool is_two_functor(const FiniteTwoCategory& source, const FiniteTwoCategory& target,
                    const TwoFunctor& f);

// Enumerates strict 2-functors by backtracking with propagation through the
// composition tables. The visitor returns false to stop early. Returns the
// number of functors visited.
std::uint64_t enumerate_two_functors(const FiniteTwoCategory& source,
                                     const FiniteTwoCategory& target,
                                     const std::function<bool(const TwoFunctor&)>& visit);
std::uint64_t count_two_functors(const FiniteTwoCategory& source, const FiniteTwoCategory& target);

std::optional<TwoFunctor> find_isomorphism(const FiniteTwoCategory& a, const FiniteTwoCategory& b);

// Locally thin 2-category on a 1-category: one 2-cell a ⇒ b whenever le(a, b).
// le must be a preorder on each hom compatible with composition.
FiniteTwoCategory locally_thin(const FiniteCategory& base,
                               const std::function<bool(Id, Id)>& le);
FiniteTwoCategory locally_discrete(const FiniteCategory& base);
// One object-pair suspension: objects {x, y}, hom(x, y) = D.
FiniteTwoCategory suspension(const FiniteCategory& d);
// Truncated oriental on vertices 0..m.
FiniteTwoCategory oriental2(int m);

}  // namespace complicial
