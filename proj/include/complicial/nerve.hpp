#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "complicial/search.hpp"
#include "complicial/tdelta.hpp"
#include "complicial/twocat.hpp"

namespace complicial {

// An m-simplex of the Duskin nerve: objects x_i, 1-cells a_ij: x_i → x_j
// (i < j) and 2-cells α_ijk: a_ik ⇒ a_jk ∘ a_ij (i < j < k), such that every
// quadruple i < j < k < l satisfies
//   (α_jkl ∗ a_ij) ∘ α_ijl = (a_kl ∗ α_ijk) ∘ α_ikl.
// Since the nerve is 3-coskeletal this data describes simplices of every
// dimension. Edges and cells are listed in lexicographic index order.
struct NerveSimplex {
  std::vector<Id> objects;
  std::vector<Id> edges;
  std::vector<Id> cells;
  friend bool operator==(const NerveSimplex&, const NerveSimplex&) = default;
  friend auto operator<=>(const NerveSimplex&, const NerveSimplex&) = default;
};

// Position of (i, j) and (i, j, k) in the lexicographic lists of an m-simplex.
int pair_index(int m, int i, int j);
int triple_index(int m, int i, int j, int k);

enum class Marking {
  Degenerate,     // only the degenerate simplices, each once
  RobertsStreet,  // degenerate edges, identity-witnessed triangles, everything above
  Natural,        // adjoint-equivalence completions, invertible triangles, everything above
};
// "street" (degenerate only), "rs", "natural".
Marking parse_marking(const std::string& name);
std::string marking_name(Marking m);

// Simplices of the nerve up to dimension dim, sorted by their data.
class DuskinNerve {
 public:
  DuskinNerve(const FiniteTwoCategory& c, int dim);

  int dim() const { return dim_; }
  const FiniteTwoCategory& category() const { return c_; }
  std::size_t size(int m) const { return levels_[m].count; }

  NerveSimplex simplex(int m, Id s) const;
  Id object(int m, Id s, int i) const { return key(m, s)[i]; }
  Id edge(int m, Id s, int i, int j) const { return key(m, s)[m + 1 + pair_index(m, i, j)]; }
  Id cell(int m, Id s, int i, int j, int k) const {
    return key(m, s)[m + 1 + pairs(m) + triple_index(m, i, j, k)];
  }
  // kNone when the data is not a simplex.
  Id find(int m, const NerveSimplex& x) const;
  // Pullback along a monotone map theta: [n] → [m], n = theta.size() - 1.
  NerveSimplex pullback(int m, Id s, const std::vector<int>& theta) const;
  // Objects, then edges, then cells, e.g. "x,y,y|f,g,id_y|alpha".
  std::string label(int m, Id s) const;
  // Checks typing and the quadruple condition.
  bool is_simplex(int m, const NerveSimplex& x) const;

  // Underlying simplicial set with the requested marking. For the natural
  // marking, completions (when given) receives the adjoint equivalence of each
  // 1-token.
  TDeltaSet marked(Marking marking, std::vector<AdjointEquivalence>* completions = nullptr) const;

 private:
  struct LevelData {
    std::size_t count = 0;
    std::size_t stride = 0;
    std::vector<Id> keys;
  };
  static int pairs(int m) { return m * (m + 1) / 2; }
  static int triples(int m) { return (m + 1) * m * (m - 1) / 6; }
  const Id* key(int m, Id s) const { return levels_[m].keys.data() + levels_[m].stride * s; }
  NerveSimplex unpack(int m, const Id* k) const;
  void build_level(int m);

  FiniteTwoCategory c_;
  int dim_;
  std::vector<LevelData> levels_;
};

TDeltaSet duskin_nerve(const FiniteTwoCategory& c, int dim);
TDeltaSet rs_nerve(const FiniteTwoCategory& c, int dim);
TDeltaSet natural_nerve(const FiniteTwoCategory& c, int dim);
TDeltaSet nerve(const FiniteTwoCategory& c, int dim, Marking marking);

// Identity on simplices; each RS token goes to the first natural token over
// the same simplex (the identity completion for degenerate edges).
TDeltaMap rs_to_natural(const TDeltaSet& rs, const TDeltaSet& natural);
TDeltaMap rs_to_natural(const FiniteTwoCategory& c, int dim);

// The map of nerves induced by a 2-functor F: C → D. For the natural marking,
// pass the completion lists produced by DuskinNerve::marked.
TDeltaMap induced_map(const DuskinNerve& source, const TDeltaSet& source_set, const DuskinNerve& target,
                      const TDeltaSet& target_set, const TwoFunctor& f, Marking marking,
                      const std::vector<AdjointEquivalence>& source_completions = {},
                      const std::vector<AdjointEquivalence>& target_completions = {});

struct FullFaithfulness {
  std::uint64_t nerve_maps = 0;
  std::uint64_t functors = 0;
  bool agree() const { return nerve_maps == functors; }
};
// Compares maps of RS nerves with 2-functors. Throws BudgetExceeded.
FullFaithfulness rs_fully_faithful_check(const FiniteTwoCategory& c, const FiniteTwoCategory& d, int dim,
                                         SearchBudget budget = {});

}  // namespace complicial
