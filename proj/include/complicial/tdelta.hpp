#pragma once

#include <string>
#include <vector>

#include "complicial/common.hpp"

namespace complicial {

// One level of a truncated tΔ-set: the m-simplices, the marking tokens over
// them, and the structure maps leaving the level.
struct Level {
  std::vector<std::string> simplices;
  std::vector<std::vector<Id>> faces;         // faces[i][x] ∈ S_{m-1}, 0 ≤ i ≤ m; empty at m = 0
  std::vector<std::vector<Id>> degeneracies;  // degeneracies[i][x] ∈ S_{m+1}; empty at m = dim
  std::vector<std::string> tokens;            // M_m; empty at m = 0
  std::vector<Id> under;                      // u: M_m → S_m
  std::vector<std::vector<Id>> zeta;          // zeta[i][x] ∈ M_{m+1}; empty at m = dim
};

// Presheaf on tΔ truncated at dimension dim.
struct TDeltaSet {
  int dim = 0;
  std::vector<Level> levels;

  static TDeltaSet empty(int dim);

  std::size_t size(int m) const { return levels[m].simplices.size(); }
  std::size_t token_count(int m) const { return levels[m].tokens.size(); }
  Id face(int m, int i, Id x) const { return levels[m].faces[i][x]; }
  Id degeneracy(int m, int i, Id x) const { return levels[m].degeneracies[i][x]; }
  Id under(int m, Id t) const { return levels[m].under[t]; }
  Id zeta(int m, int i, Id x) const { return levels[m].zeta[i][x]; }
  const std::string& name(int m, Id x) const { return levels[m].simplices[x]; }
  const std::string& token_name(int m, Id t) const { return levels[m].tokens[t]; }

  Id find_simplex(int m, const std::string& name) const;
  Id find_token(int m, const std::string& name) const;
  std::size_t total_simplices() const;
  std::size_t total_tokens() const;
};

// Allocates the structure-map tables for the current level sizes.
void allocate_structure(TDeltaSet& x);

ValidationReport validate(const TDeltaSet& x);
bool is_stratified(const TDeltaSet& x);

// x = s_i(base) with i minimal, or {-1, kNone} when x is non-degenerate.
struct DegenerateForm {
  int i = -1;
  Id base = kNone;
};
std::vector<std::vector<DegenerateForm>> degenerate_forms(const TDeltaSet& x);
bool is_degenerate(const TDeltaSet& x, int m, Id s);

// Vertices of an m-simplex in order.
std::vector<Id> vertices(const TDeltaSet& x, int m, Id s);
// The face spanned by the given ascending vertex positions of an m-simplex.
Id sub_simplex(const TDeltaSet& x, int m, Id s, const std::vector<int>& positions);

// tokens_over[m][s] lists the tokens with underlying simplex s.
std::vector<std::vector<std::vector<Id>>> tokens_over(const TDeltaSet& x);
// Tokens that are not in the image of any zeta.
std::vector<std::vector<bool>> free_tokens(const TDeltaSet& x);
// marked[m][s] iff some token lies over s.
std::vector<std::vector<bool>> marked_simplices(const TDeltaSet& x);

// Levelwise map; simplices[m][x] ∈ target S_m, tokens[m][t] ∈ target M_m.
struct TDeltaMap {
  std::vector<std::vector<Id>> simplices;
  std::vector<std::vector<Id>> tokens;
  friend bool operator==(const TDeltaMap&, const TDeltaMap&) = default;
};

ValidationReport validate_map(const TDeltaSet& source, const TDeltaSet& target, const TDeltaMap& f);
TDeltaMap identity_map(const TDeltaSet& x);
// g∘f
TDeltaMap compose(const TDeltaMap& g, const TDeltaMap& f);
bool is_injective(const TDeltaMap& f, const TDeltaSet& target);
bool is_bijective(const TDeltaMap& f, const TDeltaSet& target);
bool is_identity_on_simplices(const TDeltaMap& f);

// Maps A into a stratified-over-the-image target: each token goes to the
// unique (or least) target token over the image simplex. Throws
// VerificationError if some image simplex is unmarked.
TDeltaMap extend_to_tokens(const TDeltaSet& source, const TDeltaSet& target,
                           std::vector<std::vector<Id>> simplices);
// Inclusion matching simplices by name; tokens go to a same-named token over
// the image simplex if present, otherwise to the least token over it.
TDeltaMap inclusion_by_name(const TDeltaSet& a, const TDeltaSet& b);

struct Coproduct {
  TDeltaSet set;
  std::vector<TDeltaMap> injections;
};
// Names are prefixed with tags[k] + ":".
Coproduct coproduct(const std::vector<TDeltaSet>& parts, const std::vector<std::string>& tags);
// The map out of a coproduct induced by maps parts[k] → target.
TDeltaMap copair(const Coproduct& sum, const std::vector<TDeltaMap>& maps);
// ⊔ f_k : ⊔ A_k → ⊔ B_k
TDeltaMap coproduct_map(const Coproduct& a, const Coproduct& b, const std::vector<TDeltaMap>& maps);

struct Pushout {
  TDeltaSet set;
  TDeltaMap from_x;  // X → P
  TDeltaMap from_b;  // B → P
};
// Pushout of X ← A → B along a monomorphism i: A → B.
Pushout pushout(const TDeltaSet& a, const TDeltaSet& x, const TDeltaSet& b, const TDeltaMap& f,
                const TDeltaMap& i);

struct Quotient {
  TDeltaSet set;
  TDeltaMap map;        // X → Q
  TDeltaMap section;    // Q → X, least representative of each class
};
// Identifies tokens with equal class labels at each level; identified tokens
// must share their underlying simplex. Classes are labelled by least
// representative.
Quotient quotient_tokens(const TDeltaSet& x, const std::vector<std::vector<Id>>& token_class);
Quotient identify_markings(const TDeltaSet& x);

// Join of stratified sets of equal truncation. A non-degenerate a⋆b is marked
// iff a or b is marked.
TDeltaSet join(const TDeltaSet& a, const TDeltaSet& b);

}  // namespace complicial
