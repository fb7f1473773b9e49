#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "complicial/tdelta.hpp"

namespace complicial {

struct SearchBudget {
  std::uint64_t max_nodes = 2'000'000'000ULL;  // candidate assignments per search
  std::size_t max_generators = 4096;           // non-degenerate simplices + free tokens of a source
};

// Applies COMPLICIAL_BUDGET (a positive node count) when set.
SearchBudget budget_from_environment(SearchBudget base = {});

// Lookup tables over a target: simplices by face tuple, tokens by simplex.
class TargetIndex {
 public:
  explicit TargetIndex(const TDeltaSet& x);
  const TDeltaSet& set() const { return *x_; }
  // Simplices whose face tuple hashes like faces[0..m]; callers must confirm.
  const std::vector<Id>& candidates(int m, const Id* faces) const;
  const std::vector<Id>& tokens_over(int m, Id s) const { return over_[m][s]; }
  const std::vector<Id>& vertices() const { return vertices_; }

 private:
  const TDeltaSet* x_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<Id>>> by_faces_;
  std::vector<std::vector<std::vector<Id>>> over_;
  std::vector<Id> vertices_;
  std::vector<Id> none_;
};

// Assignment order and derivation rules for maps out of a fixed source.
// Generators are the non-degenerate simplices and the tokens outside the image
// of zeta; everything else is derived.
class SourcePlan {
 public:
  struct Generator {
    bool token = false;
    int level = 0;
    Id index = kNone;
  };

  explicit SourcePlan(const TDeltaSet& a);

  const TDeltaSet& set() const { return *a_; }
  const std::vector<Generator>& generators() const { return gens_; }
  // Position of the generator for a non-degenerate simplex or free token.
  Id simplex_generator(int m, Id x) const { return simplex_gen_[m][x]; }
  Id token_generator(int m, Id t) const { return token_gen_[m][t]; }

  // Full map from generator values. Throws VerificationError if the values
  // are inconsistent.
  TDeltaMap expand(const TDeltaSet& target, const std::vector<Id>& values) const;

 private:
  friend class MapSearch;
  struct Derived {
    int level;
    Id index;
    int i;     // index = s_i(base)
    Id base;
  };
  struct Forced {
    int level;
    Id token;
    std::vector<std::pair<int, Id>> reps;  // token = zeta_i(y) at level - 1
  };

  const TDeltaSet* a_;
  std::vector<Generator> gens_;
  std::vector<std::vector<Id>> simplex_gen_, token_gen_;
  std::vector<std::vector<Derived>> derived_after_;  // per generator position
  std::vector<std::vector<Forced>> forced_after_;
};

enum class SearchStatus { Exhausted, Stopped, BudgetExceeded };

// Depth-first enumeration of maps source → target. Candidates are tried in
// increasing id order (or decreasing when reversed), so the visiting order is
// deterministic.
class MapSearch {
 public:
  MapSearch(const SourcePlan& plan, const TargetIndex& target);

  // Per-generator forced values (kNone = free). Empty clears.
  void set_fixed(std::vector<Id> fixed) { fixed_ = std::move(fixed); }
  void set_reverse(bool reverse) { reverse_ = reverse; }

  // visit(values) returns false to stop. values are generator values.
  SearchStatus run(const std::function<bool(const std::vector<Id>&)>& visit, std::uint64_t node_budget);
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool step(std::size_t k);
  bool settle(std::size_t k);

  const SourcePlan& plan_;
  const TargetIndex& target_;
  std::vector<Id> fixed_;
  bool reverse_ = false;
  std::vector<std::vector<Id>> sv_, tv_;
  std::vector<Id> values_;
  const std::function<bool(const std::vector<Id>&)>* visit_ = nullptr;
  std::uint64_t nodes_ = 0, budget_ = 0;
  bool out_of_budget_ = false;
};

// All maps A → X in search order. Throws BudgetExceeded.
std::vector<TDeltaMap> maps(const TDeltaSet& a, const TDeltaSet& x, SearchBudget budget = {});
std::uint64_t count_maps(const TDeltaSet& a, const TDeltaSet& x, SearchBudget budget = {});

}  // namespace complicial
