#include "complicial/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace complicial {

SearchBudget budget_from_environment(SearchBudget base) {
  if (const char* env = std::getenv("COMPLICIAL_BUDGET")) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(env, &used);
      if (used != std::string(env).size() || v == 0) throw InputError("");
      base.max_nodes = v;
    } catch (const std::exception&) {
      throw InputError(std::string("COMPLICIAL_BUDGET must be a positive integer, got ") + env);
    }
  }
  return base;
}

namespace {

std::uint64_t face_hash(const Id* faces, int count) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i < count; ++i) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(faces[i])) + 0x9e3779b97f4a7c15ULL;
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return h;
}

}  // namespace

// ------------------------------------------------------------------ TargetIndex

TargetIndex::TargetIndex(const TDeltaSet& x) : x_(&x) {
  by_faces_.resize(x.dim + 1);
  std::vector<Id> buf(x.dim + 1);
  for (int m = 1; m <= x.dim; ++m)
    for (Id s = 0; s < static_cast<Id>(x.size(m)); ++s) {
      for (int i = 0; i <= m; ++i) buf[i] = x.face(m, i, s);
      by_faces_[m][face_hash(buf.data(), m + 1)].push_back(s);
    }
  over_ = complicial::tokens_over(x);
  vertices_.resize(x.size(0));
  for (Id v = 0; v < static_cast<Id>(x.size(0)); ++v) vertices_[v] = v;
}

const std::vector<Id>& TargetIndex::candidates(int m, const Id* faces) const {
  auto it = by_faces_[m].find(face_hash(faces, m + 1));
  return it == by_faces_[m].end() ? none_ : it->second;
}

// ------------------------------------------------------------------- SourcePlan

SourcePlan::SourcePlan(const TDeltaSet& a) : a_(&a) {
  const int dim = a.dim;
  auto forms = degenerate_forms(a);
  auto is_free = free_tokens(a);

  std::vector<std::vector<Id>> maxv(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    maxv[m].resize(a.size(m));
    for (Id x = 0; x < static_cast<Id>(a.size(m)); ++x)
      maxv[m][x] = m == 0 ? x : std::max(maxv[m - 1][a.face(m, 0, x)], maxv[m - 1][a.face(m, m, x)]);
  }
  // Root: the non-degenerate simplex a degenerate one is pulled back from.
  std::vector<std::vector<std::pair<int, Id>>> root(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    root[m].resize(a.size(m));
    for (Id x = 0; x < static_cast<Id>(a.size(m)); ++x)
      root[m][x] = forms[m][x].i < 0 ? std::make_pair(m, x) : root[m - 1][forms[m][x].base];
  }

  struct Key {
    Id maxv;
    int m;
    Id x;
  };
  std::vector<Key> order;
  for (int m = 0; m <= dim; ++m)
    for (Id x = 0; x < static_cast<Id>(a.size(m)); ++x)
      if (forms[m][x].i < 0) order.push_back({maxv[m][x], m, x});
  std::sort(order.begin(), order.end(), [](const Key& l, const Key& r) {
    return std::tie(l.maxv, l.m, l.x) < std::tie(r.maxv, r.m, r.x);
  });

  // Free tokens grouped by the root of their underlying simplex.
  std::vector<std::vector<std::vector<std::pair<int, Id>>>> free_by_root(dim + 1);
  for (int m = 0; m <= dim; ++m) free_by_root[m].resize(a.size(m));
  for (int m = 1; m <= dim; ++m)
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t)
      if (is_free[m][t]) {
        auto [rm, rx] = root[m][a.under(m, t)];
        free_by_root[rm][rx].push_back({m, t});
      }

  simplex_gen_.resize(dim + 1);
  token_gen_.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    simplex_gen_[m].assign(a.size(m), kNone);
    token_gen_[m].assign(a.token_count(m), kNone);
  }
  for (const Key& k : order) {
    simplex_gen_[k.m][k.x] = static_cast<Id>(gens_.size());
    gens_.push_back({false, k.m, k.x});
    auto toks = free_by_root[k.m][k.x];
    std::sort(toks.begin(), toks.end());
    for (auto [m, t] : toks) {
      token_gen_[m][t] = static_cast<Id>(gens_.size());
      gens_.push_back({true, m, t});
    }
  }

  derived_after_.assign(gens_.size(), {});
  forced_after_.assign(gens_.size(), {});
  for (int m = 1; m <= dim; ++m)
    for (Id x = 0; x < static_cast<Id>(a.size(m)); ++x)
      if (forms[m][x].i >= 0) {
        auto [rm, rx] = root[m][x];
        derived_after_[simplex_gen_[rm][rx]].push_back({m, x, forms[m][x].i, forms[m][x].base});
      }
  for (auto& list : derived_after_)
    std::stable_sort(list.begin(), list.end(), [](const Derived& l, const Derived& r) { return l.level < r.level; });

  std::vector<std::vector<std::vector<std::pair<int, Id>>>> reps(dim + 1);
  for (int m = 1; m <= dim; ++m) reps[m].resize(a.token_count(m));
  for (int m = 0; m < dim; ++m)
    for (int i = 0; i <= m; ++i)
      for (Id y = 0; y < static_cast<Id>(a.size(m)); ++y) reps[m + 1][a.zeta(m, i, y)].push_back({i, y});
  for (int m = 1; m <= dim; ++m)
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t) {
      if (is_free[m][t]) continue;
      Id ready = 0;
      for (auto [i, y] : reps[m][t]) {
        auto [rm, rx] = root[m - 1][y];
        ready = std::max(ready, simplex_gen_[rm][rx]);
      }
      forced_after_[ready].push_back({m, t, reps[m][t]});
    }
}

TDeltaMap SourcePlan::expand(const TDeltaSet& x, const std::vector<Id>& values) const {
  const TDeltaSet& a = *a_;
  TDeltaMap f;
  f.simplices.resize(a.dim + 1);
  f.tokens.resize(a.dim + 1);
  for (int m = 0; m <= a.dim; ++m) {
    f.simplices[m].assign(a.size(m), kNone);
    f.tokens[m].assign(a.token_count(m), kNone);
  }
  for (std::size_t k = 0; k < gens_.size(); ++k) {
    const auto& g = gens_[k];
    if (g.token) {
      f.tokens[g.level][g.index] = values[k];
      if (x.under(g.level, values[k]) != f.simplices[g.level][a.under(g.level, g.index)])
        throw VerificationError("token value lies over the wrong simplex");
    } else {
      f.simplices[g.level][g.index] = values[k];
      for (int i = 0; g.level > 0 && i <= g.level; ++i)
        if (x.face(g.level, i, values[k]) != f.simplices[g.level - 1][a.face(g.level, i, g.index)])
          throw VerificationError("simplex value has incompatible faces");
    }
    for (const auto& d : derived_after_[k])
      f.simplices[d.level][d.index] = x.degeneracy(d.level - 1, d.i, f.simplices[d.level - 1][d.base]);
    for (const auto& fr : forced_after_[k]) {
      Id v = kNone;
      for (auto [i, y] : fr.reps) {
        Id w = x.zeta(fr.level - 1, i, f.simplices[fr.level - 1][y]);
        if (v != kNone && v != w) throw VerificationError("zeta images disagree");
        v = w;
      }
      f.tokens[fr.level][fr.token] = v;
    }
  }
  return f;
}

// -------------------------------------------------------------------- MapSearch

MapSearch::MapSearch(const SourcePlan& plan, const TargetIndex& target) : plan_(plan), target_(target) {
  const TDeltaSet& a = plan.set();
  sv_.resize(a.dim + 1);
  tv_.resize(a.dim + 1);
  for (int m = 0; m <= a.dim; ++m) {
    sv_[m].assign(a.size(m), kNone);
    tv_[m].assign(a.token_count(m), kNone);
  }
  values_.assign(plan.generators().size(), kNone);
}

SearchStatus MapSearch::run(const std::function<bool(const std::vector<Id>&)>& visit, std::uint64_t node_budget) {
  if (plan_.set().dim > target_.set().dim) throw InputError("source dimension exceeds target dimension");
  visit_ = &visit;
  nodes_ = 0;
  budget_ = node_budget;
  out_of_budget_ = false;
  bool finished = step(0);
  if (out_of_budget_) return SearchStatus::BudgetExceeded;
  return finished ? SearchStatus::Exhausted : SearchStatus::Stopped;
}

bool MapSearch::settle(std::size_t k) {
  const TDeltaSet& x = target_.set();
  for (const auto& d : plan_.derived_after_[k])
    sv_[d.level][d.index] = x.degeneracy(d.level - 1, d.i, sv_[d.level - 1][d.base]);
  for (const auto& fr : plan_.forced_after_[k]) {
    Id v = kNone;
    for (auto [i, y] : fr.reps) {
      Id w = x.zeta(fr.level - 1, i, sv_[fr.level - 1][y]);
      if (v != kNone && v != w) return false;
      v = w;
    }
    tv_[fr.level][fr.token] = v;
  }
  return true;
}

bool MapSearch::step(std::size_t k) {
  const auto& gens = plan_.generators();
  if (k == gens.size()) return (*visit_)(values_);
  const auto& g = gens[k];
  const TDeltaSet& a = plan_.set();
  const TDeltaSet& x = target_.set();
  const Id fixed = fixed_.empty() ? kNone : fixed_[k];

  Id faces[16];
  const std::vector<Id>* pool = nullptr;
  std::vector<Id> single;
  if (fixed != kNone) {
    single.push_back(fixed);
    pool = &single;
  } else if (g.token) {
    pool = &target_.tokens_over(g.level, sv_[g.level][a.under(g.level, g.index)]);
  } else if (g.level == 0) {
    pool = &target_.vertices();
  } else {
    for (int i = 0; i <= g.level; ++i) faces[i] = sv_[g.level - 1][a.face(g.level, i, g.index)];
    pool = &target_.candidates(g.level, faces);
  }
  if (!g.token && g.level > 0 && fixed != kNone)
    for (int i = 0; i <= g.level; ++i) faces[i] = sv_[g.level - 1][a.face(g.level, i, g.index)];

  const std::size_t n = pool->size();
  for (std::size_t j = 0; j < n; ++j) {
    const Id c = (*pool)[reverse_ ? n - 1 - j : j];
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return false;
    }
    if (g.token) {
      if (x.under(g.level, c) != sv_[g.level][a.under(g.level, g.index)]) continue;
      tv_[g.level][g.index] = c;
    } else {
      if (g.level > 0) {
        bool ok = true;
        for (int i = 0; i <= g.level && ok; ++i) ok = x.face(g.level, i, c) == faces[i];
        if (!ok) continue;
      }
      sv_[g.level][g.index] = c;
    }
    values_[k] = c;
    if (!settle(k)) continue;
    if (!step(k + 1)) return false;
  }
  return true;
}

// ------------------------------------------------------------------------ maps

std::vector<TDeltaMap> maps(const TDeltaSet& a, const TDeltaSet& x, SearchBudget budget) {
  SourcePlan plan(a);
  if (plan.generators().size() > budget.max_generators)
    throw BudgetExceeded("source has too many generators for enumeration");
  TargetIndex index(x);
  MapSearch search(plan, index);
  std::vector<TDeltaMap> out;
  auto status = search.run(
      [&](const std::vector<Id>& values) {
        out.push_back(plan.expand(x, values));
        return true;
      },
      budget.max_nodes);
  if (status == SearchStatus::BudgetExceeded) throw BudgetExceeded("map enumeration exceeded the node budget");
  return out;
}

std::uint64_t count_maps(const TDeltaSet& a, const TDeltaSet& x, SearchBudget budget) {
  SourcePlan plan(a);
  if (plan.generators().size() > budget.max_generators)
    throw BudgetExceeded("source has too many generators for enumeration");
  TargetIndex index(x);
  MapSearch search(plan, index);
  std::uint64_t count = 0;
  auto status = search.run(
      [&](const std::vector<Id>&) {
        ++count;
        return true;
      },
      budget.max_nodes);
  if (status == SearchStatus::BudgetExceeded) throw BudgetExceeded("map enumeration exceeded the node budget");
  return count;
}

}  // namespace complicial
