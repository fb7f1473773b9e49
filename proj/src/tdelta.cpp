#include "complicial/tdelta.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace complicial {

TDeltaSet TDeltaSet::empty(int dim) {
  TDeltaSet x;
  x.dim = dim;
  x.levels.resize(dim + 1);
  allocate_structure(x);
  return x;
}

Id TDeltaSet::find_simplex(int m, const std::string& n) const {
  const auto& v = levels[m].simplices;
  auto it = std::find(v.begin(), v.end(), n);
  return it == v.end() ? kNone : static_cast<Id>(it - v.begin());
}

Id TDeltaSet::find_token(int m, const std::string& n) const {
  const auto& v = levels[m].tokens;
  auto it = std::find(v.begin(), v.end(), n);
  return it == v.end() ? kNone : static_cast<Id>(it - v.begin());
}

std::size_t TDeltaSet::total_simplices() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.simplices.size();
  return n;
}

std::size_t TDeltaSet::total_tokens() const {
  std::size_t n = 0;
  for (const auto& l : levels) n += l.tokens.size();
  return n;
}

void allocate_structure(TDeltaSet& x) {
  for (int m = 0; m <= x.dim; ++m) {
    auto& l = x.levels[m];
    const std::size_t n = l.simplices.size();
    l.faces.assign(m == 0 ? 0 : m + 1, std::vector<Id>(n, kNone));
    l.degeneracies.assign(m == x.dim ? 0 : m + 1, std::vector<Id>(n, kNone));
    l.zeta.assign(m == x.dim ? 0 : m + 1, std::vector<Id>(n, kNone));
    l.under.resize(l.tokens.size(), kNone);
  }
}

// ---------------------------------------------------------------------- validate

ValidationReport validate(const TDeltaSet& x) {
  ValidationReport r;
  if (x.dim < 0) {
    r.add("negative dimension");
    return r;
  }
  if (x.levels.size() != static_cast<std::size_t>(x.dim + 1)) {
    r.add("level count does not match dimension");
    return r;
  }
  // Shapes and ranges first; identities are only checked on well-formed data.
  for (int m = 0; m <= x.dim; ++m) {
    const auto& l = x.levels[m];
    const std::size_t n = l.simplices.size();
    auto in = [&](Id v, int level, bool token) {
      if (level < 0 || level > x.dim) return false;
      std::size_t bound = token ? x.levels[level].tokens.size() : x.levels[level].simplices.size();
      return v >= 0 && static_cast<std::size_t>(v) < bound;
    };
    if (l.faces.size() != static_cast<std::size_t>(m == 0 ? 0 : m + 1)) r.add("level " + std::to_string(m) + ": wrong number of face maps");
    if (l.degeneracies.size() != static_cast<std::size_t>(m == x.dim ? 0 : m + 1))
      r.add("level " + std::to_string(m) + ": wrong number of degeneracy maps");
    if (l.zeta.size() != static_cast<std::size_t>(m == x.dim ? 0 : m + 1))
      r.add("level " + std::to_string(m) + ": wrong number of zeta maps");
    if (l.under.size() != l.tokens.size()) r.add("level " + std::to_string(m) + ": under map size mismatch");
    if (m == 0 && !l.tokens.empty()) r.add("level 0 carries tokens");
    if (!r.valid()) return r;
    for (const auto& f : l.faces) {
      if (f.size() != n) r.add("level " + std::to_string(m) + ": face map size mismatch");
      else
        for (Id v : f)
          if (!in(v, m - 1, false)) r.add("level " + std::to_string(m) + ": face out of range");
    }
    for (const auto& s : l.degeneracies) {
      if (s.size() != n) r.add("level " + std::to_string(m) + ": degeneracy map size mismatch");
      else
        for (Id v : s)
          if (!in(v, m + 1, false)) r.add("level " + std::to_string(m) + ": degeneracy out of range");
    }
    for (const auto& z : l.zeta) {
      if (z.size() != n) r.add("level " + std::to_string(m) + ": zeta map size mismatch");
      else
        for (Id v : z)
          if (!in(v, m + 1, true)) r.add("level " + std::to_string(m) + ": zeta out of range");
    }
    for (Id v : l.under)
      if (!in(v, m, false)) r.add("level " + std::to_string(m) + ": underlying simplex out of range");
  }
  if (!r.valid()) return r;

  auto d = [&](int m, int i, Id s) { return x.face(m, i, s); };
  auto sd = [&](int m, int i, Id s) { return x.degeneracy(m, i, s); };
  for (int m = 0; m <= x.dim; ++m) {
    const Id n = static_cast<Id>(x.size(m));
    const std::string lv = "level " + std::to_string(m);
    for (Id s = 0; s < n; ++s) {
      const std::string at = lv + " simplex " + x.name(m, s);
      // d_i d_j = d_{j-1} d_i for i < j
      if (m >= 2)
        for (int j = 0; j <= m; ++j)
          for (int i = 0; i < j; ++i)
            if (d(m - 1, i, d(m, j, s)) != d(m - 1, j - 1, d(m, i, s)))
              r.add(at + ": d" + std::to_string(i) + "d" + std::to_string(j) + " identity fails");
      if (m < x.dim) {
        for (int j = 0; j <= m; ++j) {
          Id t = sd(m, j, s);
          for (int i = 0; i <= m + 1; ++i) {
            Id lhs = d(m + 1, i, t);
            Id rhs;
            if (i < j)
              rhs = sd(m - 1, j - 1, d(m, i, s));
            else if (i == j || i == j + 1)
              rhs = s;
            else
              rhs = sd(m - 1, j, d(m, i - 1, s));
            if (lhs != rhs)
              r.add(at + ": d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails");
          }
          // s_i s_j = s_{j+1} s_i for i <= j
          if (m + 1 < x.dim)
            for (int i = 0; i <= j; ++i)
              if (sd(m + 1, i, sd(m, j, s)) != sd(m + 1, j + 1, sd(m, i, s)))
                r.add(at + ": s" + std::to_string(i) + "s" + std::to_string(j) + " identity fails");
          // u(zeta_j x) = s_j x
          if (x.under(m + 1, x.zeta(m, j, s)) != t)
            r.add(at + ": zeta" + std::to_string(j) + " does not lie over s" + std::to_string(j));
          // zeta_{j+1} s_i = zeta_i s_j for i <= j
          if (m + 1 < x.dim)
            for (int i = 0; i <= j; ++i)
              if (x.zeta(m + 1, j + 1, sd(m, i, s)) != x.zeta(m + 1, i, sd(m, j, s)))
                r.add(at + ": zeta" + std::to_string(j + 1) + "s" + std::to_string(i) + " = zeta" +
                      std::to_string(i) + "s" + std::to_string(j) + " fails");
        }
      }
    }
  }
  return r;
}

bool is_stratified(const TDeltaSet& x) {
  for (int m = 1; m <= x.dim; ++m) {
    std::vector<char> seen(x.size(m), 0);
    for (Id s : x.levels[m].under) {
      if (seen[s]) return false;
      seen[s] = 1;
    }
  }
  return true;
}

// ------------------------------------------------------------------- structure

std::vector<std::vector<DegenerateForm>> degenerate_forms(const TDeltaSet& x) {
  std::vector<std::vector<DegenerateForm>> out(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) out[m].assign(x.size(m), {});
  for (int m = 0; m < x.dim; ++m)
    for (int i = 0; i <= m; ++i)
      for (Id s = 0; s < static_cast<Id>(x.size(m)); ++s) {
        auto& form = out[m + 1][x.degeneracy(m, i, s)];
        if (form.i < 0) form = {i, s};
      }
  return out;
}

bool is_degenerate(const TDeltaSet& x, int m, Id s) {
  if (m == 0) return false;
  for (int i = 0; i < m; ++i)
    if (x.degeneracy(m - 1, i, x.face(m, i, s)) == s) return true;
  return false;
}

std::vector<Id> vertices(const TDeltaSet& x, int m, Id s) {
  std::vector<Id> out(m + 1);
  for (int j = 0; j <= m; ++j) {
    Id cur = s;
    for (int k = m; k > j; --k) cur = x.face(k, k, cur);
    for (int k = j; k > 0; --k) cur = x.face(k, 0, cur);
    out[j] = cur;
  }
  return out;
}

Id sub_simplex(const TDeltaSet& x, int m, Id s, const std::vector<int>& positions) {
  std::vector<bool> keep(m + 1, false);
  for (int p : positions) keep[p] = true;
  Id cur = s;
  int level = m;
  for (int p = m; p >= 0; --p)
    if (!keep[p]) cur = x.face(level--, p, cur);
  return cur;
}

std::vector<std::vector<std::vector<Id>>> tokens_over(const TDeltaSet& x) {
  std::vector<std::vector<std::vector<Id>>> out(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) {
    out[m].assign(x.size(m), {});
    for (Id t = 0; t < static_cast<Id>(x.token_count(m)); ++t) out[m][x.under(m, t)].push_back(t);
  }
  return out;
}

std::vector<std::vector<bool>> free_tokens(const TDeltaSet& x) {
  std::vector<std::vector<bool>> out(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) out[m].assign(x.token_count(m), true);
  for (int m = 0; m < x.dim; ++m)
    for (const auto& z : x.levels[m].zeta)
      for (Id t : z) out[m + 1][t] = false;
  return out;
}

std::vector<std::vector<bool>> marked_simplices(const TDeltaSet& x) {
  std::vector<std::vector<bool>> out(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) {
    out[m].assign(x.size(m), false);
    for (Id s : x.levels[m].under) out[m][s] = true;
  }
  return out;
}

// ------------------------------------------------------------------------ maps

ValidationReport validate_map(const TDeltaSet& a, const TDeltaSet& x, const TDeltaMap& f) {
  ValidationReport r;
  if (a.dim > x.dim) {
    r.add("source dimension exceeds target dimension");
    return r;
  }
  if (f.simplices.size() != static_cast<std::size_t>(a.dim + 1) ||
      f.tokens.size() != static_cast<std::size_t>(a.dim + 1)) {
    r.add("map has wrong number of levels");
    return r;
  }
  for (int m = 0; m <= a.dim; ++m) {
    if (f.simplices[m].size() != a.size(m) || f.tokens[m].size() != a.token_count(m)) {
      r.add("level " + std::to_string(m) + ": map size mismatch");
      return r;
    }
    for (Id v : f.simplices[m])
      if (v < 0 || static_cast<std::size_t>(v) >= x.size(m)) {
        r.add("level " + std::to_string(m) + ": simplex image out of range");
        return r;
      }
    for (Id v : f.tokens[m])
      if (v < 0 || static_cast<std::size_t>(v) >= x.token_count(m)) {
        r.add("level " + std::to_string(m) + ": token image out of range");
        return r;
      }
  }
  for (int m = 0; m <= a.dim; ++m) {
    for (Id s = 0; s < static_cast<Id>(a.size(m)); ++s) {
      const Id v = f.simplices[m][s];
      if (m > 0)
        for (int i = 0; i <= m; ++i)
          if (f.simplices[m - 1][a.face(m, i, s)] != x.face(m, i, v))
            r.add("level " + std::to_string(m) + ": map does not commute with d" + std::to_string(i) + " at " +
                  a.name(m, s));
      if (m < a.dim)
        for (int i = 0; i <= m; ++i) {
          if (f.simplices[m + 1][a.degeneracy(m, i, s)] != x.degeneracy(m, i, v))
            r.add("level " + std::to_string(m) + ": map does not commute with s" + std::to_string(i) + " at " +
                  a.name(m, s));
          if (f.tokens[m + 1][a.zeta(m, i, s)] != x.zeta(m, i, v))
            r.add("level " + std::to_string(m) + ": map does not commute with zeta" + std::to_string(i) + " at " +
                  a.name(m, s));
        }
    }
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t)
      if (x.under(m, f.tokens[m][t]) != f.simplices[m][a.under(m, t)])
        r.add("level " + std::to_string(m) + ": map does not commute with u at token " + a.token_name(m, t));
  }
  return r;
}

TDeltaMap identity_map(const TDeltaSet& x) {
  TDeltaMap f;
  f.simplices.resize(x.dim + 1);
  f.tokens.resize(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) {
    f.simplices[m].resize(x.size(m));
    std::iota(f.simplices[m].begin(), f.simplices[m].end(), 0);
    f.tokens[m].resize(x.token_count(m));
    std::iota(f.tokens[m].begin(), f.tokens[m].end(), 0);
  }
  return f;
}

TDeltaMap compose(const TDeltaMap& g, const TDeltaMap& f) {
  TDeltaMap h;
  h.simplices.resize(f.simplices.size());
  h.tokens.resize(f.tokens.size());
  for (std::size_t m = 0; m < f.simplices.size(); ++m) {
    for (Id v : f.simplices[m]) h.simplices[m].push_back(g.simplices[m][v]);
    for (Id v : f.tokens[m]) h.tokens[m].push_back(g.tokens[m][v]);
  }
  return h;
}

namespace {

bool injective_level(const std::vector<Id>& v, std::size_t n) {
  std::vector<char> seen(n, 0);
  for (Id x : v) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

bool is_injective(const TDeltaMap& f, const TDeltaSet& target) {
  for (std::size_t m = 0; m < f.simplices.size(); ++m)
    if (!injective_level(f.simplices[m], target.size(m)) || !injective_level(f.tokens[m], target.token_count(m)))
      return false;
  return true;
}

bool is_bijective(const TDeltaMap& f, const TDeltaSet& target) {
  if (f.simplices.size() != static_cast<std::size_t>(target.dim + 1)) return false;
  for (int m = 0; m <= target.dim; ++m)
    if (f.simplices[m].size() != target.size(m) || f.tokens[m].size() != target.token_count(m)) return false;
  return is_injective(f, target);
}

bool is_identity_on_simplices(const TDeltaMap& f) {
  for (const auto& level : f.simplices)
    for (std::size_t i = 0; i < level.size(); ++i)
      if (level[i] != static_cast<Id>(i)) return false;
  return true;
}

TDeltaMap extend_to_tokens(const TDeltaSet& a, const TDeltaSet& x, std::vector<std::vector<Id>> simplices) {
  TDeltaMap f;
  f.simplices = std::move(simplices);
  f.tokens.resize(a.dim + 1);
  auto over = tokens_over(x);
  for (int m = 0; m <= a.dim; ++m)
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t) {
      Id image = f.simplices[m][a.under(m, t)];
      const auto& candidates = over[m][image];
      if (candidates.empty())
        throw VerificationError("image of marked simplex " + a.name(m, a.under(m, t)) + " is unmarked (" +
                                x.name(m, image) + ")");
      f.tokens[m].push_back(candidates.front());
    }
  return f;
}

TDeltaMap inclusion_by_name(const TDeltaSet& a, const TDeltaSet& b) {
  TDeltaMap f;
  f.simplices.resize(a.dim + 1);
  f.tokens.resize(a.dim + 1);
  auto over = tokens_over(b);
  for (int m = 0; m <= a.dim; ++m) {
    std::unordered_map<std::string, Id> index;
    for (Id s = 0; s < static_cast<Id>(b.size(m)); ++s) index.emplace(b.name(m, s), s);
    for (Id s = 0; s < static_cast<Id>(a.size(m)); ++s) {
      auto it = index.find(a.name(m, s));
      if (it == index.end()) throw InputError("simplex " + a.name(m, s) + " missing from codomain");
      f.simplices[m].push_back(it->second);
    }
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t) {
      const auto& candidates = over[m][f.simplices[m][a.under(m, t)]];
      if (candidates.empty()) throw InputError("token " + a.token_name(m, t) + " has no image");
      Id pick = candidates.front();
      for (Id c : candidates)
        if (b.token_name(m, c) == a.token_name(m, t)) pick = c;
      f.tokens[m].push_back(pick);
    }
  }
  return f;
}

// ------------------------------------------------------------------ colimits

Coproduct coproduct(const std::vector<TDeltaSet>& parts, const std::vector<std::string>& tags) {
  if (parts.empty()) throw InputError("coproduct of an empty family needs a dimension");
  const int dim = parts.front().dim;
  Coproduct out;
  out.set.dim = dim;
  out.set.levels.resize(dim + 1);
  std::vector<std::vector<Id>> soff(parts.size(), std::vector<Id>(dim + 1)), toff = soff;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].dim != dim) throw InputError("coproduct of sets with different truncation");
    for (int m = 0; m <= dim; ++m) {
      auto& l = out.set.levels[m];
      soff[k][m] = static_cast<Id>(l.simplices.size());
      toff[k][m] = static_cast<Id>(l.tokens.size());
      for (const auto& n : parts[k].levels[m].simplices) l.simplices.push_back(tags[k] + ":" + n);
      for (const auto& n : parts[k].levels[m].tokens) l.tokens.push_back(tags[k] + ":" + n);
    }
  }
  allocate_structure(out.set);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& p = parts[k];
    TDeltaMap inj;
    inj.simplices.resize(dim + 1);
    inj.tokens.resize(dim + 1);
    for (int m = 0; m <= dim; ++m) {
      auto& l = out.set.levels[m];
      const auto& pl = p.levels[m];
      for (Id s = 0; s < static_cast<Id>(p.size(m)); ++s) {
        const Id at = soff[k][m] + s;
        inj.simplices[m].push_back(at);
        for (std::size_t i = 0; i < pl.faces.size(); ++i) l.faces[i][at] = soff[k][m - 1] + pl.faces[i][s];
        for (std::size_t i = 0; i < pl.degeneracies.size(); ++i)
          l.degeneracies[i][at] = soff[k][m + 1] + pl.degeneracies[i][s];
        for (std::size_t i = 0; i < pl.zeta.size(); ++i) l.zeta[i][at] = toff[k][m + 1] + pl.zeta[i][s];
      }
      for (Id t = 0; t < static_cast<Id>(p.token_count(m)); ++t) {
        inj.tokens[m].push_back(toff[k][m] + t);
        l.under[toff[k][m] + t] = soff[k][m] + pl.under[t];
      }
    }
    out.injections.push_back(std::move(inj));
  }
  return out;
}

TDeltaMap copair(const Coproduct& sum, const std::vector<TDeltaMap>& maps) {
  TDeltaMap f;
  const int dim = sum.set.dim;
  f.simplices.resize(dim + 1);
  f.tokens.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    f.simplices[m].resize(sum.set.size(m));
    f.tokens[m].resize(sum.set.token_count(m));
    for (std::size_t k = 0; k < maps.size(); ++k) {
      const auto& inj = sum.injections[k];
      for (std::size_t s = 0; s < inj.simplices[m].size(); ++s) f.simplices[m][inj.simplices[m][s]] = maps[k].simplices[m][s];
      for (std::size_t t = 0; t < inj.tokens[m].size(); ++t) f.tokens[m][inj.tokens[m][t]] = maps[k].tokens[m][t];
    }
  }
  return f;
}

TDeltaMap coproduct_map(const Coproduct& a, const Coproduct& b, const std::vector<TDeltaMap>& maps) {
  std::vector<TDeltaMap> into_b;
  for (std::size_t k = 0; k < maps.size(); ++k) into_b.push_back(compose(b.injections[k], maps[k]));
  return copair(a, into_b);
}

Pushout pushout(const TDeltaSet& a, const TDeltaSet& x, const TDeltaSet& b, const TDeltaMap& f,
                const TDeltaMap& i) {
  if (a.dim != b.dim || a.dim != x.dim) throw InputError("pushout of sets with different truncation");
  if (!is_injective(i, b)) throw InputError("pushout requires a monomorphism");
  const int dim = x.dim;
  Pushout out;
  out.set = x;
  out.from_x = identity_map(x);
  out.from_b.simplices.resize(dim + 1);
  out.from_b.tokens.resize(dim + 1);

  // Levelwise: P = X ⊔ (B \ i(A)).
  for (int m = 0; m <= dim; ++m) {
    auto& l = out.set.levels[m];
    std::vector<Id> sim(b.size(m), kNone), tok(b.token_count(m), kNone);
    for (Id s = 0; s < static_cast<Id>(a.size(m)); ++s) sim[i.simplices[m][s]] = f.simplices[m][s];
    for (Id t = 0; t < static_cast<Id>(a.token_count(m)); ++t) tok[i.tokens[m][t]] = f.tokens[m][t];
    std::unordered_map<std::string, int> used;
    for (const auto& n : l.simplices) used[n] = 1;
    auto fresh = [&](std::string n) {
      while (used.count(n)) n += "'";
      used[n] = 1;
      return n;
    };
    for (Id s = 0; s < static_cast<Id>(b.size(m)); ++s)
      if (sim[s] == kNone) {
        sim[s] = static_cast<Id>(l.simplices.size());
        l.simplices.push_back(fresh(b.name(m, s)));
      }
    used.clear();
    for (const auto& n : l.tokens) used[n] = 1;
    for (Id t = 0; t < static_cast<Id>(b.token_count(m)); ++t)
      if (tok[t] == kNone) {
        tok[t] = static_cast<Id>(l.tokens.size());
        l.tokens.push_back(fresh(b.token_name(m, t)));
      }
    out.from_b.simplices[m] = std::move(sim);
    out.from_b.tokens[m] = std::move(tok);
  }

  // Structure maps: X part copied, new elements induced from B.
  for (int m = 0; m <= dim; ++m) {
    auto& l = out.set.levels[m];
    const auto& xl = x.levels[m];
    const std::size_t nx = x.size(m), np = l.simplices.size();
    for (auto& v : l.faces) v.resize(np, kNone);
    for (auto& v : l.degeneracies) v.resize(np, kNone);
    for (auto& v : l.zeta) v.resize(np, kNone);
    l.under.resize(l.tokens.size(), kNone);
    (void)xl;
    const auto& q = out.from_b;
    for (Id s = 0; s < static_cast<Id>(b.size(m)); ++s) {
      const Id p = q.simplices[m][s];
      if (static_cast<std::size_t>(p) < nx) continue;
      for (int k = 0; k < static_cast<int>(l.faces.size()); ++k) l.faces[k][p] = q.simplices[m - 1][b.face(m, k, s)];
      for (int k = 0; k < static_cast<int>(l.degeneracies.size()); ++k)
        l.degeneracies[k][p] = q.simplices[m + 1][b.degeneracy(m, k, s)];
      for (int k = 0; k < static_cast<int>(l.zeta.size()); ++k) l.zeta[k][p] = q.tokens[m + 1][b.zeta(m, k, s)];
    }
    for (Id t = 0; t < static_cast<Id>(b.token_count(m)); ++t) {
      const Id p = q.tokens[m][t];
      if (static_cast<std::size_t>(p) < x.token_count(m)) continue;
      l.under[p] = q.simplices[m][b.under(m, t)];
    }
  }
  return out;
}

Quotient quotient_tokens(const TDeltaSet& x, const std::vector<std::vector<Id>>& token_class) {
  Quotient out;
  out.set = x;
  out.map = identity_map(x);
  out.section = identity_map(x);
  auto is_free = free_tokens(x);
  for (int m = 1; m <= x.dim; ++m) {
    const Id n = static_cast<Id>(x.token_count(m));
    // Representative of a class: its least zeta token if it has one (so the
    // section respects zeta), otherwise its least token.
    std::unordered_map<Id, Id> rep_of_class;
    for (Id t = 0; t < n; ++t) {
      auto [it, inserted] = rep_of_class.emplace(token_class[m][t], t);
      if (inserted) continue;
      if (x.under(m, it->second) != x.under(m, t))
        throw InputError("identified tokens " + x.token_name(m, it->second) + " and " + x.token_name(m, t) +
                         " lie over different simplices");
      if (is_free[m][it->second] && !is_free[m][t]) it->second = t;
    }
    std::vector<Id> reps;
    for (const auto& [cls, r] : rep_of_class) reps.push_back(r);
    std::sort(reps.begin(), reps.end());
    std::vector<Id> new_index(n, kNone);
    for (std::size_t k = 0; k < reps.size(); ++k) new_index[reps[k]] = static_cast<Id>(k);
    auto& l = out.set.levels[m];
    l.tokens.clear();
    l.under.clear();
    for (Id r : reps) {
      l.tokens.push_back(x.token_name(m, r));
      l.under.push_back(x.under(m, r));
    }
    out.map.tokens[m].resize(n);
    for (Id t = 0; t < n; ++t) out.map.tokens[m][t] = new_index[rep_of_class[token_class[m][t]]];
    out.section.tokens[m] = reps;
  }
  for (int m = 0; m < x.dim; ++m)
    for (auto& z : out.set.levels[m].zeta)
      for (Id& t : z) t = out.map.tokens[m + 1][t];
  return out;
}

Quotient identify_markings(const TDeltaSet& x) {
  std::vector<std::vector<Id>> cls(x.dim + 1);
  for (int m = 0; m <= x.dim; ++m) cls[m] = x.levels[m].under;
  return quotient_tokens(x, cls);
}

// ------------------------------------------------------------------------ join

TDeltaSet join(const TDeltaSet& a, const TDeltaSet& b) {
  if (a.dim != b.dim) throw InputError("join of sets with different truncation");
  if (!is_stratified(a) || !is_stratified(b)) throw InputError("join requires stratified inputs");
  const int dim = a.dim;
  auto ma = marked_simplices(a), mb = marked_simplices(b);

  // Level m: A_m, then B_m, then pairs (a, b) ∈ A_p × B_q with p + q = m - 1,
  // grouped by increasing p.
  std::vector<std::vector<Id>> pair_offset(dim + 1, std::vector<Id>(dim + 1, kNone));
  TDeltaSet j;
  j.dim = dim;
  j.levels.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    auto& names = j.levels[m].simplices;
    for (const auto& n : a.levels[m].simplices) names.push_back(n + "*");
    for (const auto& n : b.levels[m].simplices) names.push_back("*" + n);
    for (int p = 0; p <= m - 1; ++p) {
      const int q = m - 1 - p;
      pair_offset[m][p] = static_cast<Id>(names.size());
      for (const auto& na : a.levels[p].simplices)
        for (const auto& nb : b.levels[q].simplices) names.push_back(na + "*" + nb);
    }
  }
  auto pure_a = [&](int, Id s) { return s; };
  auto pure_b = [&](int m, Id s) { return static_cast<Id>(a.size(m)) + s; };
  auto pair = [&](int p, Id sa, int q, Id sb) {
    return pair_offset[p + q + 1][p] + sa * static_cast<Id>(b.size(q)) + sb;
  };

  std::vector<std::vector<bool>> marked(dim + 1);
  for (int m = 0; m <= dim; ++m) marked[m].assign(j.levels[m].simplices.size(), false);
  for (int m = 0; m <= dim; ++m) {
    for (Id s = 0; s < static_cast<Id>(a.size(m)); ++s) marked[m][pure_a(m, s)] = ma[m][s];
    for (Id s = 0; s < static_cast<Id>(b.size(m)); ++s) marked[m][pure_b(m, s)] = mb[m][s];
    for (int p = 0; p <= m - 1; ++p) {
      const int q = m - 1 - p;
      for (Id sa = 0; sa < static_cast<Id>(a.size(p)); ++sa)
        for (Id sb = 0; sb < static_cast<Id>(b.size(q)); ++sb) marked[m][pair(p, sa, q, sb)] = ma[p][sa] || mb[q][sb];
    }
  }
  std::vector<std::vector<Id>> token_of(dim + 1);
  for (int m = 1; m <= dim; ++m) {
    token_of[m].assign(marked[m].size(), kNone);
    auto& l = j.levels[m];
    for (Id s = 0; s < static_cast<Id>(marked[m].size()); ++s)
      if (marked[m][s]) {
        token_of[m][s] = static_cast<Id>(l.tokens.size());
        l.tokens.push_back(l.simplices[s]);
      }
  }
  allocate_structure(j);
  for (int m = 1; m <= dim; ++m)
    for (Id s = 0; s < static_cast<Id>(marked[m].size()); ++s)
      if (token_of[m][s] != kNone) j.levels[m].under[token_of[m][s]] = s;

  for (int m = 0; m <= dim; ++m) {
    auto& l = j.levels[m];
    for (Id s = 0; s < static_cast<Id>(a.size(m)); ++s) {
      for (int i = 0; i < static_cast<int>(l.faces.size()); ++i) l.faces[i][pure_a(m, s)] = pure_a(m - 1, a.face(m, i, s));
      for (int i = 0; i < static_cast<int>(l.degeneracies.size()); ++i)
        l.degeneracies[i][pure_a(m, s)] = pure_a(m + 1, a.degeneracy(m, i, s));
    }
    for (Id s = 0; s < static_cast<Id>(b.size(m)); ++s) {
      for (int i = 0; i < static_cast<int>(l.faces.size()); ++i) l.faces[i][pure_b(m, s)] = pure_b(m - 1, b.face(m, i, s));
      for (int i = 0; i < static_cast<int>(l.degeneracies.size()); ++i)
        l.degeneracies[i][pure_b(m, s)] = pure_b(m + 1, b.degeneracy(m, i, s));
    }
    for (int p = 0; p <= m - 1; ++p) {
      const int q = m - 1 - p;
      for (Id sa = 0; sa < static_cast<Id>(a.size(p)); ++sa)
        for (Id sb = 0; sb < static_cast<Id>(b.size(q)); ++sb) {
          const Id s = pair(p, sa, q, sb);
          for (int i = 0; i <= m; ++i) {
            Id v;
            if (i <= p)
              v = p == 0 ? pure_b(m - 1, sb) : pair(p - 1, a.face(p, i, sa), q, sb);
            else
              v = q == 0 ? pure_a(m - 1, sa) : pair(p, sa, q - 1, b.face(q, i - p - 1, sb));
            l.faces[i][s] = v;
          }
          if (m < dim)
            for (int i = 0; i <= m; ++i)
              l.degeneracies[i][s] = i <= p ? pair(p + 1, a.degeneracy(p, i, sa), q, sb)
                                            : pair(p, sa, q + 1, b.degeneracy(q, i - p - 1, sb));
        }
    }
  }
  for (int m = 0; m < dim; ++m) {
    auto& l = j.levels[m];
    for (int i = 0; i <= m; ++i)
      for (Id s = 0; s < static_cast<Id>(l.simplices.size()); ++s) {
        Id t = token_of[m + 1][l.degeneracies[i][s]];
        if (t == kNone) throw InputError("join: degenerate simplex without a token");
        l.zeta[i][s] = t;
      }
  }
  return j;
}

}  // namespace complicial
