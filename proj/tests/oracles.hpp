#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the search or nerve code; everything is brute force over small inputs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "complicial/twocat.hpp"

namespace oracle {

using complicial::FiniteTwoCategory;
using complicial::Id;

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// Monotone maps [m] → [n].
inline std::uint64_t monotone_maps(int m, int n) { return binomial(n + m + 1, m + 1); }

// Non-identity 1-cells of the truncated oriental on 0..m: one per pair i < j
// and subset of the vertices strictly between them.
inline std::uint64_t oriental_one_cells(int m) {
  std::uint64_t total = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      std::uint64_t subsets = 0;
      for (unsigned s = 0; s < (1u << (j - i - 1)); ++s) ++subsets;
      total += subsets;
    }
  return total;
}

// Non-identity 2-cells: strictly nested subset pairs over each pair i < j.
inline std::uint64_t oriental_two_cells(int m) {
  std::uint64_t total = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const unsigned full = 1u << (j - i - 1);
      for (unsigned s = 0; s < full; ++s)
        for (unsigned t = 0; t < full; ++t)
          if (s != t && (s & t) == s) ++total;
    }
  return total;
}

// Paths in a finite acyclic graph, including the empty path at each vertex.
inline std::uint64_t count_paths(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::function<std::uint64_t(int)> go = [&](int v) -> std::uint64_t {
    std::uint64_t n = 1;
    for (auto [a, b] : edges)
      if (a == v) n += go(b);
    return n;
  };
  std::uint64_t total = 0;
  for (int v = 0; v < vertices; ++v) total += go(v);
  return total;
}

// Counts strict 2-functors by assigning every cell in turn and checking each
// structural equation as soon as all of its cells are assigned.
inline std::uint64_t count_functors(const FiniteTwoCategory& s, const FiniteTwoCategory& t) {
  const Id n0 = static_cast<Id>(s.object_count()), n1 = static_cast<Id>(s.one_cell_count()),
           n2 = static_cast<Id>(s.two_cell_count());
  std::vector<Id> f0(n0, -1), f1(n1, -1), f2(n2, -1);

  auto one_ok = [&](Id f) {
    const Id v = f1[f];
    if (t.src_object(v) != f0[s.src_object(f)] || t.tgt_object(v) != f0[s.tgt_object(f)]) return false;
    if (s.one_cell(f).identity && !t.one_cell(v).identity) return false;
    for (Id g = 0; g < f; ++g) {
      if (s.tgt_object(g) == s.src_object(f)) {
        const Id r = s.compose(f, g);
        if (r <= f && f1[r] != t.compose(v, f1[g])) return false;
      }
      if (s.tgt_object(f) == s.src_object(g)) {
        const Id r = s.compose(g, f);
        if (r <= f && f1[r] != t.compose(f1[g], v)) return false;
      }
    }
    if (s.tgt_object(f) == s.src_object(f)) {
      const Id r = s.compose(f, f);
      if (r <= f && f1[r] != t.compose(v, v)) return false;
    }
    return true;
  };
  auto two_ok = [&](Id a) {
    const Id v = f2[a];
    if (t.two_cell(v).src != f1[s.two_cell(a).src] || t.two_cell(v).tgt != f1[s.two_cell(a).tgt]) return false;
    if (s.two_cell(a).identity && !t.two_cell(v).identity) return false;
    for (Id b = 0; b <= a; ++b) {
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}})
        if (s.two_cell(x).tgt == s.two_cell(y).src) {
          const Id r = s.vcompose(y, x);
          if (r <= a && f2[r] != t.vcompose(f2[y], f2[x])) return false;
        }
    }
    for (Id k = 0; k < n1; ++k) {
      if (s.src_object(k) == s.tgt_object(s.two_cell(a).src)) {
        const Id r = s.whisker_left(k, a);
        if (r <= a && f2[r] != t.whisker_left(f1[k], v)) return false;
      }
      if (s.tgt_object(k) == s.src_object(s.two_cell(a).src)) {
        const Id r = s.whisker_right(a, k);
        if (r <= a && f2[r] != t.whisker_right(v, f1[k])) return false;
      }
    }
    return true;
  };

  // Equations whose result index exceeds the current cell are checked again
  // once the result is assigned, so a final full pass catches the rest.
  auto full_check = [&] {
    for (Id g = 0; g < n1; ++g)
      for (Id f = 0; f < n1; ++f)
        if (s.tgt_object(f) == s.src_object(g) && f1[s.compose(g, f)] != t.compose(f1[g], f1[f])) return false;
    for (Id b = 0; b < n2; ++b)
      for (Id a = 0; a < n2; ++a)
        if (s.two_cell(a).tgt == s.two_cell(b).src && f2[s.vcompose(b, a)] != t.vcompose(f2[b], f2[a])) return false;
    for (Id k = 0; k < n1; ++k)
      for (Id a = 0; a < n2; ++a) {
        if (s.src_object(k) == s.tgt_object(s.two_cell(a).src) && f2[s.whisker_left(k, a)] != t.whisker_left(f1[k], f2[a]))
          return false;
        if (s.tgt_object(k) == s.src_object(s.two_cell(a).src) &&
            f2[s.whisker_right(a, k)] != t.whisker_right(f2[a], f1[k]))
          return false;
      }
    return true;
  };

  std::uint64_t count = 0;
  std::function<void(Id)> assign2 = [&](Id a) {
    if (a == n2) {
      if (full_check()) ++count;
      return;
    }
    for (Id v = 0; v < static_cast<Id>(t.two_cell_count()); ++v) {
      f2[a] = v;
      if (two_ok(a)) assign2(a + 1);
    }
    f2[a] = -1;
  };
  std::function<void(Id)> assign1 = [&](Id f) {
    if (f == n1) {
      assign2(0);
      return;
    }
    for (Id v = 0; v < static_cast<Id>(t.one_cell_count()); ++v) {
      f1[f] = v;
      if (one_ok(f)) assign1(f + 1);
    }
    f1[f] = -1;
  };
  std::function<void(Id)> assign0 = [&](Id x) {
    if (x == n0) {
      assign1(0);
      return;
    }
    for (Id v = 0; v < static_cast<Id>(t.object_count()); ++v) {
      f0[x] = v;
      assign0(x + 1);
    }
  };
  assign0(0);
  return count;
}

// β∗α computed both ways round the interchange square.
inline bool interchange_holds(const FiniteTwoCategory& c) {
  const Id n2 = static_cast<Id>(c.two_cell_count());
  for (Id a = 0; a < n2; ++a)
    for (Id b = 0; b < n2; ++b) {
      const auto& ca = c.two_cell(a);
      const auto& cb = c.two_cell(b);
      if (c.tgt_object(ca.src) != c.src_object(cb.src)) continue;
      const Id left = c.vcompose(c.whisker_right(b, ca.tgt), c.whisker_left(cb.src, a));
      const Id right = c.vcompose(c.whisker_left(cb.tgt, a), c.whisker_right(b, ca.src));
      if (left != right) return false;
    }
  return true;
}

// All permutations of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
