#include "complicial/nerve.hpp"

#include <algorithm>
#include <numeric>

namespace complicial {

namespace {

constexpr int kMaxDim = 6;

}  // namespace

int pair_index(int m, int i, int j) {
  // Pairs starting below i, then the offset of j.
  return i * m - i * (i - 1) / 2 + (j - i - 1);
}

int triple_index(int m, int i, int j, int k) {
  int idx = 0;
  for (int a = 0; a < i; ++a) idx += (m - a) * (m - a - 1) / 2;
  for (int b = i + 1; b < j; ++b) idx += m - b;
  return idx + (k - j - 1);
}

Marking parse_marking(const std::string& name) {
  if (name == "street") return Marking::Degenerate;
  if (name == "rs") return Marking::RobertsStreet;
  if (name == "natural") return Marking::Natural;
  throw InputError("unknown marking: " + name + " (expected street, rs or natural)");
}

std::string marking_name(Marking m) {
  switch (m) {
    case Marking::Degenerate:
      return "street";
    case Marking::RobertsStreet:
      return "rs";
    case Marking::Natural:
      return "natural";
  }
  return "?";
}

// ---------------------------------------------------------------- construction

namespace {

// Extends an (m-1)-simplex by a new last vertex, choosing a_{0m}, then for each
// j: a_{jm} followed by α_{0jm}, ..., α_{j-1,jm}. Quadruples ending in m are
// checked as soon as their last cell is known.
class Extender {
 public:
  Extender(const FiniteTwoCategory& c, int m) : c_(c), m_(m) {}

  void run(const Id* parent, std::vector<Id>& out) {
    const int p = m_ - 1;
    for (int i = 0; i <= p; ++i) obj_[i] = parent[i];
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j) edge_[i][j] = parent[p + 1 + pair_index(p, i, j)];
    const int np = p * (p + 1) / 2;
    for (int i = 0; i <= p; ++i)
      for (int j = i + 1; j <= p; ++j)
        for (int k = j + 1; k <= p; ++k) cell_[i][j][k] = parent[p + 1 + np + triple_index(p, i, j, k)];
    out_ = &out;
    for (Id y = 0; y < static_cast<Id>(c_.object_count()); ++y)
      for (Id a : c_.hom(obj_[0], y)) {
        edge_[0][m_] = a;
        obj_[m_] = y;
        choose_edge(1);
      }
  }

 private:
  void choose_edge(int j) {
    if (j == m_) {
      emit();
      return;
    }
    for (Id a : c_.hom(obj_[j], obj_[m_])) {
      edge_[j][m_] = a;
      choose_cell(0, j);
    }
  }

  void choose_cell(int i, int j) {
    if (i == j) {
      choose_edge(j + 1);
      return;
    }
    const Id src = edge_[i][m_];
    const Id tgt = c_.compose(edge_[j][m_], edge_[i][j]);
    for (Id alpha : c_.two_cells_between(src, tgt)) {
      cell_[i][j][m_] = alpha;
      bool ok = true;
      for (int h = 0; h < i && ok; ++h) ok = quadruple(h, i, j, m_);
      if (ok) choose_cell(i + 1, j);
    }
  }

  bool quadruple(int i, int j, int k, int l) const {
    const Id lhs = c_.vcompose(c_.whisker_right(cell_[j][k][l], edge_[i][j]), cell_[i][j][l]);
    const Id rhs = c_.vcompose(c_.whisker_left(edge_[k][l], cell_[i][j][k]), cell_[i][k][l]);
    return lhs == rhs;
  }

  void emit() {
    for (int i = 0; i <= m_; ++i) out_->push_back(obj_[i]);
    for (int i = 0; i <= m_; ++i)
      for (int j = i + 1; j <= m_; ++j) out_->push_back(edge_[i][j]);
    for (int i = 0; i <= m_; ++i)
      for (int j = i + 1; j <= m_; ++j)
        for (int k = j + 1; k <= m_; ++k) out_->push_back(cell_[i][j][k]);
  }

  const FiniteTwoCategory& c_;
  int m_;
  Id obj_[kMaxDim + 1]{};
  Id edge_[kMaxDim + 1][kMaxDim + 1]{};
  Id cell_[kMaxDim + 1][kMaxDim + 1][kMaxDim + 1]{};
  std::vector<Id>* out_ = nullptr;
};

}  // namespace

DuskinNerve::DuskinNerve(const FiniteTwoCategory& c, int dim) : c_(c), dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw InputError("nerve dimension must lie in 0..6");
  levels_.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) build_level(m);
}

void DuskinNerve::build_level(int m) {
  LevelData& lv = levels_[m];
  lv.stride = static_cast<std::size_t>(m + 1 + pairs(m) + triples(m));
  std::vector<Id> raw;
  if (m == 0) {
    for (Id x = 0; x < static_cast<Id>(c_.object_count()); ++x) raw.push_back(x);
  } else {
    Extender ext(c_, m);
    for (std::size_t s = 0; s < levels_[m - 1].count; ++s) ext.run(key(m - 1, static_cast<Id>(s)), raw);
  }
  const std::size_t n = raw.size() / lv.stride;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const std::size_t stride = lv.stride;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(raw.begin() + a * stride, raw.begin() + (a + 1) * stride,
                                        raw.begin() + b * stride, raw.begin() + (b + 1) * stride);
  });
  lv.keys.resize(raw.size());
  for (std::size_t r = 0; r < n; ++r)
    std::copy(raw.begin() + order[r] * stride, raw.begin() + (order[r] + 1) * stride, lv.keys.begin() + r * stride);
  lv.count = n;
}

NerveSimplex DuskinNerve::unpack(int m, const Id* k) const {
  NerveSimplex x;
  x.objects.assign(k, k + m + 1);
  x.edges.assign(k + m + 1, k + m + 1 + pairs(m));
  x.cells.assign(k + m + 1 + pairs(m), k + m + 1 + pairs(m) + triples(m));
  return x;
}

NerveSimplex DuskinNerve::simplex(int m, Id s) const { return unpack(m, key(m, s)); }

Id DuskinNerve::find(int m, const NerveSimplex& x) const {
  if (m < 0 || m > dim_) return kNone;
  const LevelData& lv = levels_[m];
  std::vector<Id> probe;
  probe.reserve(lv.stride);
  probe.insert(probe.end(), x.objects.begin(), x.objects.end());
  probe.insert(probe.end(), x.edges.begin(), x.edges.end());
  probe.insert(probe.end(), x.cells.begin(), x.cells.end());
  if (probe.size() != lv.stride) return kNone;
  std::size_t lo = 0, hi = lv.count;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const Id* k = lv.keys.data() + mid * lv.stride;
    if (std::lexicographical_compare(k, k + lv.stride, probe.begin(), probe.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < lv.count && std::equal(probe.begin(), probe.end(), lv.keys.data() + lo * lv.stride))
    return static_cast<Id>(lo);
  return kNone;
}

NerveSimplex DuskinNerve::pullback(int m, Id s, const std::vector<int>& theta) const {
  const int n = static_cast<int>(theta.size()) - 1;
  NerveSimplex y;
  for (int p = 0; p <= n; ++p) y.objects.push_back(object(m, s, theta[p]));
  for (int p = 0; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      y.edges.push_back(theta[p] == theta[q] ? c_.identity_one(y.objects[p]) : edge(m, s, theta[p], theta[q]));
  for (int p = 0; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      for (int r = q + 1; r <= n; ++r) {
        if (theta[p] == theta[q] || theta[q] == theta[r]) {
          y.cells.push_back(c_.identity_two(y.edges[pair_index(n, p, r)]));
        } else {
          y.cells.push_back(cell(m, s, theta[p], theta[q], theta[r]));
        }
      }
  return y;
}

bool DuskinNerve::is_simplex(int m, const NerveSimplex& x) const {
  if (m < 0 || static_cast<int>(x.objects.size()) != m + 1 || static_cast<int>(x.edges.size()) != pairs(m) ||
      static_cast<int>(x.cells.size()) != triples(m))
    return false;
  const Id n0 = static_cast<Id>(c_.object_count()), n1 = static_cast<Id>(c_.one_cell_count()),
           n2 = static_cast<Id>(c_.two_cell_count());
  for (Id o : x.objects)
    if (o < 0 || o >= n0) return false;
  auto e = [&](int i, int j) { return x.edges[pair_index(m, i, j)]; };
  auto a = [&](int i, int j, int k) { return x.cells[triple_index(m, i, j, k)]; };
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j) {
      const Id f = e(i, j);
      if (f < 0 || f >= n1 || c_.src_object(f) != x.objects[i] || c_.tgt_object(f) != x.objects[j]) return false;
    }
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) {
        const Id al = a(i, j, k);
        if (al < 0 || al >= n2 || c_.two_cell(al).src != e(i, k) ||
            c_.two_cell(al).tgt != c_.compose(e(j, k), e(i, j)))
          return false;
      }
  for (int i = 0; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) {
          const Id lhs = c_.vcompose(c_.whisker_right(a(j, k, l), e(i, j)), a(i, j, l));
          const Id rhs = c_.vcompose(c_.whisker_left(e(k, l), a(i, j, k)), a(i, k, l));
          if (lhs != rhs) return false;
        }
  return true;
}

std::string DuskinNerve::label(int m, Id s) const {
  const Id* k = key(m, s);
  std::string out;
  for (int i = 0; i <= m; ++i) {
    if (i) out += ',';
    out += c_.object_name(k[i]);
  }
  if (m == 0) return out;
  out += '|';
  for (int p = 0; p < pairs(m); ++p) {
    if (p) out += ',';
    out += c_.one_cell(k[m + 1 + p]).name;
  }
  if (m == 1) return out;
  out += '|';
  for (int t = 0; t < triples(m); ++t) {
    if (t) out += ',';
    out += c_.two_cell(k[m + 1 + pairs(m) + t]).name;
  }
  return out;
}

TDeltaSet DuskinNerve::marked(Marking marking, std::vector<AdjointEquivalence>* completions) const {
  TDeltaSet x;
  x.dim = dim_;
  x.levels.resize(dim_ + 1);
  for (int m = 0; m <= dim_; ++m) {
    auto& l = x.levels[m];
    l.simplices.resize(size(m));
    for (std::size_t s = 0; s < size(m); ++s) l.simplices[s] = label(m, static_cast<Id>(s));
  }
  if (completions) completions->clear();

  // Tokens, grouped by simplex; the first token over a degenerate simplex is
  // the one designated by zeta.
  std::vector<std::vector<Id>> first(dim_ + 1);
  for (int m = 1; m <= dim_; ++m) {
    auto& l = x.levels[m];
    first[m].assign(size(m), kNone);
    for (Id s = 0; s < static_cast<Id>(size(m)); ++s) {
      auto add = [&](std::string name) {
        if (first[m][s] == kNone) first[m][s] = static_cast<Id>(l.tokens.size());
        l.tokens.push_back(std::move(name));
        l.under.push_back(s);
      };
      if (m == 1) {
        const Id f = edge(1, s, 0, 1);
        const bool degenerate = c_.one_cell(f).identity;
        if (marking == Marking::Natural) {
          auto all = adjoint_equivalence_completions(c_, f);
          if (degenerate) {
            const AdjointEquivalence id = identity_completion(c_, c_.src_object(f));
            auto it = std::find(all.begin(), all.end(), id);
            if (it == all.end()) throw VerificationError("identity completion missing");
            std::rotate(all.begin(), it, it + 1);
          }
          for (const auto& e : all) {
            add(l.simplices[s] + "[" + c_.one_cell(e.g).name + "," + c_.two_cell(e.eta).name + "," +
                c_.two_cell(e.eps).name + "]");
            if (completions) completions->push_back(e);
          }
        } else if (degenerate) {
          add(l.simplices[s]);
        }
      } else if (m == 2) {
        const Id alpha = cell(2, s, 0, 1, 2);
        bool mark = false;
        switch (marking) {
          case Marking::Degenerate:
            mark = c_.one_cell(edge(2, s, 0, 1)).identity || c_.one_cell(edge(2, s, 1, 2)).identity;
            mark = mark && c_.two_cell(alpha).identity;
            break;
          case Marking::RobertsStreet:
            mark = c_.two_cell(alpha).identity;
            break;
          case Marking::Natural:
            mark = inverse_2cell(c_, alpha) != kNone;
            break;
        }
        if (mark) add(l.simplices[s]);
      } else {
        bool mark = true;
        if (marking == Marking::Degenerate) {
          mark = false;
          for (int i = 0; i < m && !mark; ++i) {
            std::vector<int> theta;
            for (int p = 0; p <= m; ++p)
              if (p != i + 1) theta.push_back(p);
            // s is degenerate at i iff pulling back d_{i+1} along s_i returns s.
            std::vector<int> back;
            for (int p = 0; p <= m; ++p) back.push_back(p <= i ? p : p - 1);
            NerveSimplex face = pullback(m, s, theta);
            Id fs = find(m - 1, face);
            mark = fs != kNone && pullback(m - 1, fs, back) == simplex(m, s);
          }
        }
        if (mark) add(l.simplices[s]);
      }
    }
  }
  allocate_structure(x);

  for (int m = 0; m <= dim_; ++m) {
    auto& l = x.levels[m];
    const Id n = static_cast<Id>(size(m));
    bool missing = false;
#pragma omp parallel for schedule(static) reduction(|| : missing)
    for (Id s = 0; s < n; ++s) {
      std::vector<int> theta;
      if (m > 0)
        for (int i = 0; i <= m; ++i) {
          theta.clear();
          for (int p = 0; p <= m; ++p)
            if (p != i) theta.push_back(p);
          const Id f = find(m - 1, pullback(m, s, theta));
          missing = missing || f == kNone;
          l.faces[i][s] = f;
        }
      if (m < dim_)
        for (int i = 0; i <= m; ++i) {
          theta.clear();
          for (int p = 0; p <= m + 1; ++p) theta.push_back(p <= i ? p : p - 1);
          const Id d = find(m + 1, pullback(m, s, theta));
          missing = missing || d == kNone || first[m + 1][d] == kNone;
          l.degeneracies[i][s] = d;
          l.zeta[i][s] = d == kNone ? kNone : first[m + 1][d];
        }
    }
    if (missing) throw VerificationError("nerve structure map left the simplex set");
  }
  return x;
}

TDeltaSet duskin_nerve(const FiniteTwoCategory& c, int dim) { return nerve(c, dim, Marking::Degenerate); }
TDeltaSet rs_nerve(const FiniteTwoCategory& c, int dim) { return nerve(c, dim, Marking::RobertsStreet); }
TDeltaSet natural_nerve(const FiniteTwoCategory& c, int dim) { return nerve(c, dim, Marking::Natural); }

TDeltaSet nerve(const FiniteTwoCategory& c, int dim, Marking marking) {
  return DuskinNerve(c, dim).marked(marking);
}

TDeltaMap rs_to_natural(const TDeltaSet& rs, const TDeltaSet& natural) {
  if (rs.dim != natural.dim) throw InputError("nerves of different truncation");
  TDeltaMap f = identity_map(rs);
  auto over = tokens_over(natural);
  for (int m = 1; m <= rs.dim; ++m) {
    if (rs.size(m) != natural.size(m)) throw InputError("nerves of different categories");
    for (Id t = 0; t < static_cast<Id>(rs.token_count(m)); ++t) {
      const auto& cand = over[m][rs.under(m, t)];
      if (cand.empty()) throw VerificationError("RS-marked simplex " + rs.token_name(m, t) + " is not naturally marked");
      f.tokens[m][t] = cand.front();
    }
  }
  return f;
}

TDeltaMap rs_to_natural(const FiniteTwoCategory& c, int dim) {
  DuskinNerve n(c, dim);
  return rs_to_natural(n.marked(Marking::RobertsStreet), n.marked(Marking::Natural));
}

TDeltaMap induced_map(const DuskinNerve& source, const TDeltaSet& source_set, const DuskinNerve& target,
                      const TDeltaSet& target_set, const TwoFunctor& f, Marking marking,
                      const std::vector<AdjointEquivalence>& source_completions,
                      const std::vector<AdjointEquivalence>& target_completions) {
  const int dim = source.dim();
  if (target.dim() != dim) throw InputError("nerves of different truncation");
  TDeltaMap out;
  out.simplices.resize(dim + 1);
  out.tokens.resize(dim + 1);
  for (int m = 0; m <= dim; ++m) {
    out.simplices[m].resize(source.size(m));
    for (Id s = 0; s < static_cast<Id>(source.size(m)); ++s) {
      NerveSimplex x = source.simplex(m, s);
      for (Id& o : x.objects) o = f.objects[o];
      for (Id& e : x.edges) e = f.one_cells[e];
      for (Id& a : x.cells) a = f.two_cells[a];
      const Id t = target.find(m, x);
      if (t == kNone) throw VerificationError("2-functor image is not a nerve simplex");
      out.simplices[m][s] = t;
    }
  }
  auto over = tokens_over(target_set);
  for (int m = 1; m <= dim; ++m) {
    out.tokens[m].resize(source_set.token_count(m));
    for (Id t = 0; t < static_cast<Id>(source_set.token_count(m)); ++t) {
      const Id img = out.simplices[m][source_set.under(m, t)];
      const auto& cand = over[m][img];
      if (cand.empty()) throw VerificationError("2-functor does not preserve markings");
      Id chosen = cand.front();
      if (marking == Marking::Natural && m == 1) {
        const auto& e = source_completions.at(t);
        const AdjointEquivalence want{f.one_cells[e.f], f.one_cells[e.g], f.two_cells[e.eta], f.two_cells[e.eps]};
        chosen = kNone;
        for (Id c : cand)
          if (target_completions.at(c) == want) chosen = c;
        if (chosen == kNone) throw VerificationError("image completion has no token");
      }
      out.tokens[m][t] = chosen;
    }
  }
  return out;
}

FullFaithfulness rs_fully_faithful_check(const FiniteTwoCategory& c, const FiniteTwoCategory& d, int dim,
                                         SearchBudget budget) {
  FullFaithfulness r;
  r.nerve_maps = count_maps(rs_nerve(c, dim), rs_nerve(d, dim), budget);
  r.functors = count_two_functors(c, d);
  return r;
}

}  // namespace complicial
