#include "complicial/standard.hpp"

#include <bit>
#include <map>

namespace complicial {

TDeltaSet simplex_shape(int n, int dim, const std::function<bool(unsigned)>& contains,
                        const std::function<bool(unsigned)>& marked) {
  if (n < -1 || n > 8) throw InputError("simplex shapes support -1 <= n <= 8");
  if (dim < 0 || dim > 8) throw InputError("truncation must lie in 0..8");
  TDeltaSet x;
  x.dim = dim;
  x.levels.resize(dim + 1);
  std::vector<std::map<std::vector<int>, Id>> index(dim + 2);
  std::vector<std::vector<std::vector<int>>> seqs(dim + 2);

  // Monotone sequences of length p+1, lexicographic.
  for (int p = 0; p <= dim + 1 && n >= 0; ++p) {
    std::vector<int> seq(p + 1, 0);
    while (true) {
      unsigned mask = 0;
      for (int v : seq) mask |= 1u << v;
      if (contains(mask)) {
        index[p][seq] = static_cast<Id>(seqs[p].size());
        seqs[p].push_back(seq);
      }
      int pos = p;
      while (pos >= 0 && seq[pos] == n) --pos;
      if (pos < 0) break;
      ++seq[pos];
      for (int q = pos + 1; q <= p; ++q) seq[q] = seq[pos];
    }
  }
  auto name = [](const std::vector<int>& s) {
    std::string out;
    for (int v : s) out += static_cast<char>('0' + v);
    return out;
  };
  for (int p = 0; p <= dim; ++p)
    for (const auto& s : seqs[p]) x.levels[p].simplices.push_back(name(s));

  // Tokens: one per marked simplex, in simplex order.
  std::vector<std::vector<Id>> token_of(dim + 1);
  for (int p = 1; p <= dim; ++p) {
    auto& l = x.levels[p];
    token_of[p].assign(seqs[p].size(), kNone);
    for (std::size_t s = 0; s < seqs[p].size(); ++s) {
      const auto& seq = seqs[p][s];
      unsigned mask = 0;
      for (int v : seq) mask |= 1u << v;
      const bool degenerate = std::popcount(mask) < p + 1;
      if (degenerate || marked(mask)) {
        token_of[p][s] = static_cast<Id>(l.tokens.size());
        l.tokens.push_back(l.simplices[s]);
        l.under.push_back(static_cast<Id>(s));
      }
    }
  }
  allocate_structure(x);
  for (int p = 0; p <= dim; ++p) {
    auto& l = x.levels[p];
    for (std::size_t s = 0; s < seqs[p].size(); ++s) {
      const auto& seq = seqs[p][s];
      if (p > 0)
        for (int i = 0; i <= p; ++i) {
          auto f = seq;
          f.erase(f.begin() + i);
          l.faces[i][s] = index[p - 1].at(f);
        }
      if (p < dim)
        for (int i = 0; i <= p; ++i) {
          auto d = seq;
          d.insert(d.begin() + i, seq[i]);
          const Id t = index[p + 1].at(d);
          l.degeneracies[i][s] = t;
          l.zeta[i][s] = token_of[p + 1][t];
        }
    }
  }
  return x;
}

namespace {

unsigned full_mask(int m) { return m < 0 ? 0u : (1u << (m + 1)) - 1; }

// Δᵏ[m] marking: non-degenerate simplices of dimension ≥ 1 containing
// {k-1, k, k+1} ∩ [m]. extra lists codimension-one faces that are also marked.
std::function<bool(unsigned)> k_marking(int m, int k, std::vector<int> extra_faces) {
  unsigned required = 0;
  for (int v = k - 1; v <= k + 1; ++v)
    if (v >= 0 && v <= m) required |= 1u << v;
  const unsigned full = full_mask(m);
  return [=](unsigned mask) {
    if (std::popcount(mask) < 2) return false;
    if ((mask & required) == required) return true;
    for (int f : extra_faces)
      if (f >= 0 && f <= m && mask == (full & ~(1u << f))) return true;
    return false;
  };
}

}  // namespace

TDeltaSet standard(Shape shape, int m, int k, int dim) {
  if (m < 0 || m > dim) throw InputError("shape dimension must lie in 0..dim");
  const unsigned full = full_mask(m);
  auto all = [](unsigned) { return true; };
  auto none = [](unsigned) { return false; };
  auto check_k = [&] {
    if (k < 0 || k > m) throw InputError("k must lie in 0..m");
  };
  switch (shape) {
    case Shape::Delta:
      return simplex_shape(m, dim, all, none);
    case Shape::DeltaT:
      return simplex_shape(m, dim, all, [=](unsigned mask) { return m >= 1 && mask == full; });
    case Shape::Boundary:
      return simplex_shape(m, dim, [=](unsigned mask) { return mask != full; }, none);
    case Shape::Horn:
      check_k();
      return simplex_shape(
          m, dim, [=](unsigned mask) { return mask != full && mask != (full & ~(1u << k)); }, k_marking(m, k, {}));
    case Shape::DeltaK:
      check_k();
      return simplex_shape(m, dim, all, k_marking(m, k, {}));
    case Shape::DeltaKPrime:
      check_k();
      return simplex_shape(m, dim, all, k_marking(m, k, {k - 1, k + 1}));
    case Shape::DeltaKDoublePrime:
      check_k();
      return simplex_shape(m, dim, all, k_marking(m, k, {k - 1, k, k + 1}));
    case Shape::Delta3Eq:
      if (m != 3) throw InputError("Delta3_eq has dimension 3");
      return simplex_shape(3, dim, all, [](unsigned mask) {
        return std::popcount(mask) >= 3 || mask == 0b0101u || mask == 0b1010u;
      });
    case Shape::Delta3Sharp:
      if (m != 3) throw InputError("Delta3_sharp has dimension 3");
      return simplex_shape(3, dim, all, [](unsigned mask) { return std::popcount(mask) >= 2; });
  }
  throw InputError("unknown shape");
}

Shape parse_shape(const std::string& name) {
  static const std::map<std::string, Shape> names = {
      {"Delta", Shape::Delta},         {"Delta_t", Shape::DeltaT},
      {"Boundary", Shape::Boundary},   {"Horn", Shape::Horn},
      {"DeltaK", Shape::DeltaK},       {"DeltaK'", Shape::DeltaKPrime},
      {"DeltaK''", Shape::DeltaKDoublePrime}, {"Delta3_eq", Shape::Delta3Eq},
      {"Delta3_sharp", Shape::Delta3Sharp}};
  auto it = names.find(name);
  if (it == names.end()) throw InputError("unknown shape name: " + name);
  return it->second;
}

TDeltaSet standard(const std::string& name, int m, int k, int dim) { return standard(parse_shape(name), m, k, dim); }

}  // namespace complicial
