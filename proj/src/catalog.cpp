#include "complicial/catalog.hpp"

#include <algorithm>

namespace complicial {

FiniteTwoCategory chain(int m) {
  if (m < -1 || m > 6) throw InputError("chain supports -1 <= m <= 6");
  FiniteCategory base;
  for (int i = 0; i <= m; ++i) base.add_object(std::to_string(i));
  std::vector<std::vector<Id>> arrow(m + 1, std::vector<Id>(m + 1, kNone));
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      arrow[i][j] = base.add_morphism(i == j ? "id_" + std::to_string(i) : std::to_string(i) + std::to_string(j),
                                      i, j, i == j);
  for (int i = 0; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      for (int k = j; k <= m; ++k) base.set_compose(arrow[j][k], arrow[i][j], arrow[i][k]);
  base.finalize();
  return locally_discrete(base);
}

namespace {

FiniteCategory isomorphism_category(const std::string& a, const std::string& b, const std::string& there,
                                    const std::string& back) {
  FiniteCategory c;
  Id x = c.add_object(a);
  Id y = c.add_object(b);
  c.add_identities();
  Id f = c.add_morphism(there, x, y);
  Id g = c.add_morphism(back, y, x);
  c.set_compose(g, f, c.identity(x));
  c.set_compose(f, g, c.identity(y));
  c.finalize();
  return c;
}

}  // namespace

FiniteTwoCategory free_isomorphism() { return locally_discrete(isomorphism_category("x", "y", "f", "g")); }

FiniteTwoCategory suspended_isomorphism() {
  return suspension(isomorphism_category("f", "g", "alpha", "beta"));
}

FiniteTwoCategory suspended_arrow() {
  FiniteCategory c;
  Id a = c.add_object("f");
  Id b = c.add_object("g");
  c.add_identities();
  c.add_morphism("alpha", a, b);
  c.finalize();
  return suspension(c);
}

FiniteTwoCategory free_parallel_pair() {
  FiniteCategory c;
  Id a = c.add_object("a");
  Id b = c.add_object("b");
  c.add_identities();
  c.add_morphism("u", a, b);
  c.add_morphism("v", a, b);
  c.finalize();
  return suspension(c);
}

FiniteTwoCategory inverted_triangle() {
  FiniteCategory c;
  for (const char* o : {"0", "1", "2"}) c.add_object(o);
  c.add_identities();
  Id f01 = c.add_morphism("01", 0, 1);
  Id f12 = c.add_morphism("12", 1, 2);
  c.add_morphism("02", 0, 2);
  Id f012 = c.add_morphism("012", 0, 2);
  c.set_compose(f12, f01, f012);
  c.finalize();
  // Every pair of parallel 1-cells in hom(0, 2) is related, so the two
  // non-identity 2-cells there are mutually inverse.
  return locally_thin(c, [](Id, Id) { return true; });
}

FiniteTwoCategory z2_two_cell() {
  TwoCategoryBuilder b;
  Id star = b.add_object("*");
  Id id = b.add_one_cell("id_*", star, star, true);
  Id one = b.add_two_cell("1", id, id, true);
  Id sigma = b.add_two_cell("sigma", id, id);
  b.set_vcompose(sigma, sigma, one);
  b.fill_units();
  // Whiskering by the only 1-cell is the identity operation.
  b.set_whisker_left(id, sigma, sigma);
  b.set_whisker_right(sigma, id, sigma);
  return b.build();
}

const std::vector<NamedCategory>& standard_examples() {
  static const std::vector<NamedCategory> catalog = [] {
    std::vector<NamedCategory> out;
    for (int m = -1; m <= 6; ++m)
      out.push_back({"[" + std::to_string(m) + "]", "walking chain of length " + std::to_string(m), chain(m)});
    out.push_back({"I", "free isomorphism, locally discrete", free_isomorphism()});
    out.push_back({"SigmaI", "suspension of the free isomorphism", suspended_isomorphism()});
    out.push_back({"Sigma[1]", "suspension of [1], a single 2-cell", suspended_arrow()});
    out.push_back({"Sigma[parallel]", "free parallel pair of 2-cells", free_parallel_pair()});
    out.push_back({"OO2[2]", "2-simplex with inverted top 2-cell", inverted_triangle()});
    out.push_back({"O2[2]", "truncated oriental on [2]", oriental2(2)});
    out.push_back({"O2[3]", "truncated oriental on [3]", oriental2(3)});
    out.push_back({"Z2", "one object with 2-cell group Z/2", z2_two_cell()});
    return out;
  }();
  return catalog;
}

std::vector<NamedCategory> test_catalog() {
  std::vector<NamedCategory> out;
  for (const char* name : {"[0]", "[1]", "[2]", "SigmaI", "Sigma[parallel]", "OO2[2]", "O2[2]", "O2[3]", "I", "Z2"})
    for (const auto& e : standard_examples())
      if (e.name == name) out.push_back(e);
  return out;
}

const FiniteTwoCategory& example(const std::string& name) {
  for (const auto& e : standard_examples())
    if (e.name == name) return e.category;
  throw InputError("unknown example: " + name);
}

// ------------------------------------------------------------------ effective

Word EffectiveTwoCategory::compose(const Word& g, const Word& f) const {
  if (f.tgt != g.src) throw InputError("words are not composable");
  Word w{f.src, g.tgt, f.letters};
  w.letters.insert(w.letters.end(), g.letters.begin(), g.letters.end());
  return normalize(w);
}

std::string EffectiveTwoCategory::render(const Word& w) const {
  if (w.letters.empty()) return "id_" + objects()[w.src];
  auto gens = generators();
  std::string s;
  // Composition order: last letter written first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) s += gens[*it].name;
  return s;
}

Word FreeAdjointEquivalence::normalize(const Word& w) const {
  Id at = w.src;
  for (Id letter : w.letters) {
    if (letter == kF && at == kX)
      at = kY;
    else if (letter == kG && at == kY)
      at = kX;
    else
      throw InputError("word is not composable");
  }
  if (at != w.tgt) throw InputError("word endpoint mismatch");
  return w;
}

std::vector<Word> FreeAdjointEquivalence::one_cells(Id x, Id y, std::size_t max_length) const {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_length; ++len) {
    Id end = len % 2 == 0 ? x : 1 - x;
    if (end != y) continue;
    Word w{x, y, {}};
    Id at = x;
    for (std::size_t i = 0; i < len; ++i) {
      w.letters.push_back(at == kX ? kF : kG);
      at = 1 - at;
    }
    out.push_back(w);
  }
  return out;
}

bool FreeAdjointEquivalence::has_two_cell(const Word& a, const Word& b) const {
  return a.src == b.src && a.tgt == b.tgt;
}

bool FreeAdjointEquivalence::two_cell_unique(const Word& a, const Word& b) const { return has_two_cell(a, b); }

}  // namespace complicial
