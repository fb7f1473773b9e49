#include "complicial/twocat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace complicial {

std::string ValidationReport::summary() const {
  std::ostringstream out;
  for (const auto& v : violations) out << v << "\n";
  if (suppressed > 0) out << "... and " << suppressed << " more\n";
  return out.str();
}

// ---------------------------------------------------------------- FiniteCategory

Id FiniteCategory::add_object(std::string name) {
  objects_.push_back(std::move(name));
  identities_.push_back(kNone);
  return static_cast<Id>(objects_.size() - 1);
}

Id FiniteCategory::add_morphism(std::string name, Id src, Id tgt, bool identity) {
  if (src < 0 || tgt < 0 || src >= static_cast<Id>(objects_.size()) ||
      tgt >= static_cast<Id>(objects_.size()))
    throw InputError("morphism " + name + " has an unknown endpoint");
  Id id = static_cast<Id>(morphisms_.size());
  morphisms_.push_back({std::move(name), src, tgt, identity});
  if (identity) {
    if (src != tgt) throw InputError("identity morphism with distinct endpoints");
    identities_[src] = id;
  }
  return id;
}

void FiniteCategory::add_identities() {
  for (Id x = 0; x < static_cast<Id>(objects_.size()); ++x)
    if (identities_[x] == kNone) add_morphism("id_" + objects_[x], x, x, true);
}

void FiniteCategory::set_compose(Id g, Id f, Id result) { pending_.emplace_back(g, f, result); }

void FiniteCategory::finalize() {
  const std::size_t n = morphisms_.size();
  table_.assign(n * n, kNone);
  for (auto [g, f, r] : pending_) table_[g * n + f] = r;
  for (Id f = 0; f < static_cast<Id>(n); ++f) {
    const auto& m = morphisms_[f];
    table_[identities_[m.tgt] * n + f] = f;
    table_[f * n + identities_[m.src]] = f;
  }
  for (Id g = 0; g < static_cast<Id>(n); ++g)
    for (Id f = 0; f < static_cast<Id>(n); ++f)
      if (morphisms_[f].tgt == morphisms_[g].src && table_[g * n + f] == kNone)
        throw InputError("missing composite " + morphisms_[g].name + "∘" + morphisms_[f].name);
}

Id FiniteCategory::compose(Id g, Id f) const {
  if (morphisms_[f].tgt != morphisms_[g].src) return kNone;
  return table_[g * morphisms_.size() + f];
}

// ------------------------------------------------------------- FiniteTwoCategory

Id FiniteTwoCategory::hcompose(Id beta, Id alpha) const {
  Id b = two_cells_[alpha].tgt;
  Id c = two_cells_[beta].src;
  Id right = whisker_right(beta, b);
  Id left = whisker_left(c, alpha);
  if (right == kNone || left == kNone) return kNone;
  return vcompose(right, left);
}

std::span<const Id> FiniteTwoCategory::two_cells_between(Id a, Id b) const {
  return parallel_[a * n1() + b];
}

Id FiniteTwoCategory::find_object(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  return it == objects_.end() ? kNone : static_cast<Id>(it - objects_.begin());
}

Id FiniteTwoCategory::find_one_cell(const std::string& name) const {
  for (std::size_t i = 0; i < one_cells_.size(); ++i)
    if (one_cells_[i].name == name) return static_cast<Id>(i);
  return kNone;
}

Id FiniteTwoCategory::find_two_cell(const std::string& name) const {
  for (std::size_t i = 0; i < two_cells_.size(); ++i)
    if (two_cells_[i].name == name) return static_cast<Id>(i);
  return kNone;
}

void FiniteTwoCategory::index() {
  const std::size_t n0 = objects_.size();
  homs_.assign(n0 * n0, {});
  for (Id f = 0; f < static_cast<Id>(n1()); ++f)
    homs_[one_cells_[f].src * n0 + one_cells_[f].tgt].push_back(f);
  parallel_.assign(n1() * n1(), {});
  for (Id a = 0; a < static_cast<Id>(n2()); ++a)
    parallel_[two_cells_[a].src * n1() + two_cells_[a].tgt].push_back(a);
}

// ------------------------------------------------------------ TwoCategoryBuilder

Id TwoCategoryBuilder::add_object(std::string name) {
  cat_.objects_.push_back(std::move(name));
  return static_cast<Id>(cat_.objects_.size() - 1);
}

Id TwoCategoryBuilder::add_one_cell(std::string name, Id src, Id tgt, bool identity) {
  const Id n0 = static_cast<Id>(cat_.objects_.size());
  if (src < 0 || tgt < 0 || src >= n0 || tgt >= n0)
    throw InputError("1-cell " + name + " has an unknown endpoint");
  cat_.one_cells_.push_back({std::move(name), src, tgt, identity});
  return static_cast<Id>(cat_.one_cells_.size() - 1);
}

Id TwoCategoryBuilder::add_two_cell(std::string name, Id src, Id tgt, bool identity) {
  const Id n1 = static_cast<Id>(cat_.one_cells_.size());
  if (src < 0 || tgt < 0 || src >= n1 || tgt >= n1)
    throw InputError("2-cell " + name + " has an unknown boundary");
  cat_.two_cells_.push_back({std::move(name), src, tgt, identity});
  return static_cast<Id>(cat_.two_cells_.size() - 1);
}

void TwoCategoryBuilder::put(Table& t, Id a, Id b, Id result, const char* what) {
  auto [it, inserted] = t.emplace(std::make_pair(a, b), result);
  if (!inserted && it->second != result)
    throw InputError(std::string("conflicting ") + what + " entries");
}

void TwoCategoryBuilder::set_compose(Id g, Id f, Id result) { put(comp1_, g, f, result, "comp1"); }
void TwoCategoryBuilder::set_vcompose(Id beta, Id alpha, Id result) {
  put(vcomp_, beta, alpha, result, "vcomp");
}
void TwoCategoryBuilder::set_whisker_left(Id c, Id alpha, Id result) {
  put(wl_, c, alpha, result, "whisker_l");
}
void TwoCategoryBuilder::set_whisker_right(Id beta, Id a, Id result) {
  put(wr_, beta, a, result, "whisker_r");
}

void TwoCategoryBuilder::fill_units() {
  auto& c = cat_;
  std::vector<Id> id1(c.objects_.size(), kNone);
  for (Id f = 0; f < static_cast<Id>(c.one_cells_.size()); ++f)
    if (c.one_cells_[f].identity) id1[c.one_cells_[f].src] = f;
  for (Id x = 0; x < static_cast<Id>(id1.size()); ++x)
    if (id1[x] == kNone) id1[x] = add_one_cell("id_" + c.objects_[x], x, x, true);

  std::vector<Id> id2(c.one_cells_.size(), kNone);
  for (Id a = 0; a < static_cast<Id>(c.two_cells_.size()); ++a)
    if (c.two_cells_[a].identity) id2[c.two_cells_[a].src] = a;
  for (Id f = 0; f < static_cast<Id>(id2.size()); ++f)
    if (id2[f] == kNone) id2[f] = add_two_cell("id_" + c.one_cells_[f].name, f, f, true);

  const Id n1 = static_cast<Id>(c.one_cells_.size());
  const Id n2 = static_cast<Id>(c.two_cells_.size());
  for (Id f = 0; f < n1; ++f) {
    const auto& cell = c.one_cells_[f];
    comp1_.try_emplace({id1[cell.tgt], f}, f);
    comp1_.try_emplace({f, id1[cell.src]}, f);
  }
  for (Id a = 0; a < n2; ++a) {
    const auto& cell = c.two_cells_[a];
    vcomp_.try_emplace({id2[cell.tgt], a}, a);
    vcomp_.try_emplace({a, id2[cell.src]}, a);
    wl_.try_emplace({id1[c.one_cells_[cell.src].tgt], a}, a);
    wr_.try_emplace({a, id1[c.one_cells_[cell.src].src]}, a);
  }
  // c ∗ id_a = id_{c∘a} and id_b ∗ a = id_{b∘a}
  for (const auto& [key, r] : comp1_) {
    auto [g, f] = key;
    wl_.try_emplace({g, id2[f]}, id2[r]);
    wr_.try_emplace({id2[g], f}, id2[r]);
  }
}

FiniteTwoCategory TwoCategoryBuilder::build() {
  FiniteTwoCategory c = cat_;
  const std::size_t n0 = c.objects_.size(), n1 = c.one_cells_.size(), n2 = c.two_cells_.size();
  c.id1_.assign(n0, kNone);
  for (Id f = 0; f < static_cast<Id>(n1); ++f) {
    const auto& cell = c.one_cells_[f];
    if (!cell.identity) continue;
    if (cell.src != cell.tgt) throw InputError("identity 1-cell " + cell.name + " is not an endomorphism");
    if (c.id1_[cell.src] != kNone)
      throw InputError("object " + c.objects_[cell.src] + " has two identity 1-cells");
    c.id1_[cell.src] = f;
  }
  for (Id x = 0; x < static_cast<Id>(n0); ++x)
    if (c.id1_[x] == kNone) throw InputError("object " + c.objects_[x] + " has no identity 1-cell");
  c.id2_.assign(n1, kNone);
  for (Id a = 0; a < static_cast<Id>(n2); ++a) {
    const auto& cell = c.two_cells_[a];
    if (!cell.identity) continue;
    if (cell.src != cell.tgt) throw InputError("identity 2-cell " + cell.name + " is not an endomorphism");
    if (c.id2_[cell.src] != kNone)
      throw InputError("1-cell " + c.one_cells_[cell.src].name + " has two identity 2-cells");
    c.id2_[cell.src] = a;
  }
  for (Id f = 0; f < static_cast<Id>(n1); ++f)
    if (c.id2_[f] == kNone) throw InputError("1-cell " + c.one_cells_[f].name + " has no identity 2-cell");
  for (Id a = 0; a < static_cast<Id>(n2); ++a) {
    const auto& cell = c.two_cells_[a];
    const auto& s = c.one_cells_[cell.src];
    const auto& t = c.one_cells_[cell.tgt];
    if (s.src != t.src || s.tgt != t.tgt)
      throw InputError("2-cell " + cell.name + " has non-parallel boundary");
  }

  c.comp1_.assign(n1 * n1, kNone);
  c.vcomp_.assign(n2 * n2, kNone);
  c.wl_.assign(n1 * n2, kNone);
  c.wr_.assign(n2 * n1, kNone);
  auto check = [](bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
  };
  for (const auto& [key, r] : comp1_) {
    auto [g, f] = key;
    check(c.one_cells_[f].tgt == c.one_cells_[g].src,
          "comp1 entry for non-composable pair " + c.one_cells_[g].name + ", " + c.one_cells_[f].name);
    c.comp1_[g * n1 + f] = r;
  }
  for (const auto& [key, r] : vcomp_) {
    auto [b, a] = key;
    check(c.two_cells_[a].tgt == c.two_cells_[b].src,
          "vcomp entry for non-composable pair " + c.two_cells_[b].name + ", " + c.two_cells_[a].name);
    c.vcomp_[b * n2 + a] = r;
  }
  for (const auto& [key, r] : wl_) {
    auto [g, a] = key;
    check(c.one_cells_[c.two_cells_[a].src].tgt == c.one_cells_[g].src,
          "whisker_l entry for non-composable pair " + c.one_cells_[g].name + ", " + c.two_cells_[a].name);
    c.wl_[g * n2 + a] = r;
  }
  for (const auto& [key, r] : wr_) {
    auto [b, f] = key;
    check(c.one_cells_[c.two_cells_[b].src].src == c.one_cells_[f].tgt,
          "whisker_r entry for non-composable pair " + c.two_cells_[b].name + ", " + c.one_cells_[f].name);
    c.wr_[b * n1 + f] = r;
  }

  for (Id g = 0; g < static_cast<Id>(n1); ++g)
    for (Id f = 0; f < static_cast<Id>(n1); ++f)
      if (c.one_cells_[f].tgt == c.one_cells_[g].src)
        check(c.comp1_[g * n1 + f] != kNone,
              "missing comp1 entry for " + c.one_cells_[g].name + "∘" + c.one_cells_[f].name);
  for (Id b = 0; b < static_cast<Id>(n2); ++b)
    for (Id a = 0; a < static_cast<Id>(n2); ++a)
      if (c.two_cells_[a].tgt == c.two_cells_[b].src)
        check(c.vcomp_[b * n2 + a] != kNone,
              "missing vcomp entry for " + c.two_cells_[b].name + "∘" + c.two_cells_[a].name);
  for (Id g = 0; g < static_cast<Id>(n1); ++g)
    for (Id a = 0; a < static_cast<Id>(n2); ++a)
      if (c.one_cells_[c.two_cells_[a].src].tgt == c.one_cells_[g].src)
        check(c.wl_[g * n2 + a] != kNone,
              "missing whisker_l entry for " + c.one_cells_[g].name + "∗" + c.two_cells_[a].name);
  for (Id b = 0; b < static_cast<Id>(n2); ++b)
    for (Id f = 0; f < static_cast<Id>(n1); ++f)
      if (c.one_cells_[c.two_cells_[b].src].src == c.one_cells_[f].tgt)
        check(c.wr_[b * n1 + f] != kNone,
              "missing whisker_r entry for " + c.two_cells_[b].name + "∗" + c.one_cells_[f].name);

  auto is_cell = [](Id r, std::size_t n) { return r >= 0 && static_cast<std::size_t>(r) < n; };
  for (Id r : c.comp1_) check(r == kNone || is_cell(r, n1), "comp1 result out of range");
  for (Id r : c.vcomp_) check(r == kNone || is_cell(r, n2), "vcomp result out of range");
  for (Id r : c.wl_) check(r == kNone || is_cell(r, n2), "whisker_l result out of range");
  for (Id r : c.wr_) check(r == kNone || is_cell(r, n2), "whisker_r result out of range");

  c.index();
  return c;
}

// ---------------------------------------------------------------------- validate

ValidationReport validate(const FiniteTwoCategory& c) {
  ValidationReport report;
  const Id n1 = static_cast<Id>(c.one_cell_count());
  const Id n2 = static_cast<Id>(c.two_cell_count());
  auto n1name = [&](Id f) { return c.one_cell(f).name; };
  auto n2name = [&](Id a) { return c.two_cell(a).name; };
  auto src2 = [&](Id a) { return c.two_cell(a).src; };
  auto tgt2 = [&](Id a) { return c.two_cell(a).tgt; };

  // Typing of table results.
  for (Id g = 0; g < n1; ++g)
    for (Id f = 0; f < n1; ++f) {
      if (c.tgt_object(f) != c.src_object(g)) continue;
      Id r = c.compose(g, f);
      if (c.src_object(r) != c.src_object(f) || c.tgt_object(r) != c.tgt_object(g))
        report.add("comp1 typing: " + n1name(g) + "∘" + n1name(f) + " = " + n1name(r));
    }
  for (Id b = 0; b < n2; ++b)
    for (Id a = 0; a < n2; ++a) {
      if (tgt2(a) != src2(b)) continue;
      Id r = c.vcompose(b, a);
      if (src2(r) != src2(a) || tgt2(r) != tgt2(b))
        report.add("vcomp typing: " + n2name(b) + "∘" + n2name(a) + " = " + n2name(r));
    }
  for (Id g = 0; g < n1; ++g)
    for (Id a = 0; a < n2; ++a) {
      if (c.tgt_object(src2(a)) != c.src_object(g)) continue;
      Id r = c.whisker_left(g, a);
      if (src2(r) != c.compose(g, src2(a)) || tgt2(r) != c.compose(g, tgt2(a)))
        report.add("whisker_l typing: " + n1name(g) + "∗" + n2name(a) + " = " + n2name(r));
    }
  for (Id b = 0; b < n2; ++b)
    for (Id f = 0; f < n1; ++f) {
      if (c.src_object(src2(b)) != c.tgt_object(f)) continue;
      Id r = c.whisker_right(b, f);
      if (src2(r) != c.compose(src2(b), f) || tgt2(r) != c.compose(tgt2(b), f))
        report.add("whisker_r typing: " + n2name(b) + "∗" + n1name(f) + " = " + n2name(r));
    }

  // Unit laws.
  for (Id f = 0; f < n1; ++f) {
    if (c.compose(c.identity_one(c.tgt_object(f)), f) != f || c.compose(f, c.identity_one(c.src_object(f))) != f)
      report.add("comp1 unit law fails at " + n1name(f));
  }
  for (Id a = 0; a < n2; ++a) {
    if (c.vcompose(c.identity_two(tgt2(a)), a) != a || c.vcompose(a, c.identity_two(src2(a))) != a)
      report.add("vcomp unit law fails at " + n2name(a));
    if (c.whisker_left(c.identity_one(c.tgt_object(src2(a))), a) != a)
      report.add("whisker_l unit law fails: id ∗ " + n2name(a));
    if (c.whisker_right(a, c.identity_one(c.src_object(src2(a)))) != a)
      report.add("whisker_r unit law fails: " + n2name(a) + " ∗ id");
  }
  for (Id g = 0; g < n1; ++g)
    for (Id f = 0; f < n1; ++f) {
      if (c.tgt_object(f) != c.src_object(g)) continue;
      Id gf = c.compose(g, f);
      if (c.whisker_left(g, c.identity_two(f)) != c.identity_two(gf))
        report.add("whisker unit law fails: " + n1name(g) + " ∗ id(" + n1name(f) + ") is not id(" +
                   n1name(gf) + ")");
      if (c.whisker_right(c.identity_two(g), f) != c.identity_two(gf))
        report.add("whisker unit law fails: id(" + n1name(g) + ") ∗ " + n1name(f) + " is not id(" +
                   n1name(gf) + ")");
    }

  // Associativity.
  for (Id f = 0; f < n1; ++f)
    for (Id g = 0; g < n1; ++g) {
      if (c.src_object(g) != c.tgt_object(f)) continue;
      Id gf = c.compose(g, f);
      for (Id h = 0; h < n1; ++h) {
        if (c.src_object(h) != c.tgt_object(g)) continue;
        if (c.compose(c.compose(h, g), f) != c.compose(h, gf))
          report.add("comp1 associativity fails at (" + n1name(h) + ", " + n1name(g) + ", " + n1name(f) + ")");
      }
    }
  for (Id a = 0; a < n2; ++a)
    for (Id b = 0; b < n2; ++b) {
      if (src2(b) != tgt2(a)) continue;
      Id ba = c.vcompose(b, a);
      for (Id g = 0; g < n2; ++g) {
        if (src2(g) != tgt2(b)) continue;
        if (c.vcompose(c.vcompose(g, b), a) != c.vcompose(g, ba))
          report.add("vcomp associativity fails at (" + n2name(g) + ", " + n2name(b) + ", " + n2name(a) + ")");
      }
    }

  // Whiskering is functorial in both arguments and the two sides commute.
  for (Id a = 0; a < n2; ++a) {
    Id x = c.src_object(src2(a)), y = c.tgt_object(src2(a));
    for (Id g = 0; g < n1; ++g) {
      if (c.src_object(g) != y) continue;
      Id ga = c.whisker_left(g, a);
      for (Id h = 0; h < n1; ++h)
        if (c.src_object(h) == c.tgt_object(g) &&
            c.whisker_left(c.compose(h, g), a) != c.whisker_left(h, ga))
          report.add("whisker_l associativity fails at (" + n1name(h) + ", " + n1name(g) + ", " + n2name(a) + ")");
      for (Id b = 0; b < n2; ++b)
        if (src2(b) == tgt2(a) &&
            c.whisker_left(g, c.vcompose(b, a)) != c.vcompose(c.whisker_left(g, b), ga))
          report.add("whisker_l does not preserve vcomp at (" + n1name(g) + ", " + n2name(b) + ", " + n2name(a) + ")");
      for (Id f = 0; f < n1; ++f)
        if (c.tgt_object(f) == x &&
            c.whisker_right(ga, f) != c.whisker_left(g, c.whisker_right(a, f)))
          report.add("whiskers do not commute at (" + n1name(g) + ", " + n2name(a) + ", " + n1name(f) + ")");
    }
    for (Id f = 0; f < n1; ++f) {
      if (c.tgt_object(f) != x) continue;
      Id af = c.whisker_right(a, f);
      for (Id e = 0; e < n1; ++e)
        if (c.tgt_object(e) == c.src_object(f) &&
            c.whisker_right(a, c.compose(f, e)) != c.whisker_right(af, e))
          report.add("whisker_r associativity fails at (" + n2name(a) + ", " + n1name(f) + ", " + n1name(e) + ")");
      for (Id b = 0; b < n2; ++b)
        if (src2(b) == tgt2(a) &&
            c.whisker_right(c.vcompose(b, a), f) != c.vcompose(c.whisker_right(b, f), af))
          report.add("whisker_r does not preserve vcomp at (" + n2name(b) + ", " + n2name(a) + ", " + n1name(f) + ")");
    }
  }

  // Interchange: (β∗b)∘(c∗α) = (d∗α)∘(β∗a).
  for (Id alpha = 0; alpha < n2; ++alpha) {
    Id a = src2(alpha), b = tgt2(alpha);
    Id y = c.tgt_object(a);
    for (Id beta = 0; beta < n2; ++beta) {
      Id cc = src2(beta), d = tgt2(beta);
      if (c.src_object(cc) != y) continue;
      Id lhs = c.vcompose(c.whisker_right(beta, b), c.whisker_left(cc, alpha));
      Id rhs = c.vcompose(c.whisker_left(d, alpha), c.whisker_right(beta, a));
      if (lhs != rhs) report.add("interchange fails at (" + n2name(beta) + ", " + n2name(alpha) + ")");
    }
  }
  return report;
}

// -------------------------------------------------------------- invertibility

Id inverse_2cell(const FiniteTwoCategory& c, Id alpha) {
  const auto& cell = c.two_cell(alpha);
  for (Id beta : c.two_cells_between(cell.tgt, cell.src))
    if (c.vcompose(beta, alpha) == c.identity_two(cell.src) &&
        c.vcompose(alpha, beta) == c.identity_two(cell.tgt))
      return beta;
  return kNone;
}

std::vector<InvertiblePair> invertible_2cells(const FiniteTwoCategory& c) {
  std::vector<InvertiblePair> out;
  for (Id a = 0; a < static_cast<Id>(c.two_cell_count()); ++a) {
    Id inv = inverse_2cell(c, a);
    if (inv != kNone) out.push_back({a, inv});
  }
  return out;
}

bool is_adjoint_equivalence(const FiniteTwoCategory& c, const AdjointEquivalence& e) {
  const Id x = c.src_object(e.f), y = c.tgt_object(e.f);
  if (c.src_object(e.g) != y || c.tgt_object(e.g) != x) return false;
  const Id gf = c.compose(e.g, e.f), fg = c.compose(e.f, e.g);
  if (c.two_cell(e.eta).src != c.identity_one(x) || c.two_cell(e.eta).tgt != gf) return false;
  if (c.two_cell(e.eps).src != fg || c.two_cell(e.eps).tgt != c.identity_one(y)) return false;
  if (inverse_2cell(c, e.eta) == kNone || inverse_2cell(c, e.eps) == kNone) return false;
  if (c.vcompose(c.whisker_right(e.eps, e.f), c.whisker_left(e.f, e.eta)) != c.identity_two(e.f))
    return false;
  if (c.vcompose(c.whisker_left(e.g, e.eps), c.whisker_right(e.eta, e.g)) != c.identity_two(e.g))
    return false;
  return true;
}

std::vector<AdjointEquivalence> adjoint_equivalence_completions(const FiniteTwoCategory& c, Id f) {
  std::vector<AdjointEquivalence> out;
  const Id x = c.src_object(f), y = c.tgt_object(f);
  for (Id g : c.hom(y, x)) {
    const Id gf = c.compose(g, f), fg = c.compose(f, g);
    for (Id eta : c.two_cells_between(c.identity_one(x), gf))
      for (Id eps : c.two_cells_between(fg, c.identity_one(y))) {
        AdjointEquivalence e{f, g, eta, eps};
        if (is_adjoint_equivalence(c, e)) out.push_back(e);
      }
  }
  return out;
}

AdjointEquivalence mirror(const FiniteTwoCategory& c, const AdjointEquivalence& e) {
  return {e.g, e.f, inverse_2cell(c, e.eps), inverse_2cell(c, e.eta)};
}

AdjointEquivalence identity_completion(const FiniteTwoCategory& c, Id x) {
  Id i = c.identity_one(x);
  return {i, i, c.identity_two(i), c.identity_two(i)};
}

bool is_one_isomorphism(const FiniteTwoCategory& c, Id f) {
  const Id x = c.src_object(f), y = c.tgt_object(f);
  for (Id g : c.hom(y, x))
    if (c.compose(g, f) == c.identity_one(x) && c.compose(f, g) == c.identity_one(y)) return true;
  return false;
}

bool is_one_equivalence(const FiniteTwoCategory& c, Id f) {
  return !adjoint_equivalence_completions(c, f).empty();
}

// ------------------------------------------------------------------ 2-functors

bool is_two_functor(const FiniteTwoCategory& s, const FiniteTwoCategory& t, const TwoFunctor& F) {
  const Id n0 = static_cast<Id>(s.object_count()), n1 = static_cast<Id>(s.one_cell_count()),
           n2 = static_cast<Id>(s.two_cell_count());
  if (F.objects.size() != static_cast<std::size_t>(n0) || F.one_cells.size() != static_cast<std::size_t>(n1) ||
      F.two_cells.size() != static_cast<std::size_t>(n2))
    return false;
  for (Id f = 0; f < n1; ++f) {
    Id v = F.one_cells[f];
    if (t.src_object(v) != F.objects[s.src_object(f)] || t.tgt_object(v) != F.objects[s.tgt_object(f)])
      return false;
  }
  for (Id a = 0; a < n2; ++a) {
    Id v = F.two_cells[a];
    if (t.two_cell(v).src != F.one_cells[s.two_cell(a).src] || t.two_cell(v).tgt != F.one_cells[s.two_cell(a).tgt])
      return false;
  }
  for (Id x = 0; x < n0; ++x)
    if (F.one_cells[s.identity_one(x)] != t.identity_one(F.objects[x])) return false;
  for (Id f = 0; f < n1; ++f)
    if (F.two_cells[s.identity_two(f)] != t.identity_two(F.one_cells[f])) return false;
  for (Id g = 0; g < n1; ++g)
    for (Id f = 0; f < n1; ++f)
      if (s.tgt_object(f) == s.src_object(g) &&
          F.one_cells[s.compose(g, f)] != t.compose(F.one_cells[g], F.one_cells[f]))
        return false;
  for (Id b = 0; b < n2; ++b)
    for (Id a = 0; a < n2; ++a)
      if (s.two_cell(a).tgt == s.two_cell(b).src &&
          F.two_cells[s.vcompose(b, a)] != t.vcompose(F.two_cells[b], F.two_cells[a]))
        return false;
  for (Id g = 0; g < n1; ++g)
    for (Id a = 0; a < n2; ++a)
      if (s.tgt_object(s.two_cell(a).src) == s.src_object(g) &&
          F.two_cells[s.whisker_left(g, a)] != t.whisker_left(F.one_cells[g], F.two_cells[a]))
        return false;
  for (Id b = 0; b < n2; ++b)
    for (Id f = 0; f < n1; ++f)
      if (s.src_object(s.two_cell(b).src) == s.tgt_object(f) &&
          F.two_cells[s.whisker_right(b, f)] != t.whisker_right(F.two_cells[b], F.one_cells[f]))
        return false;
  return true;
}

namespace {

// Backtracking search for 2-functors. A constraint (op, a, b, r) states
// F(r) = op(F(a), F(b)); it fires as soon as both operands are assigned.
class FunctorSearch {
 public:
  FunctorSearch(const FiniteTwoCategory& s, const FiniteTwoCategory& t,
                const std::function<bool(const TwoFunctor&)>& visit)
      : s_(s), t_(t), visit_(visit) {
    n0_ = static_cast<Id>(s.object_count());
    n1_ = static_cast<Id>(s.one_cell_count());
    n2_ = static_cast<Id>(s.two_cell_count());
    F_.objects.assign(n0_, kNone);
    F_.one_cells.assign(n1_, kNone);
    F_.two_cells.assign(n2_, kNone);
    watch1_.assign(n1_, {});
    watch2_.assign(n2_, {});
    for (Id g = 0; g < n1_; ++g)
      for (Id f = 0; f < n1_; ++f)
        if (s.tgt_object(f) == s.src_object(g)) add({Op::Comp1, g, f, s.compose(g, f)});
    for (Id b = 0; b < n2_; ++b)
      for (Id a = 0; a < n2_; ++a)
        if (s.two_cell(a).tgt == s.two_cell(b).src) add({Op::VComp, b, a, s.vcompose(b, a)});
    for (Id g = 0; g < n1_; ++g)
      for (Id a = 0; a < n2_; ++a)
        if (s.tgt_object(s.two_cell(a).src) == s.src_object(g)) add({Op::WhiskerL, g, a, s.whisker_left(g, a)});
    for (Id b = 0; b < n2_; ++b)
      for (Id f = 0; f < n1_; ++f)
        if (s.src_object(s.two_cell(b).src) == s.tgt_object(f)) add({Op::WhiskerR, b, f, s.whisker_right(b, f)});
  }

  std::uint64_t run() {
    objects(0);
    return count_;
  }

 private:
  enum class Op { Comp1, VComp, WhiskerL, WhiskerR };
  struct Constraint {
    Op op;
    Id a, b, r;
  };
  // Cell reference: dimension 1 or 2 and index.
  struct Ref {
    int dim;
    Id id;
  };

  void add(Constraint c) {
    Id k = static_cast<Id>(constraints_.size());
    constraints_.push_back(c);
    auto watch = [&](int dim, Id id) { (dim == 1 ? watch1_[id] : watch2_[id]).push_back(k); };
    switch (c.op) {
      case Op::Comp1: watch(1, c.a); watch(1, c.b); break;
      case Op::VComp: watch(2, c.a); watch(2, c.b); break;
      case Op::WhiskerL: watch(1, c.a); watch(2, c.b); break;
      case Op::WhiskerR: watch(2, c.a); watch(1, c.b); break;
    }
  }

  bool type_ok(int dim, Id cell, Id value) const {
    if (dim == 1)
      return t_.src_object(value) == F_.objects[s_.src_object(cell)] &&
             t_.tgt_object(value) == F_.objects[s_.tgt_object(cell)];
    return t_.two_cell(value).src == F_.one_cells[s_.two_cell(cell).src] &&
           t_.two_cell(value).tgt == F_.one_cells[s_.two_cell(cell).tgt];
  }

  bool assign(int dim, Id cell, Id value) {
    auto& slot = dim == 1 ? F_.one_cells[cell] : F_.two_cells[cell];
    if (slot != kNone) return slot == value;
    if (!type_ok(dim, cell, value)) return false;
    slot = value;
    trail_.push_back({dim, cell});
    queue_.push_back({dim, cell});
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      Ref ref = queue_.back();
      queue_.pop_back();
      const auto& watches = ref.dim == 1 ? watch1_[ref.id] : watch2_[ref.id];
      for (Id k : watches) {
        const Constraint& c = constraints_[k];
        Id expected = kNone;
        int rdim = 2;
        switch (c.op) {
          case Op::Comp1: {
            Id g = F_.one_cells[c.a], f = F_.one_cells[c.b];
            if (g == kNone || f == kNone) continue;
            if (t_.tgt_object(f) != t_.src_object(g)) return false;
            expected = t_.compose(g, f);
            rdim = 1;
            break;
          }
          case Op::VComp: {
            Id b = F_.two_cells[c.a], a = F_.two_cells[c.b];
            if (b == kNone || a == kNone) continue;
            if (t_.two_cell(a).tgt != t_.two_cell(b).src) return false;
            expected = t_.vcompose(b, a);
            break;
          }
          case Op::WhiskerL: {
            Id g = F_.one_cells[c.a], a = F_.two_cells[c.b];
            if (g == kNone || a == kNone) continue;
            if (t_.tgt_object(t_.two_cell(a).src) != t_.src_object(g)) return false;
            expected = t_.whisker_left(g, a);
            break;
          }
          case Op::WhiskerR: {
            Id b = F_.two_cells[c.a], f = F_.one_cells[c.b];
            if (b == kNone || f == kNone) continue;
            if (t_.src_object(t_.two_cell(b).src) != t_.tgt_object(f)) return false;
            expected = t_.whisker_right(b, f);
            break;
          }
        }
        if (!assign(rdim, c.r, expected)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      Ref r = trail_.back();
      trail_.pop_back();
      (r.dim == 1 ? F_.one_cells[r.id] : F_.two_cells[r.id]) = kNone;
    }
    queue_.clear();
  }

  bool objects(Id x) {
    if (x == n0_) return identities();
    for (Id v = 0; v < static_cast<Id>(t_.object_count()); ++v) {
      F_.objects[x] = v;
      if (!objects(x + 1)) return false;
    }
    F_.objects[x] = kNone;
    return true;
  }

  bool identities() {
    std::size_t mark = trail_.size();
    bool ok = true;
    for (Id x = 0; x < n0_ && ok; ++x) ok = assign(1, s_.identity_one(x), t_.identity_one(F_.objects[x]));
    ok = ok && propagate();
    bool cont = ok ? ones(0) : true;
    undo(mark);
    return cont;
  }

  bool ones(Id next) {
    while (next < n1_ && F_.one_cells[next] != kNone) ++next;
    if (next == n1_) return twos_start();
    const Id src = F_.objects[s_.src_object(next)], tgt = F_.objects[s_.tgt_object(next)];
    for (Id v : t_.hom(src, tgt)) {
      std::size_t mark = trail_.size();
      bool cont = true;
      if (assign(1, next, v) && propagate()) cont = ones(next + 1);
      undo(mark);
      if (!cont) return false;
    }
    return true;
  }

  bool twos_start() {
    std::size_t mark = trail_.size();
    bool ok = true;
    for (Id f = 0; f < n1_ && ok; ++f) ok = assign(2, s_.identity_two(f), t_.identity_two(F_.one_cells[f]));
    ok = ok && propagate();
    bool cont = ok ? twos(0) : true;
    undo(mark);
    return cont;
  }

  bool twos(Id next) {
    while (next < n2_ && F_.two_cells[next] != kNone) ++next;
    if (next == n2_) {
      ++count_;
      return visit_(F_);
    }
    const Id src = F_.one_cells[s_.two_cell(next).src], tgt = F_.one_cells[s_.two_cell(next).tgt];
    for (Id v : t_.two_cells_between(src, tgt)) {
      std::size_t mark = trail_.size();
      bool cont = true;
      if (assign(2, next, v) && propagate()) cont = twos(next + 1);
      undo(mark);
      if (!cont) return false;
    }
    return true;
  }

  const FiniteTwoCategory& s_;
  const FiniteTwoCategory& t_;
  const std::function<bool(const TwoFunctor&)>& visit_;
  Id n0_ = 0, n1_ = 0, n2_ = 0;
  TwoFunctor F_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<Id>> watch1_, watch2_;
  std::vector<Ref> trail_, queue_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_two_functors(const FiniteTwoCategory& source, const FiniteTwoCategory& target,
                                     const std::function<bool(const TwoFunctor&)>& visit) {
  if (target.object_count() == 0) return source.object_count() == 0 && visit(TwoFunctor{}) ? 1 : 0;
  FunctorSearch search(source, target, visit);
  return search.run();
}

std::uint64_t count_two_functors(const FiniteTwoCategory& source, const FiniteTwoCategory& target) {
  return enumerate_two_functors(source, target, [](const TwoFunctor&) { return true; });
}

std::optional<TwoFunctor> find_isomorphism(const FiniteTwoCategory& a, const FiniteTwoCategory& b) {
  if (a.object_count() != b.object_count() || a.one_cell_count() != b.one_cell_count() ||
      a.two_cell_count() != b.two_cell_count())
    return std::nullopt;
  std::optional<TwoFunctor> found;
  auto bijective = [](const std::vector<Id>& v, std::size_t n) {
    std::vector<char> seen(n, 0);
    for (Id x : v) {
      if (seen[x]) return false;
      seen[x] = 1;
    }
    return true;
  };
  enumerate_two_functors(a, b, [&](const TwoFunctor& F) {
    if (bijective(F.objects, b.object_count()) && bijective(F.one_cells, b.one_cell_count()) &&
        bijective(F.two_cells, b.two_cell_count())) {
      found = F;
      return false;
    }
    return true;
  });
  return found;
}

// ---------------------------------------------------------------- constructions

FiniteTwoCategory locally_thin(const FiniteCategory& base, const std::function<bool(Id, Id)>& le) {
  TwoCategoryBuilder b;
  for (Id x = 0; x < static_cast<Id>(base.object_count()); ++x) b.add_object(base.object_name(x));
  const Id n1 = static_cast<Id>(base.morphism_count());
  for (Id f = 0; f < n1; ++f) {
    const auto& m = base.morphism(f);
    b.add_one_cell(m.name, m.src, m.tgt, m.identity);
  }
  auto parallel = [&](Id f, Id g) {
    return base.morphism(f).src == base.morphism(g).src && base.morphism(f).tgt == base.morphism(g).tgt;
  };
  std::map<std::pair<Id, Id>, Id> cell;
  for (Id f = 0; f < n1; ++f)
    for (Id g = 0; g < n1; ++g)
      if (parallel(f, g) && (f == g || le(f, g))) {
        std::string name = f == g ? "id_" + base.morphism(f).name
                                  : base.morphism(f).name + "=>" + base.morphism(g).name;
        cell[{f, g}] = b.add_two_cell(std::move(name), f, g, f == g);
      }
  auto lookup = [&](Id f, Id g) {
    auto it = cell.find({f, g});
    if (it == cell.end())
      throw InputError("preorder is not compatible with composition at " + base.morphism(f).name + " => " +
                       base.morphism(g).name);
    return it->second;
  };
  for (Id g = 0; g < n1; ++g)
    for (Id f = 0; f < n1; ++f)
      if (base.morphism(f).tgt == base.morphism(g).src) b.set_compose(g, f, base.compose(g, f));
  for (const auto& [ab, x] : cell)
    for (const auto& [bc, y] : cell)
      if (ab.second == bc.first) b.set_vcompose(y, x, lookup(ab.first, bc.second));
  for (const auto& [ab, x] : cell) {
    auto [a, bb] = ab;
    for (Id c = 0; c < n1; ++c) {
      if (base.morphism(c).src == base.morphism(a).tgt)
        b.set_whisker_left(c, x, lookup(base.compose(c, a), base.compose(c, bb)));
      if (base.morphism(c).tgt == base.morphism(a).src)
        b.set_whisker_right(x, c, lookup(base.compose(a, c), base.compose(bb, c)));
    }
  }
  return b.build();
}

FiniteTwoCategory locally_discrete(const FiniteCategory& base) {
  return locally_thin(base, [](Id, Id) { return false; });
}

FiniteTwoCategory suspension(const FiniteCategory& d) {
  TwoCategoryBuilder b;
  Id x = b.add_object("x");
  Id y = b.add_object("y");
  b.add_one_cell("id_x", x, x, true);
  b.add_one_cell("id_y", y, y, true);
  std::vector<Id> one(d.object_count());
  for (Id o = 0; o < static_cast<Id>(d.object_count()); ++o) one[o] = b.add_one_cell(d.object_name(o), x, y);
  std::vector<Id> two(d.morphism_count());
  for (Id m = 0; m < static_cast<Id>(d.morphism_count()); ++m) {
    const auto& mor = d.morphism(m);
    two[m] = b.add_two_cell(mor.name, one[mor.src], one[mor.tgt], mor.identity);
  }
  for (Id g = 0; g < static_cast<Id>(d.morphism_count()); ++g)
    for (Id f = 0; f < static_cast<Id>(d.morphism_count()); ++f)
      if (d.morphism(f).tgt == d.morphism(g).src) b.set_vcompose(two[g], two[f], two[d.compose(g, f)]);
  b.fill_units();
  return b.build();
}

FiniteTwoCategory oriental2(int m) {
  if (m < 0 || m > 8) throw InputError("oriental2 supports 0 <= m <= 8");
  const int v = m + 1;
  auto low = [](unsigned mask) { return std::countr_zero(mask); };
  auto high = [](unsigned mask) { return 31 - std::countl_zero(mask); };
  auto name = [&](unsigned mask) {
    std::string s;
    for (int i = 0; i < v; ++i)
      if (mask & (1u << i)) s += std::to_string(i);
    return s;
  };

  TwoCategoryBuilder b;
  for (int i = 0; i < v; ++i) b.add_object(std::to_string(i));

  // 1-cells ordered by (source, target, interior subset).
  std::vector<unsigned> masks;
  for (int i = 0; i < v; ++i)
    for (int j = i; j < v; ++j) {
      if (i == j) {
        masks.push_back(1u << i);
        continue;
      }
      const int k = j - i - 1;
      for (unsigned sub = 0; sub < (1u << k); ++sub) masks.push_back((1u << i) | (1u << j) | (sub << (i + 1)));
    }
  std::vector<Id> cell_of(1u << v, kNone);
  for (unsigned mask : masks) {
    const bool ident = std::popcount(mask) == 1;
    cell_of[mask] = b.add_one_cell(ident ? "id_" + name(mask) : name(mask), low(mask), high(mask), ident);
  }

  std::map<std::pair<unsigned, unsigned>, Id> two;
  for (unsigned p : masks)
    for (unsigned q : masks)
      if (low(p) == low(q) && high(p) == high(q) && (p & ~q) == 0) {
        std::string label = p == q ? "id_" + b.one_cell(cell_of[p]).name : name(p) + "=>" + name(q);
        two[{p, q}] = b.add_two_cell(std::move(label), cell_of[p], cell_of[q], p == q);
      }

  for (unsigned p : masks)
    for (unsigned q : masks)
      if (high(p) == low(q)) b.set_compose(cell_of[q], cell_of[p], cell_of[p | q]);
  for (const auto& [pq, x] : two)
    for (const auto& [qr, y] : two)
      if (pq.second == qr.first) b.set_vcompose(y, x, two.at({pq.first, qr.second}));
  for (const auto& [pq, x] : two) {
    auto [p, q] = pq;
    for (unsigned c : masks) {
      if (low(c) == high(p)) b.set_whisker_left(cell_of[c], x, two.at({p | c, q | c}));
      if (high(c) == low(p)) b.set_whisker_right(x, cell_of[c], two.at({p | c, q | c}));
    }
  }
  return b.build();
}

}  // namespace complicial
