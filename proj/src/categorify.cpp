#include "complicial/categorify.hpp"

namespace complicial {

namespace {

void add_inverse_relations(TwoPolygraph& p, Id a, Id b) {
  const auto& ga = p.two_generators[a];
  const std::string& name = ga.name;
  p.relations.push_back({name + " then inverse", Pasting{ga.src, {{{}, a, {}}, {{}, b, {}}}}, Pasting{ga.src, {}}});
  p.relations.push_back({"inverse then " + name, Pasting{ga.tgt, {{{}, b, {}}, {{}, a, {}}}}, Pasting{ga.tgt, {}}});
}

}  // namespace

TwoPolygraph categorify(const TDeltaSet& x) {
  TwoPolygraph p;
  for (const auto& name : x.levels[0].simplices) p.objects.push_back(name);
  if (x.dim < 1) return p;

  const auto forms = degenerate_forms(x);
  const auto free = free_tokens(x);

  std::vector<Id> edge_gen(x.size(1), kNone);
  for (Id e = 0; e < static_cast<Id>(x.size(1)); ++e)
    if (forms[1][e].base == kNone) {
      edge_gen[e] = static_cast<Id>(p.one_generators.size());
      p.one_generators.push_back({"[" + x.name(1, e) + "]", x.face(1, 1, e), x.face(1, 0, e), {Origin::Edge, 1, e}});
    }
  auto word = [&](Id e) {
    const Id s = x.face(1, 1, e), t = x.face(1, 0, e);
    return edge_gen[e] == kNone ? Word{s, t, {}} : Word{s, t, {edge_gen[e]}};
  };

  // Equivalence generators are added after all edge generators; remember the
  // tokens now so the 2-generators can follow the triangle generators.
  std::vector<Id> edge_tokens;
  for (Id t = 0; t < static_cast<Id>(x.token_count(1)); ++t)
    if (free[1][t]) edge_tokens.push_back(t);
  std::vector<Id> inverse_gen;
  for (Id t : edge_tokens) {
    const Id e = x.under(1, t);
    inverse_gen.push_back(static_cast<Id>(p.one_generators.size()));
    p.one_generators.push_back(
        {"g~[" + x.token_name(1, t) + "]", x.face(1, 0, e), x.face(1, 1, e), {Origin::EquivalenceInverse, 1, t}});
  }

  std::vector<Id> tri_gen;
  std::size_t flagged = 0, skipped_tokens = 0;
  if (x.dim >= 2) {
    tri_gen.assign(x.size(2), kNone);
    for (Id s = 0; s < static_cast<Id>(x.size(2)); ++s)
      if (forms[2][s].base == kNone) {
        tri_gen[s] = static_cast<Id>(p.two_generators.size());
        const Word d0 = word(x.face(2, 0, s)), d1 = word(x.face(2, 1, s)), d2 = word(x.face(2, 2, s));
        p.two_generators.push_back({"phi[" + x.name(2, s) + "]", d1, p.concat(d2, d0), {Origin::Triangle, 2, s}});
      }
  }

  // Relations of the 3-simplices come first, then invertibility.
  if (x.dim >= 3) {
    for (Id s = 0; s < static_cast<Id>(x.size(3)); ++s) {
      if (forms[3][s].base != kNone) continue;
      const Id f0 = x.face(3, 0, s), f1 = x.face(3, 1, s), f2 = x.face(3, 2, s), f3 = x.face(3, 3, s);
      const Word a01 = word(sub_simplex(x, 3, s, {0, 1})), a23 = word(sub_simplex(x, 3, s, {2, 3}));
      const Word a03 = word(sub_simplex(x, 3, s, {0, 3}));
      bool dropped = false;
      auto step = [&](Id face, std::vector<Id> pre, std::vector<Id> post, std::vector<Whiskered>& out) {
        if (tri_gen[face] == kNone) {
          dropped = true;
          return;
        }
        out.push_back({std::move(pre), tri_gen[face], std::move(post)});
      };
      Pasting lhs{a03, {}}, rhs{a03, {}};
      step(f2, {}, {}, lhs.steps);
      step(f0, a01.letters, {}, lhs.steps);
      step(f1, {}, {}, rhs.steps);
      step(f3, {}, a23.letters, rhs.steps);
      if (lhs == rhs) continue;
      if (dropped) ++flagged;
      p.relations.push_back({"simplex[" + x.name(3, s) + "]", std::move(lhs), std::move(rhs)});
    }
  }

  std::vector<std::pair<Id, Id>> triangle_inverses;
  if (x.dim >= 2) {
    for (Id t = 0; t < static_cast<Id>(x.token_count(2)); ++t) {
      if (!free[2][t]) continue;
      const Id s = x.under(2, t);
      if (tri_gen[s] == kNone) {
        ++skipped_tokens;
        continue;
      }
      const auto& g = p.two_generators[tri_gen[s]];
      const Id inv = static_cast<Id>(p.two_generators.size());
      p.two_generators.push_back({"phi[" + x.name(2, s) + "]^-1<" + x.token_name(2, t) + ">", g.tgt, g.src,
                                  {Origin::TriangleInverse, 2, t}});
      triangle_inverses.push_back({tri_gen[s], inv});
    }
  }
  for (const auto& [a, b] : triangle_inverses) add_inverse_relations(p, a, b);

  for (std::size_t k = 0; k < edge_tokens.size(); ++k) {
    const Id t = edge_tokens[k];
    const Word e = word(x.under(1, t));
    const Id g = inverse_gen[k];
    const Word gw = p.letter(g);
    const Id base = static_cast<Id>(p.two_generators.size());
    const std::string tag = "[" + x.token_name(1, t) + "]";
    const Word ix = p.identity_word(e.src), iy = p.identity_word(e.tgt);
    const Word unit_tgt = p.concat(e, gw), counit_src = p.concat(gw, e);
    p.two_generators.push_back({"eta~" + tag, ix, unit_tgt, {Origin::EquivalenceUnit, 1, t}});
    p.two_generators.push_back({"eps~" + tag, counit_src, iy, {Origin::EquivalenceCounit, 1, t}});
    p.two_generators.push_back({"eta~" + tag + "^-1", unit_tgt, ix, {Origin::EquivalenceUnitInv, 1, t}});
    p.two_generators.push_back({"eps~" + tag + "^-1", iy, counit_src, {Origin::EquivalenceCounitInv, 1, t}});
    const Id eta = base, eps = base + 1, eta_inv = base + 2, eps_inv = base + 3;
    add_inverse_relations(p, eta, eta_inv);
    add_inverse_relations(p, eps, eps_inv);
    p.relations.push_back({"swap eta~" + tag, Pasting{e, {{{}, eta, e.letters}}}, Pasting{e, {{e.letters, eps_inv, {}}}}});
    const Word gfg = p.concat(counit_src, gw);
    p.relations.push_back({"swap eps~" + tag, Pasting{gfg, {{{}, eps, {g}}}}, Pasting{gfg, {{{g}, eta_inv, {}}}}});
  }

  if (flagged)
    p.review_flags.push_back(std::to_string(flagged) +
                             " simplex relations drop a degenerate face, read as the identity pasting");
  if (skipped_tokens)
    p.review_flags.push_back(std::to_string(skipped_tokens) +
                             " free tokens over degenerate triangles contribute no inverse generator");
  return p;
}

// ------------------------------------------------------------------ counit

CounitContext::CounitContext(const FiniteTwoCategory& c, int dim) : c_(c), nerve_(c, dim) {
  if (dim < 2) throw InputError("the counit needs nerve dimension at least 2");
  natural_ = nerve_.marked(Marking::Natural, &completions_);
  presentation_ = categorify(natural_);

  auto& a = assignment_;
  for (Id x = 0; x < static_cast<Id>(natural_.size(0)); ++x) a.objects.push_back(nerve_.object(0, x, 0));
  edge_generator_.assign(natural_.size(1), kNone);
  triangle_generator_.assign(natural_.size(2), kNone);
  for (Id g = 0; g < static_cast<Id>(presentation_.one_generators.size()); ++g) {
    const auto& o = presentation_.one_generators[g].origin;
    if (o.kind == Origin::Edge) {
      a.one_cells.push_back(nerve_.edge(1, o.index, 0, 1));
      edge_generator_[o.index] = g;
    } else {
      a.one_cells.push_back(completions_[o.index].g);
    }
  }
  for (Id g = 0; g < static_cast<Id>(presentation_.two_generators.size()); ++g) {
    const auto& o = presentation_.two_generators[g].origin;
    switch (o.kind) {
      case Origin::Triangle:
        a.two_cells.push_back(nerve_.cell(2, o.index, 0, 1, 2));
        triangle_generator_[o.index] = g;
        break;
      case Origin::TriangleInverse:
        a.two_cells.push_back(inverse_2cell(c_, nerve_.cell(2, natural_.under(2, o.index), 0, 1, 2)));
        break;
      case Origin::EquivalenceUnit:
        a.two_cells.push_back(completions_[o.index].eta);
        break;
      case Origin::EquivalenceCounit:
        a.two_cells.push_back(completions_[o.index].eps);
        break;
      case Origin::EquivalenceUnitInv:
        a.two_cells.push_back(inverse_2cell(c_, completions_[o.index].eta));
        break;
      case Origin::EquivalenceCounitInv:
        a.two_cells.push_back(inverse_2cell(c_, completions_[o.index].eps));
        break;
      default:
        throw VerificationError("unexpected 2-generator origin in a categorified nerve");
    }
  }

  // I[d1,d2]: the identity triangle on a composable pair.
  auto word_of = [&](Id f) {
    const Id s = nerve_.find(1, NerveSimplex{{c_.src_object(f), c_.tgt_object(f)}, {f}, {}});
    if (s == kNone) throw VerificationError("1-cell missing from the nerve");
    const Id g = edge_generator_[s];
    return g == kNone ? Word{natural_.face(1, 1, s), natural_.face(1, 0, s), {}} : presentation_.letter(g);
  };
  for (Id d1 = 0; d1 < static_cast<Id>(c_.one_cell_count()); ++d1)
    for (Id d2 = 0; d2 < static_cast<Id>(c_.one_cell_count()); ++d2) {
      if (c_.tgt_object(d1) != c_.src_object(d2)) continue;
      const Id d = c_.compose(d2, d1);
      NerveSimplex tri{{c_.src_object(d1), c_.tgt_object(d1), c_.tgt_object(d2)}, {d1, d, d2}, {c_.identity_two(d)}};
      const Id s = nerve_.find(2, tri);
      if (s == kNone) throw VerificationError("composition triangle missing from the nerve");
      Pasting value{word_of(d), {}};
      if (triangle_generator_[s] != kNone) value.steps.push_back({{}, triangle_generator_[s], {}});
      presentation_.derived.push_back(
          {"I[" + c_.one_cell(d1).name + "," + c_.one_cell(d2).name + "]", std::move(value)});
    }
}

Id CounitContext::eval(const Word& w) const {
  Id acc = c_.identity_one(assignment_.objects[w.src]);
  for (Id l : w.letters) acc = c_.compose(assignment_.one_cells[l], acc);
  return acc;
}

Id CounitContext::eval(const Pasting& p) const {
  Id cur = c_.identity_two(eval(p.source));
  Id at = p.source.src;
  for (const auto& s : p.steps) {
    const Word pre{at, presentation_.two_generators[s.gen].src.src, s.pre};
    const Word post{presentation_.two_generators[s.gen].src.tgt, p.source.tgt, s.post};
    const Id cell = c_.whisker_left(eval(post), c_.whisker_right(assignment_.two_cells[s.gen], eval(pre)));
    cur = c_.vcompose(cell, cur);
  }
  return cur;
}

CounitReport CounitContext::verify() const {
  CounitReport r;
  const auto& p = presentation_;
  for (Id g = 0; g < static_cast<Id>(p.one_generators.size()); ++g) {
    const auto& gen = p.one_generators[g];
    const Id f = assignment_.one_cells[g];
    ++r.generators_checked;
    if (f == kNone || c_.src_object(f) != assignment_.objects[gen.src] || c_.tgt_object(f) != assignment_.objects[gen.tgt])
      r.failures.push_back("1-generator " + gen.name + " is sent to a 1-cell with the wrong endpoints");
  }
  if (!r.ok()) return r;
  for (Id g = 0; g < static_cast<Id>(p.two_generators.size()); ++g) {
    const auto& gen = p.two_generators[g];
    const Id a = assignment_.two_cells[g];
    ++r.generators_checked;
    if (a == kNone || c_.two_cell(a).src != eval(gen.src) || c_.two_cell(a).tgt != eval(gen.tgt))
      r.failures.push_back("2-generator " + gen.name + " is sent to a 2-cell with the wrong boundary");
  }
  if (!r.ok()) return r;
  for (const auto& rel : p.relations) {
    ++r.relations_checked;
    const Id l = eval(rel.lhs), rr = eval(rel.rhs);
    if (l != rr)
      r.failures.push_back("relation " + rel.name + " fails: " + c_.two_cell(l).name + " != " + c_.two_cell(rr).name);
  }
  for (const auto& d : p.derived) {
    ++r.derived_checked;
    const Id v = eval(d.value);
    if (v != c_.identity_two(eval(d.value.source))) r.failures.push_back("derived " + d.name + " is not an identity");
  }
  return r;
}

SectionReport CounitContext::section(Id x, Id y) const {
  SectionReport r;
  r.x = x;
  r.y = y;
  auto object_of = [&](Id o) {
    const Id s = nerve_.find(0, NerveSimplex{{o}, {}, {}});
    if (s == kNone) throw VerificationError("object missing from the nerve");
    return s;
  };
  const Id vx = object_of(x), vy = object_of(y);
  auto word_of = [&](Id f) {
    const Id s = nerve_.find(1, NerveSimplex{{x, y}, {f}, {}});
    const Id g = edge_generator_[s];
    return g == kNone ? Word{vx, vy, {}} : presentation_.letter(g);
  };
  for (Id f : c_.hom(x, y)) {
    ++r.one_cells_checked;
    const Id back = eval(word_of(f));
    if (back != f) r.mismatches.push_back("1-cell " + c_.one_cell(f).name + " returns as " + c_.one_cell(back).name);
  }
  for (Id a : c_.hom(x, y))
    for (Id b : c_.hom(x, y))
      for (Id phi : c_.two_cells_between(a, b)) {
        ++r.two_cells_checked;
        const Id s = nerve_.find(2, NerveSimplex{{x, x, y}, {c_.identity_one(x), a, b}, {phi}});
        if (s == kNone) {
          r.mismatches.push_back("2-cell " + c_.two_cell(phi).name + " has no nerve triangle");
          continue;
        }
        Pasting value{word_of(a), {}};
        if (triangle_generator_[s] != kNone) value.steps.push_back({{}, triangle_generator_[s], {}});
        const Id back = eval(value);
        if (back != phi)
          r.mismatches.push_back("2-cell " + c_.two_cell(phi).name + " returns as " + c_.two_cell(back).name);
      }
  return r;
}

CounitReport counit_check(const FiniteTwoCategory& c, int dim) { return CounitContext(c, dim).verify(); }

SectionReport section_check(const FiniteTwoCategory& c, Id x, Id y, int dim) {
  return CounitContext(c, dim).section(x, y);
}

}  // namespace complicial
