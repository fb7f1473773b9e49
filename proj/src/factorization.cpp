#include "complicial/factorization.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "complicial/standard.hpp"

namespace complicial {

RetractCheck check_retract(const TDeltaSet& x, const TDeltaSet& p, const TDeltaMap& j1, const Quotient& q) {
  RetractCheck r;
  const TDeltaMap j2 = compose(q.map, j1);
  r.retraction_of_section = compose(q.map, q.section) == identity_map(q.set);
  r.section_on_image = compose(q.section, j2) == j1;
  r.maps_valid = validate_map(x, p, j1).valid() && validate_map(p, q.set, q.map).valid() &&
                 validate_map(q.set, p, q.section).valid() && validate_map(x, q.set, j2).valid();
  return r;
}

FactorizationReplay::FactorizationReplay(const FiniteTwoCategory& c, int dim) : c_(c), dim_(dim), nerve_(c, dim) {
  if (dim < 4) throw InputError("the factorization needs dimension at least 4");
  rs_ = nerve_.marked(Marking::RobertsStreet);
  natural_ = nerve_.marked(Marking::Natural, &completions_);
}

// ------------------------------------------------------------ gluing simplices

NerveSimplex FactorizationReplay::saturation_simplex(Id alpha) const {
  const Id beta = inverse_2cell(c_, alpha);
  if (beta == kNone) throw InputError("saturation gluing needs an invertible 2-cell");
  const Id f = c_.two_cell(alpha).src, g = c_.two_cell(alpha).tgt;
  const Id x = c_.src_object(f), y = c_.tgt_object(f);
  const Id iy = c_.identity_one(y), iiy = c_.identity_two(iy);
  NerveSimplex s;
  s.objects = {x, y, y, y, y};
  // 01 02 03 04 12 13 14 23 24 34
  s.edges = {f, g, f, g, iy, iy, iy, iy, iy, iy};
  // 012 013 014 023 024 034 123 124 134 234
  s.cells = {beta, c_.identity_two(f), beta, alpha, c_.identity_two(g), beta, iiy, iiy, iiy, iiy};
  return s;
}

NerveSimplex FactorizationReplay::thinness_simplex(Id triangle) const {
  const Id x = nerve_.object(2, triangle, 0), y = nerve_.object(2, triangle, 1), z = nerve_.object(2, triangle, 2);
  const Id g1 = nerve_.edge(2, triangle, 0, 1), f = nerve_.edge(2, triangle, 0, 2), g2 = nerve_.edge(2, triangle, 1, 2);
  const Id alpha = nerve_.cell(2, triangle, 0, 1, 2);
  const Id g21 = c_.compose(g2, g1);
  NerveSimplex s;
  s.objects = {x, y, z, z};
  // 01 02 03 12 13 23
  s.edges = {g1, g21, f, g2, g2, c_.identity_one(z)};
  // 012 013 023 123
  s.cells = {c_.identity_two(g21), alpha, alpha, c_.identity_two(g2)};
  return s;
}

NerveSimplex FactorizationReplay::equivalence_simplex(const AdjointEquivalence& e) const {
  const Id x = c_.src_object(e.f), y = c_.tgt_object(e.f);
  const Id eps_inv = inverse_2cell(c_, e.eps);
  if (eps_inv == kNone) throw InputError("completion counit is not invertible");
  NerveSimplex s;
  s.objects = {x, y, x, y};
  s.edges = {e.f, c_.identity_one(x), e.f, e.g, c_.identity_one(y), e.f};
  s.cells = {e.eta, c_.identity_two(e.f), c_.identity_two(e.f), eps_inv};
  return s;
}

// ------------------------------------------------------------------- families

std::vector<Id> FactorizationReplay::degenerate_face_triangles() const {
  std::vector<Id> out;
  for (Id s = 0; s < static_cast<Id>(nerve_.size(2)); ++s)
    if (c_.one_cell(nerve_.edge(2, s, 1, 2)).identity && inverse_2cell(c_, nerve_.cell(2, s, 0, 1, 2)) != kNone)
      out.push_back(s);
  return out;
}

std::vector<Id> FactorizationReplay::thinness_triangles() const {
  std::vector<Id> out;
  for (Id s = 0; s < static_cast<Id>(nerve_.size(2)); ++s) {
    const Id alpha = nerve_.cell(2, s, 0, 1, 2);
    if (!c_.one_cell(nerve_.edge(2, s, 1, 2)).identity && !c_.two_cell(alpha).identity &&
        inverse_2cell(c_, alpha) != kNone)
      out.push_back(s);
  }
  return out;
}

std::vector<AdjointEquivalence> FactorizationReplay::all_completions() const {
  std::vector<AdjointEquivalence> out;
  for (Id f = 0; f < static_cast<Id>(c_.one_cell_count()); ++f)
    for (const auto& e : adjoint_equivalence_completions(c_, f)) out.push_back(e);
  return out;
}

TDeltaMap FactorizationReplay::shape_map(const TDeltaSet& shape, int n, const NerveSimplex& top,
                                         const TDeltaSet& x) const {
  const Id id = nerve_.find(n, top);
  if (id == kNone) throw VerificationError("the prescribed gluing simplex does not assemble in the nerve");
  std::vector<std::vector<Id>> sim(shape.dim + 1);
  for (int m = 0; m <= shape.dim; ++m)
    for (Id s = 0; s < static_cast<Id>(shape.size(m)); ++s) {
      auto v = vertices(shape, m, s);
      std::vector<int> theta(v.begin(), v.end());
      const Id t = nerve_.find(m, nerve_.pullback(n, id, theta));
      if (t == kNone) throw VerificationError("pulled-back gluing simplex is missing from the nerve");
      sim[m].push_back(t);
    }
  TDeltaMap f = extend_to_tokens(shape, x, std::move(sim));
  if (!validate_map(shape, x, f).valid()) throw VerificationError("gluing map is not a map of tΔ-sets");
  return f;
}

Stage FactorizationReplay::glue(const std::string& name, const TDeltaSet& x, const AnodyneExtension& ext,
                                const std::vector<TDeltaMap>& maps, const std::vector<std::string>& tags) const {
  Stage st;
  st.name = name;
  st.family = maps.size();
  if (maps.empty()) {
    st.set = x;
    st.from_previous = identity_map(x);
    return st;
  }
  std::vector<TDeltaSet> sources(maps.size(), ext.source), targets(maps.size(), ext.target);
  std::vector<TDeltaMap> incl(maps.size(), ext.inclusion);
  Coproduct sa = coproduct(sources, tags), sb = coproduct(targets, tags);
  Pushout po = pushout(sa.set, x, sb.set, copair(sa, maps), coproduct_map(sa, sb, incl));
  for (const auto& inj : sb.injections) st.members.push_back(compose(po.from_b, inj));
  st.set = std::move(po.set);
  st.from_previous = std::move(po.from_x);
  return st;
}

// ---------------------------------------------------------------------- stages

Stage FactorizationReplay::stage_p1() const {
  const AnodyneExtension ext = saturation_extension(0, dim_);
  std::vector<TDeltaMap> maps;
  std::vector<std::string> tags;
  for (const auto& [alpha, beta] : invertible_2cells(c_)) {
    if (c_.two_cell(alpha).identity) continue;
    maps.push_back(shape_map(ext.source, 4, saturation_simplex(alpha), rs_));
    tags.push_back("sat(" + c_.two_cell(alpha).name + ")");
  }
  return glue("P1", rs_, ext, maps, tags);
}

Stage FactorizationReplay::stage_p2(const Stage& p1, RetractCheck* check) const {
  Quotient q = identify_markings(p1.set);
  if (check) *check = check_retract(rs_, p1.set, p1.from_previous, q);
  Stage st;
  st.name = "P2";
  st.family = p1.set.total_tokens() - q.set.total_tokens();
  st.set = std::move(q.set);
  st.from_previous = std::move(q.map);
  return st;
}

Stage FactorizationReplay::stage_p3(const Stage& p2) const {
  const AnodyneExtension ext = thinness_extension(3, 2, dim_);
  std::vector<TDeltaMap> maps;
  std::vector<std::string> tags;
  for (Id s : thinness_triangles()) {
    maps.push_back(shape_map(ext.source, 3, thinness_simplex(s), p2.set));
    tags.push_back("thin(" + nerve_.label(2, s) + ")");
  }
  return glue("P3", p2.set, ext, maps, tags);
}

Stage FactorizationReplay::stage_p4(const Stage& p3) const {
  const AnodyneExtension ext = saturation_extension(-1, dim_);
  std::vector<TDeltaMap> maps;
  std::vector<std::string> tags;
  for (const auto& e : all_completions()) {
    maps.push_back(shape_map(ext.source, 3, equivalence_simplex(e), p3.set));
    tags.push_back("eq(" + c_.one_cell(e.f).name + ";" + c_.one_cell(e.g).name + "," + c_.two_cell(e.eta).name +
                   "," + c_.two_cell(e.eps).name + ")");
  }
  return glue("P4", p3.set, ext, maps, tags);
}

Stage FactorizationReplay::final_quotient(const Stage& p3, const Stage& p4, TDeltaMap* to_natural,
                                          RetractCheck* check) const {
  const TDeltaSet& x = p4.set;
  // Natural 1-token of each completion.
  std::map<AdjointEquivalence, Id> nat_token;
  for (Id t = 0; t < static_cast<Id>(completions_.size()); ++t) nat_token[completions_[t]] = t;
  auto lookup = [&](const AdjointEquivalence& e) {
    auto it = nat_token.find(e);
    if (it == nat_token.end()) throw VerificationError("completion without a natural token");
    return it->second;
  };

  std::vector<std::vector<Id>> label(x.dim + 1);
  for (int m = 1; m <= x.dim; ++m) {
    label[m].assign(x.token_count(m), kNone);
    if (m >= 2)
      for (Id t = 0; t < static_cast<Id>(x.token_count(m)); ++t) label[m][t] = t;
  }
  // Tokens inherited from P3 over 1-simplices are the degenerate ones.
  for (Id t = 0; t < static_cast<Id>(p3.set.token_count(1)); ++t) {
    const Id at = p4.from_previous.tokens[1][t];
    const Id f = nerve_.edge(1, x.under(1, at), 0, 1);
    if (!c_.one_cell(f).identity) throw VerificationError("P3 marks a non-degenerate 1-simplex");
    label[1][at] = lookup(identity_completion(c_, c_.src_object(f)));
  }
  const auto family = all_completions();
  const TDeltaSet sharp = standard(Shape::Delta3Sharp, 3, 0, dim_);
  const Id pos01 = sharp.find_token(1, "01"), pos12 = sharp.find_token(1, "12"), pos23 = sharp.find_token(1, "23"),
           pos03 = sharp.find_token(1, "03");
  if (family.size() != p4.members.size()) throw VerificationError("P4 family size mismatch");
  for (std::size_t k = 0; k < family.size(); ++k) {
    const Id own = lookup(family[k]), mirrored = lookup(mirror(c_, family[k]));
    const auto& mem = p4.members[k];
    for (Id pos : {pos01, pos23, pos03}) label[1][mem.tokens[1][pos]] = own;
    label[1][mem.tokens[1][pos12]] = mirrored;
  }
  for (Id t = 0; t < static_cast<Id>(x.token_count(1)); ++t)
    if (label[1][t] == kNone) throw VerificationError("unclassified 1-token " + x.token_name(1, t));

  Quotient q = quotient_tokens(x, label);
  if (check) *check = check_retract(p3.set, x, p4.from_previous, q);
  if (to_natural) {
    TDeltaMap iso = identity_map(q.set);
    auto over = tokens_over(natural_);
    for (int m = 1; m <= q.set.dim; ++m) {
      iso.tokens[m].resize(q.set.token_count(m));
      for (Id t = 0; t < static_cast<Id>(q.set.token_count(m)); ++t) {
        if (m == 1) {
          iso.tokens[m][t] = label[1][q.section.tokens[1][t]];
        } else {
          const auto& cand = over[m][q.set.under(m, t)];
          iso.tokens[m][t] = cand.size() == 1 ? cand.front() : kNone;
        }
      }
    }
    *to_natural = std::move(iso);
  }
  Stage st;
  st.name = "N";
  st.family = family.size();
  st.set = std::move(q.set);
  st.from_previous = std::move(q.map);
  return st;
}

// ---------------------------------------------------------------- verification

bool FactorizationReport::passed() const {
  if (!final_isomorphic || !composite_matches || !issues.empty()) return false;
  for (const auto& s : stages)
    if (!s.ok()) return false;
  return true;
}

namespace {

std::set<Id> marked_at(const TDeltaSet& x, int m) {
  std::set<Id> out;
  for (Id t = 0; t < static_cast<Id>(x.token_count(m)); ++t) out.insert(x.under(m, t));
  return out;
}

bool all_marked_above(const TDeltaSet& x, int from) {
  for (int m = from; m <= x.dim; ++m)
    if (marked_at(x, m).size() != x.size(m)) return false;
  return true;
}

}  // namespace

FactorizationReport verify_factorization(const FiniteTwoCategory& c, int dim, std::vector<Stage>* trace) {
  FactorizationReport rep;
  rep.dim = dim;
  FactorizationReplay replay(c, dim);
  const TDeltaSet& rs = replay.rs();
  const DuskinNerve& nv = replay.nerve();

  std::set<Id> degenerate_edges;
  for (Id s = 0; s < static_cast<Id>(nv.size(1)); ++s)
    if (c.one_cell(nv.edge(1, s, 0, 1)).identity) degenerate_edges.insert(s);
  std::set<Id> after_p2 = marked_at(rs, 2);
  for (Id s : replay.degenerate_face_triangles()) after_p2.insert(s);
  std::set<Id> invertible;
  for (Id s = 0; s < static_cast<Id>(nv.size(2)); ++s)
    if (inverse_2cell(c, nv.cell(2, s, 0, 1, 2)) != kNone) invertible.insert(s);
  std::set<Id> equivalences;
  for (Id s = 0; s < static_cast<Id>(nv.size(1)); ++s)
    if (is_one_equivalence(c, nv.edge(1, s, 0, 1))) equivalences.insert(s);

  TDeltaMap composite = identity_map(rs);
  auto record = [&](const Stage& st, const TDeltaSet& previous, bool characterization, std::vector<std::string> notes) {
    StageReport sr;
    sr.name = st.name;
    sr.family = st.family;
    sr.tokens = st.set.total_tokens();
    bool same = is_identity_on_simplices(st.from_previous);
    for (int m = 0; m <= dim && same; ++m) same = st.set.size(m) == rs.size(m);
    sr.underlying_unchanged = same;
    sr.map_valid = validate(st.set).valid() && validate_map(previous, st.set, st.from_previous).valid();
    composite = compose(st.from_previous, composite);
    sr.monomorphism = is_injective(composite, st.set);
    sr.stratified = is_stratified(st.set);
    sr.characterization = characterization && all_marked_above(st.set, 3);
    sr.notes = std::move(notes);
    rep.stages.push_back(std::move(sr));
    if (trace) trace->push_back(st);
  };

  const Stage p1 = replay.stage_p1();
  {
    std::vector<std::string> notes;
    const std::size_t repeated = p1.set.total_tokens() - identify_markings(p1.set).set.total_tokens();
    notes.push_back("glued " + std::to_string(p1.family) + " saturation extensions; " + std::to_string(repeated) +
                    " repeated tokens");
    const bool marks = marked_at(p1.set, 1) == degenerate_edges && marked_at(p1.set, 2) == after_p2;
    if (marks) notes.push_back("marked simplices already equal those of P2");
    record(p1, rs, marks, std::move(notes));
  }

  RetractCheck retract2;
  const Stage p2 = replay.stage_p2(p1, &retract2);
  record(p2, p1.set,
         is_stratified(p2.set) && marked_at(p2.set, 1) == degenerate_edges && marked_at(p2.set, 2) == after_p2,
         {"collapsed " + std::to_string(p2.family) + " repeated tokens"});
  rep.stages.back().retract_checked = true;
  rep.stages.back().retract_ok = retract2.ok();

  const Stage p3 = replay.stage_p3(p2);
  record(p3, p2.set,
         is_stratified(p3.set) && marked_at(p3.set, 1) == degenerate_edges && marked_at(p3.set, 2) == invertible,
         {"glued " + std::to_string(p3.family) + " thinness extensions"});

  const Stage p4 = replay.stage_p4(p3);
  record(p4, p3.set, marked_at(p4.set, 1) == equivalences && marked_at(p4.set, 2) == invertible,
         {"glued " + std::to_string(p4.family) + " equivalence extensions"});

  TDeltaMap iso;
  RetractCheck retract4;
  const Stage fin = replay.final_quotient(p3, p4, &iso, &retract4);
  const TDeltaSet& nat = replay.natural();
  rep.final_isomorphic = validate_map(fin.set, nat, iso).valid() && is_bijective(iso, nat);
  record(fin, p4.set,
         rep.final_isomorphic && marked_at(fin.set, 1) == equivalences && marked_at(fin.set, 2) == invertible,
         {"one token per completion of each 1-cell"});
  rep.stages.back().retract_checked = true;
  rep.stages.back().retract_ok = retract4.ok();

  const TDeltaMap total = compose(iso, composite);
  rep.composite_matches = rep.final_isomorphic && total == rs_to_natural(rs, nat);
  if (!rep.final_isomorphic) rep.issues.push_back("final stage is not isomorphic to the natural nerve");
  if (!rep.composite_matches) rep.issues.push_back("composite differs from the comparison map");
  for (const auto& st : rep.stages)
    if (!st.ok()) rep.issues.push_back("stage " + st.name + " failed its checks");
  return rep;
}

}  // namespace complicial
