#include "complicial/io.hpp"

#include <fstream>
#include <map>

namespace complicial {

namespace {

// Name → id lookup that reports unknown references as input errors.
class Names {
 public:
  Names(const char* what) : what_(what) {}
  Id add(const std::string& name, Id id) {
    if (!ids_.emplace(name, id).second) throw InputError(std::string("duplicate ") + what_ + " name: " + name);
    return id;
  }
  Id operator()(const Json& j) const {
    const auto name = j.get<std::string>();
    auto it = ids_.find(name);
    if (it == ids_.end()) throw InputError(std::string("unknown ") + what_ + ": " + name);
    return it->second;
  }

 private:
  const char* what_;
  std::map<std::string, Id> ids_;
};

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
}

Json table(const FiniteTwoCategory& c, std::size_t rows, std::size_t cols, bool (*defined)(const FiniteTwoCategory&, Id, Id),
           Id (*value)(const FiniteTwoCategory&, Id, Id), const std::string& (*row_name)(const FiniteTwoCategory&, Id),
           const std::string& (*col_name)(const FiniteTwoCategory&, Id)) {
  Json out = Json::array();
  for (Id a = 0; a < static_cast<Id>(rows); ++a)
    for (Id b = 0; b < static_cast<Id>(cols); ++b)
      if (defined(c, a, b)) out.push_back(Json::array({row_name(c, a), col_name(c, b), c.two_cell(value(c, a, b)).name}));
  return out;
}

const std::string& one_name(const FiniteTwoCategory& c, Id f) { return c.one_cell(f).name; }
const std::string& two_name(const FiniteTwoCategory& c, Id a) { return c.two_cell(a).name; }

Json word_json(const Word& w) { return Json{{"src", w.src}, {"tgt", w.tgt}, {"letters", w.letters}}; }
Word word_from(const Json& j) {
  return Word{j.at("src").get<Id>(), j.at("tgt").get<Id>(), j.at("letters").get<std::vector<Id>>()};
}
Json pasting_json(const Pasting& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) steps.push_back(Json{{"pre", s.pre}, {"gen", s.gen}, {"post", s.post}});
  return Json{{"source", word_json(p.source)}, {"steps", steps}};
}
Pasting pasting_from(const Json& j) {
  Pasting p{word_from(j.at("source")), {}};
  for (const auto& s : j.at("steps"))
    p.steps.push_back({s.at("pre").get<std::vector<Id>>(), s.at("gen").get<Id>(), s.at("post").get<std::vector<Id>>()});
  return p;
}
Json origin_json(const GeneratorOrigin& o) {
  return Json{{"kind", origin_name(o.kind)}, {"level", o.level}, {"index", o.index}};
}
GeneratorOrigin origin_from(const Json& j) {
  if (!j.contains("origin")) return {};
  const auto& o = j.at("origin");
  return {parse_origin(o.at("kind").get<std::string>()), o.at("level").get<int>(), o.at("index").get<Id>()};
}

}  // namespace

// ------------------------------------------------------------------ 2-categories

Json to_json(const FiniteTwoCategory& c) {
  const std::size_t n0 = c.object_count(), n1 = c.one_cell_count(), n2 = c.two_cell_count();
  Json j;
  j["objects"] = Json::array();
  for (Id x = 0; x < static_cast<Id>(n0); ++x) j["objects"].push_back(c.object_name(x));
  j["one_cells"] = Json::array();
  for (Id f = 0; f < static_cast<Id>(n1); ++f) {
    const auto& cell = c.one_cell(f);
    j["one_cells"].push_back(
        Json{{"id", cell.name}, {"src", c.object_name(cell.src)}, {"tgt", c.object_name(cell.tgt)}, {"identity", cell.identity}});
  }
  j["comp1"] = Json::array();
  for (Id g = 0; g < static_cast<Id>(n1); ++g)
    for (Id f = 0; f < static_cast<Id>(n1); ++f)
      if (c.tgt_object(f) == c.src_object(g))
        j["comp1"].push_back(Json{{"g", one_name(c, g)}, {"f", one_name(c, f)}, {"result", one_name(c, c.compose(g, f))}});
  j["two_cells"] = Json::array();
  for (Id a = 0; a < static_cast<Id>(n2); ++a) {
    const auto& cell = c.two_cell(a);
    j["two_cells"].push_back(
        Json{{"id", cell.name}, {"src", one_name(c, cell.src)}, {"tgt", one_name(c, cell.tgt)}, {"identity", cell.identity}});
  }
  j["vcomp"] = table(
      c, n2, n2, [](const FiniteTwoCategory& c, Id b, Id a) { return c.two_cell(a).tgt == c.two_cell(b).src; },
      [](const FiniteTwoCategory& c, Id b, Id a) { return c.vcompose(b, a); }, two_name, two_name);
  j["whisker_l"] = table(
      c, n1, n2,
      [](const FiniteTwoCategory& c, Id k, Id a) { return c.src_object(k) == c.tgt_object(c.two_cell(a).src); },
      [](const FiniteTwoCategory& c, Id k, Id a) { return c.whisker_left(k, a); }, one_name, two_name);
  j["whisker_r"] = table(
      c, n2, n1,
      [](const FiniteTwoCategory& c, Id b, Id k) { return c.tgt_object(k) == c.src_object(c.two_cell(b).src); },
      [](const FiniteTwoCategory& c, Id b, Id k) { return c.whisker_right(b, k); }, two_name, one_name);
  return j;
}

FiniteTwoCategory category_from_json(const Json& j) {
  FiniteTwoCategory c = guarded([&] {
    TwoCategoryBuilder b;
    Names objects("object"), ones("1-cell"), twos("2-cell");
    for (const auto& o : j.at("objects")) {
      const auto name = o.get<std::string>();
      objects.add(name, b.add_object(name));
    }
    for (const auto& f : j.at("one_cells")) {
      const auto name = f.at("id").get<std::string>();
      ones.add(name, b.add_one_cell(name, objects(f.at("src")), objects(f.at("tgt")), f.value("identity", false)));
    }
    for (const auto& a : j.at("two_cells")) {
      const auto name = a.at("id").get<std::string>();
      twos.add(name, b.add_two_cell(name, ones(a.at("src")), ones(a.at("tgt")), a.value("identity", false)));
    }
    for (const auto& e : j.at("comp1")) b.set_compose(ones(e.at("g")), ones(e.at("f")), ones(e.at("result")));
    auto triples = [&](const char* key, auto&& first, auto&& second, auto&& set) {
      for (const auto& e : j.at(key)) {
        if (!e.is_array() || e.size() != 3) throw InputError(std::string(key) + " entries must be triples");
        set(first(e[0]), second(e[1]), twos(e[2]));
      }
    };
    triples("vcomp", twos, twos, [&](Id x, Id y, Id r) { b.set_vcompose(x, y, r); });
    triples("whisker_l", ones, twos, [&](Id x, Id y, Id r) { b.set_whisker_left(x, y, r); });
    triples("whisker_r", twos, ones, [&](Id x, Id y, Id r) { b.set_whisker_right(x, y, r); });
    return b.build();
  });
  auto report = validate(c);
  if (!report.valid()) throw InputError("not a strict 2-category: " + report.summary());
  return c;
}

// ------------------------------------------------------------------ tΔ-sets

Json to_json(const TDeltaSet& x) {
  Json j;
  j["dim"] = x.dim;
  j["simplices"] = Json::array();
  j["faces"] = Json::array();
  j["degeneracies"] = Json::array();
  j["tokens"] = Json::array();
  j["zeta"] = Json::array();
  for (const auto& l : x.levels) {
    j["simplices"].push_back(l.simplices);
    j["faces"].push_back(l.faces);
    j["degeneracies"].push_back(l.degeneracies);
    Json tokens = Json::array();
    for (std::size_t t = 0; t < l.tokens.size(); ++t) tokens.push_back(Json{{"id", l.tokens[t]}, {"under", l.under[t]}});
    j["tokens"].push_back(tokens);
    j["zeta"].push_back(l.zeta);
  }
  return j;
}

TDeltaSet tdelta_from_json(const Json& j) {
  TDeltaSet x = guarded([&] {
    TDeltaSet x;
    x.dim = j.at("dim").get<int>();
    if (x.dim < 0 || x.dim > 6) throw InputError("tΔ-set dimension must lie in 0..6");
    const std::size_t levels = static_cast<std::size_t>(x.dim) + 1;
    for (const char* key : {"simplices", "faces", "degeneracies", "tokens", "zeta"})
      if (!j.at(key).is_array() || j.at(key).size() != levels)
        throw InputError(std::string("field ") + key + " must have one entry per level");
    x.levels.resize(levels);
    for (std::size_t m = 0; m < levels; ++m) {
      auto& l = x.levels[m];
      l.simplices = j.at("simplices")[m].get<std::vector<std::string>>();
      l.faces = j.at("faces")[m].get<std::vector<std::vector<Id>>>();
      l.degeneracies = j.at("degeneracies")[m].get<std::vector<std::vector<Id>>>();
      for (const auto& t : j.at("tokens")[m]) {
        l.tokens.push_back(t.at("id").get<std::string>());
        l.under.push_back(t.at("under").get<Id>());
      }
      l.zeta = j.at("zeta")[m].get<std::vector<std::vector<Id>>>();
    }
    return x;
  });
  auto report = validate(x);
  if (!report.valid()) throw InputError("not a valid tΔ-set: " + report.summary());
  return x;
}

Json to_json(const TDeltaMap& f) { return Json{{"simplices", f.simplices}, {"tokens", f.tokens}}; }

TDeltaMap map_from_json(const Json& j) {
  return guarded([&] {
    return TDeltaMap{j.at("simplices").get<std::vector<std::vector<Id>>>(),
                     j.at("tokens").get<std::vector<std::vector<Id>>>()};
  });
}

// ------------------------------------------------------------------ presentations

Json to_json(const TwoPolygraph& p) {
  Json j;
  j["objects"] = p.objects;
  j["one_generators"] = Json::array();
  for (const auto& g : p.one_generators)
    j["one_generators"].push_back(Json{{"name", g.name}, {"src", g.src}, {"tgt", g.tgt}, {"origin", origin_json(g.origin)}});
  j["two_generators"] = Json::array();
  for (const auto& g : p.two_generators)
    j["two_generators"].push_back(
        Json{{"name", g.name}, {"src", word_json(g.src)}, {"tgt", word_json(g.tgt)}, {"origin", origin_json(g.origin)}});
  j["relations"] = Json::array();
  for (const auto& r : p.relations)
    j["relations"].push_back(Json{{"name", r.name}, {"lhs", pasting_json(r.lhs)}, {"rhs", pasting_json(r.rhs)}});
  j["derived"] = Json::array();
  for (const auto& d : p.derived) j["derived"].push_back(Json{{"name", d.name}, {"value", pasting_json(d.value)}});
  j["review_flags"] = p.review_flags;
  return j;
}

TwoPolygraph polygraph_from_json(const Json& j) {
  TwoPolygraph p = guarded([&] {
    TwoPolygraph p;
    p.objects = j.at("objects").get<std::vector<std::string>>();
    for (const auto& g : j.at("one_generators"))
      p.one_generators.push_back({g.at("name").get<std::string>(), g.at("src").get<Id>(), g.at("tgt").get<Id>(), origin_from(g)});
    for (const auto& g : j.at("two_generators"))
      p.two_generators.push_back(
          {g.at("name").get<std::string>(), word_from(g.at("src")), word_from(g.at("tgt")), origin_from(g)});
    for (const auto& r : j.at("relations"))
      p.relations.push_back({r.at("name").get<std::string>(), pasting_from(r.at("lhs")), pasting_from(r.at("rhs"))});
    if (j.contains("derived"))
      for (const auto& d : j.at("derived"))
        p.derived.push_back({d.at("name").get<std::string>(), pasting_from(d.at("value"))});
    if (j.contains("review_flags")) p.review_flags = j.at("review_flags").get<std::vector<std::string>>();
    return p;
  });
  auto report = validate(p);
  if (!report.valid()) throw InputError("not a valid presentation: " + report.summary());
  return p;
}

// ------------------------------------------------------------------ reports

Json to_json(const FibrancyReport& r, const TDeltaSet& target) {
  Json j;
  j["n"] = r.n;
  j["dim"] = r.dim;
  j["passed"] = r.passed();
  j["budget_exceeded"] = r.budget_exceeded();
  j["tallies"] = Json::object();
  for (AnodyneClass c : kAnodyneClasses) {
    const auto& t = r.tallies[static_cast<int>(c)];
    j["tallies"][class_name(c)] = Json{{"extensions", t.extensions},
                                       {"passed", t.passed},
                                       {"maps", t.maps},
                                       {"failures", t.failures},
                                       {"budget_failures", t.budget_failures}};
  }
  j["extensions"] = Json::array();
  for (const auto& e : r.results) {
    Json ej{{"name", e.name},
            {"class", class_name(e.cls)},
            {"passed", e.passed()},
            {"maps", e.maps},
            {"failures", e.failures},
            {"budget_failures", e.budget_failures},
            {"enumeration_exhausted", e.enumeration_exhausted}};
    if (e.witness) {
      Json images = Json::array();
      for (std::size_t m = 0; m < e.witness->simplices.size(); ++m) {
        Json level = Json::array();
        for (Id s : e.witness->simplices[m]) level.push_back(target.name(static_cast<int>(m), s));
        images.push_back(level);
      }
      ej["witness"] = Json{{"map", to_json(*e.witness)}, {"images", images}};
    }
    j["extensions"].push_back(ej);
  }
  return j;
}

Json to_json(const FactorizationReport& r) {
  Json j;
  j["category"] = r.category;
  j["dim"] = r.dim;
  j["passed"] = r.passed();
  j["final_isomorphic"] = r.final_isomorphic;
  j["composite_matches"] = r.composite_matches;
  j["stages"] = Json::array();
  for (const auto& s : r.stages)
    j["stages"].push_back(Json{{"name", s.name},
                               {"family", s.family},
                               {"tokens", s.tokens},
                               {"ok", s.ok()},
                               {"underlying_unchanged", s.underlying_unchanged},
                               {"map_valid", s.map_valid},
                               {"monomorphism", s.monomorphism},
                               {"characterization", s.characterization},
                               {"stratified", s.stratified},
                               {"retract_checked", s.retract_checked},
                               {"retract_ok", s.retract_ok},
                               {"notes", s.notes}});
  j["issues"] = r.issues;
  return j;
}

Json to_json(const CounitReport& r) {
  return Json{{"passed", r.ok()},
              {"generators_checked", r.generators_checked},
              {"relations_checked", r.relations_checked},
              {"derived_checked", r.derived_checked},
              {"failures", r.failures}};
}

Json to_json(const SectionReport& r) {
  return Json{{"x", r.x},
              {"y", r.y},
              {"passed", r.ok()},
              {"one_cells_checked", r.one_cells_checked},
              {"two_cells_checked", r.two_cells_checked},
              {"mismatches", r.mismatches}};
}

// ------------------------------------------------------------------ files

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace complicial
