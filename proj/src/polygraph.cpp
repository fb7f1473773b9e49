#include "complicial/polygraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace complicial {

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::Manual:
      return "manual";
    case Origin::Edge:
      return "edge";
    case Origin::Triangle:
      return "triangle";
    case Origin::TriangleInverse:
      return "triangle_inverse";
    case Origin::EquivalenceInverse:
      return "equivalence_inverse";
    case Origin::EquivalenceUnit:
      return "equivalence_unit";
    case Origin::EquivalenceCounit:
      return "equivalence_counit";
    case Origin::EquivalenceUnitInv:
      return "equivalence_unit_inverse";
    case Origin::EquivalenceCounitInv:
      return "equivalence_counit_inverse";
  }
  return "manual";
}

Origin parse_origin(const std::string& name) {
  for (Origin o : {Origin::Manual, Origin::Edge, Origin::Triangle, Origin::TriangleInverse, Origin::EquivalenceInverse,
                   Origin::EquivalenceUnit, Origin::EquivalenceCounit, Origin::EquivalenceUnitInv,
                   Origin::EquivalenceCounitInv})
    if (origin_name(o) == name) return o;
  throw InputError("unknown generator origin: " + name);
}

// ------------------------------------------------------------------ words

namespace {

void check_word(const TwoPolygraph& p, const Word& w) {
  const Id n0 = static_cast<Id>(p.objects.size()), n1 = static_cast<Id>(p.one_generators.size());
  if (w.src < 0 || w.src >= n0 || w.tgt < 0 || w.tgt >= n0) throw InputError("word endpoint out of range");
  Id at = w.src;
  for (Id g : w.letters) {
    if (g < 0 || g >= n1) throw InputError("word letter out of range");
    if (p.one_generators[g].src != at) throw InputError("word is not composable");
    at = p.one_generators[g].tgt;
  }
  if (at != w.tgt) throw InputError("word does not end at its target");
}

Id object_at(const TwoPolygraph& p, const Word& w, std::size_t pos) {
  return pos == 0 ? w.src : p.one_generators[w.letters[pos - 1]].tgt;
}

}  // namespace

Word TwoPolygraph::letter(Id g) const { return Word{one_generators.at(g).src, one_generators.at(g).tgt, {g}}; }

Word TwoPolygraph::concat(const Word& first, const Word& then) const {
  if (first.tgt != then.src) throw InputError("concatenating non-composable words");
  Word w{first.src, then.tgt, first.letters};
  w.letters.insert(w.letters.end(), then.letters.begin(), then.letters.end());
  return w;
}

Word TwoPolygraph::target(const Pasting& pasting) const {
  check_word(*this, pasting.source);
  Word w = pasting.source;
  for (const auto& s : pasting.steps) {
    if (s.gen < 0 || s.gen >= static_cast<Id>(two_generators.size())) throw InputError("pasting step out of range");
    const auto& g = two_generators[s.gen];
    std::vector<Id> expect = s.pre;
    expect.insert(expect.end(), g.src.letters.begin(), g.src.letters.end());
    expect.insert(expect.end(), s.post.begin(), s.post.end());
    if (expect != w.letters || object_at(*this, w, s.pre.size()) != g.src.src)
      throw InputError("pasting step " + g.name + " does not apply");
    std::vector<Id> next = s.pre;
    next.insert(next.end(), g.tgt.letters.begin(), g.tgt.letters.end());
    next.insert(next.end(), s.post.begin(), s.post.end());
    w.letters = std::move(next);
    check_word(*this, w);
  }
  return w;
}

ValidationReport validate(const TwoPolygraph& p) {
  ValidationReport r;
  const Id n0 = static_cast<Id>(p.objects.size());
  for (const auto& g : p.one_generators)
    if (g.src < 0 || g.src >= n0 || g.tgt < 0 || g.tgt >= n0) r.add("1-generator " + g.name + " has bad endpoints");
  if (!r.valid()) return r;
  for (const auto& g : p.two_generators) {
    try {
      check_word(p, g.src);
      check_word(p, g.tgt);
      if (g.src.src != g.tgt.src || g.src.tgt != g.tgt.tgt) r.add("2-generator " + g.name + " is not between parallel words");
    } catch (const InputError& e) {
      r.add("2-generator " + g.name + ": " + e.what());
    }
  }
  if (!r.valid()) return r;
  for (const auto& rel : p.relations) {
    try {
      if (rel.lhs.source != rel.rhs.source) {
        r.add("relation " + rel.name + " relates pastings with different sources");
        continue;
      }
      if (p.target(rel.lhs) != p.target(rel.rhs)) r.add("relation " + rel.name + " relates pastings with different targets");
    } catch (const InputError& e) {
      r.add("relation " + rel.name + ": " + e.what());
    }
  }
  for (const auto& d : p.derived) {
    try {
      p.target(d.value);
    } catch (const InputError& e) {
      r.add("derived cell " + d.name + ": " + e.what());
    }
  }
  return r;
}

bool structurally_equal(const TwoPolygraph& a, const TwoPolygraph& b) {
  if (a.objects.size() != b.objects.size() || a.one_generators.size() != b.one_generators.size() ||
      a.two_generators.size() != b.two_generators.size() || a.relations.size() != b.relations.size())
    return false;
  for (std::size_t i = 0; i < a.one_generators.size(); ++i)
    if (a.one_generators[i].src != b.one_generators[i].src || a.one_generators[i].tgt != b.one_generators[i].tgt)
      return false;
  for (std::size_t i = 0; i < a.two_generators.size(); ++i)
    if (a.two_generators[i].src != b.two_generators[i].src || a.two_generators[i].tgt != b.two_generators[i].tgt)
      return false;
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    const auto& x = a.relations[i];
    const auto& y = b.relations[i];
    const bool same = x.lhs == y.lhs && x.rhs == y.rhs;
    const bool swapped = x.lhs == y.rhs && x.rhs == y.lhs;
    if (!same && !swapped) return false;
  }
  return true;
}

TwoPolygraph free_adjoint_equivalence_presentation() {
  TwoPolygraph p;
  p.objects = {"x", "y"};
  const Id x = 0, y = 1, f = 0, g = 1;
  p.one_generators = {{"f", x, y, {}}, {"g", y, x, {}}};
  const Word ix{x, x, {}}, iy{y, y, {}}, gf{x, x, {f, g}}, fg{y, y, {g, f}};
  p.two_generators = {{"eta", ix, gf, {}}, {"eps", fg, iy, {}}, {"eta^-1", gf, ix, {}}, {"eps^-1", iy, fg, {}}};
  const Id eta = 0, eps = 1, eta_inv = 2, eps_inv = 3;
  auto inverse_pair = [&](const std::string& name, Id a, Id b) {
    const auto& ga = p.two_generators[a];
    p.relations.push_back({name + " then inverse", Pasting{ga.src, {{{}, a, {}}, {{}, b, {}}}}, Pasting{ga.src, {}}});
    p.relations.push_back({"inverse then " + name, Pasting{ga.tgt, {{{}, b, {}}, {{}, a, {}}}}, Pasting{ga.tgt, {}}});
  };
  inverse_pair("eta", eta, eta_inv);
  inverse_pair("eps", eps, eps_inv);
  p.relations.push_back({"f*eta = (eps*f)^-1", Pasting{Word{x, y, {f}}, {{{}, eta, {f}}}},
                         Pasting{Word{x, y, {f}}, {{{f}, eps_inv, {}}}}});
  p.relations.push_back({"g*eps = (eta*g)^-1", Pasting{Word{y, x, {g, f, g}}, {{{}, eps, {g}}}},
                         Pasting{Word{y, x, {g, f, g}}, {{{g}, eta_inv, {}}}}});
  return p;
}

// ------------------------------------------------------------------ evaluation

namespace {

struct Raw {
  std::size_t pos;
  Id gen;
  friend bool operator==(const Raw&, const Raw&) = default;
  friend auto operator<=>(const Raw&, const Raw&) = default;
};
using Seq = std::vector<Raw>;

class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Evaluator {
 public:
  Evaluator(const TwoPolygraph& p, std::size_t max_steps, bool use_relations)
      : p_(p), max_steps_(max_steps), use_relations_(use_relations) {}

  FiniteTwoCategory run() {
    check_acyclic();
    enumerate_words();
    collect_cancellations();
    for (std::size_t w = 0; w < words_.size(); ++w) enumerate_traces(w);
    if (use_relations_) close_relations();
    return build();
  }

 private:
  // ----- 1-cells
  void check_acyclic() {
    const std::size_t n = p_.objects.size();
    std::vector<int> state(n, 0);
    std::function<void(Id)> visit = [&](Id x) {
      state[x] = 1;
      for (const auto& g : p_.one_generators)
        if (g.src == x) {
          if (state[g.tgt] == 1) throw Refusal("the 1-generator graph has a cycle");
          if (state[g.tgt] == 0) visit(g.tgt);
        }
      state[x] = 2;
    };
    for (Id x = 0; x < static_cast<Id>(n); ++x)
      if (state[x] == 0) visit(x);
  }

  void enumerate_words() {
    std::function<void(Word&)> extend = [&](Word& w) {
      word_index_[{w.src, w.letters}] = words_.size();
      words_.push_back(w);
      for (Id g = 0; g < static_cast<Id>(p_.one_generators.size()); ++g)
        if (p_.one_generators[g].src == w.tgt) {
          Word next = w;
          next.letters.push_back(g);
          next.tgt = p_.one_generators[g].tgt;
          extend(next);
        }
    };
    for (Id x = 0; x < static_cast<Id>(p_.objects.size()); ++x) {
      Word w{x, x, {}};
      extend(w);
    }
  }

  std::size_t word_id(const Word& w) const {
    auto it = word_index_.find({w.src, w.letters});
    if (it == word_index_.end()) throw Refusal("word outside the enumerated 1-cells");
    return it->second;
  }

  // ----- steps
  std::optional<Word> apply(const Word& w, const Raw& s) const {
    const auto& g = p_.two_generators[s.gen];
    const auto& src = g.src.letters;
    if (s.pos + src.size() > w.letters.size()) return std::nullopt;
    if (!std::equal(src.begin(), src.end(), w.letters.begin() + s.pos)) return std::nullopt;
    if (object_at(p_, w, s.pos) != g.src.src) return std::nullopt;
    Word out{w.src, w.tgt, std::vector<Id>(w.letters.begin(), w.letters.begin() + s.pos)};
    out.letters.insert(out.letters.end(), g.tgt.letters.begin(), g.tgt.letters.end());
    out.letters.insert(out.letters.end(), w.letters.begin() + s.pos + src.size(), w.letters.end());
    return out;
  }

  std::optional<Word> run_seq(const Word& start, const Seq& seq) const {
    Word w = start;
    for (const auto& s : seq) {
      auto next = apply(w, s);
      if (!next) return std::nullopt;
      w = std::move(*next);
    }
    return w;
  }

  std::vector<Raw> applicable(const Word& w) const {
    std::vector<Raw> out;
    for (Id g = 0; g < static_cast<Id>(p_.two_generators.size()); ++g)
      for (std::size_t pos = 0; pos <= w.letters.size(); ++pos)
        if (apply(w, {pos, g})) out.push_back({pos, g});
    return out;
  }

  std::size_t src_len(Id g) const { return p_.two_generators[g].src.letters.size(); }
  std::size_t tgt_len(Id g) const { return p_.two_generators[g].tgt.letters.size(); }

  // Every reordering reachable by exchanging adjacent independent steps.
  std::set<Seq> interleavings(const Word& start, const Seq& seq) const {
    std::set<Seq> seen{seq};
    std::deque<Seq> queue{seq};
    while (!queue.empty()) {
      Seq cur = std::move(queue.front());
      queue.pop_front();
      Word w = start;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        const Raw a = cur[i], b = cur[i + 1];
        std::vector<std::pair<Raw, Raw>> swaps;
        if (b.pos + src_len(b.gen) <= a.pos)
          swaps.push_back({{b.pos, b.gen}, {a.pos + tgt_len(b.gen) - src_len(b.gen), a.gen}});
        if (b.pos >= a.pos + tgt_len(a.gen))
          swaps.push_back({{b.pos - tgt_len(a.gen) + src_len(a.gen), b.gen}, {a.pos, a.gen}});
        for (const auto& [x, y] : swaps) {
          auto w1 = apply(w, x);
          if (!w1) continue;
          auto w2 = apply(*w1, y);
          auto ref = run_seq(w, Seq{a, b});
          if (!w2 || !ref || *w2 != *ref) continue;
          Seq next = cur;
          next[i] = x;
          next[i + 1] = y;
          if (seen.insert(next).second) {
            if (seen.size() > kMaxInterleavings) throw Refusal("too many interleavings");
            queue.push_back(std::move(next));
          }
        }
        w = *apply(w, a);
      }
    }
    return seen;
  }

  void collect_cancellations() {
    for (const auto& rel : p_.relations) {
      const Pasting* two = nullptr;
      if (rel.rhs.steps.empty()) two = &rel.lhs;
      if (rel.lhs.steps.empty()) two = &rel.rhs;
      if (!two || two->steps.size() != 2) continue;
      const auto& s0 = two->steps[0];
      const auto& s1 = two->steps[1];
      if (s0.pre.empty() && s0.post.empty() && s1.pre.empty() && s1.post.empty()) cancel_.insert({s0.gen, s1.gen});
    }
  }

  bool is_cancellation(const Relation& rel) const {
    const Pasting* two = rel.rhs.steps.empty() ? &rel.lhs : rel.lhs.steps.empty() ? &rel.rhs : nullptr;
    if (!two || two->steps.size() != 2) return false;
    for (const auto& s : two->steps)
      if (!s.pre.empty() || !s.post.empty()) return false;
    return true;
  }

  // Cancels adjacent inverse pairs until none remain; returns the canonical form.
  Seq reduce(const Word& start, Seq seq) const {
    while (true) {
      const auto all = interleavings(start, seq);
      bool found = false;
      for (const auto& il : all) {
        for (std::size_t i = 0; i + 1 < il.size() && !found; ++i)
          if (il[i].pos == il[i + 1].pos && cancel_.count({il[i].gen, il[i + 1].gen})) {
            seq.assign(il.begin(), il.begin() + i);
            seq.insert(seq.end(), il.begin() + i + 2, il.end());
            found = true;
          }
        if (found) break;
      }
      if (!found) return *all.begin();
    }
  }

  void enumerate_traces(std::size_t w) {
    const Word& start = words_[w];
    std::vector<Seq> frontier{Seq{}};
    add_trace(w, Seq{});
    for (std::size_t len = 1; !frontier.empty(); ++len) {
      std::vector<Seq> next;
      for (const auto& t : frontier) {
        const Word end = *run_seq(start, t);
        for (const auto& s : applicable(end)) {
          Seq ext = t;
          ext.push_back(s);
          Seq red = reduce(start, ext);
          if (red.size() < ext.size()) continue;
          if (trace_index_.count({w, red})) continue;
          if (len > max_steps_) throw Refusal("composites exceed " + std::to_string(max_steps_) + " steps");
          add_trace(w, red);
          next.push_back(red);
        }
      }
      frontier = std::move(next);
    }
  }

  void add_trace(std::size_t w, const Seq& s) {
    trace_index_[{w, s}] = traces_.size();
    traces_.push_back({w, s});
    parent_.push_back(parent_.size());
  }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

  std::size_t lookup(std::size_t w, const Seq& seq) const {
    Seq red = reduce(words_[w], seq);
    auto it = trace_index_.find({w, red});
    if (it == trace_index_.end()) throw Refusal("composite outside the enumerated 2-cells");
    return it->second;
  }

  static Seq offsets(const Pasting& p) {
    Seq out;
    for (const auto& s : p.steps) out.push_back({s.pre.size(), s.gen});
    return out;
  }

  void close_relations() {
    for (std::size_t t = 0; t < traces_.size(); ++t) {
      const auto [w, seq] = traces_[t];
      const Word& start = words_[w];
      for (const auto& il : interleavings(start, seq)) {
        for (const auto& rel : p_.relations) {
          if (is_cancellation(rel)) continue;
          for (int dir = 0; dir < 2; ++dir) {
            const Pasting& from = dir == 0 ? rel.lhs : rel.rhs;
            const Pasting& to = dir == 0 ? rel.rhs : rel.lhs;
            const Seq pat = offsets(from), rep = offsets(to);
            if (pat.empty()) continue;
            Word cur = start;
            for (std::size_t i = 0; i + pat.size() <= il.size(); ++i) {
              if (il[i].pos >= pat[0].pos) {
                const std::size_t a = il[i].pos - pat[0].pos;
                bool match = true;
                for (std::size_t k = 0; k < pat.size() && match; ++k)
                  match = il[i + k].gen == pat[k].gen && il[i + k].pos == a + pat[k].pos;
                const auto& sl = from.source.letters;
                match = match && a + sl.size() <= cur.letters.size() &&
                        std::equal(sl.begin(), sl.end(), cur.letters.begin() + a) &&
                        object_at(p_, cur, a) == from.source.src;
                if (match) {
                  Seq replaced(il.begin(), il.begin() + i);
                  for (const auto& r : rep) replaced.push_back({a + r.pos, r.gen});
                  replaced.insert(replaced.end(), il.begin() + i + pat.size(), il.end());
                  if (!run_seq(start, replaced)) throw Refusal("relation " + rel.name + " is not well typed in context");
                  unite(t, lookup(w, replaced));
                }
              }
              cur = *apply(cur, il[i]);
            }
          }
        }
      }
    }
  }

  // ----- assembly
  std::string word_name(const Word& w) const {
    if (w.letters.empty()) return "id_" + p_.objects[w.src];
    std::string out;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
      if (i) out += ';';
      out += p_.one_generators[w.letters[i]].name;
    }
    return out;
  }

  FiniteTwoCategory build() {
    TwoCategoryBuilder b;
    for (const auto& o : p_.objects) b.add_object(o);
    for (const auto& w : words_) b.add_one_cell(word_name(w), w.src, w.tgt, w.letters.empty());
    // One 2-cell per class, named by its least member.
    std::vector<Id> cell_of(traces_.size(), kNone);
    std::vector<std::size_t> rep_of_cell;
    for (std::size_t t = 0; t < traces_.size(); ++t) {
      const std::size_t r = find(t);
      if (cell_of[r] == kNone) {
        const auto& [w, seq] = traces_[r];
        const Word end = *run_seq(words_[w], seq);
        std::string name;
        if (seq.empty()) {
          name = "id_" + word_name(words_[w]);
        } else {
          name = word_name(words_[w]) + ":";
          for (std::size_t i = 0; i < seq.size(); ++i) {
            if (i) name += ',';
            name += p_.two_generators[seq[i].gen].name + "@" + std::to_string(seq[i].pos);
          }
        }
        cell_of[r] = b.add_two_cell(name, static_cast<Id>(w), static_cast<Id>(word_id(end)), seq.empty());
        rep_of_cell.push_back(r);
      }
      cell_of[t] = cell_of[r];
    }
    const Id n1 = static_cast<Id>(words_.size());
    for (Id f = 0; f < n1; ++f)
      for (Id g = 0; g < n1; ++g)
        if (words_[f].tgt == words_[g].src)
          b.set_compose(g, f, static_cast<Id>(word_id(p_.concat(words_[f], words_[g]))));
    const Id n2 = static_cast<Id>(rep_of_cell.size());
    auto cell_for = [&](std::size_t w, const Seq& s) { return cell_of[lookup(w, s)]; };
    for (Id a = 0; a < n2; ++a) {
      const auto& [wa, sa] = traces_[rep_of_cell[a]];
      const Word end_a = *run_seq(words_[wa], sa);
      for (Id bb = 0; bb < n2; ++bb) {
        const auto& [wb, sb] = traces_[rep_of_cell[bb]];
        if (word_id(end_a) != wb) continue;
        Seq s = sa;
        s.insert(s.end(), sb.begin(), sb.end());
        b.set_vcompose(bb, a, cell_for(wa, s));
      }
      for (Id c = 0; c < n1; ++c) {
        if (words_[c].src == words_[wa].tgt)
          b.set_whisker_left(c, a, cell_for(word_id(p_.concat(words_[wa], words_[c])), sa));
        if (words_[c].tgt == words_[wa].src) {
          Seq shifted = sa;
          for (auto& r : shifted) r.pos += words_[c].letters.size();
          b.set_whisker_right(a, c, cell_for(word_id(p_.concat(words_[c], words_[wa])), shifted));
        }
      }
    }
    return b.build();
  }

  static constexpr std::size_t kMaxInterleavings = 20000;
  const TwoPolygraph& p_;
  std::size_t max_steps_;
  bool use_relations_;
  std::vector<Word> words_;
  std::map<std::pair<Id, std::vector<Id>>, std::size_t> word_index_;
  std::set<std::pair<Id, Id>> cancel_;
  std::vector<std::pair<std::size_t, Seq>> traces_;
  std::map<std::pair<std::size_t, Seq>, std::size_t> trace_index_;
  std::vector<std::size_t> parent_;
};

}  // namespace

Evaluation evaluate_free(const TwoPolygraph& p, std::size_t max_steps) {
  Evaluation e;
  if (!p.relations.empty()) {
    e.refusal = "the presentation has relations";
    return e;
  }
  return evaluate(p, max_steps);
}

Evaluation evaluate(const TwoPolygraph& p, std::size_t max_steps) {
  Evaluation e;
  auto report = validate(p);
  if (!report.valid()) {
    e.refusal = "invalid presentation: " + report.summary();
    return e;
  }
  try {
    e.category = Evaluator(p, max_steps, true).run();
  } catch (const Refusal& r) {
    e.refusal = r.what();
  }
  return e;
}

}  // namespace complicial
