#include "complicial/lifting.hpp"

#include <omp.h>

#include "complicial/standard.hpp"

namespace complicial {

std::string class_name(AnodyneClass c) {
  switch (c) {
    case AnodyneClass::Horn:
      return "horn";
    case AnodyneClass::Thinness:
      return "thinness";
    case AnodyneClass::Triviality:
      return "triviality";
    case AnodyneClass::Saturation:
      return "saturation";
  }
  return "?";
}

namespace {

AnodyneExtension make(AnodyneClass cls, std::string name, TDeltaSet a, TDeltaSet b) {
  AnodyneExtension e;
  e.cls = cls;
  e.name = std::move(name);
  e.inclusion = inclusion_by_name(a, b);
  e.source = std::move(a);
  e.target = std::move(b);
  return e;
}

}  // namespace

AnodyneExtension thinness_extension(int m, int k, int dim) {
  auto e = make(AnodyneClass::Thinness, "thinness[m=" + std::to_string(m) + ",k=" + std::to_string(k) + "]",
                standard(Shape::DeltaKPrime, m, k, dim), standard(Shape::DeltaKDoublePrime, m, k, dim));
  e.m = m;
  e.k = k;
  return e;
}

AnodyneExtension saturation_extension(int l, int dim) {
  if (l < -1 || l + 4 > dim) throw InputError("saturation index must satisfy -1 <= l <= dim - 4");
  TDeltaSet a = standard(Shape::Delta3Eq, 3, 0, dim);
  TDeltaSet b = standard(Shape::Delta3Sharp, 3, 0, dim);
  if (l >= 0) {
    TDeltaSet cone = standard(Shape::Delta, l, 0, dim);
    a = join(cone, a);
    b = join(cone, b);
  }
  auto e = make(AnodyneClass::Saturation, "saturation[l=" + std::to_string(l) + "]", std::move(a), std::move(b));
  e.l = l;
  return e;
}

std::vector<AnodyneExtension> anodyne_library(int n, int dim) {
  if (dim < 1 || dim > 6) throw InputError("anodyne library dimension must lie in 1..6");
  if (n < 0) throw InputError("triviality index must be non-negative");
  std::vector<AnodyneExtension> out;
  for (int m = 1; m <= dim; ++m)
    for (int k = 0; k <= m; ++k) {
      auto e = make(AnodyneClass::Horn, "horn[m=" + std::to_string(m) + ",k=" + std::to_string(k) + "]",
                    standard(Shape::Horn, m, k, dim), standard(Shape::DeltaK, m, k, dim));
      e.m = m;
      e.k = k;
      out.push_back(std::move(e));
    }
  for (int m = 2; m <= dim; ++m)
    for (int k = 0; k <= m; ++k) out.push_back(thinness_extension(m, k, dim));
  for (int l = n + 1; l <= dim; ++l) {
    auto e = make(AnodyneClass::Triviality, "triviality[l=" + std::to_string(l) + "]", standard(Shape::Delta, l, 0, dim),
                  standard(Shape::DeltaT, l, 0, dim));
    e.l = l;
    out.push_back(std::move(e));
  }
  for (int l = -1; l + 4 <= dim; ++l) out.push_back(saturation_extension(l, dim));
  return out;
}

// ----------------------------------------------------------------- lift kernel

namespace {

// Search plans for one extension against one target, shared read-only by all
// threads.
class LiftKernel {
 public:
  LiftKernel(const AnodyneExtension& e, const TDeltaSet& x)
      : e_(e), x_(x), plan_a_(e.source), plan_b_(e.target), index_(x) {
    if (e.source.dim != x.dim || e.target.dim != x.dim)
      throw InputError("extension and target have different truncation");
    const auto& ga = plan_a_.generators();
    from_.assign(plan_b_.generators().size(), kNone);
    for (std::size_t k = 0; k < ga.size(); ++k) {
      const auto& g = ga[k];
      Id kb = g.token ? plan_b_.token_generator(g.level, e.inclusion.tokens[g.level][g.index])
                      : plan_b_.simplex_generator(g.level, e.inclusion.simplices[g.level][g.index]);
      if (kb == kNone)
        exact_check_ = true;
      else
        from_[kb] = static_cast<Id>(k);
    }
  }

  const SourcePlan& plan_a() const { return plan_a_; }
  const SourcePlan& plan_b() const { return plan_b_; }
  const TargetIndex& index() const { return index_; }

  // Lift for the map A → X with the given generator values.
  LiftResult lift(MapSearch& search, const Id* a_values, std::uint64_t budget, bool want_map) const {
    std::vector<Id> fixed(from_.size(), kNone);
    for (std::size_t k = 0; k < from_.size(); ++k)
      if (from_[k] != kNone) fixed[k] = a_values[from_[k]];
    search.set_fixed(std::move(fixed));

    std::optional<TDeltaMap> f_full;
    if (exact_check_)
      f_full = plan_a_.expand(x_, std::vector<Id>(a_values, a_values + plan_a_.generators().size()));
    LiftResult r;
    auto status = search.run(
        [&](const std::vector<Id>& values) {
          if (exact_check_) {
            TDeltaMap l = plan_b_.expand(x_, values);
            if (!(compose(l, e_.inclusion) == *f_full)) return true;
            r.lift = std::move(l);
          } else if (want_map) {
            r.lift = plan_b_.expand(x_, values);
          }
          return false;
        },
        budget);
    r.nodes = search.nodes();
    if (status == SearchStatus::Stopped)
      r.status = LiftStatus::Found;
    else if (status == SearchStatus::BudgetExceeded)
      r.status = LiftStatus::BudgetExceeded;
    else
      r.status = LiftStatus::NoLift;
    return r;
  }

 private:
  const AnodyneExtension& e_;
  const TDeltaSet& x_;
  SourcePlan plan_a_, plan_b_;
  TargetIndex index_;
  std::vector<Id> from_;  // B generator position → A generator position
  bool exact_check_ = false;
};

std::vector<Id> generator_values(const SourcePlan& plan, const TDeltaMap& f) {
  std::vector<Id> v;
  for (const auto& g : plan.generators())
    v.push_back(g.token ? f.tokens[g.level][g.index] : f.simplices[g.level][g.index]);
  return v;
}

enum : std::uint8_t { kLifted = 0, kNoLift = 1, kOutOfBudget = 2 };

ExtensionResult check_impl(const AnodyneExtension& e, const TDeltaSet& x, SearchBudget budget, int threads,
                           bool parallel) {
  LiftKernel kernel(e, x);
  ExtensionResult r;
  r.name = e.name;
  r.cls = e.cls;

  const std::size_t stride = kernel.plan_a().generators().size();
  if (stride > budget.max_generators || kernel.plan_b().generators().size() > budget.max_generators)
    throw BudgetExceeded("extension " + e.name + " has too many generators");
  std::vector<Id> all;
  {
    MapSearch enumerate(kernel.plan_a(), kernel.index());
    auto status = enumerate.run(
        [&](const std::vector<Id>& v) {
          all.insert(all.end(), v.begin(), v.end());
          return true;
        },
        budget.max_nodes);
    r.enumeration_exhausted = status != SearchStatus::BudgetExceeded;
  }
  const std::size_t count = stride == 0 ? 1 : all.size() / stride;
  // A source with no generators has exactly one map (the empty one).
  if (stride == 0) all.clear();
  std::vector<std::uint8_t> outcome(count, kLifted);

  if (parallel) {
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
    {
      MapSearch search(kernel.plan_b(), kernel.index());
#pragma omp for schedule(dynamic, 8)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
        auto res = kernel.lift(search, all.data() + i * stride, budget.max_nodes, false);
        outcome[i] = res.status == LiftStatus::Found ? kLifted
                     : res.status == LiftStatus::NoLift ? kNoLift
                                                        : kOutOfBudget;
      }
    }
  } else {
    MapSearch search(kernel.plan_b(), kernel.index());
    for (std::size_t i = 0; i < count; ++i) {
      auto res = kernel.lift(search, all.data() + i * stride, budget.max_nodes, false);
      outcome[i] = res.status == LiftStatus::Found ? kLifted : res.status == LiftStatus::NoLift ? kNoLift : kOutOfBudget;
    }
  }

  r.maps = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (outcome[i] == kNoLift) ++r.failures;
    if (outcome[i] == kOutOfBudget) ++r.budget_failures;
    if (outcome[i] != kLifted && !r.witness)
      r.witness = kernel.plan_a().expand(x, std::vector<Id>(all.begin() + i * stride, all.begin() + (i + 1) * stride));
  }
  return r;
}

FibrancyReport report_impl(const TDeltaSet& x, const std::vector<AnodyneExtension>& library, int n,
                           SearchBudget budget, int threads, bool parallel) {
  FibrancyReport rep;
  rep.n = n;
  rep.dim = x.dim;
  for (const auto& e : library) {
    rep.results.push_back(check_impl(e, x, budget, threads, parallel));
    const auto& r = rep.results.back();
    auto& t = rep.tallies[static_cast<int>(e.cls)];
    ++t.extensions;
    if (r.passed()) ++t.passed;
    t.maps += r.maps;
    t.failures += r.failures;
    t.budget_failures += r.budget_failures;
  }
  return rep;
}

}  // namespace

LiftResult find_lift(const AnodyneExtension& e, const TDeltaSet& x, const TDeltaMap& f, SearchBudget budget,
                     bool reverse) {
  LiftKernel kernel(e, x);
  MapSearch search(kernel.plan_b(), kernel.index());
  search.set_reverse(reverse);
  auto values = generator_values(kernel.plan_a(), f);
  if (!(kernel.plan_a().expand(x, values) == f)) throw InputError("the given map is not determined by its generators");
  return kernel.lift(search, values.data(), budget.max_nodes, true);
}

ExtensionResult check_extension(const AnodyneExtension& e, const TDeltaSet& x, SearchBudget budget, int threads) {
  return check_impl(e, x, budget, threads, true);
}

ExtensionResult check_extension_serial(const AnodyneExtension& e, const TDeltaSet& x, SearchBudget budget) {
  return check_impl(e, x, budget, 1, false);
}

bool FibrancyReport::passed() const {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

bool FibrancyReport::budget_exceeded() const {
  for (const auto& r : results)
    if (r.budget_failures > 0 || !r.enumeration_exhausted) return true;
  return false;
}

const ExtensionResult* FibrancyReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed()) return &r;
  return nullptr;
}

const ExtensionResult* FibrancyReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

FibrancyReport is_precomplicial(const TDeltaSet& x, int n, int dim, SearchBudget budget, int threads) {
  if (dim != x.dim) throw InputError("fibrancy dimension must equal the truncation of the input");
  return report_impl(x, anodyne_library(n, dim), n, budget, threads, true);
}

FibrancyReport is_precomplicial(const TDeltaSet& x, const std::vector<AnodyneExtension>& library, int n,
                                SearchBudget budget, int threads) {
  return report_impl(x, library, n, budget, threads, true);
}

FibrancyReport is_precomplicial_serial(const TDeltaSet& x, const std::vector<AnodyneExtension>& library, int n,
                                       SearchBudget budget) {
  return report_impl(x, library, n, budget, 1, false);
}

}  // namespace complicial
