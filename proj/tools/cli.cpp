#include "cli.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <ostream>

#include "complicial/catalog.hpp"
#include "complicial/categorify.hpp"
#include "complicial/factorization.hpp"
#include "complicial/io.hpp"
#include "complicial/lifting.hpp"
#include "complicial/nerve.hpp"

namespace complicial {

namespace {

struct Source {
  std::string input;
  std::string example;
};

void add_category_source(CLI::App* cmd, Source& s, const char* flag = "--input") {
  auto* in = cmd->add_option(flag, s.input, "2-category JSON file");
  auto* ex = cmd->add_option("--example", s.example, "bundled 2-category name (see `examples --list`)");
  in->excludes(ex);
}

FiniteTwoCategory load_category(const Source& s) {
  if (!s.example.empty()) return example(s.example);
  if (s.input.empty()) throw InputError("either an input file or --example is required");
  return category_from_json(read_json_file(s.input));
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty())
    out << j.dump(2) << '\n';
  else
    write_json_file(path, j);
}

std::string file_stem(std::size_t index, const std::string& name) {
  std::ostringstream s;
  s << std::setw(2) << std::setfill('0') << index << '_';
  for (char c : name) s << (std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nerves, fibrancy checks and categorification for finite strict 2-categories", "complicial"};
  app.require_subcommand(1);

  Source src;
  std::string input, output, marking = "natural", report_path, trace_dir, emit_name;
  int dim = 5, n = 2, threads = 0;
  bool list = false;

  auto* nerve_cmd = app.add_subcommand("nerve", "Write the marked Duskin nerve of a 2-category");
  add_category_source(nerve_cmd, src);
  nerve_cmd->add_option("--marking", marking, "street, rs or natural")->check(CLI::IsMember({"street", "rs", "natural"}));
  nerve_cmd->add_option("--dim", dim, "truncation dimension")->check(CLI::Range(0, 6));
  nerve_cmd->add_option("--out", output, "output file (stdout when omitted)");

  auto* fib_cmd = app.add_subcommand("check-fibrant", "Check the lifting property against every elementary extension");
  fib_cmd->add_option("--input", input, "tΔ-set JSON file")->required();
  fib_cmd->add_option("--n", n, "triviality index")->check(CLI::NonNegativeNumber);
  auto* fib_dim = fib_cmd->add_option("--dim", dim, "truncation dimension (defaults to that of the input)")->check(CLI::Range(1, 6));
  fib_cmd->add_option("--report", report_path, "JSON report file");
  fib_cmd->add_option("--threads", threads, "worker threads (0: OpenMP default)")->check(CLI::NonNegativeNumber);

  auto* fac_cmd = app.add_subcommand("factorize", "Replay the factorization of the RS nerve into the natural nerve");
  add_category_source(fac_cmd, src);
  fac_cmd->add_option("--dim", dim, "truncation dimension")->check(CLI::Range(4, 6));
  fac_cmd->add_option("--trace", trace_dir, "directory receiving each stage and a summary");

  auto* cat_cmd = app.add_subcommand("categorify", "Write the 2-polygraph presenting the categorification");
  cat_cmd->add_option("--input", input, "tΔ-set JSON file")->required();
  cat_cmd->add_option("--out", output, "output file (stdout when omitted)");

  auto* counit_cmd = app.add_subcommand("counit-check", "Verify the counit assignment and its section");
  add_category_source(counit_cmd, src, "--cat");
  counit_cmd->add_option("--dim", dim, "nerve dimension")->check(CLI::Range(3, 6));
  counit_cmd->add_option("--report", report_path, "JSON report file");

  auto* ex_cmd = app.add_subcommand("examples", "List or write the bundled 2-categories");
  auto* list_opt = ex_cmd->add_flag("--list", list, "print the catalog");
  auto* emit_opt = ex_cmd->add_option("--emit", emit_name, "write one example as JSON");
  ex_cmd->add_option("--out", output, "output file for --emit (stdout when omitted)");
  list_opt->excludes(emit_opt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    const SearchBudget budget = budget_from_environment();

    if (nerve_cmd->parsed()) {
      const auto c = load_category(src);
      const auto x = nerve(c, dim, parse_marking(marking));
      emit(to_json(x), output, out);
      if (!output.empty()) {
        out << marking << " nerve, dim " << dim << ":";
        for (int m = 0; m <= dim; ++m) out << ' ' << x.size(m) << '/' << x.token_count(m);
        out << " (simplices/tokens per level)\n";
      }
      return kExitOk;
    }

    if (fib_cmd->parsed()) {
      const auto x = tdelta_from_json(read_json_file(input));
      if (fib_dim->count() == 0) dim = x.dim;
      const auto rep = is_precomplicial(x, n, dim, budget, threads);
      if (!report_path.empty()) write_json_file(report_path, to_json(rep, x));
      for (AnodyneClass c : kAnodyneClasses) {
        const auto& t = rep.tallies[static_cast<int>(c)];
        out << std::left << std::setw(11) << class_name(c) << t.passed << '/' << t.extensions << " extensions, " << t.maps
            << " maps, " << t.failures << " without lift\n";
      }
      if (const auto* f = rep.first_failure()) out << "first failure: " << f->name << '\n';
      out << (rep.passed() ? "fibrant\n" : "not fibrant\n");
      return rep.budget_exceeded() ? kExitBudget : kExitOk;
    }

    if (fac_cmd->parsed()) {
      const auto c = load_category(src);
      std::vector<Stage> stages;
      auto rep = verify_factorization(c, dim, trace_dir.empty() ? nullptr : &stages);
      rep.category = src.example.empty() ? std::filesystem::path(src.input).stem().string() : src.example;
      if (!trace_dir.empty()) {
        for (std::size_t i = 0; i < stages.size(); ++i)
          write_json_file(std::filesystem::path(trace_dir) / (file_stem(i, stages[i].name) + ".json"),
                          Json{{"name", stages[i].name},
                               {"family", stages[i].family},
                               {"set", to_json(stages[i].set)},
                               {"from_previous", to_json(stages[i].from_previous)}});
        write_json_file(std::filesystem::path(trace_dir) / "summary.json", to_json(rep));
      }
      for (const auto& s : rep.stages)
        out << std::left << std::setw(4) << s.name << (s.ok() ? "ok  " : "FAIL") << " family " << s.family << ", tokens "
            << s.tokens << '\n';
      for (const auto& i : rep.issues) out << "issue: " << i << '\n';
      out << (rep.passed() ? "factorization verified\n" : "factorization FAILED\n");
      return rep.passed() ? kExitOk : kExitVerification;
    }

    if (cat_cmd->parsed()) {
      const auto x = tdelta_from_json(read_json_file(input));
      const auto p = categorify(x);
      emit(to_json(p), output, out);
      if (!output.empty())
        out << p.objects.size() << " objects, " << p.one_generators.size() << " 1-generators, "
            << p.two_generators.size() << " 2-generators, " << p.relations.size() << " relations\n";
      return kExitOk;
    }

    if (counit_cmd->parsed()) {
      const auto c = load_category(src);
      CounitContext ctx(c, dim);
      const auto rep = ctx.verify();
      Json sections = Json::array();
      bool sections_ok = true;
      for (Id x = 0; x < static_cast<Id>(c.object_count()); ++x)
        for (Id y = 0; y < static_cast<Id>(c.object_count()); ++y) {
          const auto s = ctx.section(x, y);
          sections_ok = sections_ok && s.ok();
          sections.push_back(to_json(s));
        }
      if (!report_path.empty())
        write_json_file(report_path, Json{{"counit", to_json(rep)}, {"sections", sections}});
      out << rep.generators_checked << " generators, " << rep.relations_checked << " relations, "
          << rep.derived_checked << " derived composites checked; " << rep.failures.size() << " failures\n";
      for (const auto& f : rep.failures) out << "  " << f << '\n';
      out << "section " << (sections_ok ? "holds" : "FAILS") << " on every hom-category\n";
      return rep.ok() && sections_ok ? kExitOk : kExitVerification;
    }

    if (ex_cmd->parsed()) {
      if (!emit_name.empty()) {
        emit(to_json(example(emit_name)), output, out);
        return kExitOk;
      }
      for (const auto& e : standard_examples())
        out << std::left << std::setw(16) << e.name << e.description << '\n';
      return kExitOk;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return kExitBudget;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitInput;
}

}  // namespace complicial
