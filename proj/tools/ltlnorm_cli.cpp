// Command-line front end: normalize / classify / check / equiv / gen / bench.
//
// Exit codes: 0 success (or predicate true), 1 predicate false (check
// violation, equiv counterexample), 2 usage or parse error, 3 internal
// invariant violation.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltlnorm/bench.hpp"
#include "ltlnorm/errors.hpp"
#include "ltlnorm/generators.hpp"
#include "ltlnorm/hierarchy.hpp"
#include "ltlnorm/measures.hpp"
#include "ltlnorm/normal_form.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"
#include "ltlnorm/rewrite.hpp"

namespace {

using namespace ltlnorm;

constexpr int kOk = 0;
constexpr int kPredicateFalse = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

bool g_quiet = false;

void print_parse_error(const std::string& text, const ParseError& e) {
  std::cerr << "error: " << e.what() << "\n";
  std::cerr << "  " << text << "\n";
  std::cerr << "  " << std::string(e.position, ' ') << "^\n";
}

// One formula from the positional argument, or several from --file.
std::vector<std::pair<int, Formula>> gather_inputs(const std::string& positional,
                                                   const std::string& file) {
  std::vector<std::pair<int, Formula>> out;
  if (!positional.empty() && !file.empty())
    throw Error("give either a formula or --file, not both");
  if (positional.empty() && file.empty())
    throw Error("expected a formula argument or --file");
  if (!positional.empty()) {
    out.emplace_back(0, parse(positional));
  } else {
    Corpus c = load_corpus(file, /*fail_fast=*/true);
    for (auto& e : c.entries) out.emplace_back(e.id, e.formula);
  }
  return out;
}

struct FamilyRange {
  std::string kind;
  unsigned from = 0, to = 0;
};

// "wu-star:3", "wu-nested:0..7" or "random"
FamilyRange parse_family(const std::string& s) {
  FamilyRange fr;
  auto colon = s.find(':');
  fr.kind = s.substr(0, colon);
  if (fr.kind == "random") {
    if (colon != std::string::npos)
      throw Error("random takes --seed/--size/--atoms/--count, not a suffix");
    return fr;
  }
  if (fr.kind != "wu-star" && fr.kind != "wu-nested")
    throw Error("unknown family '" + fr.kind +
                "' (expected wu-star:N, wu-nested:N or random)");
  if (colon == std::string::npos)
    throw Error("family '" + fr.kind + "' needs :N or :A..B");
  std::string range = s.substr(colon + 1);
  auto dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      fr.from = fr.to = static_cast<unsigned>(std::stoul(range));
    } else {
      fr.from = static_cast<unsigned>(std::stoul(range.substr(0, dots)));
      fr.to = static_cast<unsigned>(std::stoul(range.substr(dots + 2)));
    }
  } catch (const std::exception&) {
    throw Error("bad family index in '" + s + "'");
  }
  if (fr.to < fr.from) throw Error("empty family range in '" + s + "'");
  return fr;
}

struct GenArgs {
  std::string family;
  std::uint64_t seed = 1;
  std::uint64_t size = 25;
  unsigned atoms = 4;
  unsigned count = 1;
};

std::vector<std::pair<int, Formula>> make_family(const GenArgs& a) {
  FamilyRange fr = parse_family(a.family);
  std::vector<std::pair<int, Formula>> out;
  int id = 1;
  if (fr.kind == "random") {
    for (unsigned i = 0; i < a.count; ++i) {
      RandomSpec spec;
      spec.seed = a.seed + i;
      spec.target_size = a.size;
      spec.atom_count = a.atoms;
      out.emplace_back(id++, random_formula(spec));
    }
  } else {
    for (unsigned n = fr.from; n <= fr.to; ++n) {
      out.emplace_back(id++, fr.kind == "wu-star" ? family_wu_star(n)
                                                  : family_wu_nested(n));
    }
  }
  return out;
}

int cmd_normalize(const std::string& arg, const std::string& file,
                  const NormalizeOptions& opts, bool trace) {
  auto inputs = gather_inputs(arg, file);
  for (auto& [id, f] : inputs) {
    NormalizeResult r = normalize(f, opts);
    if (trace) {
      for (const auto& st : r.trace.steps) {
        std::cout << "# stage:" << st.stage << " rule:" << rule_name(st.rule)
                  << " nodes:" << st.result_nodes
                  << " redex:" << st.redex_text() << "\n";
      }
    }
    std::cout << render(r.formula) << "\n";
  }
  return kOk;
}

int cmd_classify(const std::string& arg, const std::string& file) {
  auto inputs = gather_inputs(arg, file);
  for (auto& [id, f] : inputs) std::cout << to_string(classify(f)) << "\n";
  return kOk;
}

int cmd_check(const std::string& arg, const std::string& file) {
  auto inputs = gather_inputs(arg, file);
  int rc = kOk;
  for (auto& [id, f] : inputs) {
    NormalFormVerdict v = is_normal_form(f);
    if (v.pass) {
      std::cout << "pass\n";
    } else {
      std::cout << "condition " << v.condition << " violated at "
                << (v.path.empty() ? "." : v.path) << "\n";
      rc = kPredicateFalse;
    }
  }
  return rc;
}

int cmd_equiv(const std::string& f1, const std::string& f2, unsigned prefix,
              unsigned loop, std::uint64_t samples, std::uint64_t seed) {
  Formula a = parse(f1);
  Formula b = parse(f2);
  EquivMode mode = samples > 0 ? EquivMode::sampled(samples, seed)
                               : EquivMode::exhaustive();
  EquivVerdict v = bounded_equiv(a, b, prefix, loop, mode);
  if (v.equivalent) {
    if (!g_quiet)
      std::cout << "equivalent up to bound (prefix<=" << prefix << ", loop<="
                << loop << ", " << v.words_checked << " words)\n";
    return kOk;
  }
  std::cout << "counterexample: " << v.witness->to_string() << "\n";
  return kPredicateFalse;
}

int cmd_gen(const GenArgs& a) {
  for (auto& [id, f] : make_family(a)) std::cout << render(f) << "\n";
  return kOk;
}

int cmd_bench(const GenArgs& a, const std::string& file,
              const NormalizeOptions& opts, const std::string& verify,
              double timeout_ms) {
  Corpus corpus;
  if (!file.empty()) {
    corpus = load_corpus(file, /*fail_fast=*/true);
  } else if (!a.family.empty()) {
    for (auto& [id, f] : make_family(a)) corpus.entries.push_back({id, f});
  } else {
    throw Error("bench needs --family or --file");
  }
  BenchConfig cfg;
  cfg.opts = opts;
  cfg.timeout_ms = timeout_ms;
  if (!verify.empty()) {
    auto comma = verify.find(',');
    if (comma == std::string::npos)
      throw Error("--verify expects PREFIX,LOOP");
    cfg.verify = {static_cast<unsigned>(std::stoul(verify.substr(0, comma))),
                  static_cast<unsigned>(std::stoul(verify.substr(comma + 1)))};
  }
  BenchResult r = run_benchmark(corpus, cfg);
  if (!g_quiet)
    for (const auto& rec : r.records) std::cout << format_record(rec) << "\n";
  std::cout << format_summary(r.summary) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting-based LTL normalization into the Delta-2 form"};
  app.require_subcommand(1);

  std::string formula_arg, file_arg;
  bool trace = false;
  NormalizeOptions opts;
  bool no_simplify = false, broad = false, dual = false;

  auto add_common = [&](CLI::App* sub, bool with_formula = true) {
    if (with_formula)
      sub->add_option("formula", formula_arg, "formula (input grammar)");
    sub->add_option("--file", file_arg, "read formulas from a file, one per line");
    sub->add_flag("--quiet", g_quiet, "suppress informational output");
  };

  CLI::App* norm = app.add_subcommand("normalize", "rewrite into normal form");
  add_common(norm);
  norm->add_flag("--trace", trace, "print one line per rewrite step");
  norm->add_option("--stage", opts.stage_limit,
                   "stop after stage 1, 2 or 3 (default 3)")
      ->check(CLI::Range(1, 3));
  norm->add_flag("--dual", dual, "produce the dual normal form");
  norm->add_flag("--no-simplify", no_simplify, "disable eager simplification");
  norm->add_flag("--broad", broad, "broad occurrence replacement");

  CLI::App* cls = app.add_subcommand("classify", "least hierarchy class");
  add_common(cls);

  CLI::App* chk = app.add_subcommand("check", "normal-form check");
  add_common(chk);

  CLI::App* eqv = app.add_subcommand("equiv", "bounded equivalence check");
  std::string eq_f1, eq_f2;
  unsigned eq_prefix = 3, eq_loop = 3;
  std::uint64_t eq_samples = 0, eq_seed = 1;
  eqv->add_option("formula1", eq_f1)->required();
  eqv->add_option("formula2", eq_f2)->required();
  eqv->add_option("--prefix", eq_prefix, "max prefix length (default 3)");
  eqv->add_option("--loop", eq_loop, "max loop length (default 3)")
      ->check(CLI::PositiveNumber);
  eqv->add_option("--samples", eq_samples,
                  "sample this many words instead of exhausting the space");
  eqv->add_option("--seed", eq_seed, "sampling seed");
  eqv->add_flag("--quiet", g_quiet, "suppress informational output");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "emit benchmark formulas");
  gen->add_option("--family", gen_args.family,
                  "wu-star:N | wu-nested:N | random (ranges: wu-star:2..200)")
      ->required();
  gen->add_option("--seed", gen_args.seed, "random family: first seed");
  gen->add_option("--size", gen_args.size, "random family: target node count");
  gen->add_option("--atoms", gen_args.atoms, "random family: atom count");
  gen->add_option("--count", gen_args.count, "random family: how many");
  gen->add_flag("--quiet", g_quiet, "suppress informational output");

  CLI::App* bch = app.add_subcommand("bench", "normalize a corpus, report stats");
  std::string bench_verify;
  double bench_timeout = 60'000;
  bch->add_option("--family", gen_args.family,
                  "wu-star:N | wu-nested:N | random (ranges allowed)");
  bch->add_option("--file", file_arg, "corpus file, one formula per line");
  bch->add_option("--seed", gen_args.seed, "random family: first seed");
  bch->add_option("--size", gen_args.size, "random family: target node count");
  bch->add_option("--atoms", gen_args.atoms, "random family: atom count");
  bch->add_option("--count", gen_args.count, "random family: how many");
  bch->add_option("--verify", bench_verify,
                  "oracle-check each output at bounds PREFIX,LOOP");
  bch->add_option("--timeout", bench_timeout, "per-formula timeout in ms");
  bch->add_flag("--no-simplify", no_simplify, "disable eager simplification");
  bch->add_flag("--broad", broad, "broad occurrence replacement");
  bch->add_flag("--dual", dual, "produce the dual normal form");
  bch->add_flag("--quiet", g_quiet, "suppress per-record output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  opts.simplify = !no_simplify;
  opts.broad_replacement = broad;
  opts.dual = dual;

  std::string parsed_text = formula_arg;
  try {
    if (norm->parsed()) return cmd_normalize(formula_arg, file_arg, opts, trace);
    if (cls->parsed()) return cmd_classify(formula_arg, file_arg);
    if (chk->parsed()) return cmd_check(formula_arg, file_arg);
    if (eqv->parsed()) {
      parsed_text = eq_f1;
      Formula a = parse(eq_f1);  // surface parse errors with the right text
      parsed_text = eq_f2;
      (void)parse(eq_f2);
      return cmd_equiv(eq_f1, eq_f2, eq_prefix, eq_loop, eq_samples, eq_seed);
    }
    if (gen->parsed()) return cmd_gen(gen_args);
    if (bch->parsed())
      return cmd_bench(gen_args, file_arg, opts, bench_verify, bench_timeout);
  } catch (const ParseError& e) {
    print_parse_error(parsed_text, e);
    return kUsage;
  } catch (const CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
