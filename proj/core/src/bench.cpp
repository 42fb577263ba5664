#include "ltlnorm/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ltlnorm/errors.hpp"
#include "ltlnorm/measures.hpp"
#include "ltlnorm/oracle.hpp"
#include "ltlnorm/parser.hpp"
#include "ltlnorm/printer.hpp"

namespace ltlnorm {

namespace {

bool blank_or_comment(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Corpus load_corpus_text(std::string_view text, bool fail_fast) {
  Corpus corpus;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() && pos > text.size()) break;  // trailing newline
    if (blank_or_comment(line)) continue;
    try {
      corpus.entries.push_back({line_no, parse(line)});
    } catch (const ParseError& e) {
      if (fail_fast)
        throw CorpusError("line " + std::to_string(line_no) + ": " + e.what(),
                          line_no);
      corpus.errors.emplace_back(line_no, e.what());
    }
  }
  return corpus;
}

Corpus load_corpus(const std::string& path, bool fail_fast) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open corpus file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_corpus_text(buf.str(), fail_fast);
}

namespace {

double ms(std::chrono::nanoseconds d) {
  return std::chrono::duration<double, std::milli>(d).count();
}

void verify_output(const Corpus::Entry& e, const Formula& out,
                   const BenchConfig& cfg) {
  auto [pre, loop] = *cfg.verify;
  std::vector<std::string> atoms = collect_atoms(e.formula);
  auto count = lasso_count(static_cast<unsigned>(atoms.size()), pre, loop);
  EquivMode mode =
      count && *count <= cfg.verify_cutoff
          ? EquivMode::exhaustive()
          : EquivMode::sampled(cfg.verify_samples,
                               0x9e3779b9u ^ static_cast<std::uint64_t>(e.id));
  EquivVerdict v = bounded_equiv(e.formula, out, pre, loop, mode);
  if (!v.equivalent)
    throw InvariantError("verification failed for formula " +
                         std::to_string(e.id) + ": input " + render(e.formula) +
                         " and output " + render(out) +
                         " differ on witness " + v.witness->to_string());
}

}  // namespace

BenchResult run_benchmark(const Corpus& corpus, const BenchConfig& cfg) {
  if (corpus.entries.empty()) throw Error("benchmark corpus is empty");
  BenchResult result;
  double blowup_sum = 0;

  for (const auto& entry : corpus.entries) {
    BenchRecord rec;
    rec.id = entry.id;
    rec.input_nodes = entry.formula.node_count();
    rec.input_dag = count_dag_nodes(entry.formula);

    using clock = std::chrono::steady_clock;
    auto deadline =
        clock::now() + std::chrono::duration_cast<clock::duration>(
                           std::chrono::duration<double, std::milli>(
                               cfg.timeout_ms));
    auto start = clock::now();
    try {
      NormalizeResult nr = normalize(entry.formula, cfg.opts, deadline);
      rec.wall_ms = ms(clock::now() - start);
      rec.output_nodes = nr.formula.node_count();
      rec.output_dag = count_dag_nodes(nr.formula);
      rec.tree_blowup = double(rec.output_nodes) / double(rec.input_nodes);
      rec.dag_blowup = double(rec.output_dag) / double(rec.input_dag);
      rec.rule_applications = nr.trace.steps.size();
      for (int s = 0; s < 3; ++s) rec.stage_ms[s] = ms(nr.stage_times[s]);
      if (cfg.verify) verify_output(entry, nr.formula, cfg);
    } catch (const TimeoutError&) {
      rec.wall_ms = ms(clock::now() - start);
      rec.timed_out = true;
    }
    result.summary.total_ms += rec.wall_ms;
    if (rec.timed_out) {
      ++result.summary.timeouts;
    } else {
      ++result.summary.count;
      blowup_sum += rec.tree_blowup;
      result.summary.worst_tree_blowup =
          std::max(result.summary.worst_tree_blowup, rec.tree_blowup);
      result.summary.worst_dag_blowup =
          std::max(result.summary.worst_dag_blowup, rec.dag_blowup);
    }
    result.records.push_back(std::move(rec));
  }
  if (result.summary.count > 0)
    result.summary.mean_tree_blowup =
        blowup_sum / double(result.summary.count);
  return result;
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string format_record(const BenchRecord& r) {
  std::string s = "id:" + std::to_string(r.id);
  if (r.timed_out) return s + " timeout:1";
  s += " in_nodes:" + std::to_string(r.input_nodes);
  s += " in_dag:" + std::to_string(r.input_dag);
  s += " out_nodes:" + std::to_string(r.output_nodes);
  s += " out_dag:" + std::to_string(r.output_dag);
  s += " tree_blowup:" + fmt_double(r.tree_blowup);
  s += " dag_blowup:" + fmt_double(r.dag_blowup);
  s += " rules:" + std::to_string(r.rule_applications);
  s += " ms:" + fmt_double(r.wall_ms);
  return s;
}

std::string format_summary(const BenchSummary& s) {
  std::string out = "summary count:" + std::to_string(s.count);
  out += " timeouts:" + std::to_string(s.timeouts);
  out += " mean_tree_blowup:" + fmt_double(s.mean_tree_blowup);
  out += " worst_tree_blowup:" + fmt_double(s.worst_tree_blowup);
  out += " worst_dag_blowup:" + fmt_double(s.worst_dag_blowup);
  out += " total_ms:" + fmt_double(s.total_ms);
  return out;
}

}  // namespace ltlnorm
