#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ltlnorm/formula.hpp"
#include "ltlnorm/rewrite.hpp"

namespace ltlnorm {

struct BenchRecord {
  int id = 0;
  std::uint64_t input_nodes = 0, input_dag = 0;
  std::uint64_t output_nodes = 0, output_dag = 0;
  double tree_blowup = 0, dag_blowup = 0;
  std::uint64_t rule_applications = 0;
  double wall_ms = 0;                  // around normalize only
  std::array<double, 3> stage_ms{};
  bool timed_out = false;
};

// Aggregates over the non-timeout records; `total_ms` sums every attempt.
struct BenchSummary {
  std::size_t count = 0;
  std::size_t timeouts = 0;
  double mean_tree_blowup = 0;
  double worst_tree_blowup = 0;
  double worst_dag_blowup = 0;
  double total_ms = 0;
};

struct BenchConfig {
  NormalizeOptions opts;
  // Oracle bounds (prefix, loop): every output is checked against its input;
  // exhaustive when the word space is at most `verify_cutoff`, otherwise a
  // seeded uniform sample of `verify_samples` words. A counterexample aborts
  // the run with InvariantError carrying the witness.
  std::optional<std::pair<unsigned, unsigned>> verify;
  std::uint64_t verify_samples = 512;
  std::uint64_t verify_cutoff = 20'000;
  double timeout_ms = 60'000;  // per formula, cooperative
};

struct Corpus {
  struct Entry {
    int id;  // 1-based line number
    Formula formula;
  };
  std::vector<Entry> entries;
  std::vector<std::pair<int, std::string>> errors;  // skip mode only
};

// One formula per line; blank lines and lines starting with '#' are skipped.
// fail_fast throws CorpusError at the first bad line; otherwise bad lines
// land in Corpus::errors.
Corpus load_corpus(const std::string& path, bool fail_fast = true);
Corpus load_corpus_text(std::string_view text, bool fail_fast = true);

struct BenchResult {
  std::vector<BenchRecord> records;
  BenchSummary summary;
};

BenchResult run_benchmark(const Corpus& corpus, const BenchConfig& cfg = {});

// The record/summary text format. Field names are fixed:
//   id in_nodes in_dag out_nodes out_dag tree_blowup dag_blowup rules ms
std::string format_record(const BenchRecord& r);
std::string format_summary(const BenchSummary& s);

}  // namespace ltlnorm
