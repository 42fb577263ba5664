#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ltlnorm/formula.hpp"

namespace ltlnorm {

// An ultimately periodic word prefix·loop^w over the alphabet 2^Ap. Letters
// are bitmasks over `atoms` (bit i set iff atoms[i] holds). The loop is
// nonempty. At most 30 atoms.
struct LassoWord {
  std::vector<std::string> atoms;
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> loop;

  std::string to_string() const;  // e.g. "{a}({}{a,b})^w"
};

// w |= f under the usual semantics, with GF/FG read as G F / F G. Atoms of f
// missing from w.atoms evaluate as false. Computed bottom-up on the
// |prefix|+|loop| suffix classes; U/W/R/M are solved on the loop by two
// backward sweeps (the first settles loop-local satisfaction, the second
// resolves obligations crossing the loop seam).
bool evaluate(const LassoWord& w, const Formula& f);

// Reusable evaluator over one or more root formulas sharing one table.
// Resolves atoms against a fixed atom list once and reuses buffers across
// words (words passed to run() must carry that same atom list).
class Evaluator {
 public:
  Evaluator(const Formula& f, const std::vector<std::string>& atoms);
  Evaluator(const std::vector<Formula>& roots,
            const std::vector<std::string>& atoms);

  // Computes the satisfaction table for w; then root_value / value_at read it.
  void run(const LassoWord& w);
  bool root_value(std::size_t root = 0) const;
  // Value of a root at an arbitrary suffix position (positions beyond the
  // prefix wrap into the loop).
  bool value_at(std::size_t root, std::size_t position) const;

  bool eval(const LassoWord& w) {
    run(w);
    return root_value(0);
  }

 private:
  struct Entry {
    Kind kind;
    std::int32_t a = -1, b = -1;  // operand slots in the postorder
    std::int32_t bit = -1;        // atom bit, -1 if outside the alphabet
  };
  std::vector<Entry> post_;           // postorder over the structure DAG
  std::vector<std::int32_t> roots_;   // indices into post_
  std::vector<std::uint8_t> rows_;
  std::size_t width_ = 0, plen_ = 0, llen_ = 0;
};

struct EquivMode {
  enum class Kind { Exhaustive, Sampled } kind = Kind::Exhaustive;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static EquivMode exhaustive() { return {}; }
  static EquivMode sampled(std::uint64_t n, std::uint64_t seed) {
    return {Kind::Sampled, n, seed};
  }
};

// Verdict of a bounded equivalence check. `equivalent` means no
// counterexample up to the bound - evidence, not a proof. A witness is
// present exactly when a counterexample was found, and distinguishes the two
// formulas under evaluate().
struct EquivVerdict {
  bool equivalent = true;
  std::optional<LassoWord> witness;
  std::uint64_t words_checked = 0;
};

inline constexpr std::uint64_t kDefaultEquivCeiling = 50'000'000;

// Compares f and g on lasso words over atoms(f) u atoms(g) with
// |prefix| <= max_prefix and 1 <= |loop| <= max_loop. Exhaustive mode visits
// the whole space in enumeration order and reports the first distinguishing
// word; it throws BoundError if the space exceeds `ceiling`. Sampled mode
// draws `samples` words uniformly from the same space.
EquivVerdict bounded_equiv(const Formula& f, const Formula& g,
                           unsigned max_prefix, unsigned max_loop,
                           EquivMode mode = EquivMode::exhaustive(),
                           std::uint64_t ceiling = kDefaultEquivCeiling);

// Number of lasso representations over `n_atoms` atoms within the bounds:
// sum over p <= P, 1 <= l <= L of (2^n_atoms)^(p+l). nullopt on overflow.
std::optional<std::uint64_t> lasso_count(unsigned n_atoms, unsigned max_prefix,
                                         unsigned max_loop);

// Deterministic stream of all lasso words within the bounds: shortest total
// length first, then shorter prefix, then lexicographic by letters.
class LassoEnumerator {
 public:
  LassoEnumerator(std::vector<std::string> atoms, unsigned max_prefix,
                  unsigned max_loop);
  std::optional<LassoWord> next();

 private:
  bool advance_shape();
  std::vector<std::string> atoms_;
  unsigned max_prefix_, max_loop_;
  unsigned total_len_ = 0, prefix_len_ = 0;
  bool done_ = false, shape_fresh_ = false;
  std::vector<std::uint32_t> letters_;
  std::uint64_t alphabet_ = 1;
};

// Uniform draws from the same bounded space, deterministic for a fixed seed.
class LassoSampler {
 public:
  LassoSampler(std::vector<std::string> atoms, unsigned max_prefix,
               unsigned max_loop, std::uint64_t seed);
  LassoWord next();

 private:
  std::vector<std::string> atoms_;
  unsigned max_prefix_, max_loop_;
  std::mt19937_64 rng_;
  std::vector<long double> shape_weight_;  // indexed p * max_loop + (l-1)
  long double total_weight_ = 0;
};

}  // namespace ltlnorm
