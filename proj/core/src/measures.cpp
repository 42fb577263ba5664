#include "ltlnorm/measures.hpp"

#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ltlnorm {

namespace {

// Memoized traversal over the shared structure. Keys are (node, flag bits) so
// a node shared under different ancestor contexts is revisited at most once
// per context class.
struct CountKey {
  const void* node;
  std::uint8_t flags;
  bool operator<(const CountKey& o) const {
    return node != o.node ? node < o.node : flags < o.flags;
  }
};

std::uint64_t ubw_rec(const Formula& f, bool under_wr,
                      std::map<CountKey, std::uint64_t>& memo) {
  if (is_limit(f.kind())) return 0;
  CountKey key{f.id(), static_cast<std::uint8_t>(under_wr)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t n = 0;
  if (under_wr && is_u_or_m(f.kind())) n += 1;
  bool wr = under_wr || is_w_or_r(f.kind());
  if (is_unary(f.kind())) {
    n += ubw_rec(f.arg(), wr, memo);
  } else if (is_binary(f.kind())) {
    n += ubw_rec(f.left(), wr, memo);
    n += ubw_rec(f.right(), wr, memo);
  }
  memo.emplace(key, n);
  return n;
}

struct FormulaStructHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};
struct FormulaStructEq {
  bool operator()(const Formula& a, const Formula& b) const { return a == b; }
};
using FormulaSet =
    std::unordered_set<Formula, FormulaStructHash, FormulaStructEq>;

void gfba_rec(const Formula& f, bool under_temporal,
              std::set<CountKey>& visited, FormulaSet& found) {
  if (!visited.insert({f.id(), static_cast<std::uint8_t>(under_temporal)})
           .second)
    return;
  if (under_temporal && is_limit(f.kind())) found.insert(f);
  bool t = under_temporal || is_temporal(f.kind());
  if (is_unary(f.kind())) {
    gfba_rec(f.arg(), t, visited, found);
  } else if (is_binary(f.kind())) {
    gfba_rec(f.left(), t, visited, found);
    gfba_rec(f.right(), t, visited, found);
  }
}

void dag_rec(const Formula& f, std::set<const void*>& visited,
             FormulaSet& distinct) {
  if (!visited.insert(f.id()).second) return;
  distinct.insert(f);
  if (is_unary(f.kind())) {
    dag_rec(f.arg(), visited, distinct);
  } else if (is_binary(f.kind())) {
    dag_rec(f.left(), visited, distinct);
    dag_rec(f.right(), visited, distinct);
  }
}

void limit_sizes_rec(const Formula& f, std::set<const void*>& visited,
                     std::uint64_t& best) {
  if (!f.has_limit()) return;
  if (!visited.insert(f.id()).second) return;
  if (is_limit(f.kind()) && f.node_count() > best) best = f.node_count();
  if (is_unary(f.kind())) {
    limit_sizes_rec(f.arg(), visited, best);
  } else if (is_binary(f.kind())) {
    limit_sizes_rec(f.left(), visited, best);
    limit_sizes_rec(f.right(), visited, best);
  }
}

// inside == true counts obstacles for the GF flavor (W/R bad, U/M bad when
// under W/R); flip == true swaps the roles for FG.
std::uint64_t obstacles_rec(const Formula& f, bool under_bad, bool flip,
                            std::map<CountKey, std::uint64_t>& memo) {
  CountKey key{f.id(), static_cast<std::uint8_t>(under_bad)};
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool bad_here = flip ? is_u_or_m(f.kind()) : is_w_or_r(f.kind());
  bool weak_here = flip ? is_w_or_r(f.kind()) : is_u_or_m(f.kind());
  std::uint64_t n = 0;
  if (bad_here) n += 1;
  if (weak_here && under_bad) n += 1;
  bool b = under_bad || bad_here;
  if (is_unary(f.kind())) {
    n += obstacles_rec(f.arg(), b, flip, memo);
  } else if (is_binary(f.kind())) {
    n += obstacles_rec(f.left(), b, flip, memo);
    n += obstacles_rec(f.right(), b, flip, memo);
  }
  memo.emplace(key, n);
  return n;
}

}  // namespace

std::uint64_t count_ubw(const Formula& f) {
  if (!f.has_stage1_redex()) return 0;
  std::map<CountKey, std::uint64_t> memo;
  return ubw_rec(f, false, memo);
}

std::uint64_t count_gfba(const Formula& f) {
  if (!f.has_limit_under_temporal()) return 0;
  std::set<CountKey> visited;
  FormulaSet found;
  gfba_rec(f, false, visited, found);
  return found.size();
}

std::uint64_t count_dag_nodes(const Formula& f) {
  std::set<const void*> visited;
  FormulaSet distinct;
  dag_rec(f, visited, distinct);
  return distinct.size();
}

Measures measures(const Formula& f) {
  Measures m;
  m.nodes = f.node_count();
  m.dag_nodes = count_dag_nodes(f);
  m.ubw = count_ubw(f);
  m.gfba = count_gfba(f);
  return m;
}

std::uint64_t rank(const Formula& f) { return f.node_count() + count_ubw(f); }

std::uint64_t max_limit_subformula_size(const Formula& f) {
  std::set<const void*> visited;
  std::uint64_t best = 0;
  limit_sizes_rec(f, visited, best);
  return best;
}

std::uint64_t count_gf_obstacles(const Formula& arg) {
  std::map<CountKey, std::uint64_t> memo;
  return obstacles_rec(arg, false, false, memo);
}

std::uint64_t count_fg_obstacles(const Formula& arg) {
  std::map<CountKey, std::uint64_t> memo;
  return obstacles_rec(arg, false, true, memo);
}

}  // namespace ltlnorm
