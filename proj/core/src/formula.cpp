#include "ltlnorm/formula.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <utility>

#include "ltlnorm/errors.hpp"

namespace ltlnorm {

using namespace detail;

namespace {

constexpr std::uint64_t kNodeCountCap = std::uint64_t(1) << 62;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  if (s < a || s > kNodeCountCap) return kNodeCountCap;
  return s;
}

std::size_t mix(std::size_t h) {
  // splitmix64 finalizer
  std::uint64_t z = h;
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return static_cast<std::size_t>(z);
}

std::size_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Atom: return "atom";
    case Kind::NegAtom: return "neg-atom";
    case Kind::And: return "and";
    case Kind::Or: return "or";
    case Kind::Next: return "X";
    case Kind::Until: return "U";
    case Kind::WeakUntil: return "W";
    case Kind::StrongRelease: return "M";
    case Kind::Release: return "R";
    case Kind::LimitGF: return "GF";
    case Kind::LimitFG: return "FG";
    case Kind::Hole: return "hole";
  }
  return "?";
}

namespace {

std::uint16_t child_facts(const Formula& f) {
  return f.valid() ? (f.has_hole() ? kHasHole : 0) |
                         (f.has_limit() ? kHasLimit : 0) |
                         (f.has_temporal() ? kHasTemporal : 0) |
                         (f.has_u_or_m() ? kHasUM : 0) |
                         (f.has_w_or_r() ? kHasWR : 0) |
                         (f.has_u_or_m_outside_limit() ? kUMOutsideLimit : 0) |
                         (f.has_w_or_r_outside_limit() ? kWROutsideLimit : 0) |
                         (f.has_stage1_redex() ? kStage1Redex : 0) |
                         (f.has_limit_under_temporal() ? kLimitUnderTemporal : 0)
                   : 0;
}

std::uint16_t compute_facts(Kind k, const Formula& c0, const Formula& c1) {
  std::uint16_t below = child_facts(c0) | child_facts(c1);
  std::uint16_t facts = below;

  if (k == Kind::Hole) facts |= kHasHole;
  if (is_limit(k)) facts |= kHasLimit;
  if (is_temporal(k)) facts |= kHasTemporal;
  if (is_u_or_m(k)) facts |= kHasUM;
  if (is_w_or_r(k)) facts |= kHasWR;

  if (is_limit(k)) {
    // Everything below sits under this limit node.
    facts &= ~(kUMOutsideLimit | kWROutsideLimit | kStage1Redex);
  } else {
    if (is_u_or_m(k)) facts |= kUMOutsideLimit;
    if (is_w_or_r(k)) facts |= kWROutsideLimit;
    if (is_w_or_r(k) && (below & kUMOutsideLimit)) facts |= kStage1Redex;
  }

  if (is_temporal(k) && (below & kHasLimit)) facts |= kLimitUnderTemporal;
  return facts;
}

Formula::Node make_node(Kind k, std::string_view name, Formula c0, Formula c1) {
  Formula::Node n;
  n.kind = k;
  n.name.assign(name);
  n.n_nodes = 1;
  if (c0.valid()) n.n_nodes = sat_add(n.n_nodes, c0.node_count());
  if (c1.valid()) n.n_nodes = sat_add(n.n_nodes, c1.node_count());
  n.facts = compute_facts(k, c0, c1);
  std::size_t h = mix(static_cast<std::size_t>(k) * 0x9e3779b97f4a7c15ull + 1);
  if (!name.empty()) h = mix(h ^ fnv1a(name));
  if (c0.valid()) h = mix(h ^ c0.hash());
  if (c1.valid()) h = mix(h * 3 ^ c1.hash());
  n.hash = h;
  n.child0 = std::move(c0);
  n.child1 = std::move(c1);
  return n;
}

}  // namespace

Formula make_leaf(Kind k, std::string_view name) {
  return Formula(std::make_shared<const Formula::Node>(
      make_node(k, name, Formula(), Formula())));
}

Formula make_unary(Kind k, Formula x) {
  assert(x.valid());
  return Formula(std::make_shared<const Formula::Node>(
      make_node(k, {}, std::move(x), Formula())));
}

Formula make_binary(Kind k, Formula l, Formula r) {
  assert(l.valid() && r.valid());
  return Formula(std::make_shared<const Formula::Node>(
      make_node(k, {}, std::move(l), std::move(r))));
}

Formula f_true() {
  static const Formula t = make_leaf(Kind::True, {});
  return t;
}
Formula f_false() {
  static const Formula f = make_leaf(Kind::False, {});
  return f;
}
Formula f_hole() {
  static const Formula h = make_leaf(Kind::Hole, {});
  return h;
}
Formula f_atom(std::string_view name) { return make_leaf(Kind::Atom, name); }
Formula f_neg_atom(std::string_view name) {
  return make_leaf(Kind::NegAtom, name);
}
Formula f_and(Formula l, Formula r) {
  return make_binary(Kind::And, std::move(l), std::move(r));
}
Formula f_or(Formula l, Formula r) {
  return make_binary(Kind::Or, std::move(l), std::move(r));
}
Formula f_next(Formula x) { return make_unary(Kind::Next, std::move(x)); }
Formula f_until(Formula l, Formula r) {
  return make_binary(Kind::Until, std::move(l), std::move(r));
}
Formula f_weak_until(Formula l, Formula r) {
  return make_binary(Kind::WeakUntil, std::move(l), std::move(r));
}
Formula f_strong_release(Formula l, Formula r) {
  return make_binary(Kind::StrongRelease, std::move(l), std::move(r));
}
Formula f_release(Formula l, Formula r) {
  return make_binary(Kind::Release, std::move(l), std::move(r));
}
Formula f_gf(Formula x) { return make_unary(Kind::LimitGF, std::move(x)); }
Formula f_fg(Formula x) { return make_unary(Kind::LimitFG, std::move(x)); }

Formula f_eventually(Formula x) { return f_until(f_true(), std::move(x)); }
Formula f_always(Formula x) { return f_release(f_false(), std::move(x)); }

namespace {

using NodePair = std::pair<const void*, const void*>;

bool eq_rec(const Formula& a, const Formula& b, std::set<NodePair>* seen) {
  if (a.id() == b.id()) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() ||
      a.node_count() != b.node_count())
    return false;
  switch (a.kind()) {
    case Kind::Atom:
    case Kind::NegAtom:
      return a.name() == b.name();
    case Kind::True:
    case Kind::False:
    case Kind::Hole:
      return true;
    default:
      break;
  }
  if (seen) {
    auto [it, fresh] = seen->insert({a.id(), b.id()});
    (void)it;
    if (!fresh) return true;  // already being/been compared equal-so-far
  }
  if (is_unary(a.kind())) return eq_rec(a.arg(), b.arg(), seen);
  return eq_rec(a.left(), b.left(), seen) && eq_rec(a.right(), b.right(), seen);
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  // For heavily shared structures a visited set keeps the walk linear in the
  // DAG instead of the virtual tree.
  if (node_count() > 2048 && node_count() == other.node_count()) {
    std::set<NodePair> seen;
    return eq_rec(*this, other, &seen);
  }
  return eq_rec(*this, other, nullptr);
}

Formula negate_nnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::True: return f_false();
    case Kind::False: return f_true();
    case Kind::Atom: return f_neg_atom(f.name());
    case Kind::NegAtom: return f_atom(f.name());
    case Kind::And: return f_or(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::Or: return f_and(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::Next: return f_next(negate_nnf(f.arg()));
    case Kind::Until:
      return f_release(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::Release:
      return f_until(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::WeakUntil:
      return f_strong_release(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::StrongRelease:
      return f_weak_until(negate_nnf(f.left()), negate_nnf(f.right()));
    case Kind::LimitGF: return f_fg(negate_nnf(f.arg()));
    case Kind::LimitFG: return f_gf(negate_nnf(f.arg()));
    case Kind::Hole:
      throw InvariantError("cannot negate a context placeholder");
  }
  throw InvariantError("negate_nnf: unknown node kind");
}

namespace {

bool contains_rec(const Formula& hay, const Formula& needle,
                  std::set<const void*>& visited) {
  if (hay.node_count() < needle.node_count()) return false;
  if (hay == needle) return true;
  if (!visited.insert(hay.id()).second) return false;
  if (is_unary(hay.kind())) return contains_rec(hay.arg(), needle, visited);
  if (is_binary(hay.kind()))
    return contains_rec(hay.left(), needle, visited) ||
           contains_rec(hay.right(), needle, visited);
  return false;
}

}  // namespace

bool contains_subformula(const Formula& haystack, const Formula& needle) {
  std::set<const void*> visited;
  return contains_rec(haystack, needle, visited);
}

namespace {

void atoms_rec(const Formula& f, std::set<const void*>& visited,
               std::set<std::string>& out) {
  if (!visited.insert(f.id()).second) return;
  switch (f.kind()) {
    case Kind::Atom:
    case Kind::NegAtom:
      out.insert(f.name());
      return;
    default:
      break;
  }
  if (is_unary(f.kind())) {
    atoms_rec(f.arg(), visited, out);
  } else if (is_binary(f.kind())) {
    atoms_rec(f.left(), visited, out);
    atoms_rec(f.right(), visited, out);
  }
}

}  // namespace

std::vector<std::string> collect_atoms(const Formula& f) {
  std::set<const void*> visited;
  std::set<std::string> names;
  atoms_rec(f, visited, names);
  return {names.begin(), names.end()};
}

}  // namespace ltlnorm
