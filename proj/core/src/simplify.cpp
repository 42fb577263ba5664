#include <map>

#include "ltlnorm/rewrite.hpp"

namespace ltlnorm {

namespace {

bool is_true(const Formula& f) { return f.kind() == Kind::True; }
bool is_false(const Formula& f) { return f.kind() == Kind::False; }

// One local rewrite at the root; children are already simplified. Every rule
// strictly decreases the node count, so the per-node fixpoint loop is finite.
std::optional<Formula> local_rule(const Formula& f) {
  switch (f.kind()) {
    case Kind::And: {
      const Formula& l = f.left();
      const Formula& r = f.right();
      if (is_false(l) || is_false(r)) return f_false();
      if (is_true(l)) return r;
      if (is_true(r)) return l;
      if (l == r) return l;
      break;
    }
    case Kind::Or: {
      const Formula& l = f.left();
      const Formula& r = f.right();
      if (is_true(l) || is_true(r)) return f_true();
      if (is_false(l)) return r;
      if (is_false(r)) return l;
      if (l == r) return l;
      break;
    }
    case Kind::Next:
      if (is_true(f.arg())) return f_true();
      if (is_false(f.arg())) return f_false();
      break;
    case Kind::Until:
      if (is_false(f.right())) return f_false();
      if (is_true(f.right())) return f_true();
      if (is_false(f.left())) return f.right();
      // true U (false R x) is an F-G adjacency
      if (is_true(f.left()) && f.right().kind() == Kind::Release &&
          is_false(f.right().left()))
        return f_fg(f.right().right());
      break;  // true U x stays: it is the F sugar
    case Kind::WeakUntil:
      if (is_true(f.right())) return f_true();
      if (is_true(f.left())) return f_true();
      if (is_false(f.left())) return f.right();
      break;  // x W false stays: it is the G sugar
    case Kind::Release:
      if (is_false(f.left()) && f.right().kind() == Kind::Until &&
          is_true(f.right().left()))
        return f_gf(f.right().right());
      break;
    case Kind::StrongRelease:
      break;
    case Kind::LimitGF:
      if (is_true(f.arg())) return f_true();
      if (is_false(f.arg())) return f_false();
      if (is_limit(f.arg().kind())) return f.arg();  // GF GF x, GF FG x
      break;
    case Kind::LimitFG:
      if (is_true(f.arg())) return f_true();
      if (is_false(f.arg())) return f_false();
      if (is_limit(f.arg().kind())) return f.arg();  // FG FG x, FG GF x
      break;
    default:
      break;
  }
  return std::nullopt;
}

Formula simplify_rec(const Formula& f, FormulaIdMap<Formula>& memo) {
  if (is_leaf(f.kind())) return f;
  auto it = memo.find(f);
  if (it != memo.end()) return it->second;

  Formula out;
  if (is_unary(f.kind())) {
    Formula a = simplify_rec(f.arg(), memo);
    out = a.id() == f.arg().id() ? f : make_unary(f.kind(), a);
  } else {
    Formula l = simplify_rec(f.left(), memo);
    Formula r = simplify_rec(f.right(), memo);
    out = (l.id() == f.left().id() && r.id() == f.right().id())
              ? f
              : make_binary(f.kind(), l, r);
  }
  while (auto next = local_rule(out)) out = *next;

  memo.emplace(f, out);
  memo.emplace(out, out);  // outputs are fixpoints
  return out;
}

}  // namespace

namespace detail {
Formula simplify_memo(const Formula& f, FormulaIdMap<Formula>& memo) {
  return simplify_rec(f, memo);
}
}  // namespace detail

Formula simplify(const Formula& f) {
  FormulaIdMap<Formula> memo;
  return simplify_rec(f, memo);
}

}  // namespace ltlnorm
