#include "ltlnorm/context.hpp"

#include <map>
#include <utility>

#include "ltlnorm/errors.hpp"
#include "ltlnorm/printer.hpp"

namespace ltlnorm {

namespace {

struct AbstractState {
  const Formula& target;
  Scope scope;
  std::uint64_t holes = 0;
  // (node, under_limit) -> (replacement, holes introduced per tree occurrence)
  std::map<std::pair<const void*, bool>, std::pair<Formula, std::uint64_t>>
      memo;
};

Formula abstract_rec(const Formula& f, bool under_limit, AbstractState& st) {
  bool scope_ok = st.scope == Scope::All || !under_limit;
  if (scope_ok && f == st.target) {
    st.holes += 1;
    return f_hole();
  }
  if (is_leaf(f.kind())) return f;
  // No occurrence can hide in a smaller subtree.
  if (f.node_count() < st.target.node_count()) return f;
  auto key = std::make_pair(f.id(), under_limit);
  auto it = st.memo.find(key);
  if (it != st.memo.end()) {
    st.holes += it->second.second;
    return it->second.first;
  }
  std::uint64_t before = st.holes;
  Formula out;
  bool ul = under_limit || is_limit(f.kind());
  if (is_unary(f.kind())) {
    Formula a = abstract_rec(f.arg(), ul, st);
    out = a.id() == f.arg().id() ? f : make_unary(f.kind(), a);
  } else {
    Formula l = abstract_rec(f.left(), ul, st);
    Formula r = abstract_rec(f.right(), ul, st);
    out = (l.id() == f.left().id() && r.id() == f.right().id())
              ? f
              : make_binary(f.kind(), l, r);
  }
  st.memo.emplace(key, std::make_pair(out, st.holes - before));
  return out;
}

}  // namespace

Context abstract_occurrences(const Formula& f, const Formula& target,
                             Scope scope) {
  AbstractState st{target, scope};
  Formula body = abstract_rec(f, false, st);
  if (st.holes == 0)
    throw TargetNotFoundError("no occurrence of '" + render(target) +
                              "' in scope");
  return Context{body, st.holes};
}

namespace {

Formula subst_rec(const Formula& f, const Formula& g,
                  std::map<const void*, Formula>& memo) {
  if (f.kind() == Kind::Hole) return g;
  if (!f.has_hole()) return f;
  auto it = memo.find(f.id());
  if (it != memo.end()) return it->second;
  Formula out;
  if (is_unary(f.kind())) {
    out = make_unary(f.kind(), subst_rec(f.arg(), g, memo));
  } else {
    out = make_binary(f.kind(), subst_rec(f.left(), g, memo),
                      subst_rec(f.right(), g, memo));
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula substitute_holes(const Formula& body, const Formula& g) {
  std::map<const void*, Formula> memo;
  return subst_rec(body, g, memo);
}

Formula fill(const Context& ctx, const Formula& g) {
  return substitute_holes(ctx.body, g);
}

}  // namespace ltlnorm
