#include "naive_eval.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "ltlnorm/errors.hpp"

namespace ltlnorm::testing {

Formula expand_limit_operators(const Formula& f) {
  switch (f.kind()) {
    case Kind::LimitGF:
      return f_release(f_false(),
                       f_until(f_true(), expand_limit_operators(f.arg())));
    case Kind::LimitFG:
      return f_until(f_true(),
                     f_release(f_false(), expand_limit_operators(f.arg())));
    default:
      break;
  }
  if (is_unary(f.kind()))
    return make_unary(f.kind(), expand_limit_operators(f.arg()));
  if (is_binary(f.kind()))
    return make_binary(f.kind(), expand_limit_operators(f.left()),
                       expand_limit_operators(f.right()));
  return f;
}

std::size_t formula_depth(const Formula& f) {
  if (is_unary(f.kind())) return 1 + formula_depth(f.arg());
  if (is_binary(f.kind()))
    return 1 + std::max(formula_depth(f.left()), formula_depth(f.right()));
  return 1;
}

namespace {

struct NaiveEval {
  const LassoWord& w;
  std::size_t horizon;
  std::map<std::pair<const void*, std::size_t>, bool> memo;

  std::uint32_t letter(std::size_t k) const {
    if (k < w.prefix.size()) return w.prefix[k];
    return w.loop[(k - w.prefix.size()) % w.loop.size()];
  }

  bool holds(const std::string& name, std::size_t k) const {
    for (std::size_t i = 0; i < w.atoms.size(); ++i)
      if (w.atoms[i] == name) return (letter(k) >> i) & 1u;
    return false;
  }

  bool eval(const Formula& f, std::size_t k) {
    switch (f.kind()) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Atom: return holds(f.name(), k);
      case Kind::NegAtom: return !holds(f.name(), k);
      default: break;
    }
    auto key = std::make_pair(f.id(), k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool v = false;
    switch (f.kind()) {
      case Kind::And: v = eval(f.left(), k) && eval(f.right(), k); break;
      case Kind::Or: v = eval(f.left(), k) || eval(f.right(), k); break;
      case Kind::Next: v = eval(f.arg(), k + 1); break;
      case Kind::Until:
        v = k >= horizon ? false
                         : (eval(f.right(), k) ||
                            (eval(f.left(), k) && eval(f, k + 1)));
        break;
      case Kind::WeakUntil:
        v = k >= horizon ? true
                         : (eval(f.right(), k) ||
                            (eval(f.left(), k) && eval(f, k + 1)));
        break;
      case Kind::StrongRelease:
        v = k >= horizon ? false
                         : (eval(f.right(), k) &&
                            (eval(f.left(), k) || eval(f, k + 1)));
        break;
      case Kind::Release:
        v = k >= horizon ? true
                         : (eval(f.right(), k) &&
                            (eval(f.left(), k) || eval(f, k + 1)));
        break;
      default:
        throw Error("naive_evaluate: unexpected node");
    }
    memo.emplace(key, v);
    return v;
  }
};

}  // namespace

bool naive_evaluate(const LassoWord& w, const Formula& f) {
  Formula expanded = expand_limit_operators(f);
  std::size_t horizon =
      w.prefix.size() + 2 * w.loop.size() + formula_depth(expanded);
  NaiveEval ev{w, horizon, {}};
  return ev.eval(expanded, 0);
}

}  // namespace ltlnorm::testing
