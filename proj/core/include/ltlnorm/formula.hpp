#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ltlnorm {

// Extended LTL syntax in negation normal form. Negation exists only as
// NegAtom; GF ("infinitely often") and FG ("almost always") are single
// operators. Hole is the reserved placeholder atom of contexts and never
// comes out of the parser.
enum class Kind : std::uint8_t {
  True,
  False,
  Atom,
  NegAtom,
  And,
  Or,
  Next,
  Until,
  WeakUntil,
  StrongRelease,  // M
  Release,        // R
  LimitGF,
  LimitFG,
  Hole,
};

const char* kind_name(Kind k);

constexpr bool is_leaf(Kind k) {
  return k == Kind::True || k == Kind::False || k == Kind::Atom ||
         k == Kind::NegAtom || k == Kind::Hole;
}
constexpr bool is_unary(Kind k) {
  return k == Kind::Next || k == Kind::LimitGF || k == Kind::LimitFG;
}
constexpr bool is_binary(Kind k) {
  return k == Kind::And || k == Kind::Or || k == Kind::Until ||
         k == Kind::WeakUntil || k == Kind::StrongRelease || k == Kind::Release;
}
constexpr bool is_limit(Kind k) {
  return k == Kind::LimitGF || k == Kind::LimitFG;
}
constexpr bool is_temporal(Kind k) {
  return k == Kind::Next || k == Kind::Until || k == Kind::WeakUntil ||
         k == Kind::StrongRelease || k == Kind::Release || is_limit(k);
}
// The two operator groups of the rewrite system: M behaves like U and R
// behaves like W in every measure, predicate and rule.
constexpr bool is_u_or_m(Kind k) {
  return k == Kind::Until || k == Kind::StrongRelease;
}
constexpr bool is_w_or_r(Kind k) {
  return k == Kind::WeakUntil || k == Kind::Release;
}

// Immutable formula value. Copying is O(1); all structure is shared.
// Thread-safe to share across tasks without coordination.
class Formula {
 public:
  Formula() = default;

  bool valid() const { return node_ != nullptr; }

  Kind kind() const;
  const std::string& name() const;  // Atom / NegAtom only
  const Formula& left() const;
  const Formula& right() const;
  const Formula& arg() const;  // unary operand

  // Number of syntax-tree nodes, counting constants and limit nodes (one
  // each). Saturates instead of overflowing.
  std::uint64_t node_count() const;
  std::size_t hash() const;

  // Structural equality; pointer-equal shares compare in O(1).
  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Identity of the underlying node, for memoization tables.
  const void* id() const { return node_.get(); }

  // Precomputed subtree facts, O(1).
  bool has_hole() const;
  bool has_limit() const;
  bool has_temporal() const;
  // A U/M-node (resp. W/R-node) with no limit node above it inside this
  // subtree.
  bool has_u_or_m_outside_limit() const;
  bool has_w_or_r_outside_limit() const;
  bool has_u_or_m() const;
  bool has_w_or_r() const;
  // ubw > 0: some U/M-node under a W/R-node, not under any limit node.
  bool has_stage1_redex() const;
  // gfba > 0 witness: some limit node strictly under a temporal node.
  bool has_limit_under_temporal() const;

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;

  friend Formula make_leaf(Kind, std::string_view);
  friend Formula make_unary(Kind, Formula);
  friend Formula make_binary(Kind, Formula, Formula);
};

namespace detail {
// Subtree fact bits, precomputed at construction.
inline constexpr std::uint16_t kHasHole = 1u << 0;
inline constexpr std::uint16_t kHasLimit = 1u << 1;
inline constexpr std::uint16_t kHasTemporal = 1u << 2;
inline constexpr std::uint16_t kHasUM = 1u << 3;
inline constexpr std::uint16_t kHasWR = 1u << 4;
inline constexpr std::uint16_t kUMOutsideLimit = 1u << 5;
inline constexpr std::uint16_t kWROutsideLimit = 1u << 6;
inline constexpr std::uint16_t kStage1Redex = 1u << 7;
inline constexpr std::uint16_t kLimitUnderTemporal = 1u << 8;
}  // namespace detail

struct Formula::Node {
  Kind kind;
  std::uint16_t facts = 0;
  std::uint64_t n_nodes = 1;
  std::size_t hash = 0;
  std::string name;
  Formula child0;
  Formula child1;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::left() const { return node_->child0; }
inline const Formula& Formula::right() const { return node_->child1; }
inline const Formula& Formula::arg() const { return node_->child0; }
inline std::uint64_t Formula::node_count() const { return node_->n_nodes; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline bool Formula::has_hole() const {
  return node_->facts & detail::kHasHole;
}
inline bool Formula::has_limit() const {
  return node_->facts & detail::kHasLimit;
}
inline bool Formula::has_temporal() const {
  return node_->facts & detail::kHasTemporal;
}
inline bool Formula::has_u_or_m_outside_limit() const {
  return node_->facts & detail::kUMOutsideLimit;
}
inline bool Formula::has_w_or_r_outside_limit() const {
  return node_->facts & detail::kWROutsideLimit;
}
inline bool Formula::has_u_or_m() const {
  return node_->facts & detail::kHasUM;
}
inline bool Formula::has_w_or_r() const {
  return node_->facts & detail::kHasWR;
}
inline bool Formula::has_stage1_redex() const {
  return node_->facts & detail::kStage1Redex;
}
inline bool Formula::has_limit_under_temporal() const {
  return node_->facts & detail::kLimitUnderTemporal;
}

namespace detail {
// Identity-keyed map whose keys keep their nodes alive. Memo tables that
// outlive the statement they were filled in must use this instead of raw
// node pointers: a dead node's address can be recycled by the allocator.
struct FormulaIdLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return a.id() < b.id();
  }
};
}  // namespace detail

template <class V>
using FormulaIdMap = std::map<Formula, V, detail::FormulaIdLess>;

// Raw node constructors (no smart rewriting of any kind).
Formula make_leaf(Kind k, std::string_view name);
Formula make_unary(Kind k, Formula x);
Formula make_binary(Kind k, Formula l, Formula r);

// Constructors. Binary/unary constructors require valid operands.
Formula f_true();
Formula f_false();
Formula f_atom(std::string_view name);
Formula f_neg_atom(std::string_view name);
Formula f_hole();
Formula f_and(Formula l, Formula r);
Formula f_or(Formula l, Formula r);
Formula f_next(Formula x);
Formula f_until(Formula l, Formula r);
Formula f_weak_until(Formula l, Formula r);
Formula f_strong_release(Formula l, Formula r);
Formula f_release(Formula l, Formula r);
Formula f_gf(Formula x);
Formula f_fg(Formula x);

// F x := true U x. The parser also reads G x as false R x.
Formula f_eventually(Formula x);
Formula f_always(Formula x);

// NNF negation: dualizes every operator and flips literals. Structural
// involution. Rejects placeholders (a context hole cannot be negated).
Formula negate_nnf(const Formula& f);

// True iff `needle` is a subformula of `haystack` (structural identity,
// haystack itself included).
bool contains_subformula(const Formula& haystack, const Formula& needle);

// Atom names occurring in f, sorted, deduplicated. Ignores holes.
std::vector<std::string> collect_atoms(const Formula& f);

}  // namespace ltlnorm
