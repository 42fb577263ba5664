#include "ltlnorm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ltlnorm/errors.hpp"

namespace ltlnorm {

std::string LassoWord::to_string() const {
  auto letter = [&](std::uint32_t bits) {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (bits & (std::uint32_t(1) << i)) {
        if (!first) s += ',';
        s += atoms[i];
        first = false;
      }
    }
    s += '}';
    return s;
  };
  std::string s;
  for (auto b : prefix) s += letter(b);
  s += '(';
  for (auto b : loop) s += letter(b);
  s += ")^w";
  return s;
}

Evaluator::Evaluator(const Formula& f, const std::vector<std::string>& atoms)
    : Evaluator(std::vector<Formula>{f}, atoms) {}

Evaluator::Evaluator(const std::vector<Formula>& roots,
                     const std::vector<std::string>& atoms) {
  std::map<const void*, std::int32_t> index;

  // Explicit-stack postorder over the shared structure.
  struct Frame {
    Formula f;
    bool expanded;
  };
  auto visit = [&](const Formula& root) -> std::int32_t {
    std::vector<Frame> stack{{root, false}};
    while (!stack.empty()) {
      Frame fr = stack.back();
      stack.pop_back();
      auto it = index.find(fr.f.id());
      if (it != index.end() && !fr.expanded) continue;
      if (!fr.expanded) {
        stack.push_back({fr.f, true});
        if (is_unary(fr.f.kind())) {
          stack.push_back({fr.f.arg(), false});
        } else if (is_binary(fr.f.kind())) {
          stack.push_back({fr.f.right(), false});
          stack.push_back({fr.f.left(), false});
        }
        continue;
      }
      if (it != index.end()) continue;
      Entry e;
      e.kind = fr.f.kind();
      if (fr.f.kind() == Kind::Hole)
        throw Error("cannot evaluate a formula with placeholders");
      if (fr.f.kind() == Kind::Atom || fr.f.kind() == Kind::NegAtom) {
        auto pos = std::find(atoms.begin(), atoms.end(), fr.f.name());
        e.bit = pos == atoms.end()
                    ? -1
                    : static_cast<std::int32_t>(pos - atoms.begin());
      }
      if (is_unary(fr.f.kind())) {
        e.a = index.at(fr.f.arg().id());
      } else if (is_binary(fr.f.kind())) {
        e.a = index.at(fr.f.left().id());
        e.b = index.at(fr.f.right().id());
      }
      std::int32_t id = static_cast<std::int32_t>(post_.size());
      post_.push_back(e);
      index.emplace(fr.f.id(), id);
    }
    return index.at(root.id());
  };

  for (const Formula& r : roots) roots_.push_back(visit(r));
}

void Evaluator::run(const LassoWord& w) {
  const std::size_t P = w.prefix.size();
  const std::size_t L = w.loop.size();
  if (L == 0) throw Error("lasso word needs a nonempty loop");
  plen_ = P;
  llen_ = L;
  width_ = P + L;
  if (rows_.size() < post_.size() * width_)
    rows_.resize(post_.size() * width_);

  auto letter = [&](std::size_t k) {
    return k < P ? w.prefix[k] : w.loop[k - P];
  };
  const std::size_t last = width_ - 1;

  for (std::size_t i = 0; i < post_.size(); ++i) {
    const Entry& e = post_[i];
    std::uint8_t* row = rows_.data() + i * width_;
    const std::uint8_t* ra =
        e.a >= 0 ? rows_.data() + static_cast<std::size_t>(e.a) * width_ : nullptr;
    const std::uint8_t* rb =
        e.b >= 0 ? rows_.data() + static_cast<std::size_t>(e.b) * width_ : nullptr;
    switch (e.kind) {
      case Kind::True:
        std::fill(row, row + width_, 1);
        break;
      case Kind::False:
        std::fill(row, row + width_, 0);
        break;
      case Kind::Atom:
        for (std::size_t k = 0; k < width_; ++k)
          row[k] = e.bit >= 0 && ((letter(k) >> e.bit) & 1u);
        break;
      case Kind::NegAtom:
        for (std::size_t k = 0; k < width_; ++k)
          row[k] = !(e.bit >= 0 && ((letter(k) >> e.bit) & 1u));
        break;
      case Kind::And:
        for (std::size_t k = 0; k < width_; ++k) row[k] = ra[k] & rb[k];
        break;
      case Kind::Or:
        for (std::size_t k = 0; k < width_; ++k) row[k] = ra[k] | rb[k];
        break;
      case Kind::Next:
        for (std::size_t k = 0; k < width_; ++k)
          row[k] = ra[k == last ? P : k + 1];
        break;
      case Kind::Until:
      case Kind::WeakUntil:
      case Kind::StrongRelease:
      case Kind::Release: {
        // x_k = r_k | (l_k & x_next)   for U (least) / W (greatest)
        // x_k = r_k & (l_k | x_next)   for M (least) / R (greatest)
        const bool conj = e.kind == Kind::StrongRelease || e.kind == Kind::Release;
        const std::uint8_t init =
            (e.kind == Kind::WeakUntil || e.kind == Kind::Release) ? 1 : 0;
        for (std::size_t k = P; k < width_; ++k) row[k] = init;
        for (int sweep = 0; sweep < 2; ++sweep) {
          for (std::size_t k = last + 1; k-- > P;) {
            std::uint8_t next = row[k == last ? P : k + 1];
            row[k] = conj ? (rb[k] & (ra[k] | next)) : (rb[k] | (ra[k] & next));
          }
        }
        for (std::size_t k = P; k-- > 0;) {
          std::uint8_t next = row[k + 1];
          row[k] = conj ? (rb[k] & (ra[k] | next)) : (rb[k] | (ra[k] & next));
        }
        break;
      }
      case Kind::LimitGF: {
        std::uint8_t v = 0;
        for (std::size_t k = P; k < width_; ++k) v |= ra[k];
        std::fill(row, row + width_, v);
        break;
      }
      case Kind::LimitFG: {
        std::uint8_t v = 1;
        for (std::size_t k = P; k < width_; ++k) v &= ra[k];
        std::fill(row, row + width_, v);
        break;
      }
      case Kind::Hole:
        throw Error("cannot evaluate a formula with placeholders");
    }
  }
}

bool Evaluator::root_value(std::size_t root) const {
  return rows_[static_cast<std::size_t>(roots_.at(root)) * width_] != 0;
}

bool Evaluator::value_at(std::size_t root, std::size_t position) const {
  std::size_t k =
      position < width_ ? position : plen_ + (position - plen_) % llen_;
  return rows_[static_cast<std::size_t>(roots_.at(root)) * width_ + k] != 0;
}

bool evaluate(const LassoWord& w, const Formula& f) {
  Evaluator ev(f, w.atoms);
  return ev.eval(w);
}

std::optional<std::uint64_t> lasso_count(unsigned n_atoms, unsigned max_prefix,
                                         unsigned max_loop) {
  if (n_atoms >= 63) return std::nullopt;
  const std::uint64_t base = std::uint64_t(1) << n_atoms;
  std::uint64_t total = 0;
  for (unsigned p = 0; p <= max_prefix; ++p) {
    for (unsigned l = 1; l <= max_loop; ++l) {
      std::uint64_t words = 1;
      for (unsigned i = 0; i < p + l; ++i) {
        if (__builtin_mul_overflow(words, base, &words)) return std::nullopt;
      }
      if (__builtin_add_overflow(total, words, &total)) return std::nullopt;
    }
  }
  return total;
}

LassoEnumerator::LassoEnumerator(std::vector<std::string> atoms,
                                 unsigned max_prefix, unsigned max_loop)
    : atoms_(std::move(atoms)), max_prefix_(max_prefix), max_loop_(max_loop) {
  if (atoms_.size() > 30) throw Error("too many atoms for enumeration");
  if (max_loop_ == 0) throw Error("max_loop must be at least 1");
  alphabet_ = std::uint64_t(1) << atoms_.size();
  total_len_ = 0;
  done_ = !advance_shape();
}

// Moves to the next (total length, prefix length) shape; letters reset to
// the lexicographically first word.
bool LassoEnumerator::advance_shape() {
  unsigned t = total_len_, p = prefix_len_;
  if (t == 0) {
    t = 1;
    p = t > max_loop_ ? t - max_loop_ : 0;
  } else {
    unsigned p_max = std::min(max_prefix_, t - 1);
    if (p < p_max) {
      ++p;
    } else {
      ++t;
      if (t > max_prefix_ + max_loop_) return false;
      p = t > max_loop_ ? t - max_loop_ : 0;
      if (p > std::min(max_prefix_, t - 1)) return false;
    }
  }
  total_len_ = t;
  prefix_len_ = p;
  letters_.assign(t, 0);
  shape_fresh_ = true;
  return true;
}

std::optional<LassoWord> LassoEnumerator::next() {
  if (done_) return std::nullopt;
  if (!shape_fresh_) {
    // lexicographic odometer, most significant letter first
    std::size_t i = letters_.size();
    while (i-- > 0) {
      if (++letters_[i] < alphabet_) break;
      letters_[i] = 0;
      if (i == 0) {
        if (!advance_shape()) {
          done_ = true;
          return std::nullopt;
        }
        break;
      }
    }
  }
  shape_fresh_ = false;
  LassoWord w;
  w.atoms = atoms_;
  w.prefix.assign(letters_.begin(), letters_.begin() + prefix_len_);
  w.loop.assign(letters_.begin() + prefix_len_, letters_.end());
  return w;
}

LassoSampler::LassoSampler(std::vector<std::string> atoms, unsigned max_prefix,
                           unsigned max_loop, std::uint64_t seed)
    : atoms_(std::move(atoms)),
      max_prefix_(max_prefix),
      max_loop_(max_loop),
      rng_(seed) {
  if (atoms_.size() > 30) throw Error("too many atoms for sampling");
  if (max_loop_ == 0) throw Error("max_loop must be at least 1");
  const long double base = std::pow(2.0L, (long double)atoms_.size());
  shape_weight_.resize((max_prefix_ + 1) * max_loop_);
  for (unsigned p = 0; p <= max_prefix_; ++p) {
    for (unsigned l = 1; l <= max_loop_; ++l) {
      long double wgt = std::pow(base, (long double)(p + l));
      shape_weight_[p * max_loop_ + (l - 1)] = wgt;
      total_weight_ += wgt;
    }
  }
}

LassoWord LassoSampler::next() {
  const std::uint64_t mask =
      atoms_.empty() ? 0
                     : (std::uint64_t(1) << atoms_.size()) - 1;
  long double r =
      (long double)(rng_() >> 11) / 9007199254740992.0L * total_weight_;
  unsigned p = 0, l = 1;
  for (unsigned pp = 0; pp <= max_prefix_; ++pp) {
    for (unsigned ll = 1; ll <= max_loop_; ++ll) {
      long double wgt = shape_weight_[pp * max_loop_ + (ll - 1)];
      p = pp;
      l = ll;
      if (r < wgt) goto picked;
      r -= wgt;
    }
  }
picked:
  LassoWord w;
  w.atoms = atoms_;
  w.prefix.resize(p);
  w.loop.resize(l);
  for (auto& b : w.prefix) b = static_cast<std::uint32_t>(rng_() & mask);
  for (auto& b : w.loop) b = static_cast<std::uint32_t>(rng_() & mask);
  return w;
}

EquivVerdict bounded_equiv(const Formula& f, const Formula& g,
                           unsigned max_prefix, unsigned max_loop,
                           EquivMode mode, std::uint64_t ceiling) {
  if (max_loop == 0) throw Error("max_loop must be at least 1");
  std::vector<std::string> atoms = collect_atoms(f);
  for (const auto& a : collect_atoms(g)) {
    if (std::find(atoms.begin(), atoms.end(), a) == atoms.end())
      atoms.push_back(a);
  }
  std::sort(atoms.begin(), atoms.end());

  Evaluator ev({f, g}, atoms);
  EquivVerdict verdict;

  auto check = [&](const LassoWord& w) {
    ev.run(w);
    ++verdict.words_checked;
    if (ev.root_value(0) != ev.root_value(1)) {
      verdict.equivalent = false;
      verdict.witness = w;
      return false;
    }
    return true;
  };

  if (mode.kind == EquivMode::Kind::Exhaustive) {
    auto count = lasso_count(static_cast<unsigned>(atoms.size()), max_prefix,
                             max_loop);
    if (!count || *count > ceiling)
      throw BoundError(
          "exhaustive enumeration too large: " +
              (count ? std::to_string(*count) : std::string("> 2^64")) +
              " lasso words",
          count.value_or(UINT64_MAX));
    LassoEnumerator en(atoms, max_prefix, max_loop);
    while (auto w = en.next()) {
      if (!check(*w)) break;
    }
  } else {
    LassoSampler sampler(atoms, max_prefix, max_loop, mode.seed);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
      if (!check(sampler.next())) break;
    }
  }
  return verdict;
}

}  // namespace ltlnorm
