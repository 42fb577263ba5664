#include "ltlnorm/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ltlnorm {

namespace {

enum class Tok {
  End, LParen, RParen, OrOp, AndOp, Not,
  NextOp, FOp, GOp, UOp, WOp, ROp, MOp,
  TrueLit, FalseLit, Ident,
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, start, "("}); ++i; continue;
      case ')': out.push_back({Tok::RParen, start, ")"}); ++i; continue;
      case '|': out.push_back({Tok::OrOp, start, "|"}); ++i; continue;
      case '&': out.push_back({Tok::AndOp, start, "&"}); ++i; continue;
      case '!': out.push_back({Tok::Not, start, "!"}); ++i; continue;
      case 'X': out.push_back({Tok::NextOp, start, "X"}); ++i; continue;
      case 'F': out.push_back({Tok::FOp, start, "F"}); ++i; continue;
      case 'G': out.push_back({Tok::GOp, start, "G"}); ++i; continue;
      case 'U': out.push_back({Tok::UOp, start, "U"}); ++i; continue;
      case 'W': out.push_back({Tok::WOp, start, "W"}); ++i; continue;
      case 'R': out.push_back({Tok::ROp, start, "R"}); ++i; continue;
      case 'M': out.push_back({Tok::MOp, start, "M"}); ++i; continue;
      case '1': out.push_back({Tok::TrueLit, start, "1"}); ++i; continue;
      case '0': out.push_back({Tok::FalseLit, start, "0"}); ++i; continue;
      default: break;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < s.size() && ((s[j] >= 'a' && s[j] <= 'z') ||
                              (s[j] >= '0' && s[j] <= '9') || s[j] == '_'))
        ++j;
      std::string word(s.substr(i, j - i));
      i = j;
      if (word == "true")
        out.push_back({Tok::TrueLit, start, word});
      else if (word == "false")
        out.push_back({Tok::FalseLit, start, word});
      else
        out.push_back({Tok::Ident, start, word});
      continue;
    }
    throw ParseError("unknown token '" + std::string(1, c) + "'", start);
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

// Raw tree with general negation and F/G sugar; turned into extended NNF
// after parsing.
struct Raw {
  enum Op { True, False, Atom, Not, And, Or, Next, Ev, Alw, U, W, R, M } op;
  std::string name;
  std::unique_ptr<Raw> a, b;
};

using RawPtr = std::unique_ptr<Raw>;

RawPtr raw(Raw::Op op, RawPtr a = nullptr, RawPtr b = nullptr) {
  auto r = std::make_unique<Raw>();
  r->op = op;
  r->a = std::move(a);
  r->b = std::move(b);
  return r;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  RawPtr run() {
    RawPtr f = disj();
    expect(Tok::End, "end of input");
    return f;
  }

 private:
  const Token& cur() const { return toks_[i_]; }
  void advance() { ++i_; }
  void expect(Tok k, const char* what) {
    if (cur().kind != k)
      throw ParseError(std::string("expected ") + what + ", found '" +
                           (cur().kind == Tok::End ? "end of input" : cur().text) + "'",
                       cur().pos);
    advance();
  }

  RawPtr disj() {
    RawPtr f = conj();
    while (cur().kind == Tok::OrOp) {
      advance();
      f = raw(Raw::Or, std::move(f), conj());
    }
    return f;
  }

  RawPtr conj() {
    RawPtr f = binop();
    while (cur().kind == Tok::AndOp) {
      advance();
      f = raw(Raw::And, std::move(f), binop());
    }
    return f;
  }

  // Right-associative chain over U/W/R/M.
  RawPtr binop() {
    RawPtr f = unary();
    Raw::Op op;
    switch (cur().kind) {
      case Tok::UOp: op = Raw::U; break;
      case Tok::WOp: op = Raw::W; break;
      case Tok::ROp: op = Raw::R; break;
      case Tok::MOp: op = Raw::M; break;
      default: return f;
    }
    advance();
    return raw(op, std::move(f), binop());
  }

  RawPtr unary() {
    switch (cur().kind) {
      case Tok::Not: advance(); return raw(Raw::Not, unary());
      case Tok::NextOp: advance(); return raw(Raw::Next, unary());
      case Tok::FOp: advance(); return raw(Raw::Ev, unary());
      case Tok::GOp: advance(); return raw(Raw::Alw, unary());
      default: return atompart();
    }
  }

  RawPtr atompart() {
    switch (cur().kind) {
      case Tok::TrueLit: advance(); return raw(Raw::True);
      case Tok::FalseLit: advance(); return raw(Raw::False);
      case Tok::Ident: {
        auto r = raw(Raw::Atom);
        r->name = cur().text;
        advance();
        return r;
      }
      case Tok::LParen: {
        advance();
        RawPtr f = disj();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula, found '" +
                             (cur().kind == Tok::End ? "end of input" : cur().text) + "'",
                         cur().pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

Formula to_nnf(const Raw& r, bool neg) {
  switch (r.op) {
    case Raw::True: return neg ? f_false() : f_true();
    case Raw::False: return neg ? f_true() : f_false();
    case Raw::Atom: return neg ? f_neg_atom(r.name) : f_atom(r.name);
    case Raw::Not: return to_nnf(*r.a, !neg);
    case Raw::And: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_or(l, rr) : f_and(l, rr);
    }
    case Raw::Or: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_and(l, rr) : f_or(l, rr);
    }
    case Raw::Next: return f_next(to_nnf(*r.a, neg));
    case Raw::Ev:   // F x = true U x, !F x = G !x
      return neg ? f_always(to_nnf(*r.a, true))
                 : f_eventually(to_nnf(*r.a, false));
    case Raw::Alw:  // G x = false R x, !G x = F !x
      return neg ? f_eventually(to_nnf(*r.a, true))
                 : f_always(to_nnf(*r.a, false));
    case Raw::U: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_release(l, rr) : f_until(l, rr);
    }
    case Raw::R: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_until(l, rr) : f_release(l, rr);
    }
    case Raw::W: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_strong_release(l, rr) : f_weak_until(l, rr);
    }
    case Raw::M: {
      Formula l = to_nnf(*r.a, neg), rr = to_nnf(*r.b, neg);
      return neg ? f_weak_until(l, rr) : f_strong_release(l, rr);
    }
  }
  throw ParseError("internal: bad raw node", 0);
}

Formula fuse_node(Kind k, const Formula& c0, const Formula& c1) {
  if (k == Kind::Release && c0.kind() == Kind::False &&
      c1.kind() == Kind::Until && c1.left().kind() == Kind::True)
    return f_gf(c1.right());
  if (k == Kind::Until && c0.kind() == Kind::True &&
      c1.kind() == Kind::Release && c1.left().kind() == Kind::False)
    return f_fg(c1.right());
  if (is_unary(k)) return make_unary(k, c0);
  if (is_binary(k)) return make_binary(k, c0, c1);
  return Formula();
}

Formula fuse_rec(const Formula& f, std::map<const void*, Formula>& memo) {
  if (is_leaf(f.kind())) return f;
  auto it = memo.find(f.id());
  if (it != memo.end()) return it->second;
  Formula out;
  if (is_unary(f.kind())) {
    out = fuse_node(f.kind(), fuse_rec(f.arg(), memo), Formula());
  } else {
    out = fuse_node(f.kind(), fuse_rec(f.left(), memo),
                    fuse_rec(f.right(), memo));
  }
  memo.emplace(f.id(), out);
  return out;
}

}  // namespace

Formula fuse_limits(const Formula& f) {
  std::map<const void*, Formula> memo;
  return fuse_rec(f, memo);
}

Formula parse(std::string_view text) {
  Parser p(text);
  RawPtr r = p.run();
  return fuse_limits(to_nnf(*r, false));
}

}  // namespace ltlnorm
