#include "ltlnorm/printer.hpp"

#include <ostream>

namespace ltlnorm {

namespace {

// Precedence: "|" < "&" < U/W/R/M < unary < atoms.
constexpr int kOr = 0;
constexpr int kAnd = 1;
constexpr int kBinop = 2;
constexpr int kUnary = 3;
constexpr int kAtom = 4;

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    case Kind::Until:
      if (f.left().kind() == Kind::True) return kUnary;  // prints as F
      return kBinop;
    case Kind::Release:
      if (f.left().kind() == Kind::False) return kUnary;  // prints as G
      return kBinop;
    case Kind::WeakUntil:
    case Kind::StrongRelease: return kBinop;
    case Kind::Next:
    case Kind::LimitGF:
    case Kind::LimitFG: return kUnary;
    default: return kAtom;
  }
}

void print(const Formula& f, std::string& out, int min_prec) {
  int prec = precedence(f);
  bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::True: out += "true"; break;
    case Kind::False: out += "false"; break;
    case Kind::Atom: out += f.name(); break;
    case Kind::NegAtom: out += '!'; out += f.name(); break;
    case Kind::Hole: out += "▫"; break;
    case Kind::Or:
      print(f.left(), out, kOr);
      out += " | ";
      print(f.right(), out, kAnd);
      break;
    case Kind::And:
      print(f.left(), out, kAnd);
      out += " & ";
      print(f.right(), out, kBinop);
      break;
    case Kind::Until:
      if (f.left().kind() == Kind::True) {
        out += "F ";
        print(f.right(), out, kUnary);
      } else {
        print(f.left(), out, kBinop + 1);
        out += " U ";
        print(f.right(), out, kBinop);
      }
      break;
    case Kind::Release:
      if (f.left().kind() == Kind::False) {
        out += "G ";
        print(f.right(), out, kUnary);
      } else {
        print(f.left(), out, kBinop + 1);
        out += " R ";
        print(f.right(), out, kBinop);
      }
      break;
    case Kind::WeakUntil:
      print(f.left(), out, kBinop + 1);
      out += " W ";
      print(f.right(), out, kBinop);
      break;
    case Kind::StrongRelease:
      print(f.left(), out, kBinop + 1);
      out += " M ";
      print(f.right(), out, kBinop);
      break;
    case Kind::Next:
      out += "X ";
      print(f.arg(), out, kUnary);
      break;
    case Kind::LimitGF:
      out += "G F ";
      print(f.arg(), out, kUnary);
      break;
    case Kind::LimitFG:
      out += "F G ";
      print(f.arg(), out, kUnary);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  print(f, out, kOr);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << render(f);
}

}  // namespace ltlnorm
