#include "sl2swc_cli/rep_expr.hpp"

#include <cctype>
#include <limits>

#include "sl2swc/constructions.hpp"
#include "sl2swc/error.hpp"

namespace sl2swc::cli {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  RepExpr parse() {
    RepExpr e;
    skip();
    std::int64_t sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    }
    e.terms.push_back(term(sign));
    while (true) {
      skip();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') error("expected '+' or '-'");
      ++pos_;
      e.terms.push_back(term(c == '-' ? -1 : 1));
    }
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(ErrorKind::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip();
    const std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected integer");
    std::int64_t v = 0;
    constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max() / 10 - 9;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > kMax) {
        pos_ = start;
        error("integer out of range");
      }
      v = v * 10 + (src_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  std::int64_t signed_integer() {
    skip();
    if (peek() == '-') {
      ++pos_;
      return -integer();
    }
    return integer();
  }

  Term term(std::int64_t sign) {
    skip();
    Term t;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.weight = integer();
      expect('*');
    }
    t.weight *= sign;
    t.atom = atom();
    return t;
  }

  std::string word() {
    std::string w;
    while (std::isalpha(static_cast<unsigned char>(peek()))) w += src_[pos_++];
    return w;
  }

  Atom atom() {
    skip();
    Atom a;
    a.position = pos_;
    const std::size_t start = pos_;
    const std::string w = word();
    if (w == "triv") {
      a.kind = Atom::Kind::Triv;
    } else if (w == "reg") {
      a.kind = Atom::Kind::Reg;
    } else if (w == "X") {
      a.kind = Atom::Kind::Irr;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected index after 'X'");
      a.value = integer();
    } else if (w == "S") {
      a.kind = Atom::Kind::Sym;
      expect('(');
      a.inner = std::make_shared<Atom>(atom());
      expect(')');
    } else if (w == "ps" || w == "cusp") {
      a.kind = w == "ps" ? Atom::Kind::Ps : Atom::Kind::Cusp;
      expect('(');
      a.value = signed_integer();
      expect(')');
    } else {
      pos_ = start;
      error(w.empty() ? "expected atom" : "unknown atom '" + w + "'");
    }
    return a;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

VirtualRep eval_atom(const Atom& a, const TablePtr& t) {
  switch (a.kind) {
    case Atom::Kind::Triv:
      return VirtualRep::trivial(t);
    case Atom::Kind::Reg:
      return VirtualRep::regular(t);
    case Atom::Kind::Irr:
      if (a.value < 1 || static_cast<std::size_t>(a.value) > t->size()) {
        fail(ErrorKind::UnknownIrreducible, "X" + std::to_string(a.value) + " (table has " +
                                                std::to_string(t->size()) + " irreducibles)");
      }
      return VirtualRep::irreducible(t, static_cast<std::size_t>(a.value - 1));
    case Atom::Kind::Sym:
      return symmetrize(eval_atom(*a.inner, t));
    case Atom::Kind::Ps:
    case Atom::Kind::Cusp:
      if (t->group()->family() != GroupFamily::SL2) {
        fail(ErrorKind::BadConstructionParams, "ps/cusp are defined on SL(2,q) only");
      }
      return a.kind == Atom::Kind::Ps ? principal_series(t, a.value) : cuspidal(t, a.value);
  }
  fail(ErrorKind::InvalidArgument, "bad atom");
}

}  // namespace

RepExpr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Triv:
      return "triv";
    case Atom::Kind::Reg:
      return "reg";
    case Atom::Kind::Irr:
      return "X" + std::to_string(a.value);
    case Atom::Kind::Sym:
      return "S(" + to_string(*a.inner) + ")";
    case Atom::Kind::Ps:
      return "ps(" + std::to_string(a.value) + ")";
    case Atom::Kind::Cusp:
      return "cusp(" + std::to_string(a.value) + ")";
  }
  return "";
}

std::string to_string(const RepExpr& e) {
  std::string out;
  for (std::size_t i = 0; i < e.terms.size(); ++i) {
    const auto& t = e.terms[i];
    const std::int64_t w = t.weight;
    if (i == 0) {
      if (w < 0) out += "-";
    } else {
      out += w < 0 ? " - " : " + ";
    }
    const std::int64_t aw = w < 0 ? -w : w;
    if (aw != 1) out += std::to_string(aw) + "*";
    out += to_string(t.atom);
  }
  return out;
}

VirtualRep evaluate(const RepExpr& e, const TablePtr& table) {
  VirtualRep acc = VirtualRep::zero(table);
  for (const auto& t : e.terms) acc = acc + eval_atom(t.atom, table) * t.weight;
  return acc;
}

VirtualRep parse_rep(std::string_view src, const TablePtr& table) { return evaluate(parse_expr(src), table); }

std::string canonical_expr(const VirtualRep& pi) {
  const std::string s = pi.to_string();
  return s == "0" ? "0*triv" : s;
}

}  // namespace sl2swc::cli
