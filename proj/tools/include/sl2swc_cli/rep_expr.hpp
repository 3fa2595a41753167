#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "sl2swc/characters.hpp"

namespace sl2swc::cli {

struct Atom {
  enum class Kind { Triv, Reg, Irr, Sym, Ps, Cusp };
  Kind kind = Kind::Triv;
  std::int64_t value = 0;        // k of X<k>, exponent of ps/cusp
  std::shared_ptr<Atom> inner;   // S(...)
  std::size_t position = 0;      // offset in the source, for error messages
};

struct Term {
  std::int64_t weight = 1;
  Atom atom;
};

// expr := ['-'] term (('+'|'-') term)* ; term := [INT '*'] atom
struct RepExpr {
  std::vector<Term> terms;
};

RepExpr parse_expr(std::string_view src);
std::string to_string(const Atom& a);
std::string to_string(const RepExpr& e);

// Evaluates over an SL(2,q) table (ps/cusp) or any table (triv, reg, X<k>, S).
VirtualRep evaluate(const RepExpr& e, const TablePtr& table);
VirtualRep parse_rep(std::string_view src, const TablePtr& table);

// A canonical expression for a virtual representation, over X-labels.
std::string canonical_expr(const VirtualRep& pi);

}  // namespace sl2swc::cli
