#ifndef PRECAT_EXPR_HPP
#define PRECAT_EXPR_HPP

#include <memory>
#include <string>

#include "precat/errors.hpp"

namespace precat {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// A formal composition expression: Gen(name) | Id(e) | Comp(i, e, e).
struct Expr {
  enum class Kind { Gen, Id, Comp };
  Kind kind;
  std::string gen;  // Gen
  ExprPtr a;        // Id, Comp
  ExprPtr b;        // Comp
  int comp_dim = -1;
};

ExprPtr mk_gen(std::string name);
ExprPtr mk_id(ExprPtr a);
ExprPtr mk_comp(int i, ExprPtr a, ExprPtr b);

bool equal(const ExprPtr& x, const ExprPtr& y);
size_t expr_size(const ExprPtr& e);

// Text grammar:  gen NAME | id(E) | comp_i(E,E)
// Names may contain letters, digits and  _ ' . * + -  characters.
ExprPtr parse_expr(const std::string& text);  // throws InputError with position
std::string print_expr(const ExprPtr& e);

}  // namespace precat

#endif
