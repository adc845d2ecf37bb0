#include "precat/expr.hpp"

#include <cctype>
#include <sstream>

namespace precat {

ExprPtr mk_gen(std::string name) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Gen;
  e->gen = std::move(name);
  return e;
}

ExprPtr mk_id(ExprPtr a) {
  if (!a) throw InternalError("mk_id: null");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Id;
  e->a = std::move(a);
  return e;
}

ExprPtr mk_comp(int i, ExprPtr a, ExprPtr b) {
  if (!a || !b) throw InternalError("mk_comp: null");
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Comp;
  e->comp_dim = i;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

bool equal(const ExprPtr& x, const ExprPtr& y) {
  if (x.get() == y.get()) return true;
  if (!x || !y) return false;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case Expr::Kind::Gen:
      return x->gen == y->gen;
    case Expr::Kind::Id:
      return equal(x->a, y->a);
    case Expr::Kind::Comp:
      return x->comp_dim == y->comp_dim && equal(x->a, y->a) && equal(x->b, y->b);
  }
  return false;
}

size_t expr_size(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      return 1;
    case Expr::Kind::Id:
      return 1 + expr_size(e->a);
    case Expr::Kind::Comp:
      return 1 + expr_size(e->a) + expr_size(e->b);
  }
  return 0;
}

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '.' || c == '*' || c == '+' || c == '-';
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("expression syntax error at position " +
                     std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }

  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && name_char(s[pos])) ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }

  ExprPtr expr() {
    skip_ws();
    size_t start = pos;
    std::string head = word();
    if (head == "gen") {
      return mk_gen(word());
    }
    if (head == "id") {
      expect('(');
      ExprPtr a = expr();
      expect(')');
      return mk_id(std::move(a));
    }
    if (head.rfind("comp_", 0) == 0) {
      std::string digits = head.substr(5);
      if (digits.empty()) fail("expected a dimension after 'comp_'");
      for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          fail("bad dimension '" + digits + "'");
      int i = std::stoi(digits);
      expect('(');
      ExprPtr a = expr();
      skip_ws();
      if (pos < s.size() && s[pos] == ')') {
        pos = start;
        fail("comp_" + digits + " takes two arguments");
      }
      expect(',');
      ExprPtr b = expr();
      expect(')');
      return mk_comp(i, std::move(a), std::move(b));
    }
    pos = start;
    fail("expected 'gen', 'id' or 'comp_i'");
  }

  ExprPtr run() {
    ExprPtr e = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return e;
  }
};

void print_rec(const ExprPtr& e, std::ostream& os) {
  switch (e->kind) {
    case Expr::Kind::Gen:
      os << "gen " << e->gen;
      return;
    case Expr::Kind::Id:
      os << "id(";
      print_rec(e->a, os);
      os << ")";
      return;
    case Expr::Kind::Comp:
      os << "comp_" << e->comp_dim << "(";
      print_rec(e->a, os);
      os << ",";
      print_rec(e->b, os);
      os << ")";
      return;
  }
}

}  // namespace

ExprPtr parse_expr(const std::string& text) {
  Parser p{text};
  return p.run();
}

std::string print_expr(const ExprPtr& e) {
  std::ostringstream os;
  print_rec(e, os);
  return os.str();
}

}  // namespace precat
