#include "mudeg/expr.hpp"

#include <cctype>
#include <limits>

#include "mudeg/constructors.hpp"
#include "mudeg/errors.hpp"

namespace mudeg {

namespace {

using Kind = GroupExpr::Kind;

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("'x', '^', \"wr\" or end of input");
    return e;
  }

 private:
  GroupExpr expr() {
    std::vector<GroupExpr> factors{term()};
    while (times()) factors.push_back(term());
    if (factors.size() == 1) return std::move(factors.front());
    return GroupExpr{Kind::Product, {}, std::move(factors)};
  }

  GroupExpr term() {
    GroupExpr a = atom();
    skip();
    if (peek() == '^') {
      ++pos_;
      const std::size_t k = integer();
      return GroupExpr{Kind::Power, {k}, {std::move(a)}};
    }
    return a;
  }

  GroupExpr atom() {
    GroupExpr base = primary();
    skip();
    if (text_.substr(pos_, 2) == "wr") {
      pos_ += 2;
      GroupExpr top = primary();
      return GroupExpr{Kind::Wreath, {}, {std::move(base), std::move(top)}};
    }
    return base;
  }

  GroupExpr primary() {
    skip();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      GroupExpr e = expr();
      expect(')');
      return e;
    }
    if (c == 'G') {
      ++pos_;
      expect('(');
      const std::size_t m = integer();
      expect(',');
      const std::size_t p = integer();
      expect(',');
      const std::size_t n = integer();
      expect(')');
      return GroupExpr::leaf(Kind::Reflection, {m, p, n});
    }
    Kind kind;
    switch (c) {
      case 'C': kind = Kind::Cyclic; break;
      case 'S': kind = Kind::Symmetric; break;
      case 'A': kind = Kind::Alternating; break;
      case 'D': kind = Kind::Dihedral; break;
      default: fail("a group (C<n>, S<n>, A<n>, D<n>, G(m,p,n)) or '('");
    }
    ++pos_;
    return GroupExpr::leaf(kind, {integer()});
  }

  bool times() {
    skip();
    if (peek() == 'x') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 2) == "\xC3\x97") {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::size_t integer() {
    skip();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("an integer");
    std::size_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 1000000) fail("a smaller integer");
      v = v * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
    }
    return v;
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos_;
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& expected) const {
    const std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(pos_, "expected " + expected + ", found " + found);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f = saturating_mul(f, i);
  return f;
}

}  // namespace

GroupExpr parse_group(std::string_view text) {
  GroupExpr e = ExprParser(text).parse();
  validate(e);
  return e;
}

void validate(const GroupExpr& e) {
  const auto need = [](bool ok, const std::string& msg) {
    if (!ok) throw SemanticError(msg);
  };
  switch (e.kind) {
    case Kind::Cyclic: need(e.params[0] >= 1, "C" + std::to_string(e.params[0]) + ": order must be at least 1"); break;
    case Kind::Symmetric: need(e.params[0] >= 1, "S" + std::to_string(e.params[0]) + ": degree must be at least 1"); break;
    case Kind::Alternating: need(e.params[0] >= 3, "A" + std::to_string(e.params[0]) + ": degree must be at least 3"); break;
    case Kind::Dihedral: need(e.params[0] >= 3, "D" + std::to_string(e.params[0]) + ": n must be at least 3"); break;
    case Kind::Reflection: {
      const auto m = e.params[0], p = e.params[1], n = e.params[2];
      const std::string name = "G(" + std::to_string(m) + "," + std::to_string(p) + "," + std::to_string(n) + ")";
      need(m >= 1 && p >= 1, name + ": m and p must be positive");
      need(m % p == 0, name + ": p = " + std::to_string(p) + " does not divide m = " + std::to_string(m));
      need(n >= 2, name + ": n must be at least 2");
      break;
    }
    case Kind::Wreath: {
      const auto& base = e.children[0];
      const auto& top = e.children[1];
      need(base.kind == Kind::Cyclic && top.kind == Kind::Symmetric,
           "wreath products need a cyclic base and a symmetric top, e.g. C4 wr S3");
      need(base.params[0] >= 2 && top.params[0] >= 2, "wreath product needs C<m> with m >= 2 and S<n> with n >= 2");
      break;
    }
    case Kind::Product:
      for (const auto& c : e.children) validate(c);
      break;
    case Kind::Power:
      need(e.params[0] >= 1, "power exponent must be at least 1");
      validate(e.children[0]);
      break;
  }
}

std::string to_string(const GroupExpr& e) {
  const auto wrapped = [](const GroupExpr& c) {
    const bool compound = c.kind == Kind::Product || c.kind == Kind::Power || c.kind == Kind::Wreath;
    return compound ? "(" + to_string(c) + ")" : to_string(c);
  };
  switch (e.kind) {
    case Kind::Cyclic: return "C" + std::to_string(e.params[0]);
    case Kind::Symmetric: return "S" + std::to_string(e.params[0]);
    case Kind::Alternating: return "A" + std::to_string(e.params[0]);
    case Kind::Dihedral: return "D" + std::to_string(e.params[0]);
    case Kind::Reflection:
      return "G(" + std::to_string(e.params[0]) + "," + std::to_string(e.params[1]) + "," +
             std::to_string(e.params[2]) + ")";
    case Kind::Wreath: return to_string(e.children[0]) + " wr " + to_string(e.children[1]);
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) s += " x ";
        const auto& c = e.children[i];
        s += c.kind == Kind::Product ? "(" + to_string(c) + ")" : to_string(c);
      }
      return s;
    }
    case Kind::Power: return wrapped(e.children[0]) + "^" + std::to_string(e.params[0]);
  }
  return {};
}

std::uint64_t expected_order(const GroupExpr& e) {
  switch (e.kind) {
    case Kind::Cyclic: return e.params[0];
    case Kind::Symmetric: return factorial(e.params[0]);
    case Kind::Alternating: return factorial(e.params[0]) / 2;
    case Kind::Dihedral: return saturating_mul(2, e.params[0]);
    case Kind::Reflection: {
      std::uint64_t o = factorial(e.params[2]);
      for (std::size_t i = 0; i < e.params[2]; ++i) o = saturating_mul(o, e.params[0]);
      return o == std::numeric_limits<std::uint64_t>::max() ? o : o / e.params[1];
    }
    case Kind::Wreath: {
      std::uint64_t o = factorial(e.children[1].params[0]);
      for (std::size_t i = 0; i < e.children[1].params[0]; ++i) o = saturating_mul(o, e.children[0].params[0]);
      return o;
    }
    case Kind::Product: {
      std::uint64_t o = 1;
      for (const auto& c : e.children) o = saturating_mul(o, expected_order(c));
      return o;
    }
    case Kind::Power: {
      std::uint64_t o = 1;
      const std::uint64_t b = expected_order(e.children[0]);
      for (std::size_t i = 0; i < e.params[0]; ++i) o = saturating_mul(o, b);
      return o;
    }
  }
  return 0;
}

PermGroup build_group(const GroupExpr& e) {
  validate(e);
  switch (e.kind) {
    case Kind::Cyclic: return cyclic(e.params[0]);
    case Kind::Symmetric: return symmetric(e.params[0]);
    case Kind::Alternating: return alternating(e.params[0]);
    case Kind::Dihedral: return dihedral(e.params[0]);
    case Kind::Reflection: return reflection_group(e.params[0], e.params[1], e.params[2]);
    case Kind::Wreath: return wreath_cyclic(e.children[0].params[0], e.children[1].params[0]).group();
    case Kind::Product: {
      PermGroup g = build_group(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i) g = direct_product(g, build_group(e.children[i]));
      return g;
    }
    case Kind::Power: {
      const PermGroup base = build_group(e.children[0]);
      PermGroup g = base;
      for (std::size_t i = 1; i < e.params[0]; ++i) g = direct_product(g, base);
      return g;
    }
  }
  throw std::logic_error("unknown expression kind");
}

}  // namespace mudeg
