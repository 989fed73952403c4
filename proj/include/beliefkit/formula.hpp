#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace beliefkit {

// Immutable propositional formula over named atoms.  Nodes are shared, so
// copies are cheap and substitution/rewrites reuse untouched subtrees.
//
// Only five node kinds exist: implication and biconditional are surface
// syntax that the parser rewrites away (see parse.hpp).
class Formula {
 public:
  enum class Kind : unsigned char { Const, Var, Not, And, Or };

  // Default is the constant false; having a valid default keeps Formula a
  // regular value type.
  Formula() : node_(false_node()) {}

  static Formula constant(bool value) {
    return value ? Formula(true_node()) : Formula(false_node());
  }

  static Formula variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->name = std::move(name);
    return Formula(std::move(n));
  }

  Kind kind() const { return node_->kind; }

  bool value() const { return node_->value; }              // Kind::Const
  const std::string& name() const { return node_->name; }  // Kind::Var
  Formula operand() const { return Formula(node_->a); }    // Kind::Not
  Formula lhs() const { return Formula(node_->a); }        // Kind::And / Or
  Formula rhs() const { return Formula(node_->b); }

  bool is_const(bool v) const { return kind() == Kind::Const && value() == v; }

  friend Formula operator!(const Formula& f) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->a = f.node_;
    return Formula(std::move(n));
  }

  friend Formula operator&(const Formula& l, const Formula& r) {
    return binary(Kind::And, l, r);
  }

  friend Formula operator|(const Formula& l, const Formula& r) {
    return binary(Kind::Or, l, r);
  }

  // Total structural order: by kind, then payload, then children.  This is
  // the order used for canonical formula sets; it has no semantic content.
  static int compare(const Formula& x, const Formula& y) {
    if (x.node_ == y.node_) return 0;
    if (x.kind() != y.kind()) return x.kind() < y.kind() ? -1 : 1;
    switch (x.kind()) {
      case Kind::Const:
        if (x.value() == y.value()) return 0;
        return x.value() ? 1 : -1;
      case Kind::Var:
        return x.name().compare(y.name()) < 0   ? -1
               : x.name().compare(y.name()) > 0 ? 1
                                                : 0;
      case Kind::Not:
        return compare(x.operand(), y.operand());
      case Kind::And:
      case Kind::Or: {
        int c = compare(x.lhs(), y.lhs());
        return c != 0 ? c : compare(x.rhs(), y.rhs());
      }
    }
    return 0;
  }

  friend bool operator==(const Formula& x, const Formula& y) {
    return compare(x, y) == 0;
  }
  friend bool operator!=(const Formula& x, const Formula& y) {
    return compare(x, y) != 0;
  }
  friend bool operator<(const Formula& x, const Formula& y) {
    return compare(x, y) < 0;
  }

 private:
  struct Node {
    Kind kind = Kind::Const;
    bool value = false;
    std::string name;
    std::shared_ptr<const Node> a, b;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula binary(Kind k, const Formula& l, const Formula& r) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->a = l.node_;
    n->b = r.node_;
    return Formula(std::move(n));
  }

  static const std::shared_ptr<const Node>& false_node() {
    static const std::shared_ptr<const Node> n = [] {
      auto m = std::make_shared<Node>();
      m->kind = Kind::Const;
      m->value = false;
      return m;
    }();
    return n;
  }

  static const std::shared_ptr<const Node>& true_node() {
    static const std::shared_ptr<const Node> n = [] {
      auto m = std::make_shared<Node>();
      m->kind = Kind::Const;
      m->value = true;
      return m;
    }();
    return n;
  }

  std::shared_ptr<const Node> node_;
};

inline void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return;
    case Formula::Kind::Var:
      out.insert(f.name());
      return;
    case Formula::Kind::Not:
      collect_atoms(f.operand(), out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      collect_atoms(f.lhs(), out);
      collect_atoms(f.rhs(), out);
      return;
  }
}

inline std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

// Connective nesting depth: atoms and constants are depth 0.
inline int depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var:
      return 0;
    case Formula::Kind::Not:
      return 1 + depth(f.operand());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + std::max(depth(f.lhs()), depth(f.rhs()));
  }
  return 0;
}

inline std::size_t node_count(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var:
      return 1;
    case Formula::Kind::Not:
      return 1 + node_count(f.operand());
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return 1 + node_count(f.lhs()) + node_count(f.rhs());
  }
  return 1;
}

// Replaces every occurrence of the atom `name` by `g`.
inline Formula substitute(const Formula& f, const std::string& name,
                          const Formula& g) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f;
    case Formula::Kind::Var:
      return f.name() == name ? g : f;
    case Formula::Kind::Not: {
      Formula sub = substitute(f.operand(), name, g);
      return sub == f.operand() ? f : !sub;
    }
    case Formula::Kind::And: {
      Formula l = substitute(f.lhs(), name, g);
      Formula r = substitute(f.rhs(), name, g);
      return (l == f.lhs() && r == f.rhs()) ? f : (l & r);
    }
    case Formula::Kind::Or: {
      Formula l = substitute(f.lhs(), name, g);
      Formula r = substitute(f.rhs(), name, g);
      return (l == f.lhs() && r == f.rhs()) ? f : (l | r);
    }
  }
  return f;
}

// Left fold; the conjunction of nothing is true, the disjunction false.
inline Formula conjoin_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::constant(true);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = acc & fs[i];
  return acc;
}

inline Formula disjoin_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::constant(false);
  Formula acc = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) acc = acc | fs[i];
  return acc;
}

namespace detail {

// Rendering inserts parentheses so that parsing the result reproduces the
// tree exactly: `&` and `|` print left-associated, so a right child at the
// same precedence level is always parenthesised.
inline void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      out += f.value() ? "true" : "false";
      return;
    case Formula::Kind::Var:
      out += f.name();
      return;
    case Formula::Kind::Not: {
      out += '!';
      Formula c = f.operand();
      bool paren = c.kind() == Formula::Kind::And ||
                   c.kind() == Formula::Kind::Or;
      if (paren) out += '(';
      render_into(c, out);
      if (paren) out += ')';
      return;
    }
    case Formula::Kind::And: {
      Formula l = f.lhs(), r = f.rhs();
      bool lp = l.kind() == Formula::Kind::Or;
      bool rp = r.kind() == Formula::Kind::Or || r.kind() == Formula::Kind::And;
      if (lp) out += '(';
      render_into(l, out);
      if (lp) out += ')';
      out += " & ";
      if (rp) out += '(';
      render_into(r, out);
      if (rp) out += ')';
      return;
    }
    case Formula::Kind::Or: {
      Formula l = f.lhs(), r = f.rhs();
      bool rp = r.kind() == Formula::Kind::Or;
      render_into(l, out);
      out += " | ";
      if (rp) out += '(';
      render_into(r, out);
      if (rp) out += ')';
      return;
    }
  }
}

}  // namespace detail

inline std::string render(const Formula& f) {
  std::string out;
  detail::render_into(f, out);
  return out;
}

}  // namespace beliefkit
