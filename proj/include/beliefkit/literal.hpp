#pragma once

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefkit/formula.hpp"

namespace beliefkit {

// A literal is a signed atom.  The empty atom name is reserved for the two
// constant literals: (+, "") is top and (-, "") is bot.  Keeping constants
// inside the literal type lets term machinery treat truth-value leaves the
// same way as atoms.
class Literal {
 public:
  Literal() = default;  // top

  Literal(std::string atom, bool positive)
      : atom_(std::move(atom)), positive_(positive) {}

  static Literal top() { return Literal("", true); }
  static Literal bot() { return Literal("", false); }
  static Literal pos(std::string atom) { return Literal(std::move(atom), true); }
  static Literal neg(std::string atom) { return Literal(std::move(atom), false); }

  const std::string& atom() const { return atom_; }
  bool positive() const { return positive_; }
  bool is_constant() const { return atom_.empty(); }
  bool is_top() const { return is_constant() && positive_; }
  bool is_bot() const { return is_constant() && !positive_; }

  Literal complement() const { return Literal(atom_, !positive_); }

  Formula to_formula() const {
    if (is_constant()) return Formula::constant(positive_);
    Formula v = Formula::variable(atom_);
    return positive_ ? v : !v;
  }

  std::string str() const {
    if (is_constant()) return positive_ ? "true" : "false";
    return positive_ ? atom_ : "!" + atom_;
  }

  // Inverse of str().  Used by the JSON term format.
  static Literal parse(std::string_view s) {
    if (s == "true") return top();
    if (s == "false") return bot();
    bool positive = true;
    if (!s.empty() && s[0] == '!') {
      positive = false;
      s.remove_prefix(1);
    }
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
      throw std::invalid_argument("bad literal: " + std::string(s));
    for (char c : s)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
        throw std::invalid_argument("bad literal: " + std::string(s));
    return Literal(std::string(s), positive);
  }

  // Canonical order: by atom name, negative before positive.  The constant
  // literals (empty name) sort first.
  friend bool operator<(const Literal& x, const Literal& y) {
    if (x.atom_ != y.atom_) return x.atom_ < y.atom_;
    return x.positive_ < y.positive_;
  }
  friend bool operator==(const Literal& x, const Literal& y) {
    return x.atom_ == y.atom_ && x.positive_ == y.positive_;
  }
  friend bool operator!=(const Literal& x, const Literal& y) {
    return !(x == y);
  }

 private:
  std::string atom_;
  bool positive_ = true;
};

inline void normalize_literals(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

// True when the set, read as a conjunction, is trivially unsatisfiable:
// it contains bot or a complementary pair.
inline bool literals_consistent(const std::vector<Literal>& sorted) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].is_bot()) return false;
    if (i + 1 < sorted.size() && !sorted[i].is_constant() &&
        sorted[i].atom() == sorted[i + 1].atom())
      return false;  // sorted order puts the complementary pair adjacent
  }
  return true;
}

// A conjunction of literals, kept sorted and duplicate-free.  The empty term
// is true.  Inconsistent terms are representable on purpose: normal-form
// conversion keeps them, and they carry structural information (a term with
// a complementary pair denotes false).
class Term {
 public:
  Term() = default;

  explicit Term(std::vector<Literal> lits) : lits_(std::move(lits)) {
    normalize_literals(lits_);
  }

  Term(std::initializer_list<Literal> lits)
      : Term(std::vector<Literal>(lits)) {}

  const std::vector<Literal>& literals() const { return lits_; }
  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }

  bool consistent() const { return literals_consistent(lits_); }

  bool contains(const Literal& l) const {
    return std::binary_search(lits_.begin(), lits_.end(), l);
  }

  // Set union of two terms (conjunction of the conjunctions).
  Term merged(const Term& other) const {
    std::vector<Literal> out;
    out.reserve(lits_.size() + other.lits_.size());
    std::merge(lits_.begin(), lits_.end(), other.lits_.begin(),
               other.lits_.end(), std::back_inserter(out));
    out.erase(std::unique(out.begin(), out.end()), out.end());
    Term t;
    t.lits_ = std::move(out);
    return t;
  }

  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const Literal& l : lits_)
      if (!l.is_constant()) out.insert(l.atom());
    return out;
  }

  Term without_atoms(const std::set<std::string>& names) const {
    Term t;
    for (const Literal& l : lits_)
      if (l.is_constant() || !names.count(l.atom())) t.lits_.push_back(l);
    return t;
  }

  Formula to_formula() const {
    if (lits_.empty()) return Formula::constant(true);
    Formula acc = lits_.front().to_formula();
    for (std::size_t i = 1; i < lits_.size(); ++i)
      acc = acc & lits_[i].to_formula();
    return acc;
  }

  friend bool operator<(const Term& x, const Term& y) {
    return std::lexicographical_compare(x.lits_.begin(), x.lits_.end(),
                                        y.lits_.begin(), y.lits_.end());
  }
  friend bool operator==(const Term& x, const Term& y) {
    return x.lits_ == y.lits_;
  }
  friend bool operator!=(const Term& x, const Term& y) { return !(x == y); }

 private:
  std::vector<Literal> lits_;
};

// Disjunction of terms in canonical form: terms sorted lexicographically and
// deduplicated, literals sorted within each term.  No logical minimisation
// is ever applied; two structurally different term lists stay different even
// when equivalent.  The empty disjunction is false.
class DnfFormula {
 public:
  DnfFormula() = default;

  explicit DnfFormula(std::vector<Term> terms) : terms_(std::move(terms)) {
    std::sort(terms_.begin(), terms_.end());
    terms_.erase(std::unique(terms_.begin(), terms_.end()), terms_.end());
  }

  DnfFormula(std::initializer_list<Term> terms)
      : DnfFormula(std::vector<Term>(terms)) {}

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // First k terms in canonical order (all terms when k >= size).  Gives a
  // nested family of growing subformulas from one generated dnf.
  DnfFormula prefix(std::size_t k) const {
    if (k >= terms_.size()) return *this;
    return DnfFormula(std::vector<Term>(terms_.begin(), terms_.begin() + k));
  }

  // The optional simplify pass: drops terms containing bot or a
  // complementary pair.
  DnfFormula without_inconsistent_terms() const {
    std::vector<Term> kept;
    for (const Term& t : terms_)
      if (t.consistent()) kept.push_back(t);
    return DnfFormula(std::move(kept));
  }

  Formula to_formula() const {
    if (terms_.empty()) return Formula::constant(false);
    Formula acc = terms_.front().to_formula();
    for (std::size_t i = 1; i < terms_.size(); ++i)
      acc = acc | terms_[i].to_formula();
    return acc;
  }

  std::size_t formula_nodes() const { return node_count(to_formula()); }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Term& t : terms_) {
      nlohmann::json term = nlohmann::json::array();
      for (const Literal& l : t.literals()) term.push_back(l.str());
      arr.push_back(std::move(term));
    }
    return arr;
  }

  static DnfFormula from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("dnf json: expected array");
    std::vector<Term> terms;
    for (const auto& jt : arr) {
      if (!jt.is_array())
        throw std::invalid_argument("dnf json: expected array of arrays");
      std::vector<Literal> lits;
      for (const auto& jl : jt)
        lits.push_back(Literal::parse(jl.get<std::string>()));
      terms.push_back(Term(std::move(lits)));
    }
    return DnfFormula(std::move(terms));
  }

  friend bool operator==(const DnfFormula& x, const DnfFormula& y) {
    return x.terms_ == y.terms_;
  }
  friend bool operator!=(const DnfFormula& x, const DnfFormula& y) {
    return !(x == y);
  }

 private:
  std::vector<Term> terms_;
};

// Conjunction of clauses, each clause a disjunction of literals.  Same
// canonical ordering discipline as DnfFormula.  The empty conjunction is
// true; an empty clause is false.
class CnfFormula {
 public:
  CnfFormula() = default;

  explicit CnfFormula(std::vector<std::vector<Literal>> clauses)
      : clauses_(std::move(clauses)) {
    for (auto& c : clauses_) normalize_literals(c);
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()),
                   clauses_.end());
  }

  const std::vector<std::vector<Literal>>& clauses() const { return clauses_; }
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }

  Formula to_formula() const {
    if (clauses_.empty()) return Formula::constant(true);
    Formula acc = clause_formula(clauses_.front());
    for (std::size_t i = 1; i < clauses_.size(); ++i)
      acc = acc & clause_formula(clauses_[i]);
    return acc;
  }

  friend bool operator==(const CnfFormula& x, const CnfFormula& y) {
    return x.clauses_ == y.clauses_;
  }
  friend bool operator!=(const CnfFormula& x, const CnfFormula& y) {
    return !(x == y);
  }

 private:
  static Formula clause_formula(const std::vector<Literal>& clause) {
    if (clause.empty()) return Formula::constant(false);
    Formula acc = clause.front().to_formula();
    for (std::size_t i = 1; i < clause.size(); ++i)
      acc = acc | clause[i].to_formula();
    return acc;
  }

  std::vector<std::vector<Literal>> clauses_;
};

}  // namespace beliefkit
