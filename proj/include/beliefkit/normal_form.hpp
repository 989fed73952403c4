#pragma once

#include <vector>

#include "beliefkit/formula.hpp"
#include "beliefkit/literal.hpp"

namespace beliefkit {

// Negation normal form: negation pushed onto atoms, double negation
// eliminated, negated constants folded.  And/Or structure is otherwise
// preserved, including argument order.
inline Formula to_nnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
    case Formula::Kind::Var:
      return f;
    case Formula::Kind::And:
      return to_nnf(f.lhs()) & to_nnf(f.rhs());
    case Formula::Kind::Or:
      return to_nnf(f.lhs()) | to_nnf(f.rhs());
    case Formula::Kind::Not: {
      Formula c = f.operand();
      switch (c.kind()) {
        case Formula::Kind::Const:
          return Formula::constant(!c.value());
        case Formula::Kind::Var:
          return f;
        case Formula::Kind::Not:
          return to_nnf(c.operand());
        case Formula::Kind::And:
          return to_nnf(!c.lhs()) | to_nnf(!c.rhs());
        case Formula::Kind::Or:
          return to_nnf(!c.lhs()) & to_nnf(!c.rhs());
      }
    }
  }
  return f;
}

namespace detail {

// One fixed conversion procedure: NNF first, then distribution.  Constants
// map to the neutral term ({} for true) or the absorbing literal ({false}
// for false), so inconsistent terms survive conversion instead of being
// simplified away.
inline std::vector<Term> dnf_terms(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      if (f.value()) return {Term{}};
      return {Term{Literal::bot()}};
    case Formula::Kind::Var:
      return {Term{Literal::pos(f.name())}};
    case Formula::Kind::Not: {
      Formula c = f.operand();
      if (c.kind() == Formula::Kind::Var)
        return {Term{Literal::neg(c.name())}};
      // Only reachable on non-NNF input; normalise and retry.
      return dnf_terms(to_nnf(f));
    }
    case Formula::Kind::Or: {
      std::vector<Term> out = dnf_terms(f.lhs());
      std::vector<Term> r = dnf_terms(f.rhs());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Formula::Kind::And: {
      std::vector<Term> l = dnf_terms(f.lhs());
      std::vector<Term> r = dnf_terms(f.rhs());
      std::vector<Term> out;
      out.reserve(l.size() * r.size());
      for (const Term& a : l)
        for (const Term& b : r) out.push_back(a.merged(b));
      return out;
    }
  }
  return {};
}

inline std::vector<std::vector<Literal>> cnf_clauses(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      if (f.value()) return {{Literal::top()}};
      return {std::vector<Literal>{}};
    case Formula::Kind::Var:
      return {{Literal::pos(f.name())}};
    case Formula::Kind::Not: {
      Formula c = f.operand();
      if (c.kind() == Formula::Kind::Var)
        return {{Literal::neg(c.name())}};
      return cnf_clauses(to_nnf(f));
    }
    case Formula::Kind::And: {
      std::vector<std::vector<Literal>> out = cnf_clauses(f.lhs());
      std::vector<std::vector<Literal>> r = cnf_clauses(f.rhs());
      out.insert(out.end(), r.begin(), r.end());
      return out;
    }
    case Formula::Kind::Or: {
      std::vector<std::vector<Literal>> l = cnf_clauses(f.lhs());
      std::vector<std::vector<Literal>> r = cnf_clauses(f.rhs());
      std::vector<std::vector<Literal>> out;
      out.reserve(l.size() * r.size());
      for (const auto& a : l)
        for (const auto& b : r) {
          std::vector<Literal> merged = a;
          merged.insert(merged.end(), b.begin(), b.end());
          out.push_back(std::move(merged));
        }
      return out;
    }
  }
  return {};
}

}  // namespace detail

inline DnfFormula to_dnf(const Formula& f) {
  return DnfFormula(detail::dnf_terms(to_nnf(f)));
}

inline CnfFormula to_cnf(const Formula& f) {
  return CnfFormula(detail::cnf_clauses(to_nnf(f)));
}

}  // namespace beliefkit
