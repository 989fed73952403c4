#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefkit/formula.hpp"
#include "beliefkit/literal.hpp"
#include "beliefkit/normal_form.hpp"

namespace beliefkit {

// The eliminant of psi with respect to a set of atoms P: every consistent
// dnf term of psi with its P-literals struck out.  It is the strongest
// P-free consequence of psi in dnf (existential quantification over P).
//
// Inconsistent input terms are dropped before stripping: they are false
// disjuncts, and stripping the very literals that made them false would
// silently turn them into satisfiable terms.
inline DnfFormula eliminant(const std::set<std::string>& names,
                            const DnfFormula& psi) {
  std::vector<Term> out;
  for (const Term& t : psi.terms()) {
    if (!t.consistent()) continue;
    out.push_back(t.without_atoms(names));
  }
  return DnfFormula(std::move(out));
}

inline DnfFormula eliminant(const std::set<std::string>& names,
                            const Formula& psi) {
  return eliminant(names, to_dnf(psi));
}

// Symbolic update.  For each term t of mu: free psi of t's atoms, then
// conjoin t onto every surviving term.  Conjunctions that come out
// inconsistent are dropped; everything else is kept verbatim, in the order
// the algorithm produces it (duplicates included).
inline std::vector<Term> update_syntactic_terms(const DnfFormula& psi,
                                                const DnfFormula& mu) {
  std::vector<Term> out;
  for (const Term& t : mu.terms()) {
    DnfFormula freed = eliminant(t.atoms(), psi);
    for (const Term& e : freed.terms()) {
      Term merged = e.merged(t);
      if (merged.consistent()) out.push_back(std::move(merged));
    }
  }
  return out;
}

// The canonical form of the same result.  Its output is itself a dnf in
// canonical form, so it can be fed straight back in as the next psi.
inline DnfFormula update_syntactic(const DnfFormula& psi,
                                   const DnfFormula& mu) {
  return DnfFormula(update_syntactic_terms(psi, mu));
}

// The raw-formula entry point lives with the decomposition engine (see
// update_syntactic in change.hpp): mu must be converted by the
// decomposition's own dnf for the algorithm to agree with the semantic
// update on every input.

// Node counts of the dnf inputs and output (sizes of the canonical formula
// renderings), plus term counts.  This is the raw material for the size
// bound out <= C * psi * mu on dnf inputs.
struct SizeReport {
  std::size_t psi_nodes = 0;
  std::size_t mu_nodes = 0;
  std::size_t out_nodes = 0;
  std::size_t psi_terms = 0;
  std::size_t mu_terms = 0;
  std::size_t out_terms = 0;

  nlohmann::json to_json() const {
    return nlohmann::json{{"psi_nodes", psi_nodes}, {"mu_nodes", mu_nodes},
                          {"out_nodes", out_nodes}, {"psi_terms", psi_terms},
                          {"mu_terms", mu_terms},   {"out_terms", out_terms}};
  }
};

inline SizeReport size_report(const DnfFormula& psi, const DnfFormula& mu,
                              const DnfFormula& out) {
  SizeReport r;
  r.psi_nodes = psi.formula_nodes();
  r.mu_nodes = mu.formula_nodes();
  r.out_nodes = out.formula_nodes();
  r.psi_terms = psi.size();
  r.mu_terms = mu.size();
  r.out_terms = out.size();
  return r;
}

}  // namespace beliefkit
