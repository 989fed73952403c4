#include <catch2/catch_amalgamated.hpp>

#include "beliefkit/beliefkit.hpp"

using namespace beliefkit;

namespace {

bool clause_is_tautological(const std::vector<Literal>& clause) {
  for (const Literal& l : clause)
    for (const Literal& r : clause)
      if (l == r.complement()) return true;
  return false;
}

}  // namespace

TEST_CASE("blowup instances exist for n in 1..4 only") {
  CHECK_THROWS_AS(gen_blowup(0), std::invalid_argument);
  CHECK_THROWS_AS(gen_blowup(5), std::invalid_argument);
  CHECK(gen_blowup(1).n == 1);
}

TEST_CASE("n=1: four 3-literal multisets over the single atom") {
  BlowupInstance inst = gen_blowup(1);
  REQUIRE(inst.clauses.size() == 4);
  CHECK(inst.selectors == std::vector<std::string>{"c1", "c2", "c3", "c4"});
  CHECK(render(inst.psi) ==
        "(x1 | x1 | x1 | !c1) & (x1 | x1 | !x1 | !c2) & "
        "(x1 | !x1 | !x1 | !c3) & (!x1 | !x1 | !x1 | !c4)");
  CHECK(render(inst.mu) == "!x1 & !y1");
  CHECK(inst.vocab->atoms() ==
        std::vector<std::string>{"c1", "c2", "c3", "c4", "x1", "y1"});
}

TEST_CASE("n=2: every clause of three distinct literals is tautological") {
  BlowupInstance inst = gen_blowup(2);
  REQUIRE(inst.clauses.size() == 4);
  for (const auto& clause : inst.clauses) {
    CHECK(clause.size() == 3);
    CHECK(clause_is_tautological(clause));
  }
  CHECK(equivalent(inst.mu, parse_formula("!x1 & !y1 & !x2 & !y2")));
}

TEST_CASE("n>=3: three distinct atoms with every sign pattern") {
  BlowupInstance inst = gen_blowup(3);
  REQUIRE(inst.clauses.size() == 8);  // one atom triple, 2^3 sign patterns
  CHECK(gen_blowup(4).clauses.size() == 32);  // four triples, 8 signs each
  std::set<std::vector<Literal>> seen;
  for (const auto& clause : inst.clauses) {
    REQUIRE(clause.size() == 3);
    std::set<std::string> names;
    for (const Literal& l : clause) names.insert(l.atom());
    CHECK(names.size() == 3);  // atoms pairwise distinct
    CHECK(seen.insert(clause).second);
  }
}

TEST_CASE("omega_beta sets exactly the chosen selectors") {
  BlowupInstance inst = gen_blowup(1);
  Interpretation w = omega_beta(inst, {0});
  CHECK(w.line() == "c1 !c2 !c3 !c4 !x1 !y1");
  CHECK(omega_beta(inst, {}).bits() == 0);
  CHECK_THROWS_AS(omega_beta(inst, {9}), std::out_of_range);
}

TEST_CASE("beta_formula conjoins the selected clauses") {
  BlowupInstance inst = gen_blowup(1);
  CHECK(equivalent(beta_formula(inst, {0}), parse_formula("x1")));
  CHECK(beta_formula(inst, {}) == Formula::constant(true));
  CHECK_FALSE(satisfiable(beta_formula(inst, {0, 3})));
}

TEST_CASE("beta satisfiability by enumeration") {
  BlowupInstance inst = gen_blowup(1);
  CHECK(beta_satisfiable(inst, {}));
  CHECK(beta_satisfiable(inst, {0}));
  CHECK(beta_satisfiable(inst, {1, 2}));   // both tautological
  CHECK_FALSE(beta_satisfiable(inst, {0, 3}));  // x1 and !x1
}

TEST_CASE("membership in the update encodes satisfiability, exhaustively at n=1") {
  BlowupInstance inst = gen_blowup(1);
  Formula updated = update_syntactic(inst.psi, inst.mu).to_formula();
  for (std::size_t mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> beta;
    for (std::size_t i = 0; i < 4; ++i)
      if (mask >> i & 1) beta.push_back(i);
    CHECK(beta_satisfiable(inst, beta) == holds(omega_beta(inst, beta), updated));
  }
}

TEST_CASE("random terms are distinct, consistent and within bounds") {
  std::vector<Term> terms = random_terms(5, 30, 2, 4, 6);
  REQUIRE(terms.size() == 30);
  std::set<Term> unique(terms.begin(), terms.end());
  CHECK(unique.size() == 30);
  for (const Term& t : terms) {
    CHECK(t.consistent());
    CHECK(t.literals().size() >= 2);
    CHECK(t.literals().size() <= 4);
    for (const Literal& l : t.literals()) CHECK(l.atom() <= "f");
  }
  CHECK(random_terms(5, 30, 2, 4, 6) == terms);  // deterministic
  // two atoms only admit eight consistent width-<=2 terms
  CHECK_THROWS_AS(random_terms(1, 100, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("random dnf is the canonical form of the generated terms") {
  std::vector<Term> terms = random_terms(9, 12, 1, 3, 5);
  CHECK(random_dnf(9, 12, 1, 3, 5) == DnfFormula(terms));
  CHECK(random_dnf(9, 12, 1, 3, 5).size() == 12);
}
