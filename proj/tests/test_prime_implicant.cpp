#include <catch2/catch_amalgamated.hpp>

#include "beliefkit/beliefkit.hpp"

using namespace beliefkit;

namespace {

// Every consistent term over the given atoms (each atom absent, positive or
// negative), for brute-force cross-checks on small vocabularies.
std::vector<Term> all_terms(const std::vector<std::string>& names) {
  std::vector<Term> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < names.size(); ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<Literal> lits;
    for (const std::string& a : names) {
      switch (c % 3) {
        case 1: lits.push_back(Literal::pos(a)); break;
        case 2: lits.push_back(Literal::neg(a)); break;
        default: break;
      }
      c /= 3;
    }
    out.push_back(Term(std::move(lits)));
  }
  return out;
}

std::vector<Term> brute_force_prime_implicants(const Formula& f) {
  VocabPtr vocab = vocabulary_of(f);
  // A tautology's only prime implicant is the empty conjunction; mirror the
  // library's constant-term spelling for it so term sets compare equal.
  if (tautology(f, vocab)) return {Term({Literal::top()})};
  std::vector<std::string> names(vocab->atoms());
  std::vector<Term> implicants;
  for (const Term& t : all_terms(names))
    if (entails(t.to_formula(), f, vocab)) implicants.push_back(t);
  std::vector<Term> prime;
  for (const Term& t : implicants) {
    bool minimal = true;
    for (const Term& s : implicants) {
      if (s == t || s.literals().size() >= t.literals().size()) continue;
      if (std::includes(t.literals().begin(), t.literals().end(),
                        s.literals().begin(), s.literals().end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) prime.push_back(t);
  }
  std::sort(prime.begin(), prime.end());
  return prime;
}

}  // namespace

TEST_CASE("prime implicants of simple formulas") {
  CHECK(prime_implicant_cover(parse_formula("a | b")) ==
        DnfFormula({Term({Literal::pos("a")}), Term({Literal::pos("b")})}));
  CHECK(prime_implicant_cover(parse_formula("a & (b | c)")) ==
        DnfFormula({Term({Literal::pos("a"), Literal::pos("b")}),
                    Term({Literal::pos("a"), Literal::pos("c")})}));
  // consensus: the cover can contain terms absent from any dnf of the input
  CHECK(prime_implicant_cover(parse_formula("a & b | !a & c")) ==
        DnfFormula({Term({Literal::pos("a"), Literal::pos("b")}),
                    Term({Literal::neg("a"), Literal::pos("c")}),
                    Term({Literal::pos("b"), Literal::pos("c")})}));
}

TEST_CASE("prime implicants of constants") {
  CHECK(prime_implicant_cover(parse_formula("a & !a")).empty());
  CHECK(prime_implicant_cover(Formula::constant(false)).empty());
  // tautologies report the empty conjunction as the constant term {true}
  CHECK(prime_implicant_cover(Formula::constant(true)) ==
        DnfFormula({Term({Literal::top()})}));
  CHECK(prime_implicant_cover(parse_formula("a | !a")) ==
        DnfFormula({Term({Literal::top()})}));
}

TEST_CASE("a disjunction collapses to its common consequence") {
  // both disjuncts force d, and d alone entails the disjunction
  Formula f = parse_formula("(a & d) | (!c & d) | (!a & d) | (c & d)");
  CHECK(prime_implicant_cover(f) == DnfFormula({Term({Literal::pos("d")})}));
}

TEST_CASE("the cover is equivalent to the input") {
  for (const char* text :
       {"a & b | !a & c", "(a | b) & (c | !b)", "!(a & (b | c)) | a & c",
        "a & b & c | a & b & !c | !a & b"}) {
    Formula f = parse_formula(text);
    CHECK(equivalent(prime_implicant_cover(f).to_formula(), f));
  }
}

TEST_CASE("prime_implicants match a brute-force definition") {
  for (const char* text :
       {"a | b", "a & (b | c)", "a & b | !a & c", "(a | b) & (c | !b)",
        "a & b | c & d", "(a | b) & (c | d)", "!(a & b) & (c | !d)",
        "a & !a", "a | !a"}) {
    Formula f = parse_formula(text);
    std::vector<Term> got = prime_implicants(f);
    std::sort(got.begin(), got.end());
    CHECK(got == brute_force_prime_implicants(f));
  }
}
