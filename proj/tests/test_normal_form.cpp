#include <catch2/catch_amalgamated.hpp>

#include "beliefkit/beliefkit.hpp"

using namespace beliefkit;

TEST_CASE("nnf pushes negation to the atoms") {
  CHECK(render(to_nnf(parse_formula("!(a & b)"))) == "!a | !b");
  CHECK(render(to_nnf(parse_formula("!(a | b)"))) == "!a & !b");
  CHECK(render(to_nnf(parse_formula("!!a"))) == "a");
  // nnf rewrites connectives in place without flattening, so the inner
  // disjunction keeps its own node and render parenthesizes it
  CHECK(render(to_nnf(parse_formula("!(a & !(b | c))"))) == "!a | (b | c)");
}

TEST_CASE("nnf folds negated constants") {
  CHECK(to_nnf(parse_formula("!true")) == Formula::constant(false));
  CHECK(to_nnf(parse_formula("!false")) == Formula::constant(true));
  CHECK(render(to_nnf(parse_formula("!(a & true)"))) == "!a | false");
}

TEST_CASE("nnf is a fixpoint") {
  for (const char* text :
       {"!(a & (b | !c))", "!(!(a | b) & c)", "a & !b | !(c | a)"}) {
    Formula once = to_nnf(parse_formula(text));
    CHECK(to_nnf(once) == once);
    CHECK(equivalent(once, parse_formula(text)));
  }
}

TEST_CASE("dnf distributes and canonicalizes") {
  CHECK(to_dnf(parse_formula("(a | b) & c")) ==
        DnfFormula({Term({Literal::pos("a"), Literal::pos("c")}),
                    Term({Literal::pos("b"), Literal::pos("c")})}));
  CHECK(to_dnf(parse_formula("a & (b | c)")) ==
        to_dnf(parse_formula("(a & b) | (a & c)")));
  // inconsistent terms are preserved, not simplified away
  CHECK(to_dnf(parse_formula("a & !a")) ==
        DnfFormula({Term({Literal::pos("a"), Literal::neg("a")})}));
}

TEST_CASE("dnf of constants") {
  // falsity keeps a single constant-literal term rather than an empty
  // term list; truth is the empty conjunction
  CHECK(to_dnf(Formula::constant(false)) ==
        DnfFormula({Term({Literal::bot()})}));
  CHECK(to_dnf(Formula::constant(true)) == DnfFormula({Term({})}));
  CHECK(to_dnf(parse_formula("a | true")) ==
        DnfFormula({Term({}), Term({Literal::pos("a")})}));
}

TEST_CASE("dnf preserves meaning") {
  for (const char* text :
       {"!(a & (b | !c)) | (a & c)", "(a | !b) & (b | c) & !(a & c)",
        "!(!(a | b) & (c | !a))"}) {
    Formula f = parse_formula(text);
    CHECK(equivalent(f, to_dnf(f).to_formula()));
  }
}

TEST_CASE("cnf distributes dually and preserves meaning") {
  CHECK(to_cnf(parse_formula("a & b | c")) ==
        CnfFormula({{Literal::pos("a"), Literal::pos("c")},
                    {Literal::pos("b"), Literal::pos("c")}}));
  for (const char* text :
       {"a & b | !c & d", "!(a | b & c)", "(a | b) & !(c & a)"}) {
    Formula f = parse_formula(text);
    CHECK(equivalent(f, to_cnf(f).to_formula()));
  }
}
