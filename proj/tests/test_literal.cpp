#include <catch2/catch_amalgamated.hpp>

#include "beliefkit/beliefkit.hpp"

using namespace beliefkit;

TEST_CASE("literal parse, str and complement") {
  Literal p = Literal::parse("p");
  Literal np = Literal::parse("!p");
  CHECK(p.atom() == "p");
  CHECK(p.positive());
  CHECK_FALSE(np.positive());
  CHECK(p.complement() == np);
  CHECK(np.complement() == p);
  CHECK(p.str() == "p");
  CHECK(np.str() == "!p");
  CHECK_THROWS_AS(Literal::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Literal::parse("!"), std::invalid_argument);
}

TEST_CASE("constant literals") {
  CHECK(Literal::top().is_top());
  CHECK(Literal::bot().is_bot());
  CHECK(Literal::top().complement() == Literal::bot());
  CHECK(Literal::top().is_constant());
  CHECK_FALSE(Literal::pos("a").is_constant());
}

TEST_CASE("terms normalize their literal lists") {
  Term t({Literal::pos("b"), Literal::pos("a"), Literal::pos("b")});
  REQUIRE(t.literals().size() == 2);
  CHECK(t.literals()[0] == Literal::pos("a"));
  CHECK(t.literals()[1] == Literal::pos("b"));
  CHECK(t == Term({Literal::pos("a"), Literal::pos("b")}));
}

TEST_CASE("term consistency") {
  CHECK(Term({Literal::pos("a"), Literal::neg("b")}).consistent());
  CHECK_FALSE(Term({Literal::pos("a"), Literal::neg("a")}).consistent());
  CHECK_FALSE(Term({Literal::bot()}).consistent());
  CHECK(Term({}).consistent());  // the empty term is top
}

TEST_CASE("without_atoms strips both polarities") {
  Term t({Literal::pos("a"), Literal::neg("b"), Literal::pos("c")});
  Term s = t.without_atoms({"a", "b"});
  CHECK(s == Term({Literal::pos("c")}));
  CHECK(t.without_atoms({"z"}) == t);
  CHECK(t.without_atoms({"a", "b", "c"}) == Term({}));
}

TEST_CASE("term to_formula") {
  CHECK(render(Term({Literal::pos("a"), Literal::neg("b")}).to_formula()) ==
        "a & !b");
  CHECK(Term({}).to_formula() == Formula::constant(true));
}

TEST_CASE("dnf formulas canonicalize term lists") {
  Term ab({Literal::pos("a"), Literal::pos("b")});
  Term c({Literal::pos("c")});
  DnfFormula d({c, ab, c});
  REQUIRE(d.size() == 2);
  CHECK(d.terms()[0] == ab);  // sorted, deduplicated
  CHECK(d == DnfFormula({ab, c}));
  CHECK(DnfFormula().empty());
  CHECK(DnfFormula().to_formula() == Formula::constant(false));
}

TEST_CASE("dnf prefix gives nested subformulas") {
  Term a({Literal::pos("a")});
  Term b({Literal::pos("b")});
  Term c({Literal::pos("c")});
  DnfFormula d({a, b, c});
  CHECK(d.prefix(0).empty());
  CHECK(d.prefix(2) == DnfFormula({a, b}));
  CHECK(d.prefix(3) == d);
  CHECK(d.prefix(99) == d);
}

TEST_CASE("without_inconsistent_terms drops false disjuncts only") {
  Term good({Literal::pos("a")});
  Term bad({Literal::pos("b"), Literal::neg("b")});
  DnfFormula d({good, bad});
  CHECK(d.size() == 2);
  CHECK(d.without_inconsistent_terms() == DnfFormula({good}));
}

TEST_CASE("dnf json round trip") {
  DnfFormula d = to_dnf(parse_formula("a & !b | c"));
  nlohmann::json j = d.to_json();
  CHECK(j.dump() == R"([["a","!b"],["c"]])");
  CHECK(DnfFormula::from_json(j) == d);
  CHECK_THROWS_AS(DnfFormula::from_json(nlohmann::json{{"x", 1}}),
                  std::invalid_argument);
}

TEST_CASE("cnf formulas canonicalize clause lists") {
  CnfFormula f({{Literal::pos("b"), Literal::pos("a")},
                {Literal::pos("a"), Literal::pos("b")}});
  REQUIRE(f.size() == 1);
  CHECK(render(f.to_formula()) == "a | b");
  CHECK(CnfFormula().to_formula() == Formula::constant(true));
}
