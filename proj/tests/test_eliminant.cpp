#include <catch2/catch_amalgamated.hpp>

#include "beliefkit/beliefkit.hpp"

using namespace beliefkit;

namespace {

DnfFormula dnf_of(const char* text) { return to_dnf(parse_formula(text)); }

}  // namespace

TEST_CASE("eliminant strips the named atoms from each term") {
  CHECK(eliminant({"b"}, dnf_of("(b & !m) | (!b & m)")) ==
        DnfFormula({Term({Literal::neg("m")}), Term({Literal::pos("m")})}));
  CHECK(eliminant({"a"}, dnf_of("a & b")) == dnf_of("b"));
  CHECK(eliminant({"a", "b"}, dnf_of("a & b")) == DnfFormula({Term({})}));
  CHECK(eliminant({}, dnf_of("a & b | c")) == dnf_of("a & b | c"));
}

TEST_CASE("eliminant drops inconsistent terms before stripping") {
  // quantifying a out of a contradiction must stay a contradiction
  CHECK(eliminant({"a"}, dnf_of("a & !a")).empty());
  CHECK(eliminant({"a"}, dnf_of("(a & !a & b) | (a & c)")) == dnf_of("c"));
}

TEST_CASE("eliminant agrees with substitution by both truth values") {
  for (const char* text :
       {"a & (b | c)", "(a | b) & (!a | c)", "!(a & b) | (a & c)"}) {
    Formula f = parse_formula(text);
    Formula subst = substitute(f, "a", Formula::constant(true)) |
                    substitute(f, "a", Formula::constant(false));
    CHECK(equivalent(eliminant({"a"}, f).to_formula(), subst));
  }
}

TEST_CASE("standard semantics factors through the eliminant") {
  // psi ss-updated by mu has exactly the models of (exists atoms(mu).psi) & mu
  for (auto [p, m] : std::vector<std::pair<const char*, const char*>>{
           {"!b & !m", "b | m"},
           {"a & (b | c)", "!a | !b"},
           {"(a | b) & !c", "c & (a | !b)"}}) {
    Formula psi = parse_formula(p);
    Formula mu = parse_formula(m);
    VocabPtr v = vocabulary_of(psi, mu);
    Formula elim = eliminant(atoms(mu), psi).to_formula();
    CHECK(update_ss_models(psi, mu, v) == enumerate_models(elim & mu, v));
  }
}

TEST_CASE("term update equals the quantify-then-conjoin form") {
  Formula psi = parse_formula("(a | b) & (!b | c)");
  Formula t = parse_formula("!a & c");
  VocabPtr v = make_vocabulary({"a", "b", "c"});
  Formula elim = eliminant(atoms(t), psi).to_formula();
  CHECK(update_c(psi, t, v).models == enumerate_models(elim & t, v));
}

TEST_CASE("syntactic update walkthrough: exclusive-or base, literal change") {
  DnfFormula out = update_syntactic(parse_formula("(b & !m) | (!b & m)"),
                                    parse_formula("b"));
  CHECK(out == DnfFormula({Term({Literal::pos("b"), Literal::neg("m")}),
                           Term({Literal::pos("b"), Literal::pos("m")})}));
  CHECK(equivalent(out.to_formula(), parse_formula("b")));
}

TEST_CASE("syntactic update walkthrough: negative base, disjunctive change") {
  DnfFormula out = update_syntactic(parse_formula("!b & !m"),
                                    parse_formula("b | m"));
  CHECK(out == DnfFormula({Term({Literal::neg("b"), Literal::pos("m")}),
                           Term({Literal::pos("b"), Literal::neg("m")})}));
}

TEST_CASE("syntactic and semantic update have the same models") {
  for (auto [p, m] : std::vector<std::pair<const char*, const char*>>{
           {"(b & !m) | (!b & m)", "b"},
           {"!b & !m", "b | m"},
           {"a & (b | c)", "(!a | b) & c"},
           {"!(a | b & c)", "a & !c | b"}}) {
    Formula psi = parse_formula(p);
    Formula mu = parse_formula(m);
    VocabPtr v = vocabulary_of(psi, mu);
    CHECK(enumerate_models(update_syntactic(psi, mu).to_formula(), v) ==
          update_c(psi, mu, v).models);
  }
}

TEST_CASE("the syntactic route converts mu by the decomposition dnf") {
  // Distribution crosses duplicated subformulas into subsumed terms; the
  // decomposition's set state fuses them instead, and the algorithm must
  // follow the decomposition to stay equal to the semantic update.
  Formula dup = parse_formula("(p | r) & (p | r)");
  CHECK(decomposition_dnf(dup) ==
        DnfFormula({Term({Literal::pos("p")}), Term({Literal::pos("r")})}));
  CHECK(to_dnf(dup).size() == 3);  // {p}, {p r}, {r}: the crossed form
  CHECK(decomposition_dnf(parse_formula("a | (b & c)")) ==
        dnf_of("a | (b & c)"));
  // constants: truth is the empty term, falsity the constant term, and a
  // conjoined truth is struck from its term
  CHECK(decomposition_dnf(Formula::constant(true)) == DnfFormula({Term({})}));
  CHECK(decomposition_dnf(Formula::constant(false)) ==
        DnfFormula({Term({Literal::bot()})}));
  CHECK(decomposition_dnf(parse_formula("a & true")) == dnf_of("a"));
}

TEST_CASE("syntactic update drops inconsistent combinations") {
  // the only combination conjoins b onto !b, so nothing survives
  CHECK(update_syntactic(parse_formula("!b"), parse_formula("b & !b")).empty());
  CHECK(update_syntactic(parse_formula("a & !a"), parse_formula("b")).empty());
}

TEST_CASE("size_report counts nodes and terms of the canonical forms") {
  DnfFormula psi = dnf_of("a & b | c");
  DnfFormula mu = dnf_of("d");
  SizeReport r = size_report(psi, mu, update_syntactic(psi, mu));
  CHECK(r.psi_nodes == 5);
  CHECK(r.psi_terms == 2);
  CHECK(r.mu_nodes == 1);
  CHECK(r.mu_terms == 1);
  CHECK(r.out_nodes == 9);  // (a & b & d) | (c & d)
  CHECK(r.out_terms == 2);
  nlohmann::json j = r.to_json();
  CHECK(j["out_nodes"] == 9);
  CHECK(j["psi_terms"] == 2);
}
