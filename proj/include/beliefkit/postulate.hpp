#pragma once

#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefkit/change.hpp"
#include "beliefkit/eliminant.hpp"
#include "beliefkit/formula.hpp"
#include "beliefkit/model.hpp"
#include "beliefkit/oracle.hpp"

namespace beliefkit {

// The Katsuno-Mendelzon update postulates plus three named identities: the
// Levi and Harper analogues connecting update and erasure, and distribution
// of update over disjunction.
enum class PostulateId {
  U1, U2, U3, U4, U5, U6, U7, U8,
  Levi, Harper, Disj,
};

inline std::string to_string(PostulateId id) {
  switch (id) {
    case PostulateId::U1: return "U1";
    case PostulateId::U2: return "U2";
    case PostulateId::U3: return "U3";
    case PostulateId::U4: return "U4";
    case PostulateId::U5: return "U5";
    case PostulateId::U6: return "U6";
    case PostulateId::U7: return "U7";
    case PostulateId::U8: return "U8";
    case PostulateId::Levi: return "LEVI";
    case PostulateId::Harper: return "HARPER";
    case PostulateId::Disj: return "DISJ";
  }
  return "?";
}

// Case-insensitive: "u2" and "levi" name the same postulates as "U2", "LEVI".
inline PostulateId parse_postulate(const std::string& s) {
  static const std::vector<std::pair<std::string, PostulateId>> table = {
      {"U1", PostulateId::U1},     {"U2", PostulateId::U2},
      {"U3", PostulateId::U3},     {"U4", PostulateId::U4},
      {"U5", PostulateId::U5},     {"U6", PostulateId::U6},
      {"U7", PostulateId::U7},     {"U8", PostulateId::U8},
      {"LEVI", PostulateId::Levi}, {"HARPER", PostulateId::Harper},
      {"DISJ", PostulateId::Disj}};
  std::string upper = s;
  for (char& c : upper)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (const auto& [name, id] : table)
    if (name == upper) return id;
  throw std::invalid_argument("unknown postulate: " + s);
}

// Number of formulas a check instance carries.  Layouts:
//   U1-U3, LEVI, HARPER: psi, mu
//   U4:                  psi1, psi2, mu1, mu2
//   U5:                  psi, mu, phi
//   U6, U7, DISJ:        psi, mu1, mu2
//   U8:                  psi1, psi2, mu
inline std::size_t postulate_arity(PostulateId id) {
  switch (id) {
    case PostulateId::U4: return 4;
    case PostulateId::U5:
    case PostulateId::U6:
    case PostulateId::U7:
    case PostulateId::Disj: return 3;
    case PostulateId::U8: return 3;
    default: return 2;
  }
}

// An update operator under test, with an optional erasure companion (needed
// only for the Levi/Harper identities).
struct UpdateOperator {
  std::string name;
  std::function<ModelSet(const Formula&, const Formula&, const VocabPtr&)>
      update;
  std::function<ModelSet(const Formula&, const Formula&, const VocabPtr&)>
      erase;
};

inline UpdateOperator make_operator(const std::string& name) {
  UpdateOperator op;
  op.name = name;
  if (name == "compositional") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_c(p, m, v).models;
    };
    op.erase = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return erase_c(p, m, v).models;
    };
  } else if (name == "guarded") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_c_guarded(p, m, v).models;
    };
  } else if (name == "pi") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_c_pi(p, m, v).models;
    };
  } else if (name == "ss") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_c_ss(p, m, v).models;
    };
  } else if (name == "triv") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_c_triv(p, m, v).models;
    };
  } else if (name == "pma") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_pma(p, m, v);
    };
  } else if (name == "ss-models") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return update_ss_models(p, m, v);
    };
  } else if (name == "syntactic") {
    op.update = [](const Formula& p, const Formula& m, const VocabPtr& v) {
      return enumerate_models(update_syntactic(p, m).to_formula(), v);
    };
  } else {
    throw std::invalid_argument("unknown operator: " + name);
  }
  return op;
}

enum class Outcome { Pass, Fail, Vacuous };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Vacuous: return "vacuous";
  }
  return "?";
}

struct Witness {
  std::vector<std::string> psi;
  std::vector<std::string> mu;
  std::optional<std::string> phi;
  std::optional<std::string> model;  // a distinguishing interpretation
};

struct Verdict {
  PostulateId postulate = PostulateId::U1;
  std::string op;
  Outcome outcome = Outcome::Pass;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<Witness> witness;

  nlohmann::json to_json() const {
    nlohmann::json j{{"postulate", to_string(postulate)},
                     {"operator", op},
                     {"outcome", to_string(outcome)},
                     {"trials", trials},
                     {"seed", seed}};
    if (witness) {
      nlohmann::json w{{"psi", witness->psi}, {"mu", witness->mu}};
      if (witness->phi) w["phi"] = *witness->phi;
      if (witness->model) w["model"] = *witness->model;
      j["witness"] = std::move(w);
    } else {
      j["witness"] = nullptr;
    }
    return j;
  }
};

namespace detail {

struct PostulateEval {
  Outcome outcome;
  std::optional<std::string> model;  // set only on fail, when one exists
};

inline std::optional<std::string> pick_distinguishing(const ModelSet& a,
                                                      const ModelSet& b) {
  ModelSet d1 = a.subtracted(b);
  if (!d1.empty()) return d1.members().front().line();
  ModelSet d2 = b.subtracted(a);
  if (!d2.empty()) return d2.members().front().line();
  return std::nullopt;
}

inline PostulateEval eval_equal(const ModelSet& a, const ModelSet& b) {
  if (a == b) return {Outcome::Pass, std::nullopt};
  return {Outcome::Fail, pick_distinguishing(a, b)};
}

inline PostulateEval eval_subset(const ModelSet& a, const ModelSet& b) {
  if (a.is_subset_of(b)) return {Outcome::Pass, std::nullopt};
  return {Outcome::Fail, pick_distinguishing(a, b)};
}

// Core evaluation.  The vocabulary is the union of the atoms of all instance
// formulas; every model set involved lives over it.
inline PostulateEval eval_postulate(PostulateId id, const UpdateOperator& op,
                                    const std::vector<Formula>& inst) {
  if (inst.size() != postulate_arity(id))
    throw std::invalid_argument(
        to_string(id) + " takes " +
        std::to_string(postulate_arity(id)) + " formulas, got " +
        std::to_string(inst.size()));

  std::set<std::string> names;
  for (const Formula& f : inst) collect_atoms(f, names);
  VocabPtr v = make_vocabulary(names);

  auto mod = [&](const Formula& f) { return enumerate_models(f, v); };
  auto upd = [&](const Formula& p, const Formula& m) {
    return op.update(p, m, v);
  };

  switch (id) {
    case PostulateId::U1:
      return eval_subset(upd(inst[0], inst[1]), mod(inst[1]));
    case PostulateId::U2: {
      if (!mod(inst[0]).is_subset_of(mod(inst[1])))
        return {Outcome::Vacuous, std::nullopt};
      return eval_equal(upd(inst[0], inst[1]), mod(inst[0]));
    }
    case PostulateId::U3: {
      if (mod(inst[0]).empty() || mod(inst[1]).empty())
        return {Outcome::Vacuous, std::nullopt};
      if (!upd(inst[0], inst[1]).empty()) return {Outcome::Pass, std::nullopt};
      return {Outcome::Fail, std::nullopt};
    }
    case PostulateId::U4: {
      if (mod(inst[0]) != mod(inst[1]) || mod(inst[2]) != mod(inst[3]))
        return {Outcome::Vacuous, std::nullopt};
      return eval_equal(upd(inst[0], inst[2]), upd(inst[1], inst[3]));
    }
    case PostulateId::U5: {
      ModelSet lhs = upd(inst[0], inst[1]).intersected(mod(inst[2]));
      ModelSet rhs = upd(inst[0], inst[1] & inst[2]);
      return eval_subset(lhs, rhs);
    }
    case PostulateId::U6: {
      ModelSet a = upd(inst[0], inst[1]);
      ModelSet b = upd(inst[0], inst[2]);
      if (!a.is_subset_of(mod(inst[2])) || !b.is_subset_of(mod(inst[1])))
        return {Outcome::Vacuous, std::nullopt};
      return eval_equal(a, b);
    }
    case PostulateId::U7: {
      if (mod(inst[0]).size() != 1) return {Outcome::Vacuous, std::nullopt};
      ModelSet lhs =
          upd(inst[0], inst[1]).intersected(upd(inst[0], inst[2]));
      ModelSet rhs = upd(inst[0], inst[1] | inst[2]);
      return eval_subset(lhs, rhs);
    }
    case PostulateId::U8: {
      ModelSet lhs = upd(inst[0] | inst[1], inst[2]);
      ModelSet rhs = upd(inst[0], inst[2]).unioned(upd(inst[1], inst[2]));
      return eval_equal(lhs, rhs);
    }
    case PostulateId::Levi: {
      if (!op.erase)
        throw std::invalid_argument(op.name +
                                    " has no erasure; LEVI needs one");
      ModelSet lhs = upd(inst[0], inst[1]);
      ModelSet rhs =
          op.erase(inst[0], !inst[1], v).intersected(mod(inst[1]));
      return eval_equal(lhs, rhs);
    }
    case PostulateId::Harper: {
      if (!op.erase)
        throw std::invalid_argument(op.name +
                                    " has no erasure; HARPER needs one");
      ModelSet lhs = op.erase(inst[0], inst[1], v);
      ModelSet rhs = mod(inst[0]).unioned(upd(inst[0], !inst[1]));
      return eval_equal(lhs, rhs);
    }
    case PostulateId::Disj: {
      ModelSet lhs = upd(inst[0], inst[1] | inst[2]);
      ModelSet rhs = upd(inst[0], inst[1]).unioned(upd(inst[0], inst[2]));
      return eval_equal(lhs, rhs);
    }
  }
  return {Outcome::Vacuous, std::nullopt};
}

inline Witness make_witness(PostulateId id, const std::vector<Formula>& inst,
                            std::optional<std::string> model) {
  Witness w;
  switch (id) {
    case PostulateId::U4:
      w.psi = {render(inst[0]), render(inst[1])};
      w.mu = {render(inst[2]), render(inst[3])};
      break;
    case PostulateId::U5:
      w.psi = {render(inst[0])};
      w.mu = {render(inst[1])};
      w.phi = render(inst[2]);
      break;
    case PostulateId::U6:
    case PostulateId::U7:
    case PostulateId::Disj:
      w.psi = {render(inst[0])};
      w.mu = {render(inst[1]), render(inst[2])};
      break;
    case PostulateId::U8:
      w.psi = {render(inst[0]), render(inst[1])};
      w.mu = {render(inst[2])};
      break;
    default:
      w.psi = {render(inst[0])};
      w.mu = {render(inst[1])};
      break;
  }
  w.model = std::move(model);
  return w;
}

}  // namespace detail

// Checks one postulate on one concrete instance.
inline Verdict check(PostulateId id, const UpdateOperator& op,
                     const std::vector<Formula>& instance) {
  detail::PostulateEval ev = detail::eval_postulate(id, op, instance);
  Verdict v;
  v.postulate = id;
  v.op = op.name;
  v.outcome = ev.outcome;
  v.trials = 1;
  if (ev.outcome == Outcome::Fail)
    v.witness = detail::make_witness(id, instance, std::move(ev.model));
  return v;
}

// Deterministic random formula over the given atoms with connective nesting
// at most max_depth.  The same (seed, atoms, depth) always yields the same
// formula on every platform: only the raw mt19937_64 stream is used.
inline Formula random_formula(std::uint64_t seed,
                              const std::vector<std::string>& atom_names,
                              int max_depth) {
  if (atom_names.empty())
    throw std::invalid_argument("random_formula needs at least one atom");
  std::mt19937_64 rng(seed);
  std::function<Formula(int)> gen = [&](int depth) -> Formula {
    unsigned roll = depth <= 0 ? 0 : static_cast<unsigned>(rng() % 100);
    if (roll < 30) {  // leaf
      if (rng() % 10 == 0) return Formula::constant(rng() % 2 == 0);
      return Formula::variable(atom_names[rng() % atom_names.size()]);
    }
    if (roll < 50) return !gen(depth - 1);
    if (roll < 75) return gen(depth - 1) & gen(depth - 1);
    return gen(depth - 1) | gen(depth - 1);
  };
  return gen(max_depth);
}

namespace detail {

inline Formula random_formula_with(std::mt19937_64& rng,
                                   const std::vector<std::string>& atom_names,
                                   int max_depth) {
  return random_formula(rng(), atom_names, max_depth);
}

// Rewrites f into a randomly mutated but logically equivalent formula.
// Mutations: commute or reassociate a connective, insert double negation,
// push or pull a De Morgan step, duplicate via idempotence, conjoin a
// tautology / disjoin a contradiction over the given atoms.
inline Formula equivalent_variant(std::mt19937_64& rng, const Formula& f,
                                  const std::vector<std::string>& atom_names) {
  std::function<Formula(const Formula&, int&)> visit =
      [&](const Formula& g, int& countdown) -> Formula {
    Formula out = g;
    if (countdown-- == 0) {
      switch (rng() % 6) {
        case 0:  // commute
          if (g.kind() == Formula::Kind::And) out = g.rhs() & g.lhs();
          else if (g.kind() == Formula::Kind::Or) out = g.rhs() | g.lhs();
          break;
        case 1:  // double negation
          out = !!g;
          break;
        case 2:  // De Morgan, either direction
          if (g.kind() == Formula::Kind::Not &&
              g.operand().kind() == Formula::Kind::And)
            out = (!g.operand().lhs()) | (!g.operand().rhs());
          else if (g.kind() == Formula::Kind::Not &&
                   g.operand().kind() == Formula::Kind::Or)
            out = (!g.operand().lhs()) & (!g.operand().rhs());
          else if (g.kind() == Formula::Kind::And)
            out = !((!g.lhs()) | (!g.rhs()));
          else if (g.kind() == Formula::Kind::Or)
            out = !((!g.lhs()) & (!g.rhs()));
          break;
        case 3:  // reassociate
          if (g.kind() == Formula::Kind::And &&
              g.lhs().kind() == Formula::Kind::And)
            out = g.lhs().lhs() & (g.lhs().rhs() & g.rhs());
          else if (g.kind() == Formula::Kind::Or &&
                   g.lhs().kind() == Formula::Kind::Or)
            out = g.lhs().lhs() | (g.lhs().rhs() | g.rhs());
          break;
        case 4:  // idempotence
          out = rng() % 2 ? (g & g) : (g | g);
          break;
        case 5: {  // neutral element over a named atom
          Formula v = Formula::variable(atom_names[rng() % atom_names.size()]);
          out = rng() % 2 ? (g & (v | !v)) : (g | (v & !v));
          break;
        }
      }
      return out;
    }
    switch (g.kind()) {
      case Formula::Kind::Not: {
        Formula c = visit(g.operand(), countdown);
        return countdown < 0 ? !c : g;
      }
      case Formula::Kind::And: {
        Formula l = visit(g.lhs(), countdown);
        if (countdown < 0) return l & g.rhs();
        Formula r = visit(g.rhs(), countdown);
        return countdown < 0 ? g.lhs() & r : g;
      }
      case Formula::Kind::Or: {
        Formula l = visit(g.lhs(), countdown);
        if (countdown < 0) return l | g.rhs();
        Formula r = visit(g.rhs(), countdown);
        return countdown < 0 ? g.lhs() | r : g;
      }
      default:
        return g;
    }
  };

  Formula out = f;
  int steps = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < steps; ++i) {
    int target = static_cast<int>(rng() % node_count(out));
    int countdown = target;
    out = visit(out, countdown);
  }
  return out;
}

// A complete formula over the atoms: the conjunction of one full literal
// per atom.
inline Formula random_complete(std::mt19937_64& rng,
                               const std::vector<std::string>& atom_names) {
  std::vector<Formula> lits;
  for (const std::string& a : atom_names) {
    Formula v = Formula::variable(a);
    lits.push_back(rng() % 2 ? v : !v);
  }
  return conjoin_all(lits);
}

// Instance generator.  Antecedent-heavy postulates get biased instances so
// that trials are not all vacuous: U2 sometimes weakens mu to psi | r, U4
// pairs each formula with an equivalent variant, U6 sometimes derives mu2
// from mu1, and U7 makes psi complete.
inline std::vector<Formula> random_instance(
    PostulateId id, std::mt19937_64& rng,
    const std::vector<std::string>& atom_names, int max_depth) {
  auto rf = [&] { return random_formula_with(rng, atom_names, max_depth); };
  switch (id) {
    case PostulateId::U2: {
      Formula psi = rf();
      Formula mu = rng() % 2 ? (psi | rf()) : rf();
      return {psi, mu};
    }
    case PostulateId::U4: {
      Formula psi = rf();
      Formula mu = rf();
      return {psi, equivalent_variant(rng, psi, atom_names), mu,
              equivalent_variant(rng, mu, atom_names)};
    }
    case PostulateId::U5:
      return {rf(), rf(), rf()};
    case PostulateId::U6: {
      Formula psi = rf();
      Formula mu1 = rf();
      Formula mu2 = rng() % 2 ? equivalent_variant(rng, mu1, atom_names) : rf();
      return {psi, mu1, mu2};
    }
    case PostulateId::U7:
      return {random_complete(rng, atom_names), rf(), rf()};
    case PostulateId::U8:
      return {rf(), rf(), rf()};
    case PostulateId::Disj:
      return {rf(), rf(), rf()};
    default:
      return {rf(), rf()};
  }
}

}  // namespace detail

// Runs `trials` independently seeded random instances.  Trial k uses a seed
// derived from (seed, k) alone, so the first failing trial index is
// reproducible regardless of execution order.  Returns the first failure,
// or an aggregate verdict: pass if any non-vacuous trial passed, vacuous if
// all trials were vacuous.
inline Verdict search_counterexample(PostulateId id, const UpdateOperator& op,
                                     const VocabPtr& vocab,
                                     std::size_t trials, std::uint64_t seed,
                                     int max_depth = 6) {
  Verdict v;
  v.postulate = id;
  v.op = op.name;
  v.seed = seed;
  std::size_t passes = 0;
  for (std::size_t k = 0; k < trials; ++k) {
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (k + 1));
    std::vector<Formula> inst =
        detail::random_instance(id, rng, vocab->atoms(), max_depth);
    detail::PostulateEval ev = detail::eval_postulate(id, op, inst);
    if (ev.outcome == Outcome::Fail) {
      v.outcome = Outcome::Fail;
      v.trials = k + 1;
      v.witness = detail::make_witness(id, inst, std::move(ev.model));
      return v;
    }
    if (ev.outcome == Outcome::Pass) ++passes;
  }
  v.trials = trials;
  v.outcome = passes > 0 ? Outcome::Pass : Outcome::Vacuous;
  return v;
}

}  // namespace beliefkit
