// Command-line front end for the belief-change library: run any update /
// erasure / forgetting / revision engine on formula inputs, check KM
// postulates, and generate or measure the benchmark families.
//
// Exit codes: 0 ok, 1 usage or formula parse error, 2 semantic error
// (vocabulary cap, unknown atom, out-of-range parameter), 3 cross-engine
// mismatch under --verify.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beliefkit/beliefkit.hpp"

namespace bk = beliefkit;

namespace {

constexpr const char* kClauseConvention =
    "clause convention: n=1 draws 3-literal multisets over {x1,!x1}; n=2 "
    "draws three distinct literals over X; n>=3 draws three distinct atoms "
    "with every sign pattern";

// A formula argument is either inline text or @path-to-file.
bk::Formula read_formula(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1), std::ios::binary);
    if (!in)
      throw std::runtime_error("cannot read formula file: " + arg.substr(1));
    std::ostringstream ss;
    ss << in.rdbuf();
    return bk::parse_formula(ss.str());
  }
  return bk::parse_formula(arg);
}

std::set<std::string> split_names(const std::string& csv) {
  std::set<std::string> out;
  std::string cur;
  std::istringstream ss(csv);
  while (std::getline(ss, cur, ','))
    if (!cur.empty()) out.insert(cur);
  return out;
}

bk::VocabPtr build_vocab(const std::vector<bk::Formula>& formulas,
                         const std::string& extra_csv) {
  std::set<std::string> names = split_names(extra_csv);
  for (const bk::Formula& f : formulas) {
    std::set<std::string> a = bk::atoms(f);
    names.insert(a.begin(), a.end());
  }
  return bk::make_vocabulary(names);
}

void print_result(const bk::DnfFormula& dnf, const bk::ModelSet& models,
                  const std::string& format) {
  if (format == "models") {
    std::cout << models.lines();
  } else if (format == "dnf") {
    std::cout << dnf.to_json().dump() << "\n";
  } else {
    std::cout << bk::render(dnf.to_formula()) << "\n";
  }
}

void print_result(const bk::ChangeResult& r, const std::string& format) {
  print_result(r.formula, r.models, format);
}

void print_result(const bk::ModelSet& ms, const std::string& format) {
  print_result(ms.to_dnf(), ms, format);
}

struct CommonArgs {
  std::string psi;
  std::string mu;
  std::string engine;
  std::string vocab_csv;
  std::string format = "formula";
  std::uint64_t seed = 0;
  bool seeded = false;
  bool verify = false;
};

void add_format_flags(CLI::App* sub, CommonArgs& a) {
  sub->add_option("--vocab", a.vocab_csv,
                  "extra atoms (comma separated), unioned with the formulas'");
  sub->add_option("--format", a.format, "output format")
      ->check(CLI::IsMember({"formula", "dnf", "models"}));
}

bk::DecomposeOptions decompose_options(const CommonArgs& a) {
  bk::DecomposeOptions opt;
  if (a.seeded) {
    opt.randomized = true;
    opt.seed = a.seed;
  }
  return opt;
}

int run_update(const CommonArgs& a) {
  bk::Formula psi = read_formula(a.psi);
  bk::Formula mu = read_formula(a.mu);
  bk::VocabPtr vocab = build_vocab({psi, mu}, a.vocab_csv);
  bk::DecomposeOptions opt = decompose_options(a);

  if (a.engine == "compositional") {
    print_result(bk::update_c(psi, mu, vocab, opt), a.format);
  } else if (a.engine == "guarded") {
    print_result(bk::update_c_guarded(psi, mu, vocab), a.format);
  } else if (a.engine == "pi") {
    print_result(bk::update_c_pi(psi, mu, vocab), a.format);
  } else if (a.engine == "ss") {
    print_result(bk::update_c_ss(psi, mu, vocab), a.format);
  } else if (a.engine == "triv") {
    print_result(bk::update_c_triv(psi, mu, vocab), a.format);
  } else if (a.engine == "pma") {
    print_result(bk::update_pma(psi, mu, vocab), a.format);
  } else if (a.engine == "ss-models") {
    print_result(bk::update_ss_models(psi, mu, vocab), a.format);
  } else {
    bk::DnfFormula out = bk::update_syntactic(psi, mu);
    print_result(out, bk::enumerate_models(out.to_formula(), vocab), a.format);
  }

  if (a.verify) {
    bk::ModelSet semantic = bk::update_c(psi, mu, vocab, opt).models;
    bk::ModelSet syntactic = bk::enumerate_models(
        bk::update_syntactic(psi, mu).to_formula(), vocab);
    if (!(semantic == syntactic)) {
      std::cerr << "verify: semantic and syntactic update disagree\n"
                << "  semantic:  " << bk::render(semantic.to_formula()) << "\n"
                << "  syntactic: " << bk::render(syntactic.to_formula())
                << "\n";
      return 3;
    }
  }
  return 0;
}

int run_erase(const CommonArgs& a) {
  bk::Formula psi = read_formula(a.psi);
  bk::Formula mu = read_formula(a.mu);
  bk::VocabPtr vocab = build_vocab({psi, mu}, a.vocab_csv);
  bk::DecomposeOptions opt = decompose_options(a);
  bk::ChangeResult r = a.engine == "direct"
                           ? bk::erase_c_direct(psi, mu, vocab, opt)
                           : bk::erase_c(psi, mu, vocab, opt);
  print_result(r, a.format);
  return 0;
}

int run_forget(const CommonArgs& a, const std::string& atoms_csv) {
  bk::Formula psi = read_formula(a.psi);
  std::set<std::string> names = split_names(atoms_csv);
  std::set<std::string> all = bk::atoms(psi);
  all.insert(names.begin(), names.end());
  std::set<std::string> extra = split_names(a.vocab_csv);
  all.insert(extra.begin(), extra.end());
  bk::VocabPtr vocab = bk::make_vocabulary(all);

  if (a.engine == "subst") {
    bk::Formula out = bk::forget_subst(psi, names);
    print_result(bk::to_dnf(out), bk::enumerate_models(out, vocab), a.format);
  } else if (a.engine == "ss") {
    std::vector<bk::Formula> parts;
    for (const std::string& p : names) {
      bk::Formula v = bk::Formula::variable(p);
      parts.push_back(v | !v);
    }
    print_result(bk::update_c_ss(psi, bk::conjoin_all(parts), vocab), a.format);
  } else {
    print_result(bk::forget(psi, names, vocab), a.format);
  }
  return 0;
}

int run_revise(const CommonArgs& a) {
  bk::Formula psi = read_formula(a.psi);
  bk::Formula mu = read_formula(a.mu);
  bk::VocabPtr vocab = build_vocab({psi, mu}, a.vocab_csv);
  if (a.engine == "satoh") {
    print_result(bk::revise_satoh(psi, mu, vocab), a.format);
  } else if (a.engine == "dalal") {
    print_result(bk::revise_dalal(psi, mu, vocab), a.format);
  } else {
    print_result(bk::revise_c(psi, mu, vocab, decompose_options(a)), a.format);
  }
  return 0;
}

int run_eliminant(const CommonArgs& a, const std::string& atoms_csv) {
  bk::Formula psi = read_formula(a.psi);
  std::set<std::string> names = split_names(atoms_csv);
  bk::VocabPtr vocab = build_vocab({psi}, a.vocab_csv);
  bk::DnfFormula out = bk::eliminant(names, psi);
  print_result(out, bk::enumerate_models(out.to_formula(), vocab), a.format);
  return 0;
}

struct CheckArgs {
  std::string postulate;
  std::string op = "compositional";
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::string vocab_csv;
  std::string psi, psi2, mu, mu2, phi;
};

// Explicit-instance layouts, by arity:
//   2: psi, mu          (U1, U2, U3, Levi, Harper)
//   3: psi, mu, phi     (U5)   /  psi, mu, mu2    (U6, U7, Disj)
//   3: psi, psi2, mu    (U8)
//   4: psi, psi2, mu, mu2  (U4)
std::vector<bk::Formula> explicit_instance(bk::PostulateId id,
                                           const CheckArgs& c) {
  using P = bk::PostulateId;
  std::vector<std::string> layout;
  switch (id) {
    case P::U4: layout = {c.psi, c.psi2, c.mu, c.mu2}; break;
    case P::U5: layout = {c.psi, c.mu, c.phi}; break;
    case P::U6:
    case P::U7:
    case P::Disj: layout = {c.psi, c.mu, c.mu2}; break;
    case P::U8: layout = {c.psi, c.psi2, c.mu}; break;
    default: layout = {c.psi, c.mu}; break;
  }
  std::vector<bk::Formula> inst;
  for (const std::string& s : layout) {
    if (s.empty())
      throw std::invalid_argument(
          "check: explicit instance is missing a formula for " +
          bk::to_string(id) + " (arity " +
          std::to_string(bk::postulate_arity(id)) + ")");
    inst.push_back(read_formula(s));
  }
  return inst;
}

int run_check(const CheckArgs& c) {
  bk::PostulateId id = bk::parse_postulate(c.postulate);
  bk::UpdateOperator op = bk::make_operator(c.op);
  bool explicit_mode = !c.psi.empty() || !c.mu.empty() || !c.psi2.empty() ||
                       !c.mu2.empty() || !c.phi.empty();
  bk::Verdict v;
  if (explicit_mode) {
    v = bk::check(id, op, explicit_instance(id, c));
  } else {
    std::set<std::string> names = split_names(c.vocab_csv);
    if (names.empty()) names = {"p", "q", "r", "s"};
    v = bk::search_counterexample(id, op, bk::make_vocabulary(names),
                                  c.trials, c.seed);
  }
  std::cout << v.to_json().dump(2) << "\n";
  return 0;
}

struct BenchArgs {
  std::string family = "dnf";
  std::string engine = "syntactic";
  int n_min = 1;
  int n_max = 8;
  std::uint64_t seed = 91;
};

bk::DnfFormula bench_update(const std::string& engine, const bk::Formula& psi,
                            const bk::Formula& mu) {
  if (engine == "compositional") return bk::update_c(psi, mu).formula;
  return bk::update_syntactic(psi, mu);
}

int run_bench(const BenchArgs& b) {
  if (b.n_min < 1 || b.n_max < b.n_min)
    throw std::invalid_argument("bench: need 1 <= n-min <= n-max");
  if (b.family == "blowup" && b.n_max > 3)
    throw std::invalid_argument(
        "bench: blowup family is capped at n=3 (the dnf expansion of psi_4 "
        "has 4^32 raw terms)");

  std::cout << "# family=" << b.family << " engine=" << b.engine
            << " seed=" << b.seed << "\n";
  std::cout << "# size bound: out <= " << bk::kDnfSizeBoundC
            << " * psi * mu (node counts; fitted on dnf inputs, reported "
               "for every family)\n";
  if (b.family == "blowup") std::cout << "# " << kClauseConvention << "\n";
  std::cout << "n,psi_nodes,mu_nodes,out_nodes,out_terms,wall_ms,bound_ok\n";

  std::vector<bk::Term> nested;
  bk::DnfFormula fixed_mu;
  if (b.family == "bounded") {
    nested = bk::random_terms(b.seed, 4 * std::size_t(b.n_max), 4, 6, 8);
    fixed_mu = bk::random_dnf(b.seed ^ 0x5eed, 2, 2, 3, 8);
  }

  for (int n = b.n_min; n <= b.n_max; ++n) {
    bk::Formula psi = bk::Formula::constant(true);
    bk::Formula mu = bk::Formula::constant(true);
    if (b.family == "dnf") {
      std::uint64_t rs = b.seed + 0x9e3779b97f4a7c15ull * std::uint64_t(n);
      psi = bk::random_dnf(rs, 4 * std::size_t(n), 1, 4, 8).to_formula();
      mu = bk::random_dnf(rs ^ 0xabcdef, 1 + std::size_t(n - 1) % 6, 1, 3, 8)
               .to_formula();
    } else if (b.family == "bounded") {
      psi = bk::DnfFormula(std::vector<bk::Term>(nested.begin(),
                                                 nested.begin() + 4 * n))
                .to_formula();
      mu = fixed_mu.to_formula();
    } else {
      bk::BlowupInstance inst = bk::gen_blowup(n);
      psi = inst.psi;
      mu = inst.mu;
    }
    auto t0 = std::chrono::steady_clock::now();
    bk::DnfFormula out = bench_update(b.engine, psi, mu);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::size_t psi_nodes = bk::node_count(psi);
    std::size_t mu_nodes = bk::node_count(mu);
    std::size_t out_nodes = out.formula_nodes();
    bool ok = double(out_nodes) <=
              bk::kDnfSizeBoundC * double(psi_nodes) * double(mu_nodes);
    std::cout << n << "," << psi_nodes << "," << mu_nodes << "," << out_nodes
              << "," << out.size() << "," << std::fixed << std::setprecision(3)
              << ms << "," << (ok ? "true" : "false") << "\n";
    std::cout.unsetf(std::ios::fixed);
  }
  return 0;
}

int run_gen(int n) {
  bk::BlowupInstance inst = bk::gen_blowup(n);
  nlohmann::json clauses = nlohmann::json::array();
  for (const auto& clause : inst.clauses) {
    nlohmann::json c = nlohmann::json::array();
    for (const bk::Literal& l : clause) c.push_back(l.str());
    clauses.push_back(std::move(c));
  }
  nlohmann::json j{{"n", inst.n},
                   {"psi", bk::render(inst.psi)},
                   {"mu", bk::render(inst.mu)},
                   {"vocab", inst.vocab->atoms()},
                   {"selectors", inst.selectors},
                   {"clauses", std::move(clauses)}};
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "beliefkit: compositional belief update, erasure, forgetting and "
      "revision on propositional formulas"};
  app.require_subcommand(1);

  CommonArgs upd, ers, fgt, rev, elim;
  std::string forget_atoms, elim_atoms;
  CheckArgs chk;
  BenchArgs bench;
  int gen_n = 1;

  CLI::App* s_upd = app.add_subcommand("update", "update psi by mu");
  s_upd->add_option("--psi", upd.psi, "belief formula (inline or @file)")
      ->required();
  s_upd->add_option("--mu", upd.mu, "change formula (inline or @file)")
      ->required();
  s_upd->add_option("--engine", upd.engine, "update engine")
      ->default_val("compositional")
      ->check(CLI::IsMember({"compositional", "guarded", "pi", "ss", "triv",
                             "pma", "ss-models", "syntactic"}));
  add_format_flags(s_upd, upd);
  s_upd->add_flag("--verify", upd.verify,
                  "cross-check the semantic and syntactic engines; exit 3 on "
                  "mismatch");
  s_upd->add_option("--seed", upd.seed, "randomize decomposition order")
      ->trigger_on_parse()
      ->each([&](const std::string&) { upd.seeded = true; });

  CLI::App* s_ers = app.add_subcommand("erase", "erase mu from psi");
  s_ers->add_option("--psi", ers.psi, "belief formula (inline or @file)")
      ->required();
  s_ers->add_option("--mu", ers.mu, "formula to erase (inline or @file)")
      ->required();
  s_ers->add_option("--engine", ers.engine, "erasure engine")
      ->default_val("harper")
      ->check(CLI::IsMember({"harper", "direct"}));
  add_format_flags(s_ers, ers);
  s_ers->add_option("--seed", ers.seed, "randomize decomposition order")
      ->trigger_on_parse()
      ->each([&](const std::string&) { ers.seeded = true; });

  CLI::App* s_fgt = app.add_subcommand("forget", "forget atoms in psi");
  s_fgt->add_option("--psi", fgt.psi, "belief formula (inline or @file)")
      ->required();
  s_fgt->add_option("--atoms", forget_atoms, "atoms to forget (comma separated)")
      ->required();
  s_fgt->add_option("--engine", fgt.engine, "forgetting engine")
      ->default_val("update")
      ->check(CLI::IsMember({"update", "subst", "ss"}));
  add_format_flags(s_fgt, fgt);

  CLI::App* s_rev = app.add_subcommand("revise", "revise psi by mu");
  s_rev->add_option("--psi", rev.psi, "belief formula (inline or @file)")
      ->required();
  s_rev->add_option("--mu", rev.mu, "revision formula (inline or @file)")
      ->required();
  s_rev->add_option("--engine", rev.engine, "revision engine")
      ->default_val("compositional")
      ->check(CLI::IsMember({"compositional", "satoh", "dalal"}));
  add_format_flags(s_rev, rev);

  CLI::App* s_elim = app.add_subcommand(
      "eliminant", "existentially quantify atoms out of psi");
  s_elim->add_option("--psi", elim.psi, "formula (inline or @file)")
      ->required();
  s_elim->add_option("--atoms", elim_atoms, "atoms to eliminate (comma separated)")
      ->required();
  add_format_flags(s_elim, elim);

  CLI::App* s_chk = app.add_subcommand(
      "check",
      "check a KM postulate (U1-U8, levi, harper, disj) for an operator, "
      "either searching random instances or on an explicit instance");
  s_chk->add_option("--postulate", chk.postulate, "postulate name")->required();
  s_chk->add_option("--operator", chk.op, "update operator under test")
      ->default_val("compositional")
      ->check(CLI::IsMember({"compositional", "guarded", "pi", "ss", "triv",
                             "pma", "ss-models", "syntactic"}));
  s_chk->add_option("--trials", chk.trials, "random trials in search mode");
  s_chk->add_option("--seed", chk.seed, "search seed");
  s_chk->add_option("--vocab", chk.vocab_csv,
                    "search vocabulary (comma separated; default p,q,r,s)");
  s_chk->add_option("--psi", chk.psi, "explicit instance: first belief formula");
  s_chk->add_option("--psi2", chk.psi2, "explicit instance: second belief formula");
  s_chk->add_option("--mu", chk.mu, "explicit instance: first change formula");
  s_chk->add_option("--mu2", chk.mu2, "explicit instance: second change formula");
  s_chk->add_option("--phi", chk.phi, "explicit instance: conjunct for U5");

  CLI::App* s_bench = app.add_subcommand(
      "bench", std::string("measure input/output sizes as CSV; ") +
                   kClauseConvention);
  s_bench->add_option("--family", bench.family, "instance family")
      ->default_val("dnf")
      ->check(CLI::IsMember({"dnf", "bounded", "blowup"}));
  s_bench->add_option("--engine", bench.engine, "update engine to measure")
      ->default_val("syntactic")
      ->check(CLI::IsMember({"syntactic", "compositional"}));
  s_bench->add_option("--n-min", bench.n_min, "first row index");
  s_bench->add_option("--n-max", bench.n_max, "last row index");
  s_bench->add_option("--seed", bench.seed, "family seed");

  CLI::App* s_gen = app.add_subcommand(
      "gen", std::string("emit one blowup-family instance as JSON; ") +
                 kClauseConvention);
  s_gen->add_option("--n", gen_n, "instance size (1..4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (s_upd->parsed()) return run_update(upd);
    if (s_ers->parsed()) return run_erase(ers);
    if (s_fgt->parsed()) return run_forget(fgt, forget_atoms);
    if (s_rev->parsed()) return run_revise(rev);
    if (s_elim->parsed()) return run_eliminant(elim, elim_atoms);
    if (s_chk->parsed()) return run_check(chk);
    if (s_bench->parsed()) return run_bench(bench);
    if (s_gen->parsed()) return run_gen(gen_n);
  } catch (const bk::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const bk::VocabularyCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bk::OutOfVocabularyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
