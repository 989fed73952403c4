#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "beliefkit/formula.hpp"
#include "beliefkit/model.hpp"

namespace beliefkit {

// Reference change operators defined directly on enumerated model sets, with
// no shortcuts.  They exist to cross-check the structural operators, so they
// stay deliberately naive.

// Winslett-style update: for each model of psi, keep the models of mu whose
// difference from it is subset-minimal.
inline ModelSet update_pma(const Formula& psi, const Formula& mu,
                           VocabPtr vocab = nullptr) {
  if (!vocab) vocab = vocabulary_of(psi, mu);
  ModelSet mp = enumerate_models(psi, vocab);
  ModelSet mm = enumerate_models(mu, vocab);
  ModelSet out(vocab);
  for (std::uint64_t w : mp.bits()) {
    for (std::uint64_t m1 : mm.bits()) {
      std::uint64_t d1 = w ^ m1;
      bool minimal = true;
      for (std::uint64_t m2 : mm.bits()) {
        std::uint64_t d2 = w ^ m2;
        if (d2 != d1 && (d2 & ~d1) == 0) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.insert(m1);
    }
  }
  return out;
}

// The "standard semantics" update: models of mu that differ from some model
// of psi only on atoms occurring in mu.
inline ModelSet update_ss_models(const Formula& psi, const Formula& mu,
                                 VocabPtr vocab = nullptr) {
  if (!vocab) vocab = vocabulary_of(psi, mu);
  std::uint64_t mu_mask = 0;
  for (const std::string& a : atoms(mu)) mu_mask |= vocab->bit_of(a);
  ModelSet mp = enumerate_models(psi, vocab);
  ModelSet mm = enumerate_models(mu, vocab);
  ModelSet out(vocab);
  for (std::uint64_t w : mp.bits())
    for (std::uint64_t m : mm.bits())
      if (((w ^ m) & ~mu_mask) == 0) out.insert(m);
  return out;
}

enum class DiffMode { Subset, Cardinality };

// The minimal symmetric differences between models of two formulas, as atom
// masks over a shared vocabulary.
class DiffSet {
 public:
  DiffSet(VocabPtr vocab, std::vector<std::uint64_t> masks)
      : vocab_(std::move(vocab)), masks_(std::move(masks)) {
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
  }

  const VocabPtr& vocab() const { return vocab_; }
  const std::vector<std::uint64_t>& masks() const { return masks_; }
  bool empty() const { return masks_.empty(); }
  std::size_t size() const { return masks_.size(); }

  bool contains(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
  }

  std::vector<std::set<std::string>> atom_sets() const {
    std::vector<std::set<std::string>> out;
    for (std::uint64_t mask : masks_) {
      std::set<std::string> names;
      for (std::size_t i = 0; i < vocab_->size(); ++i)
        if (mask & vocab_->bit(i)) names.insert(vocab_->atom(i));
      out.push_back(std::move(names));
    }
    return out;
  }

 private:
  VocabPtr vocab_;
  std::vector<std::uint64_t> masks_;
};

// All minimal symmetric differences {w1 Δ w2 | w1 ⊨ alpha, w2 ⊨ beta}, under
// subset or cardinality minimality.  Empty when either formula is
// unsatisfiable.
inline DiffSet delta_min(const Formula& alpha, const Formula& beta,
                         DiffMode mode, VocabPtr vocab = nullptr) {
  if (!vocab) vocab = vocabulary_of(alpha, beta);
  ModelSet ma = enumerate_models(alpha, vocab);
  ModelSet mb = enumerate_models(beta, vocab);
  std::vector<std::uint64_t> diffs;
  for (std::uint64_t a : ma.bits())
    for (std::uint64_t b : mb.bits()) diffs.push_back(a ^ b);
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

  std::vector<std::uint64_t> minimal;
  if (mode == DiffMode::Cardinality) {
    int best = 65;
    for (std::uint64_t d : diffs) best = std::min(best, std::popcount(d));
    for (std::uint64_t d : diffs)
      if (std::popcount(d) == best) minimal.push_back(d);
  } else {
    for (std::uint64_t d : diffs) {
      bool is_min = true;
      for (std::uint64_t e : diffs)
        if (e != d && (e & ~d) == 0) {
          is_min = false;
          break;
        }
      if (is_min) minimal.push_back(d);
    }
  }
  return DiffSet(vocab, std::move(minimal));
}

// Satoh revision: models of mu at subset-minimal difference from psi.
inline ModelSet revise_satoh(const Formula& psi, const Formula& mu,
                             VocabPtr vocab = nullptr) {
  if (!vocab) vocab = vocabulary_of(psi, mu);
  DiffSet dmin = delta_min(psi, mu, DiffMode::Subset, vocab);
  ModelSet mp = enumerate_models(psi, vocab);
  ModelSet mm = enumerate_models(mu, vocab);
  ModelSet out(vocab);
  for (std::uint64_t m : mm.bits())
    for (std::uint64_t w : mp.bits())
      if (dmin.contains(w ^ m)) {
        out.insert(m);
        break;
      }
  return out;
}

// Dalal revision: same shape with cardinality-minimal differences.
inline ModelSet revise_dalal(const Formula& psi, const Formula& mu,
                             VocabPtr vocab = nullptr) {
  if (!vocab) vocab = vocabulary_of(psi, mu);
  DiffSet dmin = delta_min(psi, mu, DiffMode::Cardinality, vocab);
  ModelSet mp = enumerate_models(psi, vocab);
  ModelSet mm = enumerate_models(mu, vocab);
  ModelSet out(vocab);
  for (std::uint64_t m : mm.bits())
    for (std::uint64_t w : mp.bits())
      if (dmin.contains(w ^ m)) {
        out.insert(m);
        break;
      }
  return out;
}

// Forgetting by substitution: for each atom p in turn (alphabetically),
// psi[p/true] | psi[p/false].
inline Formula forget_subst(const Formula& psi,
                            const std::set<std::string>& names) {
  Formula acc = psi;
  for (const std::string& p : names)
    acc = substitute(acc, p, Formula::constant(true)) |
          substitute(acc, p, Formula::constant(false));
  return acc;
}

}  // namespace beliefkit
