#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "beliefkit/formula.hpp"
#include "beliefkit/literal.hpp"
#include "beliefkit/model.hpp"

namespace beliefkit {

namespace detail {

// Sorted literal-index sets (2*atom + sign) for subset tests.
inline bool index_subset(const std::vector<unsigned>& a,
                         const std::vector<unsigned>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

// All prime implicants of f over atoms(f): the subset-minimal consistent
// literal conjunctions entailing f.  Exhaustive check by ascending size, so
// minimality holds against every smaller candidate.  Special cases: an
// unsatisfiable f has none; a tautology's only prime implicant is the empty
// conjunction, reported as the constant term {true}.
inline std::vector<Term> prime_implicants(const Formula& f) {
  VocabPtr vocab = vocabulary_of(f);
  const std::size_t n = vocab->size();
  detail::TruthTable tf = detail::truth_table(f, *vocab);

  bool any = false, all = true;
  std::uint64_t tail = tf.tail_mask();
  for (std::size_t i = 0; i < tf.blocks.size(); ++i) {
    std::uint64_t full = (i + 1 == tf.blocks.size()) ? tail : ~std::uint64_t{0};
    if (tf.blocks[i]) any = true;
    if (tf.blocks[i] != full) all = false;
  }
  if (!any) return {};
  if (all) return {Term{Literal::top()}};

  // Truth tables of each literal, indexed 2*atom + (positive ? 1 : 0).
  std::vector<std::vector<std::uint64_t>> lit_blocks(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    detail::TruthTable tv =
        detail::table_var(*vocab, tf.blocks.size(), i);
    lit_blocks[2 * i + 1] = tv.blocks;
    for (auto& b : tv.blocks) b = ~b;
    tv.blocks.back() &= tail;
    lit_blocks[2 * i] = tv.blocks;
  }

  std::vector<std::vector<unsigned>> found_indices;
  std::vector<Term> found_terms;

  std::vector<std::size_t> combo;
  std::vector<std::uint64_t> scratch;
  auto try_signs = [&](const std::vector<std::size_t>& atoms_idx) {
    const std::size_t k = atoms_idx.size();
    for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << k); ++signs) {
      std::vector<unsigned> lits;
      lits.reserve(k);
      for (std::size_t j = 0; j < k; ++j)
        lits.push_back(static_cast<unsigned>(
            2 * atoms_idx[j] + ((signs >> j) & 1 ? 1 : 0)));
      bool dominated = false;
      for (const auto& prev : found_indices)
        if (detail::index_subset(prev, lits)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      scratch.assign(tf.blocks.size(), ~std::uint64_t{0});
      scratch.back() &= tail;
      for (unsigned li : lits)
        for (std::size_t b = 0; b < scratch.size(); ++b)
          scratch[b] &= lit_blocks[li][b];
      bool entails_f = true;
      for (std::size_t b = 0; b < scratch.size(); ++b)
        if (scratch[b] & ~tf.blocks[b]) {
          entails_f = false;
          break;
        }
      if (!entails_f) continue;
      std::vector<Literal> term_lits;
      for (unsigned li : lits)
        term_lits.emplace_back(vocab->atom(li / 2), li % 2 == 1);
      found_indices.push_back(std::move(lits));
      found_terms.push_back(Term(std::move(term_lits)));
    }
  };

  // Enumerate atom combinations by ascending size.
  for (std::size_t size = 1; size <= n; ++size) {
    combo.assign(size, 0);
    for (std::size_t j = 0; j < size; ++j) combo[j] = j;
    while (true) {
      try_signs(combo);
      std::size_t j = size;
      while (j > 0 && combo[j - 1] == n - size + (j - 1)) --j;
      if (j == 0) break;
      ++combo[j - 1];
      for (std::size_t m = j; m < size; ++m) combo[m] = combo[m - 1] + 1;
    }
  }

  std::sort(found_terms.begin(), found_terms.end());
  return found_terms;
}

// The disjunction of all prime implicants, canonically ordered.  Empty for
// an unsatisfiable input (rendering as false) and {true} for a tautology.
inline DnfFormula prime_implicant_cover(const Formula& f) {
  return DnfFormula(prime_implicants(f));
}

}  // namespace beliefkit
