#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "beliefkit/formula.hpp"
#include "beliefkit/literal.hpp"

namespace beliefkit {

class OutOfVocabularyError : public std::runtime_error {
 public:
  explicit OutOfVocabularyError(const std::string& atom)
      : std::runtime_error("atom not in vocabulary: " + atom) {}
};

class VocabularyMismatchError : public std::runtime_error {
 public:
  VocabularyMismatchError()
      : std::runtime_error("operands use different vocabularies") {}
};

class VocabularyCapError : public std::runtime_error {
 public:
  VocabularyCapError(std::size_t size, std::size_t cap)
      : std::runtime_error("vocabulary of " + std::to_string(size) +
                           " atoms exceeds the enumeration cap of " +
                           std::to_string(cap) +
                           " (set BELIEFKIT_VOCAB_CAP to raise it)") {}
};

// Model enumeration is exponential in the vocabulary, so it is guarded by a
// cap.  63 is a hard ceiling (interpretations are stored in a 64-bit word);
// the default of 24 keeps accidental blowups at bay.
inline std::size_t enumeration_cap() {
  static const std::size_t cap = [] {
    std::size_t value = 24;
    if (const char* env = std::getenv("BELIEFKIT_VOCAB_CAP")) {
      char* end = nullptr;
      unsigned long parsed = std::strtoul(env, &end, 10);
      if (end && *end == '\0' && parsed > 0) value = parsed;
    }
    return value < 63 ? value : 63;
  }();
  return cap;
}

// An ordered, duplicate-free set of atom names.  Interpretations over a
// vocabulary of n atoms are packed into a word with atom 0 in the most
// significant used bit, so that ascending integers enumerate models in
// canonical order (atoms compared alphabetically, false before true).
class Vocabulary {
 public:
  explicit Vocabulary(const std::set<std::string>& names)
      : atoms_(names.begin(), names.end()) {}

  std::size_t size() const { return atoms_.size(); }
  const std::string& atom(std::size_t i) const { return atoms_[i]; }
  const std::vector<std::string>& atoms() const { return atoms_; }

  bool contains(const std::string& name) const {
    return std::binary_search(atoms_.begin(), atoms_.end(), name);
  }

  std::size_t index_of(const std::string& name) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), name);
    if (it == atoms_.end() || *it != name) throw OutOfVocabularyError(name);
    return static_cast<std::size_t>(it - atoms_.begin());
  }

  std::uint64_t bit(std::size_t index) const {
    return std::uint64_t{1} << (atoms_.size() - 1 - index);
  }

  std::uint64_t bit_of(const std::string& name) const {
    return bit(index_of(name));
  }

  std::uint64_t model_count_guarded() const {
    if (size() > enumeration_cap())
      throw VocabularyCapError(size(), enumeration_cap());
    return std::uint64_t{1} << size();
  }

  friend bool operator==(const Vocabulary& x, const Vocabulary& y) {
    return x.atoms_ == y.atoms_;
  }
  friend bool operator!=(const Vocabulary& x, const Vocabulary& y) {
    return !(x == y);
  }

 private:
  std::vector<std::string> atoms_;
};

using VocabPtr = std::shared_ptr<const Vocabulary>;

inline VocabPtr make_vocabulary(const std::set<std::string>& names) {
  return std::make_shared<Vocabulary>(names);
}

inline VocabPtr vocabulary_of(const Formula& f) {
  return make_vocabulary(atoms(f));
}

inline VocabPtr vocabulary_of(const Formula& a, const Formula& b) {
  std::set<std::string> names = atoms(a);
  collect_atoms(b, names);
  return make_vocabulary(names);
}

inline void require_same_vocab(const VocabPtr& a, const VocabPtr& b) {
  if (a == b) return;
  if (!a || !b || *a != *b) throw VocabularyMismatchError();
}

// A total truth assignment over a vocabulary.
class Interpretation {
 public:
  Interpretation(VocabPtr vocab, std::uint64_t bits)
      : vocab_(std::move(vocab)), bits_(bits) {}

  const VocabPtr& vocab() const { return vocab_; }
  std::uint64_t bits() const { return bits_; }

  bool truth(std::size_t index) const {
    return (bits_ & vocab_->bit(index)) != 0;
  }

  bool truth(const std::string& name) const {
    return (bits_ & vocab_->bit_of(name)) != 0;
  }

  // The interpretation as a full signed literal set, sorted by atom.
  std::vector<Literal> literals() const {
    std::vector<Literal> out;
    out.reserve(vocab_->size());
    for (std::size_t i = 0; i < vocab_->size(); ++i)
      out.emplace_back(vocab_->atom(i), truth(i));
    return out;
  }

  // Text form: literals sorted by atom, e.g. "b !m".  Empty vocabulary
  // renders as the empty string.
  std::string line() const {
    std::string out;
    for (std::size_t i = 0; i < vocab_->size(); ++i) {
      if (!out.empty()) out += ' ';
      if (!truth(i)) out += '!';
      out += vocab_->atom(i);
    }
    return out;
  }

  Term to_term() const { return Term(literals()); }

  friend bool operator==(const Interpretation& x, const Interpretation& y) {
    require_same_vocab(x.vocab_, y.vocab_);
    return x.bits_ == y.bits_;
  }

 private:
  VocabPtr vocab_;
  std::uint64_t bits_;
};

// w restricted away from the atoms mentioned in gamma: the literals of w
// whose atoms do not occur in gamma.  Constant literals in gamma are ignored
// (they mention no atom), as are atoms outside w's vocabulary.
inline std::vector<Literal> restrict(const Interpretation& w,
                                     const std::vector<Literal>& gamma) {
  std::set<std::string> drop;
  for (const Literal& l : gamma)
    if (!l.is_constant()) drop.insert(l.atom());
  std::vector<Literal> out;
  for (Literal& l : w.literals())
    if (!drop.count(l.atom())) out.push_back(std::move(l));
  return out;
}

inline std::uint64_t diff_mask(const Interpretation& a,
                               const Interpretation& b) {
  require_same_vocab(a.vocab(), b.vocab());
  return a.bits() ^ b.bits();
}

// The set of atoms on which two interpretations disagree.
inline std::set<std::string> diff(const Interpretation& a,
                                  const Interpretation& b) {
  std::uint64_t mask = diff_mask(a, b);
  std::set<std::string> out;
  for (std::size_t i = 0; i < a.vocab()->size(); ++i)
    if (mask & a.vocab()->bit(i)) out.insert(a.vocab()->atom(i));
  return out;
}

inline bool holds(const Interpretation& w, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      return f.value();
    case Formula::Kind::Var:
      return w.truth(f.name());
    case Formula::Kind::Not:
      return !holds(w, f.operand());
    case Formula::Kind::And:
      return holds(w, f.lhs()) && holds(w, f.rhs());
    case Formula::Kind::Or:
      return holds(w, f.lhs()) || holds(w, f.rhs());
  }
  return false;
}

namespace detail {

// Truth table over a vocabulary of n atoms, packed 64 assignments per word;
// bit k of word b is the value under assignment index (b<<6)|k.  Assignment
// indices use the same packing as Interpretation::bits().
struct TruthTable {
  std::size_t n = 0;
  std::vector<std::uint64_t> blocks;

  std::uint64_t tail_mask() const {
    return n >= 6 ? ~std::uint64_t{0}
                  : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  }
};

inline TruthTable table_const(std::size_t n, std::size_t nblocks, bool v) {
  TruthTable t;
  t.n = n;
  t.blocks.assign(nblocks, v ? ~std::uint64_t{0} : 0);
  if (v) t.blocks.back() &= t.tail_mask();
  return t;
}

inline TruthTable table_var(const Vocabulary& v, std::size_t nblocks,
                            std::size_t index) {
  // Bit position of the atom inside an assignment index.
  static constexpr std::uint64_t pattern[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  std::size_t p = v.size() - 1 - index;
  TruthTable t;
  t.n = v.size();
  t.blocks.resize(nblocks);
  if (p < 6) {
    for (std::size_t b = 0; b < nblocks; ++b) t.blocks[b] = pattern[p];
  } else {
    for (std::size_t b = 0; b < nblocks; ++b)
      t.blocks[b] = (b >> (p - 6)) & 1 ? ~std::uint64_t{0} : 0;
  }
  t.blocks.back() &= t.tail_mask();
  return t;
}

inline TruthTable truth_table(const Formula& f, const Vocabulary& v) {
  std::uint64_t count = v.model_count_guarded();
  std::size_t nblocks = static_cast<std::size_t>((count + 63) / 64);
  switch (f.kind()) {
    case Formula::Kind::Const:
      return table_const(v.size(), nblocks, f.value());
    case Formula::Kind::Var:
      return table_var(v, nblocks, v.index_of(f.name()));
    case Formula::Kind::Not: {
      TruthTable t = truth_table(f.operand(), v);
      for (auto& b : t.blocks) b = ~b;
      t.blocks.back() &= t.tail_mask();
      return t;
    }
    case Formula::Kind::And: {
      TruthTable l = truth_table(f.lhs(), v);
      TruthTable r = truth_table(f.rhs(), v);
      for (std::size_t i = 0; i < l.blocks.size(); ++i)
        l.blocks[i] &= r.blocks[i];
      return l;
    }
    case Formula::Kind::Or: {
      TruthTable l = truth_table(f.lhs(), v);
      TruthTable r = truth_table(f.rhs(), v);
      for (std::size_t i = 0; i < l.blocks.size(); ++i)
        l.blocks[i] |= r.blocks[i];
      return l;
    }
  }
  return table_const(v.size(), nblocks, false);
}

}  // namespace detail

// A set of interpretations over one vocabulary, in canonical (ascending)
// order.
class ModelSet {
 public:
  explicit ModelSet(VocabPtr vocab) : vocab_(std::move(vocab)) {}

  ModelSet(VocabPtr vocab, std::vector<std::uint64_t> bits)
      : vocab_(std::move(vocab)), bits_(std::move(bits)) {
    std::sort(bits_.begin(), bits_.end());
    bits_.erase(std::unique(bits_.begin(), bits_.end()), bits_.end());
  }

  const VocabPtr& vocab() const { return vocab_; }
  const std::vector<std::uint64_t>& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  void insert(std::uint64_t m) {
    auto it = std::lower_bound(bits_.begin(), bits_.end(), m);
    if (it == bits_.end() || *it != m) bits_.insert(it, m);
  }

  void insert(const Interpretation& w) {
    require_same_vocab(vocab_, w.vocab());
    insert(w.bits());
  }

  bool contains(std::uint64_t m) const {
    return std::binary_search(bits_.begin(), bits_.end(), m);
  }

  bool contains(const Interpretation& w) const {
    require_same_vocab(vocab_, w.vocab());
    return contains(w.bits());
  }

  std::vector<Interpretation> members() const {
    std::vector<Interpretation> out;
    out.reserve(bits_.size());
    for (std::uint64_t m : bits_) out.emplace_back(vocab_, m);
    return out;
  }

  ModelSet unioned(const ModelSet& other) const {
    require_same_vocab(vocab_, other.vocab_);
    std::vector<std::uint64_t> out;
    std::set_union(bits_.begin(), bits_.end(), other.bits_.begin(),
                   other.bits_.end(), std::back_inserter(out));
    return ModelSet(vocab_, std::move(out));
  }

  ModelSet intersected(const ModelSet& other) const {
    require_same_vocab(vocab_, other.vocab_);
    std::vector<std::uint64_t> out;
    std::set_intersection(bits_.begin(), bits_.end(), other.bits_.begin(),
                          other.bits_.end(), std::back_inserter(out));
    return ModelSet(vocab_, std::move(out));
  }

  ModelSet subtracted(const ModelSet& other) const {
    require_same_vocab(vocab_, other.vocab_);
    std::vector<std::uint64_t> out;
    std::set_difference(bits_.begin(), bits_.end(), other.bits_.begin(),
                        other.bits_.end(), std::back_inserter(out));
    return ModelSet(vocab_, std::move(out));
  }

  bool is_subset_of(const ModelSet& other) const {
    require_same_vocab(vocab_, other.vocab_);
    return std::includes(other.bits_.begin(), other.bits_.end(),
                         bits_.begin(), bits_.end());
  }

  // The set as a disjunction of full terms, one per model.
  DnfFormula to_dnf() const {
    std::vector<Term> terms;
    terms.reserve(bits_.size());
    for (const Interpretation& w : members()) terms.push_back(w.to_term());
    return DnfFormula(std::move(terms));
  }

  Formula to_formula() const { return to_dnf().to_formula(); }

  // One model per line.
  std::string lines() const {
    std::string out;
    for (const Interpretation& w : members()) {
      out += w.line();
      out += '\n';
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Interpretation& w : members()) {
      nlohmann::json m = nlohmann::json::array();
      for (const Literal& l : w.literals()) m.push_back(l.str());
      arr.push_back(std::move(m));
    }
    return arr;
  }

  friend bool operator==(const ModelSet& x, const ModelSet& y) {
    require_same_vocab(x.vocab_, y.vocab_);
    return x.bits_ == y.bits_;
  }
  friend bool operator!=(const ModelSet& x, const ModelSet& y) {
    return !(x == y);
  }

 private:
  VocabPtr vocab_;
  std::vector<std::uint64_t> bits_;
};

inline ModelSet enumerate_models(const Formula& f, const VocabPtr& vocab) {
  detail::TruthTable t = detail::truth_table(f, *vocab);
  std::vector<std::uint64_t> out;
  for (std::size_t b = 0; b < t.blocks.size(); ++b) {
    std::uint64_t word = t.blocks[b];
    while (word) {
      unsigned k = static_cast<unsigned>(__builtin_ctzll(word));
      out.push_back((static_cast<std::uint64_t>(b) << 6) | k);
      word &= word - 1;
    }
  }
  return ModelSet(vocab, std::move(out));
}

inline bool entails(const Formula& f, const Formula& g, const VocabPtr& vocab) {
  detail::TruthTable tf = detail::truth_table(f, *vocab);
  detail::TruthTable tg = detail::truth_table(g, *vocab);
  for (std::size_t i = 0; i < tf.blocks.size(); ++i)
    if (tf.blocks[i] & ~tg.blocks[i]) return false;
  return true;
}

inline bool entails(const Formula& f, const Formula& g) {
  return entails(f, g, vocabulary_of(f, g));
}

inline bool equivalent(const Formula& f, const Formula& g,
                       const VocabPtr& vocab) {
  detail::TruthTable tf = detail::truth_table(f, *vocab);
  detail::TruthTable tg = detail::truth_table(g, *vocab);
  return tf.blocks == tg.blocks;
}

inline bool equivalent(const Formula& f, const Formula& g) {
  return equivalent(f, g, vocabulary_of(f, g));
}

inline bool satisfiable(const Formula& f, const VocabPtr& vocab) {
  detail::TruthTable t = detail::truth_table(f, *vocab);
  for (std::uint64_t b : t.blocks)
    if (b) return true;
  return false;
}

inline bool satisfiable(const Formula& f) {
  return satisfiable(f, vocabulary_of(f));
}

inline bool tautology(const Formula& f, const VocabPtr& vocab) {
  return entails(Formula::constant(true), f, vocab);
}

inline bool tautology(const Formula& f) {
  return tautology(f, vocabulary_of(f));
}

}  // namespace beliefkit
