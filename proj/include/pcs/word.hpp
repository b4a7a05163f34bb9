#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcs/dfa.hpp"

namespace pcs {

// A word over the level-d priority alphabet {0..d}.  Letters are stored as
// raw byte values, not ASCII digits; use word_from_digits/word_to_digits at
// IO boundaries.
using Word = std::string;
using Letter = int;

Word word_from_digits(const std::string& text, int level);
std::string word_to_digits(const Word& w, int level);

// Highest letter of w, or -1 for the empty word.
int height(const Word& w);

// One-step superseding: every word obtained by dropping the k-th letter when
// it is not above its right neighbour (a_k <= a_{k+1}).  Deduplicated, sorted.
std::vector<Word> supersede_successors(const Word& w);

// Positions k (1-based, k < |w|) at which a superseding step applies.
std::vector<int> supersede_positions(const Word& w, bool strict);

// Strict variant: a_k < a_{k+1} only.
std::vector<Word> strict_supersede_successors(const Word& w);

// Apply one superseding step at 1-based position k.
Word apply_supersede(const Word& w, int k);

// Priority embedding: x embeds into y when y factors as z_1 a_1 ... z_l a_l
// with x = a_1...a_l and every z_i made of letters <= a_i.  Decided by a
// dynamic program over (letters of x matched, letters of y consumed).
bool pleq(const Word& x, const Word& y);

// The gap words z_1..z_l of a witnessing factorization, or nullopt.
std::optional<std::vector<Word>> pleq_witness(const Word& x, const Word& y);

// Canonical factorization x = x_0 h x_1 h ... x_{k-1} h x_k where h is the
// height of x and the residuals x_i contain only letters < h.  The empty
// word has height -1 and the single residual [eps].
struct CanonicalFactorization {
  int height = -1;
  std::vector<Word> residuals;
};

CanonicalFactorization canonical_factorize(const Word& w);

// Sufficient condition for pleq on words of equal height: residuals of x map
// to residuals of y through indices 0 = j_0 < j_1 < ... < j_k = m with
// x_i pleq y_{j_i}.  Throws InputError when the heights differ.
bool lemma6_check(const Word& x, const Word& y);

// ---------------------------------------------------------------------------
// Generalized embedding over a stratified alphabet: letters carry a label
// from a per-priority quasi-order.

struct LabeledLetter {
  Letter priority = 0;
  std::string label;

  bool operator==(const LabeledLetter&) const = default;
};

using LabeledWord = std::vector<LabeledLetter>;

// Comparator for labels within one stratum; leq(stratum, v, w) decides v <= w.
using LabelLeq = std::function<bool(Letter stratum, const std::string& v, const std::string& w)>;

bool gen_pleq(const LabeledWord& x, const LabeledWord& y, const LabelLeq& leq);

// Built-in label orders.
LabelLeq label_leq_equality();
// Reflexive-transitive closure of the given lo <= hi pairs, uniformly on all
// strata.
LabelLeq label_leq_table(const std::vector<std::pair<std::string, std::string>>& pairs);
// Scattered-subword embedding on label strings.
LabelLeq label_leq_subword();

// ---------------------------------------------------------------------------
// Closure automata: DFA for the upward or downward closure of a single word
// under the priority embedding.

enum class ClosureKind { Up, Down };

struct ClosureAutomaton {
  ClosureKind kind = ClosureKind::Up;
  int level = 0;  // alphabet {0..level}
  Dfa dfa;

  bool accepts(const Word& w) const { return dfa.accepts(w); }
  int num_states() const { return static_cast<int>(dfa.next.size()); }
};

ClosureAutomaton closure_automaton(const Word& x, int level, ClosureKind kind);

}  // namespace pcs
