#pragma once

#include <string>
#include <vector>

namespace pcs {

// Complete-by-convention DFA over letters 0..alphabet-1; -1 entries are the
// implicit dead state.
struct Dfa {
  int alphabet = 0;
  int start = 0;
  std::vector<std::vector<int>> next;  // next[state][letter], -1 = reject
  std::vector<bool> accept;

  bool accepts(const std::string& word) const;
  bool accepts_empty() const { return accept[start]; }
  int num_states() const { return static_cast<int>(next.size()); }
};

// The single word `w`.
Dfa dfa_literal(const std::string& w, int alphabet);

// a*
Dfa dfa_letter_star(int letter, int alphabet);

// Proper codes of height a: empty, or no upward jumps, all letters <= a and
// the last letter equal to a.  P_{-1} = {eps}.
Dfa dfa_proper_codes(int a, int alphabet);

// Concatenation L_1 L_2 ... L_k, determinized.
Dfa dfa_concat(const std::vector<Dfa>& parts);

// Moore minimization (dead state kept implicit).
Dfa dfa_minimize(const Dfa& d);

}  // namespace pcs
