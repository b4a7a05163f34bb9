#pragma once

#include <vector>

#include "pcs/ordinal.hpp"
#include "pcs/word.hpp"

namespace pcs {

// A word is a proper code when it is empty, or its last letter is its height
// and priorities never jump up by more than one.
bool is_proper(const Word& x);

// Membership in P_a: empty, or proper of height exactly a.
bool in_code_level(const Word& x, int a);

// Unique factorization x = y_d y_{d-1} ... y_a st(a..d) of a nonempty code
// in P_d, where st(a..d) is the maximal staircase suffix a(a+1)...d.
struct CodeDecomposition {
  int stair_start = 0;            // a
  std::vector<Word> blocks;       // blocks[i] = y_{d-i}, for levels d..a
  int level = 0;                  // d

  Word reassemble() const;
};

CodeDecomposition decompose(const Word& x, int d);

// Ordinal term denoted by a proper code; eta(eps) = 0.
Ordinal code_eta(const Word& x);

// Level-a code of a term whose omega-tower depth fits; inverse of code_eta
// on P_a.
Word code_encode(const Ordinal& a, int level);

// Code of the predecessor: defined when x encodes a successor, i.e. x has
// length 1 or ends with two level letters; drops the final letter.
Word code_pred(const Word& x, int d);
bool code_is_successor(const Word& x, int d);

// Code of lambda_n for a limit code x.
Word code_limit_expand(const Word& x, int64_t n, int d);

// Limit codes w in P_d with code_limit_expand(w, n, d) == x, for inverting a
// fundamental-sequence step on codes.
std::vector<Word> code_limit_invert(const Word& x, int64_t n, int d);

struct RobustCheck {
  bool embeds = false;    // pleq(x, x')
  bool verified = false;  // Hardy inequality evaluated within budget
};

// Checks the embedding and, when it holds and the budget allows, evaluates
// H^{eta(x)}(n) <= H^{eta(x')}(n').  A violation of the inequality is a
// logic error and throws.
RobustCheck robust_leq(const Word& x, const Word& xp, int64_t n, int64_t np,
                       const HardyBudget& budget = {});

}  // namespace pcs
