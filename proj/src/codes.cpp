#include "pcs/codes.hpp"

#include <algorithm>

#include "pcs/error.hpp"

namespace pcs {

bool is_proper(const Word& x) {
  if (x.empty()) {
    return true;
  }
  int h = height(x);
  if (static_cast<int>(x.back()) != h) {
    return false;
  }
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (x[i + 1] > x[i] + 1) {
      return false;
    }
  }
  return true;
}

bool in_code_level(const Word& x, int a) {
  return x.empty() || (is_proper(x) && height(x) == a);
}

Word CodeDecomposition::reassemble() const {
  Word out;
  for (const Word& b : blocks) {
    out += b;
  }
  for (int letter = stair_start; letter <= level; ++letter) {
    out.push_back(static_cast<char>(letter));
  }
  return out;
}

CodeDecomposition decompose(const Word& x, int d) {
  if (x.empty() || !in_code_level(x, d)) {
    throw InputError("decompose: not a nonempty code of height " + std::to_string(d));
  }
  // Maximal staircase suffix a(a+1)...d.
  size_t i = x.size() - 1;
  while (i > 0 && x[i - 1] == x[i] - 1) {
    --i;
  }
  CodeDecomposition out;
  out.level = d;
  out.stair_start = x[i];
  Word rest = x.substr(0, i);
  for (int lev = d; lev >= out.stair_start; --lev) {
    size_t pos = rest.find_last_of(static_cast<char>(lev));
    if (pos == Word::npos) {
      out.blocks.emplace_back();
      continue;
    }
    out.blocks.push_back(rest.substr(0, pos + 1));
    rest = rest.substr(pos + 1);
    if (!in_code_level(out.blocks.back(), lev)) {
      throw Error("decompose: block not in P_" + std::to_string(lev));
    }
  }
  if (!rest.empty()) {
    throw Error("decompose: leftover prefix");
  }
  return out;
}

Ordinal code_eta(const Word& x) {
  if (!is_proper(x)) {
    throw InputError("code_eta: improper code");
  }
  if (x.empty()) {
    return Ordinal::zero();
  }
  int h = height(x);
  std::vector<Ordinal> parts;
  Word block;
  for (char c : x) {
    if (static_cast<int>(c) == h) {
      parts.push_back(Ordinal::omega_pow(code_eta(block)));
      block.clear();
    } else {
      block.push_back(c);
    }
  }
  return Ordinal::sum(parts);
}

Word code_encode(const Ordinal& a, int level) {
  if (a.is_eps0()) {
    throw InputError("code_encode: e0 has no code");
  }
  if (a.is_zero()) {
    return {};
  }
  if (level < 0) {
    throw InputError("code_encode: term too deep for the level");
  }
  Word out;
  for (const Ordinal& e : a.exponents()) {
    out += code_encode(e, level - 1);
    out.push_back(static_cast<char>(level));
  }
  return out;
}

bool code_is_successor(const Word& x, int d) {
  if (x.empty() || !in_code_level(x, d)) {
    throw InputError("code_is_successor: not a nonempty code of height " + std::to_string(d));
  }
  return x.size() == 1 || x[x.size() - 2] == x.back();
}

Word code_pred(const Word& x, int d) {
  if (!code_is_successor(x, d)) {
    throw InputError("code_pred: code denotes a limit");
  }
  return x.substr(0, x.size() - 1);
}

Word code_limit_expand(const Word& x, int64_t n, int d) {
  CodeDecomposition dec = decompose(x, d);
  int a = dec.stair_start;
  if (a >= d) {
    throw InputError("code_limit_expand: code denotes a successor");
  }
  Word out;
  for (size_t i = 0; i + 1 < dec.blocks.size(); ++i) {
    out += dec.blocks[i];  // y_d .. y_{a+1}
  }
  const Word& ya = dec.blocks.back();
  for (int64_t i = 0; i < n; ++i) {
    out += ya;
    out.push_back(static_cast<char>(a + 1));
  }
  for (int letter = a + 2; letter <= d; ++letter) {
    out.push_back(static_cast<char>(letter));
  }
  return out;
}

std::vector<Word> code_limit_invert(const Word& x, int64_t n, int d) {
  std::vector<Word> out;
  if (n <= 0 || !in_code_level(x, d) || x.empty()) {
    return out;
  }
  for (int a = 0; a < d; ++a) {
    // Strip st(a+2..d), then n copies of z(a+1) with z over {0..a}, then glue
    // y-part z st(a..d) back together.
    Word stair;
    for (int letter = a + 2; letter <= d; ++letter) {
      stair.push_back(static_cast<char>(letter));
    }
    if (x.size() < stair.size() || x.substr(x.size() - stair.size()) != stair) {
      continue;
    }
    Word rest = x.substr(0, x.size() - stair.size());
    // Last n occurrences of (a+1) delimit the copies; z has letters <= a.
    std::vector<Word> copies;
    bool ok = true;
    for (int64_t i = 0; i < n && ok; ++i) {
      size_t pos = rest.find_last_of(static_cast<char>(a + 1));
      if (pos == Word::npos) {
        ok = false;
        break;
      }
      Word tail = rest.substr(pos + 1);
      if (height(tail) > a) {
        ok = false;
        break;
      }
      copies.push_back(tail);
      rest = rest.substr(0, pos);
    }
    if (!ok || copies.empty()) {
      continue;
    }
    for (const Word& c : copies) {
      if (c != copies[0]) {
        ok = false;
        break;
      }
    }
    if (!ok) {
      continue;
    }
    Word candidate = rest + copies[0];
    for (int letter = a; letter <= d; ++letter) {
      candidate.push_back(static_cast<char>(letter));
    }
    if (!in_code_level(candidate, d)) {
      continue;
    }
    // The construction is authoritative: keep only exact inverses.
    try {
      if (code_limit_expand(candidate, n, d) == x) {
        out.push_back(candidate);
      }
    } catch (const InputError&) {
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RobustCheck robust_leq(const Word& x, const Word& xp, int64_t n, int64_t np,
                       const HardyBudget& budget) {
  if (!is_proper(x) || !is_proper(xp)) {
    throw InputError("robust_leq: improper code");
  }
  if (n > np) {
    throw InputError("robust_leq: needs n <= n'");
  }
  RobustCheck out;
  out.embeds = pleq(x, xp);
  if (!out.embeds) {
    return out;
  }
  try {
    int64_t lhs = hardy_eval(code_eta(x), n, budget);
    int64_t rhs = hardy_eval(code_eta(xp), np, budget);
    out.verified = true;
    if (lhs > rhs) {
      throw Error("robust_leq: Hardy monotonicity violated");
    }
  } catch (const BudgetError&) {
    out.verified = false;
  }
  return out;
}

}  // namespace pcs
