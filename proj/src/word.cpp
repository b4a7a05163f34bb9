#include "pcs/word.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pcs/error.hpp"

namespace pcs {

Word word_from_digits(const std::string& text, int level) {
  Word w;
  if (level <= 9 && text.find(',') == std::string::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw InputError("bad letter '" + std::string(1, c) + "' in word \"" + text + "\"");
      }
      int v = c - '0';
      if (v > level) {
        throw InputError("letter " + std::to_string(v) + " exceeds level " + std::to_string(level));
      }
      w.push_back(static_cast<char>(v));
    }
    return w;
  }
  if (text.empty()) {
    return w;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int v = 0;
    try {
      v = std::stoi(item);
    } catch (const std::exception&) {
      throw InputError("bad letter \"" + item + "\" in word \"" + text + "\"");
    }
    if (v < 0 || v > level) {
      throw InputError("letter " + std::to_string(v) + " exceeds level " + std::to_string(level));
    }
    w.push_back(static_cast<char>(v));
  }
  return w;
}

std::string word_to_digits(const Word& w, int level) {
  std::string out;
  if (level <= 9) {
    for (char c : w) {
      out.push_back(static_cast<char>('0' + c));
    }
    return out;
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) {
      out.push_back(',');
    }
    out += std::to_string(static_cast<int>(w[i]));
  }
  return out;
}

int height(const Word& w) {
  int h = -1;
  for (char c : w) {
    h = std::max(h, static_cast<int>(c));
  }
  return h;
}

std::vector<int> supersede_positions(const Word& w, bool strict) {
  std::vector<int> ks;
  for (size_t k = 1; k < w.size(); ++k) {
    if (strict ? w[k - 1] < w[k] : w[k - 1] <= w[k]) {
      ks.push_back(static_cast<int>(k));
    }
  }
  return ks;
}

Word apply_supersede(const Word& w, int k) {
  Word out = w;
  out.erase(out.begin() + (k - 1));
  return out;
}

namespace {

std::vector<Word> successors_impl(const Word& w, bool strict) {
  std::set<Word> out;
  for (int k : supersede_positions(w, strict)) {
    out.insert(apply_supersede(w, k));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Word> supersede_successors(const Word& w) { return successors_impl(w, false); }

std::vector<Word> strict_supersede_successors(const Word& w) { return successors_impl(w, true); }

// reach[i][j]: the first i letters of x can be matched consuming exactly the
// first j letters of y, with every skipped y-letter bounded by the next
// unmatched x-letter.  Trailing skips are impossible once i = |x|, which
// enforces that the factorization ends at the last match.
static std::vector<std::vector<char>> pleq_table(const Word& x, const Word& y) {
  size_t lx = x.size(), ly = y.size();
  std::vector<std::vector<char>> reach(lx + 1, std::vector<char>(ly + 1, 0));
  reach[0][0] = 1;
  for (size_t j = 0; j < ly; ++j) {
    for (size_t i = 0; i <= std::min(j, lx); ++i) {
      if (!reach[i][j] || i == lx) {
        continue;
      }
      if (y[j] <= x[i]) {
        reach[i][j + 1] = 1;
      }
      if (y[j] == x[i]) {
        reach[i + 1][j + 1] = 1;
      }
    }
  }
  return reach;
}

bool pleq(const Word& x, const Word& y) {
  if (x.size() > y.size()) {
    return false;
  }
  auto reach = pleq_table(x, y);
  return reach[x.size()][y.size()];
}

std::optional<std::vector<Word>> pleq_witness(const Word& x, const Word& y) {
  if (x.size() > y.size()) {
    return std::nullopt;
  }
  auto reach = pleq_table(x, y);
  size_t i = x.size(), j = y.size();
  if (!reach[i][j]) {
    return std::nullopt;
  }
  // Walk backwards, preferring matches; gaps[i] collects z_{i+1} reversed.
  std::vector<Word> gaps(x.size());
  while (j > 0) {
    if (i > 0 && y[j - 1] == x[i - 1] && reach[i - 1][j - 1]) {
      --i;
      --j;
    } else {
      gaps[i].push_back(y[j - 1]);
      --j;
    }
  }
  for (auto& g : gaps) {
    std::reverse(g.begin(), g.end());
  }
  return gaps;
}

CanonicalFactorization canonical_factorize(const Word& w) {
  CanonicalFactorization f;
  f.height = height(w);
  if (f.height < 0) {
    f.residuals = {Word{}};
    return f;
  }
  Word cur;
  for (char c : w) {
    if (static_cast<int>(c) == f.height) {
      f.residuals.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  f.residuals.push_back(cur);
  return f;
}

bool lemma6_check(const Word& x, const Word& y) {
  auto fx = canonical_factorize(x);
  auto fy = canonical_factorize(y);
  if (fx.height != fy.height) {
    throw InputError("lemma6_check: height mismatch (" + std::to_string(fx.height) + " vs " +
                     std::to_string(fy.height) + ")");
  }
  size_t k = fx.residuals.size() - 1;
  size_t m = fy.residuals.size() - 1;
  if (k > m) {
    return false;
  }
  // Endpoints are pinned: j_0 = 0 and j_k = m.
  if (!pleq(fx.residuals[0], fy.residuals[0]) || !pleq(fx.residuals[k], fy.residuals[m])) {
    return false;
  }
  if (k == 0) {
    return m == 0;
  }
  // Greedy subsequence match of x_1..x_{k-1} into y_1..y_{m-1}.
  size_t j = 1;
  for (size_t i = 1; i < k; ++i) {
    bool found = false;
    for (; j < m; ++j) {
      // Keep room for the remaining middle residuals.
      if (m - j <= k - 1 - i) {
        break;
      }
      if (pleq(fx.residuals[i], fy.residuals[j])) {
        found = true;
        ++j;
        break;
      }
    }
    if (!found) {
      return false;
    }
  }
  return true;
}

bool gen_pleq(const LabeledWord& x, const LabeledWord& y, const LabelLeq& leq) {
  size_t lx = x.size(), ly = y.size();
  if (lx > ly) {
    return false;
  }
  std::vector<std::vector<char>> reach(lx + 1, std::vector<char>(ly + 1, 0));
  reach[0][0] = 1;
  for (size_t j = 0; j < ly; ++j) {
    for (size_t i = 0; i <= std::min(j, lx); ++i) {
      if (!reach[i][j] || i == lx) {
        continue;
      }
      if (y[j].priority <= x[i].priority) {
        reach[i][j + 1] = 1;
      }
      if (y[j].priority == x[i].priority && leq(x[i].priority, x[i].label, y[j].label)) {
        reach[i + 1][j + 1] = 1;
      }
    }
  }
  return reach[lx][ly];
}

LabelLeq label_leq_equality() {
  return [](Letter, const std::string& v, const std::string& w) { return v == w; };
}

LabelLeq label_leq_table(const std::vector<std::pair<std::string, std::string>>& pairs) {
  // Reflexive-transitive closure over the mentioned elements.
  auto rel = std::make_shared<std::set<std::pair<std::string, std::string>>>(pairs.begin(),
                                                                             pairs.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : *rel) {
      for (const auto& b : *rel) {
        if (a.second == b.first && !rel->count({a.first, b.second})) {
          rel->insert({a.first, b.second});
          grew = true;
          break;
        }
      }
      if (grew) {
        break;
      }
    }
  }
  return [rel](Letter, const std::string& v, const std::string& w) {
    return v == w || rel->count({v, w}) > 0;
  };
}

LabelLeq label_leq_subword() {
  return [](Letter, const std::string& v, const std::string& w) {
    size_t i = 0;
    for (size_t j = 0; i < v.size() && j < w.size(); ++j) {
      if (v[i] == w[j]) {
        ++i;
      }
    }
    return i == v.size();
  };
}

namespace {

// Subset automaton over viable match counts; a bit i means "the first i
// letters of x are matched and the consumed prefix of the input ends exactly
// at the last match or at a permitted gap letter".
Dfa up_closure_dfa(const Word& x, int level) {
  if (x.size() > 60) {
    throw InputError("closure_automaton: word too long");
  }
  int alphabet = level + 1;
  size_t lx = x.size();
  std::map<uint64_t, int> ids;
  std::vector<uint64_t> sets;
  Dfa d;
  d.alphabet = alphabet;
  auto intern = [&](uint64_t s) {
    auto [it, fresh] = ids.emplace(s, static_cast<int>(sets.size()));
    if (fresh) {
      sets.push_back(s);
      d.next.emplace_back(alphabet, -1);
      d.accept.push_back(false);
    }
    return it->second;
  };
  d.start = intern(1);  // {0}
  for (size_t si = 0; si < sets.size(); ++si) {
    uint64_t s = sets[si];
    d.accept[si] = (s >> lx) & 1;
    for (int letter = 0; letter < alphabet; ++letter) {
      uint64_t to = 0;
      for (size_t i = 0; i <= lx; ++i) {
        if (!((s >> i) & 1) || i == lx) {
          continue;
        }
        if (letter <= x[i]) {
          to |= uint64_t{1} << i;
        }
        if (letter == x[i]) {
          to |= uint64_t{1} << (i + 1);
        }
      }
      if (to) {
        d.next[si][letter] = intern(to);
      }
    }
  }
  return dfa_minimize(d);
}

Dfa down_closure_dfa(const Word& x, int level) {
  // The downward closure is the finite superseding closure of x.
  std::set<Word> closure;
  std::vector<Word> stack{x};
  closure.insert(x);
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    for (const Word& s : supersede_successors(w)) {
      if (closure.insert(s).second) {
        stack.push_back(s);
      }
    }
  }
  int alphabet = level + 1;
  std::map<std::set<Word>, int> ids;
  std::vector<std::set<Word>> residuals;
  Dfa d;
  d.alphabet = alphabet;
  auto intern = [&](std::set<Word> s) {
    auto [it, fresh] = ids.emplace(std::move(s), static_cast<int>(residuals.size()));
    if (fresh) {
      residuals.push_back(it->first);
      d.next.emplace_back(alphabet, -1);
      d.accept.push_back(false);
    }
    return it->second;
  };
  d.start = intern(closure);
  for (size_t si = 0; si < residuals.size(); ++si) {
    auto rs = residuals[si];
    d.accept[si] = rs.count(Word{}) > 0;
    for (int letter = 0; letter < alphabet; ++letter) {
      std::set<Word> to;
      for (const Word& w : rs) {
        if (!w.empty() && static_cast<int>(w[0]) == letter) {
          to.insert(w.substr(1));
        }
      }
      if (!to.empty()) {
        d.next[si][letter] = intern(std::move(to));
      }
    }
  }
  return dfa_minimize(d);
}

}  // namespace

ClosureAutomaton closure_automaton(const Word& x, int level, ClosureKind kind) {
  if (height(x) > level) {
    throw InputError("closure_automaton: word exceeds level");
  }
  ClosureAutomaton a;
  a.kind = kind;
  a.level = level;
  a.dfa = kind == ClosureKind::Up ? up_closure_dfa(x, level) : down_closure_dfa(x, level);
  return a;
}

}  // namespace pcs
