#include "pcs/dfa.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcs {

bool Dfa::accepts(const std::string& word) const {
  int s = start;
  for (char c : word) {
    int letter = static_cast<unsigned char>(c);
    if (letter >= alphabet) {
      return false;
    }
    s = next[s][letter];
    if (s < 0) {
      return false;
    }
  }
  return accept[s];
}

Dfa dfa_literal(const std::string& w, int alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  int n = static_cast<int>(w.size());
  d.next.assign(n + 1, std::vector<int>(alphabet, -1));
  d.accept.assign(n + 1, false);
  d.accept[n] = true;
  for (int i = 0; i < n; ++i) {
    d.next[i][static_cast<unsigned char>(w[i])] = i + 1;
  }
  return d;
}

Dfa dfa_letter_star(int letter, int alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  d.next.assign(1, std::vector<int>(alphabet, -1));
  d.accept.assign(1, true);
  d.next[0][letter] = 0;
  return d;
}

Dfa dfa_proper_codes(int a, int alphabet) {
  Dfa d;
  d.alphabet = alphabet;
  if (a < 0) {
    // P_{-1} = {eps}
    d.next.assign(1, std::vector<int>(alphabet, -1));
    d.accept.assign(1, false);
    d.accept[0] = true;
    return d;
  }
  // state 0 = nothing read yet; state 1+p = previous letter was p
  int n = a + 2;
  d.next.assign(n, std::vector<int>(alphabet, -1));
  d.accept.assign(n, false);
  d.accept[0] = true;
  d.accept[1 + a] = true;
  for (int letter = 0; letter <= a && letter < alphabet; ++letter) {
    d.next[0][letter] = 1 + letter;
  }
  for (int p = 0; p <= a; ++p) {
    for (int letter = 0; letter <= std::min(p + 1, a) && letter < alphabet; ++letter) {
      d.next[1 + p][letter] = 1 + letter;
    }
  }
  return d;
}

namespace {

// NFA with epsilon moves, used only for concatenation.
struct Nfa {
  int alphabet = 0;
  int start = 0;
  std::vector<std::vector<std::vector<int>>> next;  // [state][letter] -> states
  std::vector<std::vector<int>> eps;
  std::vector<bool> accept;
};

void eps_close(const Nfa& n, std::set<int>& states) {
  std::vector<int> stack(states.begin(), states.end());
  while (!stack.empty()) {
    int s = stack.back();
    stack.pop_back();
    for (int t : n.eps[s]) {
      if (states.insert(t).second) {
        stack.push_back(t);
      }
    }
  }
}

Dfa determinize(const Nfa& n) {
  std::map<std::set<int>, int> ids;
  std::vector<std::set<int>> subsets;
  Dfa d;
  d.alphabet = n.alphabet;

  std::set<int> start{n.start};
  eps_close(n, start);
  ids[start] = 0;
  subsets.push_back(start);
  d.next.emplace_back(n.alphabet, -1);
  d.accept.push_back(false);

  for (size_t i = 0; i < subsets.size(); ++i) {
    for (int s : subsets[i]) {
      if (n.accept[s]) {
        d.accept[i] = true;
      }
    }
    for (int letter = 0; letter < n.alphabet; ++letter) {
      std::set<int> to;
      for (int s : subsets[i]) {
        for (int t : n.next[s][letter]) {
          to.insert(t);
        }
      }
      if (to.empty()) {
        continue;
      }
      eps_close(n, to);
      auto [it, fresh] = ids.emplace(to, static_cast<int>(subsets.size()));
      if (fresh) {
        subsets.push_back(to);
        d.next.emplace_back(n.alphabet, -1);
        d.accept.push_back(false);
      }
      d.next[i][letter] = it->second;
    }
  }
  return d;
}

}  // namespace

Dfa dfa_concat(const std::vector<Dfa>& parts) {
  Nfa n;
  n.alphabet = 0;
  for (const auto& p : parts) {
    n.alphabet = std::max(n.alphabet, p.alphabet);
  }
  std::vector<int> base;
  int total = 0;
  for (const auto& p : parts) {
    base.push_back(total);
    total += p.num_states();
  }
  n.next.assign(total, std::vector<std::vector<int>>(n.alphabet));
  n.eps.assign(total, {});
  n.accept.assign(total, false);
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    const Dfa& p = parts[pi];
    for (int s = 0; s < p.num_states(); ++s) {
      for (int letter = 0; letter < p.alphabet; ++letter) {
        if (p.next[s][letter] >= 0) {
          n.next[base[pi] + s][letter].push_back(base[pi] + p.next[s][letter]);
        }
      }
      if (p.accept[s]) {
        if (pi + 1 < parts.size()) {
          n.eps[base[pi] + s].push_back(base[pi + 1] + parts[pi + 1].start);
        } else {
          n.accept[base[pi] + s] = true;
        }
      }
    }
  }
  n.start = parts.empty() ? 0 : base[0] + parts[0].start;
  if (parts.empty()) {
    n.next.assign(1, std::vector<std::vector<int>>(1));
    n.eps.assign(1, {});
    n.accept.assign(1, true);
    n.alphabet = 1;
  }
  return dfa_minimize(determinize(n));
}

Dfa dfa_minimize(const Dfa& d) {
  int n = d.num_states();
  // Add the dead state explicitly as class index handling: class of -1 is -1.
  std::vector<int> cls(n);
  for (int s = 0; s < n; ++s) {
    cls[s] = d.accept[s] ? 1 : 0;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(n);
    for (int s = 0; s < n; ++s) {
      std::vector<int> sig;
      sig.push_back(cls[s]);
      for (int letter = 0; letter < d.alphabet; ++letter) {
        int t = d.next[s][letter];
        sig.push_back(t < 0 ? -1 : cls[t]);
      }
      auto [it, fresh] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[s] = it->second;
    }
    if (next_cls != cls) {
      changed = true;
      cls = next_cls;
    }
  }
  int m = 0;
  for (int c : cls) {
    m = std::max(m, c + 1);
  }
  Dfa out;
  out.alphabet = d.alphabet;
  out.start = cls[d.start];
  out.next.assign(m, std::vector<int>(d.alphabet, -1));
  out.accept.assign(m, false);
  for (int s = 0; s < n; ++s) {
    out.accept[cls[s]] = out.accept[cls[s]] || d.accept[s];
    for (int letter = 0; letter < d.alphabet; ++letter) {
      int t = d.next[s][letter];
      out.next[cls[s]][letter] = t < 0 ? -1 : cls[t];
    }
  }
  // Drop states that cannot reach an accepting state; they behave as dead.
  std::vector<bool> productive(m, false);
  bool more = true;
  while (more) {
    more = false;
    for (int s = 0; s < m; ++s) {
      if (productive[s]) {
        continue;
      }
      bool p = out.accept[s];
      for (int letter = 0; !p && letter < out.alphabet; ++letter) {
        int t = out.next[s][letter];
        p = t >= 0 && productive[t];
      }
      if (p) {
        productive[s] = more = true;
      }
    }
  }
  std::vector<int> remap(m, -1);
  int k = 0;
  for (int s = 0; s < m; ++s) {
    if (productive[s]) {
      remap[s] = k++;
    }
  }
  if (remap[out.start] < 0) {
    // Empty language: single dead-ish start.
    Dfa empty;
    empty.alphabet = out.alphabet;
    empty.next.assign(1, std::vector<int>(out.alphabet, -1));
    empty.accept.assign(1, false);
    return empty;
  }
  Dfa out2;
  out2.alphabet = out.alphabet;
  out2.start = remap[out.start];
  out2.next.assign(k, std::vector<int>(out.alphabet, -1));
  out2.accept.assign(k, false);
  for (int s = 0; s < m; ++s) {
    if (remap[s] < 0) {
      continue;
    }
    out2.accept[remap[s]] = out.accept[s];
    for (int letter = 0; letter < out.alphabet; ++letter) {
      int t = out.next[s][letter];
      out2.next[remap[s]][letter] = (t < 0 || remap[t] < 0) ? -1 : remap[t];
    }
  }
  return out2;
}

}  // namespace pcs
