#include "pcs/ordinal.hpp"

#include <algorithm>
#include <cctype>

#include "pcs/error.hpp"

namespace pcs {

Ordinal Ordinal::nat(int n) {
  if (n < 0) {
    throw InputError("negative natural");
  }
  Ordinal a;
  a.exps_.assign(n, zero());
  return a;
}

Ordinal Ordinal::omega_pow(Ordinal exponent) {
  if (exponent.is_eps0()) {
    throw InputError("e0 cannot be nested");
  }
  Ordinal a;
  a.exps_.push_back(std::move(exponent));
  return a;
}

Ordinal Ordinal::sum(const std::vector<Ordinal>& parts) {
  Ordinal a;
  for (const auto& p : parts) {
    if (p.is_eps0()) {
      throw InputError("e0 cannot be nested");
    }
    a.exps_.insert(a.exps_.end(), p.exps_.begin(), p.exps_.end());
  }
  return a;
}

const std::vector<Ordinal>& Ordinal::exponents() const {
  if (eps0_) {
    throw InputError("e0 has no summands");
  }
  return exps_;
}

OrdKind classify(const Ordinal& a) {
  if (a.is_eps0()) {
    return OrdKind::Limit;
  }
  if (a.is_zero()) {
    return OrdKind::Zero;
  }
  return a.exponents().back().is_zero() ? OrdKind::Successor : OrdKind::Limit;
}

namespace {

void require_below_eps0(const Ordinal& a, const char* who) {
  if (a.is_eps0()) {
    throw InputError(std::string(who) + ": e0 not supported");
  }
}

// Comparison of CNF terms by their exponent sequences.
int cnf_cmp(const Ordinal& a, const Ordinal& b) {
  const auto& xs = a.exponents();
  const auto& ys = b.exponents();
  for (size_t i = 0; i < std::min(xs.size(), ys.size()); ++i) {
    int c = cnf_cmp(xs[i], ys[i]);
    if (c != 0) {
      return c;
    }
  }
  if (xs.size() != ys.size()) {
    return xs.size() < ys.size() ? -1 : 1;
  }
  return 0;
}

}  // namespace

Ordinal to_cnf(const Ordinal& a) {
  require_below_eps0(a, "to_cnf");
  std::vector<Ordinal> exps;
  exps.reserve(a.exponents().size());
  for (const auto& e : a.exponents()) {
    exps.push_back(to_cnf(e));
  }
  // w^a + w^b = w^b when a < b: keep a summand only if no later one is bigger.
  std::vector<Ordinal> kept;
  for (size_t i = 0; i < exps.size(); ++i) {
    bool absorbed = false;
    for (size_t j = i + 1; j < exps.size() && !absorbed; ++j) {
      absorbed = cnf_cmp(exps[i], exps[j]) < 0;
    }
    if (!absorbed) {
      kept.push_back(exps[i]);
    }
  }
  Ordinal out;
  for (auto& e : kept) {
    out = Ordinal::sum({out, Ordinal::omega_pow(e)});
  }
  return out;
}

int ord_cmp(const Ordinal& a, const Ordinal& b) {
  if (a.is_eps0() || b.is_eps0()) {
    if (a.is_eps0() && b.is_eps0()) {
      return 0;
    }
    return a.is_eps0() ? 1 : -1;
  }
  return cnf_cmp(to_cnf(a), to_cnf(b));
}

bool ord_lt(const Ordinal& a, const Ordinal& b) { return ord_cmp(a, b) < 0; }

Ordinal omega_tower(int n) {
  Ordinal a = Ordinal::one();
  for (int i = 0; i < n; ++i) {
    a = Ordinal::omega_pow(a);
  }
  return a;
}

Ordinal fund_seq(const Ordinal& l, int64_t n) {
  if (l.is_eps0()) {
    if (n > 64) {
      throw BudgetError("fund_seq: e0[n] with huge n");
    }
    return omega_tower(static_cast<int>(n));
  }
  if (classify(l) != OrdKind::Limit) {
    throw InputError("fund_seq: not a limit term");
  }
  const auto& exps = l.exponents();
  std::vector<Ordinal> prefix(exps.begin(), exps.end() - 1);
  const Ordinal& last = exps.back();
  Ordinal out;
  std::vector<Ordinal> parts;
  for (const auto& e : prefix) {
    parts.push_back(Ordinal::omega_pow(e));
  }
  if (classify(last) == OrdKind::Successor) {
    // (gamma + w^{beta+1})_n = gamma + w^beta * n
    const auto& le = last.exponents();
    Ordinal beta = Ordinal::sum([&] {
      std::vector<Ordinal> bs;
      for (size_t i = 0; i + 1 < le.size(); ++i) {
        bs.push_back(Ordinal::omega_pow(le[i]));
      }
      return bs;
    }());
    for (int64_t i = 0; i < n; ++i) {
      parts.push_back(Ordinal::omega_pow(beta));
    }
  } else {
    // (gamma + w^{lambda'})_n = gamma + w^{lambda'_n}
    parts.push_back(Ordinal::omega_pow(fund_seq(last, n)));
  }
  return Ordinal::sum(parts);
}

std::pair<Ordinal, int64_t> hardy_step(const Ordinal& a, int64_t n) {
  switch (classify(a)) {
    case OrdKind::Zero:
      throw InputError("hardy_step: zero term");
    case OrdKind::Successor: {
      const auto& exps = a.exponents();
      std::vector<Ordinal> parts;
      for (size_t i = 0; i + 1 < exps.size(); ++i) {
        parts.push_back(Ordinal::omega_pow(exps[i]));
      }
      return {Ordinal::sum(parts), n + 1};
    }
    case OrdKind::Limit:
      return {fund_seq(a, n), n};
  }
  throw Error("unreachable");
}

int64_t hardy_eval(const Ordinal& a, int64_t n, const HardyBudget& budget) {
  Ordinal cur = a;
  int64_t steps = 0;
  while (!cur.is_zero()) {
    auto [next, m] = hardy_step(cur, n);
    cur = std::move(next);
    n = m;
    if (n > budget.max_value) {
      throw BudgetError("hardy_eval: value budget exhausted");
    }
    if (++steps > budget.max_steps) {
      throw BudgetError("hardy_eval: step budget exhausted");
    }
  }
  return n;
}

int64_t fgh_eval(const Ordinal& k, int64_t n, const HardyBudget& budget) {
  return hardy_eval(Ordinal::omega_pow(k), n, budget);
}

bool leqo(const Ordinal& a, const Ordinal& b) {
  require_below_eps0(a, "leqo");
  require_below_eps0(b, "leqo");
  const auto& xs = a.exponents();
  const auto& ys = b.exponents();
  // Greedy leftmost subsequence match with recursive embedding.
  size_t j = 0;
  for (const auto& x : xs) {
    bool found = false;
    for (; j < ys.size(); ++j) {
      if (leqo(x, ys[j])) {
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

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  require_below_eps0(a, "natural_sum");
  require_below_eps0(b, "natural_sum");
  Ordinal ca = to_cnf(a), cb = to_cnf(b);
  std::vector<Ordinal> exps;
  exps.insert(exps.end(), ca.exponents().begin(), ca.exponents().end());
  exps.insert(exps.end(), cb.exponents().begin(), cb.exponents().end());
  std::stable_sort(exps.begin(), exps.end(),
                   [](const Ordinal& x, const Ordinal& y) { return cnf_cmp(x, y) > 0; });
  std::vector<Ordinal> parts;
  for (auto& e : exps) {
    parts.push_back(Ordinal::omega_pow(e));
  }
  return Ordinal::sum(parts);
}

Ordinal natural_product(const Ordinal& a, const Ordinal& b) {
  require_below_eps0(a, "natural_product");
  require_below_eps0(b, "natural_product");
  Ordinal ca = to_cnf(a), cb = to_cnf(b);
  std::vector<Ordinal> exps;
  for (const auto& x : ca.exponents()) {
    for (const auto& y : cb.exponents()) {
      exps.push_back(natural_sum(x, y));
    }
  }
  std::stable_sort(exps.begin(), exps.end(),
                   [](const Ordinal& x, const Ordinal& y) { return cnf_cmp(x, y) > 0; });
  std::vector<Ordinal> parts;
  for (auto& e : exps) {
    parts.push_back(Ordinal::omega_pow(e));
  }
  return Ordinal::sum(parts);
}

MaxOrderTypeBound maxot_bounds(int d, int m, int q) {
  if (d < 0 || m < 1 || q < 1) {
    throw InputError("maxot_bounds: need d >= 0, m >= 1, q >= 1");
  }
  MaxOrderTypeBound out;
  out.levels.push_back(Ordinal::one());  // o_{-1}
  for (int a = 0; a <= d; ++a) {
    const Ordinal& prev = out.levels.back();
    Ordinal oa = Ordinal::omega_pow(Ordinal::omega_pow(prev));
    oa = natural_product(oa, prev);
    oa = natural_product(oa, prev);
    if (a > 0) {
      // The a = 0 factor would degenerate to 0 and is dropped.
      oa = natural_product(oa, Ordinal::nat(a));
    }
    out.levels.push_back(oa);
  }
  Ordinal bound = Ordinal::one();
  Ordinal tower = omega_tower(2 * d + 1);
  for (int i = 0; i < m; ++i) {
    bound = natural_product(bound, tower);
  }
  out.bound = natural_product(bound, Ordinal::nat(q));
  return out;
}

// --------------------------------------------------------------------------
// Text syntax

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw InputError("parse error at offset " + std::to_string(pos) + " in \"" + s + "\": " + why);
  }

  int64_t number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (start == pos) {
      fail("expected a number");
    }
    return std::stoll(s.substr(start, pos - start));
  }

  Ordinal primary() {
    skip_ws();
    if (pos >= s.size()) {
      fail("expected a term");
    }
    if (s[pos] == '(') {
      ++pos;
      Ordinal t = term();
      if (!eat(')')) {
        fail("expected ')'");
      }
      return t;
    }
    if (s.compare(pos, 2, "e0") == 0) {
      pos += 2;
      return Ordinal::eps0();
    }
    if (s[pos] == 'w') {
      ++pos;
      if (eat('^')) {
        return Ordinal::omega_pow(primary());
      }
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
      int64_t n = number();
      if (n > 1'000'000) {
        fail("natural too large");
      }
      return Ordinal::nat(static_cast<int>(n));
    }
    fail("expected 0, a number, w, e0 or '('");
  }

  Ordinal factor() {
    Ordinal base = primary();
    skip_ws();
    if (eat('*')) {
      int64_t k = number();
      if (k > 100'000) {
        fail("multiplicity too large");
      }
      std::vector<Ordinal> parts(static_cast<size_t>(k), base);
      return Ordinal::sum(parts);
    }
    return base;
  }

  Ordinal term() {
    std::vector<Ordinal> parts{factor()};
    while (eat('+')) {
      parts.push_back(factor());
    }
    if (parts.size() == 1) {
      return parts[0];
    }
    for (const auto& p : parts) {
      if (p.is_eps0()) {
        fail("e0 cannot appear in a sum");
      }
    }
    return Ordinal::sum(parts);
  }
};

bool is_natural_term(const Ordinal& e) {
  for (const auto& x : e.exponents()) {
    if (!x.is_zero()) {
      return false;
    }
  }
  return true;
}

// True when the printed exponent needs parentheses after '^'.  Naturals print
// as digits and single omega-powers rebind through '^', so neither needs them.
bool exponent_needs_parens(const Ordinal& e) {
  return !is_natural_term(e) && e.exponents().size() > 1;
}

std::string print(const Ordinal& a) {
  if (a.is_eps0()) {
    return "e0";
  }
  const auto& xs = a.exponents();
  if (xs.empty()) {
    return "0";
  }
  std::string out;
  size_t i = 0;
  bool first = true;
  while (i < xs.size()) {
    size_t j = i;
    while (j < xs.size() && xs[j] == xs[i]) {
      ++j;
    }
    size_t count = j - i;
    if (!first) {
      out += " + ";
    }
    first = false;
    const Ordinal& e = xs[i];
    if (e.is_zero()) {
      out += std::to_string(count);
    } else {
      std::string base;
      if (e == Ordinal::one()) {
        base = "w";
      } else if (exponent_needs_parens(e)) {
        base = "w^(" + print(e) + ")";
      } else {
        base = "w^" + print(e);
      }
      out += base;
      if (count > 1) {
        out += "*" + std::to_string(count);
      }
    }
    i = j;
  }
  return out;
}

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Parser p{text};
  p.skip_ws();
  Ordinal t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) {
    p.fail("trailing input");
  }
  return t;
}

std::string ordinal_to_string(const Ordinal& a) { return print(a); }

}  // namespace pcs
